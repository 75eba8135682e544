#pragma once

#include "quotcoh/groebner.hpp"
#include "quotcoh/multipoly.hpp"
#include "quotcoh/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quotcoh {

/// A graded ring together with homogeneous relations; models every
/// cohomology-ring presentation the pipelines verify.
struct Presentation {
    RingPtr ring;
    std::vector<MultiPoly> relations;
    std::string label;

    Presentation(RingPtr r, std::vector<MultiPoly> rels, std::string lbl)
        : ring(std::move(r)), relations(std::move(rels)), label(std::move(lbl))
    {
        if (!ring)
            throw std::invalid_argument("Presentation: null ring");
        for (const MultiPoly& rel : relations) {
            if (!same_ring(rel.ring(), ring))
                throw std::invalid_argument("Presentation: relation ring mismatch");
            if (!is_homogeneous(rel))
                throw std::invalid_argument("Presentation: inhomogeneous relation");
        }
    }
};

inline RationalSeries presentation_hilbert(const Presentation& p)
{
    if (p.relations.empty())
        return hilbert_series_of_free_ring(p.ring);
    return hilbert_series(buchberger(Ideal(p.ring, p.relations)));
}

enum class BlowupDirection { up, down };

/// One correction term of a blow-up/blow-down chain. For an `up` step the
/// contribution is center_series * (t^2 + ... + t^{2(codimension-1)}); for a
/// `down` step center_series already is the full subtracted series (the
/// finite-group quotient factors make it non-polynomial in that pattern) and
/// codimension is informational.
struct BlowupStep {
    std::string label;
    BlowupDirection direction = BlowupDirection::up;
    int codimension = 1;
    RationalSeries center_series;
};

/// Additive Betti effect of blowing up along a center of codimension r with
/// Poincaré series p_y: p_x + p_y * (t^2 + ... + t^{2(r-1)}).
inline RationalSeries betti_blowup(const RationalSeries& p_x, const RationalSeries& p_y, int r)
{
    if (r < 1)
        throw std::invalid_argument("betti_blowup: require r >= 1");
    TPoly shell;
    for (int k = 1; k < r; ++k)
        shell.add_term(1, 2 * k);
    return p_x + p_y * RationalSeries::from_poly(std::move(shell));
}

/// Exact inverse of betti_blowup.
inline RationalSeries betti_blowdown(const RationalSeries& p_xtilde, const RationalSeries& p_y, int r)
{
    if (r < 1)
        throw std::invalid_argument("betti_blowdown: require r >= 1");
    TPoly shell;
    for (int k = 1; k < r; ++k)
        shell.add_term(1, 2 * k);
    return p_xtilde - p_y * RationalSeries::from_poly(std::move(shell));
}

/// Chern polynomial of one weight half N^{+-} of the normal bundle to the
/// degree-2 blow-up center, as a polynomial in the formal weight-2 variable t:
/// ((t +- 2*alpha + xi)^n - xi^n) / (t +- 2*alpha) in Q[xi:2, alpha:2, t:2].
/// The coefficient of t^k is c_{n-1-k}.
inline MultiPoly chern_normal_split(int n, int sign)
{
    if (n < 1)
        throw std::invalid_argument("chern_normal_split: require n >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("chern_normal_split: sign must be +1 or -1");
    RingPtr ring = make_ring({{"xi", 2}, {"alpha", 2}, {"t", 2}});
    MultiPoly xi = MultiPoly::generator(ring, "xi");
    MultiPoly alpha = MultiPoly::generator(ring, "alpha");
    MultiPoly t = MultiPoly::generator(ring, "t");
    MultiPoly shifted = t + 2 * sign * alpha;
    return exact_divide(pow(shifted + xi, n) - pow(xi, n), shifted);
}

/// The ring of `base` with one extra weight-2 generator appended; where the
/// exceptional class of a blow-up lives.
inline RingPtr extended_ring(const RingPtr& base, const std::string& rho)
{
    std::vector<std::pair<std::string, int>> gens = base->generators();
    gens.emplace_back(rho, 2);
    return make_ring(std::move(gens));
}

/// Ring presentation of a blow-up when the restriction to the center is
/// surjective: adjoin the exceptional class rho, kill rho * ker(restriction),
/// and impose the Chern relation of the normal bundle with the center's
/// Poincaré dual as its rho-free term. chern_relation (when the codimension
/// is finite) must live in extended_ring(p.ring, rho); ker_gens and pd_center
/// live in p.ring. Checking that the restriction really is surjective and
/// that the dual class is nonzero is the caller's obligation.
inline Presentation presentation_blowup(const Presentation& p,
                                        const std::vector<MultiPoly>& ker_gens,
                                        const std::optional<MultiPoly>& chern_relation,
                                        const std::optional<MultiPoly>& pd_center,
                                        const std::string& rho,
                                        std::string label = "")
{
    RingPtr ring = extended_ring(p.ring, rho);
    MultiPoly rho_gen = MultiPoly::generator(ring, rho);

    std::vector<MultiPoly> relations;
    for (const MultiPoly& rel : p.relations)
        relations.push_back(lift_to_ring(rel, ring));
    for (const MultiPoly& k : ker_gens) {
        if (!same_ring(k.ring(), p.ring))
            throw std::invalid_argument("presentation_blowup: kernel generator ring mismatch");
        if (!is_homogeneous(k))
            throw std::invalid_argument("presentation_blowup: inhomogeneous kernel generator");
        relations.push_back(rho_gen * lift_to_ring(k, ring));
    }
    if (chern_relation) {
        if (!same_ring(chern_relation->ring(), ring))
            throw std::invalid_argument("presentation_blowup: Chern relation must live in the extended ring");
        MultiPoly rel = *chern_relation;
        if (pd_center) {
            if (!same_ring(pd_center->ring(), p.ring))
                throw std::invalid_argument("presentation_blowup: Poincaré dual ring mismatch");
            rel += lift_to_ring(*pd_center, ring);
        }
        if (!is_homogeneous(rel))
            throw std::invalid_argument("presentation_blowup: inhomogeneous Chern relation");
        relations.push_back(std::move(rel));
    }
    return Presentation(ring, std::move(relations), label.empty() ? p.label + "-blowup" : std::move(label));
}

} // namespace quotcoh
