#pragma once

#include "quotcoh/groebner.hpp"
#include "quotcoh/multipoly.hpp"
#include "quotcoh/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quotcoh {

/// Equivariant Poincaré series of the semistable locus of P(W_d ⊗ C^n) under
/// SL(2), by the closed forms of equivariant Morse theory (Kirwan). The two
/// parities of d have different shapes and are kept as separate code paths.
inline RationalSeries quasimap_series(int d, int n)
{
    if (d < 1 || n < 1)
        throw std::invalid_argument("quasimap_series: require d >= 1 and n >= 1");
    if (d % 2 == 1) {
        const int m = (d + 1) / 2;
        TPoly num = TPoly::one_minus_tk(2 * m * n - 2) * TPoly::one_minus_tk(2 * m * n);
        return RationalSeries(std::move(num), {2, 4});
    }
    const int m = d / 2;
    TPoly num = TPoly::one();
    num.add_term(-1, 2 * n * (m + 1) - 2);
    num.add_term(-1, 2 * n * (m + 1));
    num.add_term(1, 2 * n * (2 * m + 1) - 2);
    return RationalSeries(std::move(num), {2, 4});
}

namespace detail {

/// Symmetrize base(xi, alpha) in alpha, multiply by xi^extra, and collapse
/// alpha^2 into the weight-4 generator "a". Returns the two relation
/// generators (odd part first) in Q[xi:2, a:4].
inline std::vector<MultiPoly> symmetrized_relations(const MultiPoly& base, int extra_xi_power)
{
    const RingPtr& ring = base.ring();
    MultiPoly xi = MultiPoly::generator(ring, "xi");
    auto [even, odd] = sym_pair(base, "alpha");
    MultiPoly factor = pow(xi, extra_xi_power);
    return {collapse_even(factor * odd, "alpha", "a"), collapse_even(factor * even, "alpha", "a")};
}

} // namespace detail

/// Relation ideal of the degree-2 semistable quotient: generators
/// xi^n * odd/even symmetrizations of (xi + 2*alpha)^n, of degrees
/// (4n-2, 4n) in Q[xi:2, a:4].
inline Ideal relations_d2(int n)
{
    if (n < 1)
        throw std::invalid_argument("relations_d2: require n >= 1");
    RingPtr ring = make_ring({{"xi", 2}, {"alpha", 2}});
    MultiPoly xi = MultiPoly::generator(ring, "xi");
    MultiPoly alpha = MultiPoly::generator(ring, "alpha");
    MultiPoly base = pow(xi + 2 * alpha, n);
    std::vector<MultiPoly> gens = detail::symmetrized_relations(base, n);
    RingPtr collapsed = gens.front().ring();
    return Ideal(std::move(collapsed), std::move(gens));
}

/// Relation ideal of the degree-3 stable quotient: odd/even symmetrizations
/// of (xi + alpha)^n (xi + 3*alpha)^n, of degrees (4n-2, 4n) in Q[xi:2, a:4].
inline Ideal relations_d3(int n)
{
    if (n < 1)
        throw std::invalid_argument("relations_d3: require n >= 1");
    RingPtr ring = make_ring({{"xi", 2}, {"alpha", 2}});
    MultiPoly xi = MultiPoly::generator(ring, "xi");
    MultiPoly alpha = MultiPoly::generator(ring, "alpha");
    MultiPoly base = pow(xi + alpha, n) * pow(xi + 3 * alpha, n);
    std::vector<MultiPoly> gens = detail::symmetrized_relations(base, 0);
    RingPtr collapsed = gens.front().ring();
    return Ideal(std::move(collapsed), std::move(gens));
}

/// The defining relation of a projective bundle P(N) -> Y of rank r:
/// rho^r + c_1 rho^{r-1} + ... + c_r, for cherns = [c_1, ..., c_r] with c_i
/// homogeneous of degree 2i (or zero).
inline MultiPoly projective_bundle_relation(const std::vector<MultiPoly>& cherns,
                                            const std::string& rho)
{
    if (cherns.empty())
        throw std::invalid_argument("projective_bundle_relation: empty Chern list");
    const RingPtr& ring = cherns.front().ring();
    const std::size_t rho_idx = ring->index_of(rho);
    if (ring->weight(rho_idx) != 2)
        throw std::invalid_argument("projective_bundle_relation: rho must have weight 2");
    const int r = static_cast<int>(cherns.size());

    MultiPoly rho_gen = MultiPoly::generator(ring, rho);
    MultiPoly rel = pow(rho_gen, r);
    for (int i = 1; i <= r; ++i) {
        const MultiPoly& c = cherns[static_cast<std::size_t>(i - 1)];
        if (!same_ring(c.ring(), ring))
            throw std::invalid_argument("projective_bundle_relation: ring mismatch");
        DegreeInfo di = degree_info(c);
        if (!di.is_homogeneous || (di.weighted_degree && *di.weighted_degree != 2 * i))
            throw std::invalid_argument("projective_bundle_relation: c_" + std::to_string(i) +
                                        " must be homogeneous of degree " + std::to_string(2 * i));
        rel += c * pow(rho_gen, r - i);
    }
    return rel;
}

/// The unstable-stratum series subtracted from the blown-up degree-2 space:
/// (1/(1-t^2)) * ((1-t^{2n})/(1-t^2)) * (t^{2n-2}(1-t^{2n-2})/(1-t^2)).
inline RationalSeries unstable_correction_d2(int n)
{
    if (n < 2)
        throw std::invalid_argument("unstable_correction_d2: require n >= 2");
    TPoly num = TPoly::term(1, 2 * n - 2) * TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n - 2);
    return RationalSeries(std::move(num), {2, 2, 2});
}

} // namespace quotcoh
