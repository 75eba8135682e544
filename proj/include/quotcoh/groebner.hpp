#pragma once

#include "quotcoh/multipoly.hpp"
#include "quotcoh/series.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace quotcoh {

/// The single monomial order used throughout: weighted degree first, ties
/// broken as in graded_ring.hpp. Kept as an explicit object so bases record
/// what they were computed against.
struct MonomialOrder {
    RingPtr ring;
    std::vector<int> weights;

    explicit MonomialOrder(RingPtr r) : ring(std::move(r))
    {
        if (!ring)
            throw std::invalid_argument("MonomialOrder: null ring");
        weights = ring_weights(*ring);
    }

    bool less(const Monomial& a, const Monomial& b) const
    {
        return monomial_less(weights, a, b);
    }
};

/// A homogeneous ideal: every generator nonzero and homogeneous (every
/// relation in the presentations we verify is).
struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> generators;

    Ideal(RingPtr r, std::vector<MultiPoly> gens) : ring(std::move(r)), generators(std::move(gens))
    {
        if (!ring)
            throw std::invalid_argument("Ideal: null ring");
        for (const MultiPoly& g : generators) {
            if (!same_ring(g.ring(), ring))
                throw std::invalid_argument("Ideal: generator ring mismatch");
            if (g.is_zero())
                throw std::invalid_argument("Ideal: zero generator");
            if (!is_homogeneous(g))
                throw std::invalid_argument("Ideal: inhomogeneous generator");
        }
    }
};

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<MultiPoly> basis; // reduced, monic, sorted by leading monomial
};

namespace detail {

/// Full reduction of f by the (not necessarily reduced) basis: the remainder
/// has no term divisible by any basis leading monomial.
inline MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis)
{
    MultiPoly remainder(f.ring());
    MultiPoly p = f;
    while (!p.is_zero()) {
        const Monomial lm = p.leading_monomial();
        const Rational lc = p.leading_coefficient();
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (divides(g.leading_monomial(), lm)) {
                MultiPoly t = MultiPoly::term(p.ring(), quotient(lm, g.leading_monomial()),
                                              lc / g.leading_coefficient());
                p -= t * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            MultiPoly t = MultiPoly::term(p.ring(), lm, lc);
            p -= t;
        }
    }
    return remainder;
}

inline MultiPoly make_monic(const MultiPoly& f)
{
    if (f.is_zero())
        return f;
    return (Rational(1) / f.leading_coefficient()) * f;
}

} // namespace detail

/// Buchberger's algorithm with the coprime-leading-term and chain criteria.
/// Pair selection: minimal lcm weighted degree first, ties by generator
/// indices, so the output is deterministic.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order)
{
    if (!same_ring(ideal.ring, order.ring))
        throw std::invalid_argument("buchberger: order ring mismatch");
    if (ideal.generators.empty())
        throw std::invalid_argument("buchberger: empty ideal");
    const GradedRing& ring = *ideal.ring;

    std::vector<MultiPoly> basis;
    for (const MultiPoly& g : ideal.generators)
        if (!g.is_zero())
            basis.push_back(detail::make_monic(g));

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    std::set<Pair> handled;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            pending.insert({i, j});

    auto pick_next = [&]() {
        auto best = pending.begin();
        int best_deg = weighted_degree(
            ring, lcm(basis[best->first].leading_monomial(), basis[best->second].leading_monomial()));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            int d = weighted_degree(
                ring, lcm(basis[it->first].leading_monomial(), basis[it->second].leading_monomial()));
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        return best;
    };

    while (!pending.empty()) {
        auto it = pick_next();
        const auto [i, j] = *it;
        pending.erase(it);
        handled.insert({i, j});

        const Monomial& lm_i = basis[i].leading_monomial();
        const Monomial& lm_j = basis[j].leading_monomial();
        if (coprime(lm_i, lm_j))
            continue;

        // chain criterion: some k with lt_k | lcm(i,j) and both mixed pairs done
        const Monomial l = lcm(lm_i, lm_j);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j)
                continue;
            if (!divides(basis[k].leading_monomial(), l))
                continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (handled.count(ik) && handled.count(jk))
                chained = true;
        }
        if (chained)
            continue;

        MultiPoly spoly =
            MultiPoly::term(ideal.ring, quotient(l, lm_i), 1) * basis[i] -
            MultiPoly::term(ideal.ring, quotient(l, lm_j), 1) * basis[j];
        MultiPoly rem = detail::reduce_full(spoly, basis);
        if (!rem.is_zero()) {
            basis.push_back(detail::make_monic(rem));
            const std::size_t n = basis.size() - 1;
            for (std::size_t k = 0; k < n; ++k)
                pending.insert({k, n});
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& lm_j = basis[j].leading_monomial();
            const Monomial& lm_i = basis[i].leading_monomial();
            if (divides(lm_j, lm_i) && !(lm_i == lm_j && j > i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(detail::make_monic(detail::reduce_full(minimal[i], others)));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{ideal.ring, order, std::move(reduced)};
}

inline GroebnerBasis buchberger(const Ideal& ideal)
{
    return buchberger(ideal, MonomialOrder(ideal.ring));
}

/// Unique remainder of f modulo the basis; zero iff f lies in the ideal.
inline MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb)
{
    if (!same_ring(f.ring(), gb.ring))
        throw std::invalid_argument("normal_form: ring mismatch");
    return detail::reduce_full(f, gb.basis);
}

inline bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f)
{
    return normal_form(f, gb).is_zero();
}

/// True iff the two ideals coincide: every generator of each has zero normal
/// form against the other's basis.
inline bool ideal_equal(const Ideal& a, const Ideal& b)
{
    if (!same_ring(a.ring, b.ring))
        throw std::invalid_argument("ideal_equal: ring mismatch");
    GroebnerBasis ga = buchberger(a);
    GroebnerBasis gb = buchberger(b);
    for (const MultiPoly& g : b.generators)
        if (!ideal_contains(ga, g))
            return false;
    for (const MultiPoly& g : a.generators)
        if (!ideal_contains(gb, g))
            return false;
    return true;
}

namespace detail {

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens)
{
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
                redundant = true;
        }
        if (!redundant)
            out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.exp < b.exp; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Numerator of the Hilbert series of R/I for a monomial ideal I, over the
/// denominator prod_j (1 - t^{w_j}). Pivot recursion with memoization:
///   N(I) = N(I + (x)) + t^{w_x} N(I : x),
/// pivot x = variable occurring in the most generators. Generators with
/// pairwise disjoint support form a regular sequence and close the recursion.
inline TPoly hilbert_numerator(const std::vector<int>& weights, std::vector<Monomial> gens,
                               std::map<std::vector<std::vector<int>>, TPoly>& memo)
{
    gens = minimal_monomials(std::move(gens));
    if (gens.empty())
        return TPoly::one();

    std::vector<std::vector<int>> key;
    key.reserve(gens.size());
    for (const Monomial& m : gens)
        key.push_back(m.exp);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const std::size_t nvars = weights.size();
    std::vector<int> occurrences(nvars, 0);
    for (const Monomial& m : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (m.exp[v] > 0)
                occurrences[v] += 1;
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (occurrences[v] > occurrences[pivot])
            pivot = v;

    TPoly result;
    if (occurrences[pivot] <= 1) {
        // pairwise disjoint supports: complete intersection of monomials
        result = TPoly::one();
        for (const Monomial& m : gens) {
            int d = 0;
            for (std::size_t v = 0; v < nvars; ++v)
                d += m.exp[v] * weights[v];
            result = result * TPoly::one_minus_tk(d);
        }
    } else {
        // I + (x_pivot)
        std::vector<Monomial> plus;
        Monomial xp{std::vector<int>(nvars, 0)};
        xp.exp[pivot] = 1;
        plus.push_back(xp);
        for (const Monomial& m : gens)
            if (m.exp[pivot] == 0)
                plus.push_back(m);
        // I : x_pivot
        std::vector<Monomial> colon;
        for (const Monomial& m : gens) {
            Monomial q = m;
            if (q.exp[pivot] > 0)
                q.exp[pivot] -= 1;
            colon.push_back(q);
        }
        TPoly shifted = TPoly::term(1, weights[pivot]) * hilbert_numerator(weights, std::move(colon), memo);
        result = hilbert_numerator(weights, std::move(plus), memo) + shifted;
    }

    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// Hilbert series of ring/ideal, computed from the leading-term monomial
/// ideal and returned over the denominator prod_i (1 - t^{w_i}) (then put in
/// canonical form).
inline RationalSeries hilbert_series(const GroebnerBasis& gb)
{
    const std::vector<int> weights = ring_weights(*gb.ring);
    std::vector<Monomial> lt;
    lt.reserve(gb.basis.size());
    for (const MultiPoly& g : gb.basis)
        lt.push_back(g.leading_monomial());
    std::map<std::vector<std::vector<int>>, TPoly> memo;
    TPoly num = detail::hilbert_numerator(weights, std::move(lt), memo);
    std::multiset<int> den(weights.begin(), weights.end());
    return RationalSeries(std::move(num), std::move(den));
}

inline RationalSeries hilbert_series_of_free_ring(const RingPtr& ring)
{
    const std::vector<int> weights = ring_weights(*ring);
    return RationalSeries(TPoly::one(), std::multiset<int>(weights.begin(), weights.end()));
}

/// Krull dimension of ring/ideal from the leading-term ideal: the largest set
/// S of variables such that no leading monomial is supported inside S.
inline int krull_dimension(const GroebnerBasis& gb)
{
    const std::size_t n = gb.ring->size();
    std::vector<Monomial> lt;
    for (const MultiPoly& g : gb.basis)
        lt.push_back(g.leading_monomial());

    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const Monomial& m : lt) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
                if (m.exp[v] > 0 && !(mask & (1u << v)))
                    inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max(best, static_cast<int>(std::popcount(mask)));
    }
    return best;
}

/// Dimension of ring/ideal as a vector space: finite iff every variable
/// appears to a pure power among the leading terms; nullopt means infinite.
inline std::optional<std::int64_t> quotient_vector_dimension(const GroebnerBasis& gb)
{
    const std::size_t n = gb.ring->size();
    std::vector<Monomial> lt;
    for (const MultiPoly& g : gb.basis)
        lt.push_back(g.leading_monomial());

    std::vector<int> bound(n, -1);
    for (const Monomial& m : lt) {
        int support = -1;
        bool pure = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (m.exp[v] > 0) {
                if (support >= 0) {
                    pure = false;
                    break;
                }
                support = static_cast<int>(v);
            }
        }
        if (pure && support >= 0) {
            int e = m.exp[static_cast<std::size_t>(support)];
            if (bound[static_cast<std::size_t>(support)] < 0 || e < bound[static_cast<std::size_t>(support)])
                bound[static_cast<std::size_t>(support)] = e;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (bound[v] < 0)
            return std::nullopt;

    // count standard monomials inside the pure-power box
    std::int64_t count = 0;
    Monomial e{std::vector<int>(n, 0)};
    auto standard = [&](const Monomial& m) {
        for (const Monomial& g : lt)
            if (divides(g, m))
                return false;
        return true;
    };
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (v == n) {
            if (standard(e))
                ++count;
            return;
        }
        for (int i = 0; i < bound[v]; ++i) {
            e.exp[v] = i;
            walk(v + 1);
        }
        e.exp[v] = 0;
    };
    walk(0);
    return count;
}

/// Canonical, byte-stable text for a reduced basis (one polynomial per line).
inline std::string to_text(const GroebnerBasis& gb)
{
    std::string out;
    for (const MultiPoly& g : gb.basis) {
        out += to_text(g);
        out += "\n";
    }
    return out;
}

} // namespace quotcoh
