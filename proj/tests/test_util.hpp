#pragma once

// Shared helpers for the test suites: deterministic random generators for
// polynomials, series, and ideals, plus the brute-force oracles the
// Gröbner/Hilbert checks are verified against.

#include "quotcoh/quotcoh.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testutil {

using namespace quotcoh;

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// All monomials of the ring with weighted degree exactly d.
inline std::vector<Monomial> monomials_of_degree(const GradedRing& ring, int d)
{
    std::vector<Monomial> out;
    Monomial m = monomial_one(ring);
    std::function<void(std::size_t, int)> walk = [&](std::size_t v, int remaining) {
        if (v == ring.size()) {
            if (remaining == 0)
                out.push_back(m);
            return;
        }
        const int w = ring.weight(v);
        for (int e = 0; e * w <= remaining; ++e) {
            m.exp[v] = e;
            walk(v + 1, remaining - e * w);
        }
        m.exp[v] = 0;
    };
    walk(0, d);
    return out;
}

inline Rational random_coefficient(Rng& rng)
{
    int num = uniform(rng, -6, 6);
    if (num == 0)
        num = 1;
    const int den = uniform(rng, 1, 4);
    return Rational(num) / den;
}

/// Random nonzero homogeneous polynomial of the given weighted degree.
inline MultiPoly random_homogeneous(Rng& rng, const RingPtr& ring, int degree)
{
    const std::vector<Monomial> basis = monomials_of_degree(*ring, degree);
    MultiPoly p(ring);
    if (basis.empty())
        return p;
    for (const Monomial& m : basis)
        if (uniform(rng, 0, 2) == 0)
            p.add_term(m, random_coefficient(rng));
    if (p.is_zero())
        p.add_term(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))],
                   random_coefficient(rng));
    return p;
}

/// Random polynomial, not necessarily homogeneous.
inline MultiPoly random_poly(Rng& rng, const RingPtr& ring, int max_degree)
{
    MultiPoly p(ring);
    const int pieces = uniform(rng, 1, 3);
    for (int i = 0; i < pieces; ++i) {
        int d = 2 * uniform(rng, 0, max_degree / 2);
        p += random_homogeneous(rng, ring, d);
    }
    return p;
}

inline RationalSeries random_series(Rng& rng)
{
    TPoly num;
    const int terms = uniform(rng, 1, 4);
    for (int i = 0; i < terms; ++i)
        num.add_term(uniform(rng, -5, 5), 2 * uniform(rng, 0, 6));
    if (num.is_zero())
        num.add_term(1, 2);
    std::multiset<int> den;
    const int factors = uniform(rng, 0, 3);
    for (int i = 0; i < factors; ++i)
        den.insert(2 * uniform(rng, 1, 4));
    return RationalSeries(std::move(num), std::move(den));
}

/// Independent oracle for Hilbert series: the dimension of the degree-d piece
/// of ring/ideal equals the number of degree-d monomials not divisible by any
/// leading term of the basis (counted by direct enumeration).
inline std::vector<Integer> standard_monomial_counts(const GroebnerBasis& gb, int max_degree)
{
    std::vector<Monomial> lead;
    for (const MultiPoly& g : gb.basis)
        lead.push_back(g.leading_monomial());
    std::vector<Integer> counts;
    for (int d = 0; d <= max_degree; d += 2) {
        Integer count = 0;
        for (const Monomial& m : monomials_of_degree(*gb.ring, d)) {
            bool standard = true;
            for (const Monomial& l : lead)
                if (divides(l, m)) {
                    standard = false;
                    break;
                }
            if (standard)
                ++count;
        }
        counts.push_back(count);
    }
    return counts;
}

} // namespace testutil
