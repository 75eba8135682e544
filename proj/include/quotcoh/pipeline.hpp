#pragma once

#include "quotcoh/blowup.hpp"
#include "quotcoh/groebner.hpp"
#include "quotcoh/kirwan.hpp"
#include "quotcoh/multipoly.hpp"
#include "quotcoh/series.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quotcoh {

struct CaseResult {
    std::string name;
    int n = 0; // 0 when the case has no n parameter
    bool pass = false;
    std::string expected; // canonical series text or ideal digest
    std::string actual;
    std::optional<RationalSeries> expected_series;
    std::optional<RationalSeries> actual_series;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double elapsed_seconds = 0.0;

    bool pass() const
    {
        for (const CaseResult& c : cases)
            if (!c.pass)
                return false;
        return true;
    }
};

namespace detail {

inline CaseResult series_case(std::string name, int n, const RationalSeries& expected,
                              const RationalSeries& actual)
{
    CaseResult c;
    c.name = std::move(name);
    c.n = n;
    c.pass = expected.equals(actual);
    c.expected = to_text(expected);
    c.actual = to_text(actual);
    c.expected_series = expected;
    c.actual_series = actual;
    return c;
}

inline CaseResult text_case(std::string name, int n, std::string expected, std::string actual,
                            bool pass)
{
    CaseResult c;
    c.name = std::move(name);
    c.n = n;
    c.pass = pass;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    return c;
}

} // namespace detail

// ---------------------------------------------------------------------------
// degree 2
// ---------------------------------------------------------------------------

/// Closed form of the Poincaré polynomial of the degree-2 stable-map space:
/// (1-t^{2n+2})(1-t^{2n})(1-t^{2n-2}) / ((1-t^2)^2 (1-t^4)).
inline RationalSeries degree2_closed_form(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree2_closed_form: require n >= 2");
    TPoly num = TPoly::one_minus_tk(2 * n + 2) * TPoly::one_minus_tk(2 * n) *
                TPoly::one_minus_tk(2 * n - 2);
    return RationalSeries(std::move(num), {2, 2, 4});
}

/// Series of the blow-up center of the degree-2 pipeline, Q[xi, a]/<xi^n>:
/// (1 - t^{2n}) / ((1-t^2)(1-t^4)).
inline RationalSeries degree2_center_series(int n)
{
    return RationalSeries(TPoly::one_minus_tk(2 * n), {2, 4});
}

/// Degree-2 Betti pipeline: quasimap series, plus the blow-up along the
/// double-point locus (codimension 2n-2), minus the unstable stratum. The sum
/// is checked against the closed form before returning it; a mismatch means
/// an implementation bug, so it throws.
inline RationalSeries degree2_betti(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree2_betti: require n >= 2");
    RationalSeries assembled =
        betti_blowup(quasimap_series(2, n), degree2_center_series(n), 2 * n - 2) -
        unstable_correction_d2(n);
    RationalSeries closed = degree2_closed_form(n);
    if (!assembled.equals(closed))
        throw std::logic_error("degree2_betti: assembled series does not match closed form at n=" +
                               std::to_string(n));
    return closed;
}

/// The three-relation presentation of the degree-2 stable-map cohomology ring
/// in Q[xi:2, a:4, rho:2]: both symmetrizations of ((rho +- 2a + xi)^n - xi^n)
/// constructions plus xi^n * rho.
inline Presentation degree2_ring_presentation(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree2_ring_presentation: require n >= 2");
    RingPtr work = make_ring({{"xi", 2}, {"alpha", 2}, {"rho", 2}});
    MultiPoly xi = MultiPoly::generator(work, "xi");
    MultiPoly alpha = MultiPoly::generator(work, "alpha");
    MultiPoly rho = MultiPoly::generator(work, "rho");

    MultiPoly plus = exact_divide(pow(rho + 2 * alpha + xi, n) - pow(xi, n), rho + 2 * alpha);
    MultiPoly minus = exact_divide(pow(rho - 2 * alpha + xi, n) - pow(xi, n), rho - 2 * alpha);

    std::vector<MultiPoly> rels;
    rels.push_back(collapse_even(plus + minus, "alpha", "a"));
    rels.push_back(collapse_even(pow(rho + 2 * alpha + xi, n) + pow(rho - 2 * alpha + xi, n),
                                 "alpha", "a"));
    rels.push_back(collapse_even(pow(xi, n) * rho, "alpha", "a"));
    RingPtr ring = rels.front().ring();
    return Presentation(std::move(ring), std::move(rels),
                        "degree-2 moduli ring, n=" + std::to_string(n));
}

/// Gröbner verification of the degree-2 ring: Hilbert series against the
/// closed form, zero-dimensionality, and total dimension bookkeeping.
inline VerificationReport degree2_ring_verify(int n)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "d2-ring";

    Presentation pres = degree2_ring_presentation(n);
    GroebnerBasis gb = buchberger(Ideal(pres.ring, pres.relations));
    RationalSeries hilbert = hilbert_series(gb);
    RationalSeries closed = degree2_closed_form(n);
    report.cases.push_back(detail::series_case("d2-ring/hilbert-matches-closed-form", n, closed, hilbert));

    const int dim = krull_dimension(gb);
    report.cases.push_back(
        detail::text_case("d2-ring/krull-dimension-zero", n, "0", std::to_string(dim), dim == 0));

    Integer betti_sum = 0;
    if (closed.is_polynomial() && !closed.numerator().is_zero())
        for (const Integer& c : closed.expand_to(closed.numerator().degree()))
            betti_sum += c;
    auto vecdim = quotient_vector_dimension(gb);
    report.cases.push_back(detail::text_case(
        "d2-ring/vector-dimension-equals-betti-sum", n, betti_sum.str(),
        vecdim ? Integer(*vecdim).str() : std::string("infinite"), vecdim && Integer(*vecdim) == betti_sum));

    std::string expected_degrees = std::to_string(2 * n - 2) + "," + std::to_string(2 * n) + "," +
                                   std::to_string(2 * n + 2);
    std::string actual_degrees;
    for (const MultiPoly& rel : pres.relations) {
        if (!actual_degrees.empty())
            actual_degrees += ",";
        DegreeInfo di = degree_info(rel);
        actual_degrees += di.weighted_degree ? std::to_string(*di.weighted_degree) : "?";
    }
    report.cases.push_back(detail::text_case("d2-ring/relation-degrees", n, expected_degrees,
                                             actual_degrees, expected_degrees == actual_degrees));

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Behrend–O'Halloran recursion
// ---------------------------------------------------------------------------

/// Matrix of polynomials acting on polynomial vectors; carrier of the
/// Behrend–O'Halloran recursion G_n = A^{n-1} G_1.
struct PolyMatrix {
    std::vector<std::vector<MultiPoly>> rows;

    std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const
    {
        std::vector<MultiPoly> out;
        out.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.size() != v.size())
                throw std::invalid_argument("PolyMatrix: dimension mismatch");
            MultiPoly acc = MultiPoly::zero(v.front().ring());
            for (std::size_t j = 0; j < row.size(); ++j)
                acc += row[j] * v[j];
            out.push_back(std::move(acc));
        }
        return out;
    }
};

/// The recursively defined generators G_n = A^{n-1} G_1 in Q[b:2, t:2, k:4].
inline std::vector<MultiPoly> bo_generators(int n)
{
    if (n < 1)
        throw std::invalid_argument("bo_generators: require n >= 1");
    RingPtr ring = make_ring({{"b", 2}, {"t", 2}, {"k", 4}});
    MultiPoly b = MultiPoly::generator(ring, "b");
    MultiPoly t = MultiPoly::generator(ring, "t");
    MultiPoly k = MultiPoly::generator(ring, "k");
    MultiPoly one = MultiPoly::one(ring);
    MultiPoly nil = MultiPoly::zero(ring);

    PolyMatrix a{{{b, nil, nil}, {one, nil, k}, {nil, one, t}}};
    std::vector<MultiPoly> g = {b * (2 * b - t), 2 * b - t, 2 * one};
    for (int i = 1; i < n; ++i)
        g = a.apply(g);
    return g;
}

/// The G_n ideal transported into the degree-2 ring by the change of
/// variables b = xi, t = 2(xi + rho), k = 4a - (xi + rho)^2.
inline Ideal bo_substituted_ideal(int n)
{
    std::vector<MultiPoly> g = bo_generators(n);
    RingPtr target = make_ring({{"xi", 2}, {"a", 4}, {"rho", 2}});
    MultiPoly xi = MultiPoly::generator(target, "xi");
    MultiPoly a_gen = MultiPoly::generator(target, "a");
    MultiPoly rho = MultiPoly::generator(target, "rho");
    std::map<std::string, MultiPoly> images{
        {"b", xi},
        {"t", 2 * (xi + rho)},
        {"k", 4 * a_gen - pow(xi + rho, 2)},
    };
    std::vector<MultiPoly> gens;
    for (const MultiPoly& p : g)
        gens.push_back(substitute(p, images, target));
    return Ideal(target, std::move(gens));
}

/// Checks that the substituted recursion ideal equals the closed-form
/// three-relation ideal. Reduced bases are unique, so the digests coincide
/// exactly when the ideals do.
inline VerificationReport bo_equivalence(int n)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "bo";

    Presentation pres = degree2_ring_presentation(n);
    Ideal closed_ideal(pres.ring, pres.relations);
    Ideal recursion_ideal = bo_substituted_ideal(n);

    const bool equal = ideal_equal(closed_ideal, recursion_ideal);
    std::string expected_digest = to_text(buchberger(closed_ideal));
    std::string actual_digest = to_text(buchberger(recursion_ideal));
    report.cases.push_back(
        detail::text_case("bo/ideal-equality", n, expected_digest, actual_digest, equal));

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// degree 3
// ---------------------------------------------------------------------------

/// Closed form of the Poincaré polynomial of the degree-3 stable-map space:
/// ((1-t^{2n+8})/(1-t^6) + 2(t^4-t^{2n+2})/(1-t^4))
///   * (1-t^{2n})/(1-t^2) * (1-t^{2n})(1-t^{2n-2})/((1-t^2)(1-t^4)).
inline RationalSeries degree3_closed_form(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree3_closed_form: require n >= 2");
    TPoly bracket_a_num = TPoly::one_minus_tk(2 * n + 8);
    RationalSeries bracket_a(std::move(bracket_a_num), {6});
    TPoly diff;
    diff.add_term(2, 4);
    diff.add_term(-2, 2 * n + 2);
    RationalSeries bracket_b(std::move(diff), {4});
    RationalSeries line = RationalSeries(TPoly::one_minus_tk(2 * n), {2});
    RationalSeries plane = RationalSeries(TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n - 2), {2, 4});
    return (bracket_a + bracket_b) * line * plane;
}

/// The five correction terms of the degree-3 blow-up/blow-down chain, in
/// order. Up steps carry (center series, codimension); the two down steps
/// carry their full series, the finite-group quotients of the contracted
/// centers contribute the rational factors t^2/(1+t^2) and
/// (t^2+t^4)/(1+t^2+t^4).
inline std::vector<BlowupStep> degree3_steps(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree3_steps: require n >= 2");
    std::vector<BlowupStep> steps;

    // triple-point locus, quotient P^{n-1}
    steps.push_back({"triple-point locus", BlowupDirection::up, 3 * n - 3,
                     RationalSeries(TPoly::one_minus_tk(2 * n), {2})});

    // double-point locus: P^2-bundle over Gr(2,n)
    TPoly p2;
    p2.add_term(1, 0);
    p2.add_term(1, 2);
    p2.add_term(1, 4);
    steps.push_back({"double-point locus", BlowupDirection::up, 2 * n - 2,
                     RationalSeries(p2 * TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n - 2), {2, 4})});

    // single-point locus: blow-up of the universal curve over the degree-2 space
    TPoly p1;
    p1.add_term(1, 0);
    p1.add_term(1, 2);
    steps.push_back({"single-point locus", BlowupDirection::up, n - 1,
                     RationalSeries(p1 * TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n) *
                                        TPoly::one_minus_tk(2 * n - 2),
                                    {2, 2, 2})});

    // first contraction: S_2-quotiented P^1-bundle over the strict transform
    // of the second exceptional divisor
    TPoly one_plus_t2 = p1; // 1 + t^2
    RationalSeries weight2 = RationalSeries::from_poly(TPoly::term(1, 2)) /
                             RationalSeries::from_poly(one_plus_t2);
    RationalSeries part_a(p2 * TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n - 2) *
                              TPoly::one_minus_tk(4 * n - 4),
                          {2, 2, 4});
    TPoly tshell;
    tshell.add_term(1, 2);
    tshell.add_term(-1, 2 * n - 2);
    RationalSeries part_b(tshell * one_plus_t2 * one_plus_t2 * TPoly::one_minus_tk(2 * n - 2) *
                              TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n - 2),
                          {2, 2, 2, 4});
    steps.push_back({"first contraction", BlowupDirection::down, 2, weight2 * (part_a + part_b)});

    // second contraction: S_3-quotiented P^2-bundle over the strict transform
    // of the first exceptional divisor
    TPoly t2_plus_t4;
    t2_plus_t4.add_term(1, 2);
    t2_plus_t4.add_term(1, 4);
    RationalSeries weight3 = RationalSeries::from_poly(t2_plus_t4) / RationalSeries::from_poly(p2);
    RationalSeries body(TPoly::one_minus_tk(2 * n) * TPoly::one_minus_tk(2 * n) *
                            TPoly::one_minus_tk(2 * n - 2) * TPoly::one_minus_tk(2 * n + 2),
                        {2, 2, 2, 4});
    steps.push_back({"second contraction", BlowupDirection::down, 3, weight3 * body});

    return steps;
}

/// Degree-3 Betti pipeline: quasimap series plus the five correction terms,
/// checked against the closed form (and against the plain quasimap series at
/// n = 2, where the birational map is an isomorphism).
inline RationalSeries degree3_betti(int n)
{
    if (n < 2)
        throw std::invalid_argument("degree3_betti: require n >= 2");
    RationalSeries s = quasimap_series(3, n);
    for (const BlowupStep& step : degree3_steps(n)) {
        if (step.direction == BlowupDirection::up)
            s = betti_blowup(s, step.center_series, step.codimension);
        else
            s = s - step.center_series;
    }
    RationalSeries closed = degree3_closed_form(n);
    if (!s.equals(closed))
        throw std::logic_error("degree3_betti: assembled series does not match closed form at n=" +
                               std::to_string(n));
    if (n == 2 && !closed.equals(quasimap_series(3, 2)))
        throw std::logic_error("degree3_betti: n=2 value does not match the quasimap series");
    return closed;
}

/// The stable-limit presentation of the degree-3 cohomology ring:
/// Q[xi:2, a:4, u:6, v:4, rho3:2, sigma:4] / <a*u, u*sigma, sigma^2 - 4*a*rho3^2>,
/// where u and v stand for the cubed and squared exceptional classes of the
/// first two blow-ups.
inline Presentation degree3_infinite_presentation()
{
    RingPtr ring = make_ring({{"xi", 2}, {"a", 4}, {"u", 6}, {"v", 4}, {"rho3", 2}, {"sigma", 4}});
    MultiPoly a = MultiPoly::generator(ring, "a");
    MultiPoly u = MultiPoly::generator(ring, "u");
    MultiPoly rho3 = MultiPoly::generator(ring, "rho3");
    MultiPoly sigma = MultiPoly::generator(ring, "sigma");
    std::vector<MultiPoly> rels = {a * u, u * sigma, sigma * sigma - 4 * a * rho3 * rho3};
    return Presentation(ring, std::move(rels), "degree-3 moduli ring, stable limit");
}

/// The n -> infinity limit of the degree-3 closed form:
/// (1/(1-t^6) + 2 t^4/(1-t^4)) * 1/(1-t^2) * 1/((1-t^2)(1-t^4)).
inline RationalSeries degree3_infinite_limit_series()
{
    RationalSeries bracket = RationalSeries(TPoly::one(), {6}) +
                             RationalSeries(TPoly::term(2, 4), {4});
    return bracket * RationalSeries(TPoly::one(), {2}) * RationalSeries(TPoly::one(), {2, 4});
}

/// Gröbner verification of the stable-limit ring. The relations are not a
/// regular sequence (u annihilates the third relation modulo the first two),
/// so the complete-intersection product formula must fail; that is asserted
/// as a regression guard against the illegal shortcut.
inline VerificationReport degree3_infinite_ring_verify()
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "d3-ring";

    Presentation pres = degree3_infinite_presentation();
    GroebnerBasis gb = buchberger(Ideal(pres.ring, pres.relations));
    RationalSeries hilbert = hilbert_series(gb);
    RationalSeries limit = degree3_infinite_limit_series();
    report.cases.push_back(detail::series_case("d3-ring/hilbert-matches-limit", 0, limit, hilbert));

    TPoly ci_num = TPoly::one_minus_tk(10) * TPoly::one_minus_tk(10) * TPoly::one_minus_tk(8);
    RationalSeries ci(std::move(ci_num), {2, 4, 6, 4, 2, 4});
    report.cases.push_back(detail::text_case("d3-ring/complete-intersection-formula-rejected", 0,
                                             "different", ci.equals(hilbert) ? "equal" : "different",
                                             !ci.equals(hilbert)));

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Verification of the degree-3 ring over the line (n = 2): its Hilbert
/// series must match both the Betti pipeline and the quasimap series, and
/// here the two relations do form a regular sequence, so the
/// complete-intersection product is also checked.
inline VerificationReport degree3_p1_verify()
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "d3-p1";

    Ideal ideal = relations_d3(2);
    GroebnerBasis gb = buchberger(ideal);
    RationalSeries hilbert = hilbert_series(gb);

    report.cases.push_back(
        detail::series_case("d3-p1/hilbert-matches-betti", 2, degree3_betti(2), hilbert));
    report.cases.push_back(
        detail::series_case("d3-p1/hilbert-matches-quasimap", 2, quasimap_series(3, 2), hilbert));

    TPoly ci_num = TPoly::one_minus_tk(6) * TPoly::one_minus_tk(8);
    RationalSeries ci(std::move(ci_num), {2, 4});
    report.cases.push_back(detail::series_case("d3-p1/complete-intersection-product", 2, ci, hilbert));

    std::string degrees;
    for (const MultiPoly& g : ideal.generators) {
        if (!degrees.empty())
            degrees += ",";
        degrees += std::to_string(*degree_info(g).weighted_degree);
    }
    report.cases.push_back(detail::text_case("d3-p1/relation-degrees", 2, "6,8", degrees, degrees == "6,8"));

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

/// Betti identity suite for one degree (2 or 3): assembled sum vs closed form
/// for n = 2..n_max, plus the n = 2 quasimap consistency in degree 3.
inline VerificationReport run_betti_suite(int degree, int n_max)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = degree == 2 ? "d2" : "d3";
    for (int n = 2; n <= n_max; ++n) {
        if (degree == 2) {
            RationalSeries assembled =
                betti_blowup(quasimap_series(2, n), degree2_center_series(n), 2 * n - 2) -
                unstable_correction_d2(n);
            report.cases.push_back(
                detail::series_case("d2/betti-identity", n, degree2_closed_form(n), assembled));
        } else {
            RationalSeries s = quasimap_series(3, n);
            for (const BlowupStep& step : degree3_steps(n))
                s = step.direction == BlowupDirection::up
                        ? betti_blowup(s, step.center_series, step.codimension)
                        : s - step.center_series;
            report.cases.push_back(
                detail::series_case("d3/betti-identity", n, degree3_closed_form(n), s));
        }
    }
    if (degree == 3 && n_max >= 2)
        report.cases.push_back(detail::series_case("d3/quasimap-consistency", 2, quasimap_series(3, 2),
                                                   degree3_closed_form(2)));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Gröbner-backed ring suite: degree-2 ring checks for n = 2..ring_n_max,
/// localization rings against the quasimap series for n = 1..3, the stable
/// limit ring, and the degree-3 ring over the line.
inline VerificationReport run_rings_suite(int ring_n_max)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "rings";
    for (int n = 2; n <= ring_n_max; ++n)
        for (CaseResult& c : degree2_ring_verify(n).cases)
            report.cases.push_back(std::move(c));
    for (int n = 1; n <= std::min(3, ring_n_max); ++n) {
        report.cases.push_back(detail::series_case("rings/localization-d2", n, quasimap_series(2, n),
                                                   hilbert_series(buchberger(relations_d2(n)))));
        report.cases.push_back(detail::series_case("rings/localization-d3", n, quasimap_series(3, n),
                                                   hilbert_series(buchberger(relations_d3(n)))));
    }
    for (CaseResult& c : degree3_infinite_ring_verify().cases)
        report.cases.push_back(std::move(c));
    for (CaseResult& c : degree3_p1_verify().cases)
        report.cases.push_back(std::move(c));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline VerificationReport run_bo_suite(int ring_n_max)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "bo";
    for (int n = 2; n <= ring_n_max; ++n)
        for (CaseResult& c : bo_equivalence(n).cases)
            report.cases.push_back(std::move(c));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Runs one of the named suites (d2, d3, bo, rings, all) with the given
/// ranges; Betti identities use n_max, Gröbner-backed checks ring_n_max.
inline VerificationReport run_suite(const std::string& which, int n_max, int ring_n_max)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = which;
    auto absorb = [&report](VerificationReport sub) {
        for (CaseResult& c : sub.cases)
            report.cases.push_back(std::move(c));
    };
    if (which == "d2")
        absorb(run_betti_suite(2, n_max));
    else if (which == "d3")
        absorb(run_betti_suite(3, n_max));
    else if (which == "bo")
        absorb(run_bo_suite(ring_n_max));
    else if (which == "rings")
        absorb(run_rings_suite(ring_n_max));
    else if (which == "all") {
        absorb(run_betti_suite(2, n_max));
        absorb(run_betti_suite(3, n_max));
        absorb(run_bo_suite(ring_n_max));
        absorb(run_rings_suite(ring_n_max));
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + which + "'");
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace quotcoh
