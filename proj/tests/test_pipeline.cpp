#include "test_util.hpp"

#include "quotcoh/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace quotcoh;

namespace {

MultiPoly gen(const RingPtr& ring, const std::string& name)
{
    return MultiPoly::generator(ring, name);
}

std::vector<Integer> ints(std::initializer_list<int> v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

} // namespace

TEST_CASE("degree-2 Betti pipeline values")
{
    CHECK(degree2_betti(2).expand_to(4) == ints({1, 1, 1}));
    CHECK(degree2_betti(3).expand_to(10) == ints({1, 2, 3, 3, 2, 1}));
    for (int n = 2; n <= 8; ++n)
        CHECK_NOTHROW(degree2_betti(n)); // throws on internal mismatch
    CHECK_THROWS_AS(degree2_betti(1), std::invalid_argument);
}

TEST_CASE("degree-2 ring presentation matches the hand-built n=2 relations")
{
    Presentation pres = degree2_ring_presentation(2);
    auto ring = pres.ring;
    auto xi = gen(ring, "xi");
    auto a = gen(ring, "a");
    auto rho = gen(ring, "rho");
    REQUIRE(pres.relations.size() == 3);
    CHECK(pres.relations[0] == 2 * rho + 4 * xi);
    CHECK(pres.relations[1] == 2 * pow(rho + xi, 2) + 8 * a);
    CHECK(pres.relations[2] == xi * xi * rho);
}

TEST_CASE("degree-2 ring verification for n = 2..4")
{
    for (int n = 2; n <= 4; ++n) {
        VerificationReport report = degree2_ring_verify(n);
        INFO("n=" << n);
        CHECK(report.pass());
        REQUIRE(report.cases.size() == 4);
        CHECK(report.cases[0].name == "d2-ring/hilbert-matches-closed-form");
    }
}

TEST_CASE("recursion generators reproduce the displayed small cases")
{
    std::vector<MultiPoly> g1 = bo_generators(1);
    auto ring = g1.front().ring();
    auto b = gen(ring, "b");
    auto t = gen(ring, "t");
    CHECK(g1[0] == b * (2 * b - t));
    CHECK(g1[1] == 2 * b - t);
    CHECK(g1[2] == 2 * MultiPoly::one(ring));

    std::vector<MultiPoly> g2 = bo_generators(2);
    auto k = gen(ring, "k");
    CHECK(g2[0] == b * b * (2 * b - t));
    CHECK(g2[1] == b * (2 * b - t) + 2 * k);
    CHECK(g2[2] == 2 * b + t);
}

TEST_CASE("substituted recursion ideal at n=2 equals the hand-reduced generators")
{
    Ideal ideal = bo_substituted_ideal(2);
    auto ring = ideal.ring;
    auto xi = gen(ring, "xi");
    auto a = gen(ring, "a");
    auto rho = gen(ring, "rho");
    REQUIRE(ideal.generators.size() == 3);
    CHECK(ideal.generators[0] == -2 * xi * xi * rho);
    CHECK(ideal.generators[1] == -2 * xi * rho + 8 * a - 2 * pow(xi + rho, 2));
    CHECK(ideal.generators[2] == 4 * xi + 2 * rho);
}

TEST_CASE("recursion equivalence holds for n = 2..4")
{
    for (int n = 2; n <= 4; ++n) {
        VerificationReport report = bo_equivalence(n);
        INFO("n=" << n);
        CHECK(report.pass());
        // reduced bases are unique, so the digests must agree verbatim
        CHECK(report.cases[0].expected == report.cases[0].actual);
    }
}

TEST_CASE("degree-3 Betti pipeline values")
{
    CHECK(degree3_betti(2).expand_to(8) == ints({1, 1, 2, 1, 1}));
    CHECK(degree3_betti(2).equals(quasimap_series(3, 2)));
    for (int n = 2; n <= 8; ++n)
        CHECK_NOTHROW(degree3_betti(n));
}

TEST_CASE("stable-limit ring verification")
{
    VerificationReport report = degree3_infinite_ring_verify();
    CHECK(report.pass());

    // the three relations already form the reduced basis
    Presentation pres = degree3_infinite_presentation();
    GroebnerBasis gb = buchberger(Ideal(pres.ring, pres.relations));
    REQUIRE(gb.basis.size() == 3);
    CHECK(to_text(gb) == "sigma^2 - 4*a*rho3^2\na*u\nu*sigma\n");

    // limit series assembly
    RationalSeries bracket = RationalSeries(TPoly::one(), {6}) + RationalSeries(TPoly::term(2, 4), {4});
    TPoly num;
    num.add_term(1, 0);
    num.add_term(1, 4);
    num.add_term(-2, 10);
    CHECK(bracket.equals(RationalSeries(std::move(num), {6, 4})));
}

TEST_CASE("line ring verification")
{
    VerificationReport report = degree3_p1_verify();
    CHECK(report.pass());
}

TEST_CASE("betti outputs pass the structural checks")
{
    for (int n = 2; n <= 8; ++n) {
        for (const RationalSeries& s : {degree2_betti(n), degree3_betti(n)}) {
            StructuralChecks checks = structural_checks(s);
            CHECK(checks.is_polynomial);
            CHECK(checks.nonnegative);
            REQUIRE(checks.palindromic.has_value());
            CHECK(*checks.palindromic);
        }
    }
}

TEST_CASE("ring checks scale past the default ranges")
{
    for (int n = 5; n <= 6; ++n) {
        Presentation pres = degree2_ring_presentation(n);
        GroebnerBasis gb = buchberger(Ideal(pres.ring, pres.relations));
        CHECK(hilbert_series(gb).equals(degree2_closed_form(n)));
        CHECK(ideal_equal(Ideal(pres.ring, pres.relations), bo_substituted_ideal(n)));
        CHECK(hilbert_series(buchberger(relations_d2(n))).equals(quasimap_series(2, n)));
        CHECK(hilbert_series(buchberger(relations_d3(n))).equals(quasimap_series(3, n)));
    }
}

TEST_CASE("suites aggregate deterministically")
{
    VerificationReport all = run_suite("all", 4, 3);
    CHECK(all.suite == "all");
    CHECK(all.pass());

    VerificationReport again = run_suite("all", 4, 3);
    REQUIRE(all.cases.size() == again.cases.size());
    for (std::size_t i = 0; i < all.cases.size(); ++i) {
        CHECK(all.cases[i].name == again.cases[i].name);
        CHECK(all.cases[i].n == again.cases[i].n);
        CHECK(all.cases[i].expected == again.cases[i].expected);
        CHECK(all.cases[i].actual == again.cases[i].actual);
    }

    CHECK_THROWS_AS(run_suite("nope", 4, 3), std::invalid_argument);
}

TEST_CASE("report JSON matches the documented schema")
{
    VerificationReport report = run_suite("d2", 3, 3);
    nlohmann::json j = report_to_json(report);
    CHECK(j["suite"] == "d2");
    CHECK(j["pass"].is_boolean());
    REQUIRE(j["cases"].is_array());
    REQUIRE(!j["cases"].empty());
    for (const auto& c : j["cases"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("n"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
    }
    // series cases embed the series JSON form
    CHECK(j["cases"][0]["expected"].contains("num"));
    CHECK(j["cases"][0]["expected"].contains("den"));
}

TEST_CASE("polynomial matrices validate dimensions")
{
    auto ring = make_ring({{"b", 2}});
    auto b = gen(ring, "b");
    PolyMatrix m{{{b}}};
    CHECK(m.apply({b})[0] == b * b);
    CHECK_THROWS_AS(m.apply({b, b}), std::invalid_argument);
}
