// quotcoh CLI: closed-form Betti series, ring presentations, and the exact
// verification suites, in text or JSON.

#include "quotcoh/json_io.hpp"
#include "quotcoh/quotcoh.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace quotcoh;

namespace {

std::string expand_text(const RationalSeries& s, int order)
{
    std::string out = "[";
    auto c = s.expand_to(order);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += c[i].str();
    }
    return out + "]";
}

nlohmann::json picard_json(int n)
{
    return nlohmann::json{{"group", n >= 3 ? "Z+Z" : "Z"}, {"status", "stated, not verified"}};
}

int run_betti(int degree, int n, std::optional<int> expand, const std::string& format)
{
    if (n < 2) {
        std::cerr << "betti: require --n >= 2\n";
        return 2;
    }
    if (expand && (*expand < 0 || *expand % 2 != 0)) {
        std::cerr << "betti: --expand must be even and nonnegative\n";
        return 2;
    }
    RationalSeries series;
    try {
        series = degree == 2 ? degree2_betti(n) : degree3_betti(n);
    } catch (const std::logic_error& e) {
        std::cerr << "betti: verification failure: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        nlohmann::json j{{"degree", degree}, {"n", n}, {"series", series_to_json(series)}};
        if (expand) {
            nlohmann::json arr = nlohmann::json::array();
            for (const Integer& c : series.expand_to(*expand))
                arr.push_back(static_cast<std::int64_t>(c));
            j["expand"] = std::move(arr);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (expand)
            std::cout << expand_text(series, *expand) << "\n";
        std::cout << to_text(series) << "\n";
    }
    return 0;
}

int run_ring(int degree, std::optional<int> n, bool infinite, const std::string& format)
{
    Presentation pres = degree3_infinite_presentation(); // replaced below
    std::optional<int> picard_n;
    if (degree == 2) {
        if (infinite || !n) {
            std::cerr << "ring: degree 2 requires --n (no stable-limit presentation)\n";
            return 2;
        }
        if (*n < 2) {
            std::cerr << "ring: require --n >= 2\n";
            return 2;
        }
        pres = degree2_ring_presentation(*n);
        picard_n = *n;
    } else {
        if (infinite == n.has_value()) {
            std::cerr << "ring: degree 3 takes exactly one of --n or --infinite\n";
            return 2;
        }
        if (n) {
            if (*n != 2) {
                std::cerr << "ring: the degree-3 presentation is available for --n 2 or --infinite only\n";
                return 2;
            }
            Ideal line = relations_d3(2);
            pres = Presentation(line.ring, line.generators, "degree-3 moduli ring over the line");
            picard_n = 2;
        }
        // infinite: keep the stable-limit presentation
    }

    RationalSeries hilbert = presentation_hilbert(pres);
    if (format == "json") {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& [name, weight] : pres.ring->generators())
            gens.push_back({{"name", name}, {"weight", weight}});
        nlohmann::json rels = nlohmann::json::array();
        for (const MultiPoly& r : pres.relations)
            rels.push_back(to_text(r));
        nlohmann::json j{{"degree", degree},
                         {"label", pres.label},
                         {"generators", std::move(gens)},
                         {"relations", std::move(rels)},
                         {"hilbert", series_to_json(hilbert)},
                         {"hilbert_text", to_text(hilbert)}};
        if (n)
            j["n"] = *n;
        else
            j["infinite"] = true;
        if (picard_n)
            j["picard"] = picard_json(*picard_n);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pres.label << "\n";
        std::cout << "generators:";
        for (const auto& [name, weight] : pres.ring->generators())
            std::cout << " " << name << "(" << weight << ")";
        std::cout << "\nrelations:\n";
        for (const MultiPoly& r : pres.relations)
            std::cout << "  " << to_text(r) << "\n";
        std::cout << "hilbert: " << to_text(hilbert) << "\n";
        if (picard_n)
            std::cout << "picard: " << (*picard_n >= 3 ? "Z+Z" : "Z") << " (stated, not verified)\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int n_max, int ring_n_max, const std::string& format,
               const std::string& out_path)
{
    if (n_max < 2 || ring_n_max < 2) {
        std::cerr << "verify: require --n-max >= 2 and --ring-n-max >= 2\n";
        return 2;
    }
    VerificationReport report;
    try {
        report = run_suite(suite, n_max, ring_n_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }

    std::string rendered;
    if (format == "json") {
        rendered = report_to_json(report).dump(2) + "\n";
    } else {
        for (const CaseResult& c : report.cases) {
            rendered += c.pass ? "[PASS] " : "[FAIL] ";
            rendered += c.name;
            if (c.n > 0)
                rendered += " (n=" + std::to_string(c.n) + ")";
            if (!c.pass) {
                rendered += "\n       expected: " + c.expected;
                rendered += "\n       actual:   " + c.actual;
            }
            rendered += "\n";
        }
        int failed = 0;
        for (const CaseResult& c : report.cases)
            if (!c.pass)
                ++failed;
        char summary[160];
        std::snprintf(summary, sizeof(summary), "suite=%s cases=%zu failures=%d elapsed=%.3fs\n",
                      report.suite.c_str(), report.cases.size(), failed, report.elapsed_seconds);
        rendered += summary;
    }

    std::cout << rendered;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "verify: cannot write " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact cohomology computations for quotients of spaces of binary forms"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* betti = app.add_subcommand("betti", "closed-form Poincaré series");
    int betti_degree = 0;
    int betti_n = 0;
    std::optional<int> betti_expand;
    betti->add_option("--degree", betti_degree, "map degree")->required()->check(CLI::IsMember({2, 3}));
    betti->add_option("--n", betti_n, "ambient dimension parameter")->required();
    betti->add_option("--expand", betti_expand, "print coefficients of t^0..t^order");
    betti->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* ring = app.add_subcommand("ring", "ring presentation with Hilbert series");
    int ring_degree = 0;
    std::optional<int> ring_n;
    bool ring_infinite = false;
    ring->add_option("--degree", ring_degree, "map degree")->required()->check(CLI::IsMember({2, 3}));
    ring->add_option("--n", ring_n, "ambient dimension parameter");
    ring->add_flag("--infinite", ring_infinite, "stable limit presentation");
    ring->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int n_max = 8;
    int ring_n_max = 4;
    std::string out_path;
    verify->add_option("--suite", suite, "d2, d3, bo, rings, or all")
        ->required()
        ->check(CLI::IsMember({"d2", "d3", "bo", "rings", "all"}));
    verify->add_option("--n-max", n_max, "upper n for the Betti identities (default 8)");
    verify->add_option("--ring-n-max", ring_n_max, "upper n for the Gröbner-backed checks (default 4)");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "also write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (betti->parsed())
            return run_betti(betti_degree, betti_n, betti_expand, format);
        if (ring->parsed())
            return run_ring(ring_degree, ring_n, ring_infinite, format);
        return run_verify(suite, n_max, ring_n_max, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
