// Tests for the check runner (pattern matching, suite selection, result
// capture) and the plot-grid emitter behind the command-line tool.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/plot.hpp"
#include "dwork/report.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace dwork;

TEST_CASE("pattern matching on check ids") {
    CHECK(pattern_matches("all", "dwork.factorization"));
    CHECK(pattern_matches("dwork", "dwork.factorization"));
    CHECK_FALSE(pattern_matches("dwork", "dworkx.other"));
    CHECK(pattern_matches("picard.*", "picard.cartan"));
    CHECK_FALSE(pattern_matches("picard.*", "pluecker.table"));
    CHECK(pattern_matches("fiber.conifold.*", "fiber.conifold.nodes"));
    CHECK_FALSE(pattern_matches("fiber.conifold.*", "fiber.fermat.cover"));
}

TEST_CASE("registry ids are unique and cover the six suites") {
    const auto& defs = all_checks();
    std::set<std::string> ids;
    for (const auto& d : defs) {
        CHECK(ids.insert(d.id).second);
        CHECK_FALSE(d.provenance.empty());
    }
    for (const char* suite : {"dwork", "dp5", "pluecker", "picard", "fiber"}) {
        int n = 0;
        for (const auto& d : defs)
            if (pattern_matches(suite, d.id)) ++n;
        CAPTURE(suite);
        CHECK(n > 0);
    }
}

TEST_CASE("suite selection and unknown patterns") {
    CheckContext ctx;
    auto results = run_matching("picard.*", ctx);
    CHECK(results.size() >= 8);
    CHECK(results.size() <= 12);
    for (const auto& r : results) CHECK(r.status == CheckResult::Status::pass);

    CHECK_THROWS_AS(run_matching("nosuch.*", ctx), std::invalid_argument);
    CHECK_THROWS_AS(run_matching("bogus", ctx), std::invalid_argument);
}

TEST_CASE("failures are captured, not propagated") {
    CheckDef failing{"demo.fail", "none",
                     [](const CheckContext&) { throw std::runtime_error("boom"); }};
    CheckResult r = run_check(failing, CheckContext{});
    CHECK(r.status == CheckResult::Status::fail);
    CHECK(r.details == "boom");
    CHECK(r.id == "demo.fail");
}

TEST_CASE("plot grid dimensions and node layer") {
    CHECK_THROWS_AS(plot::plot_curves(Rat(1), 1, Rat(3)), plot::InvalidGrid);
    CHECK_THROWS_AS(plot::plot_curves(Rat(1), 8, Rat(0)), plot::InvalidGrid);

    std::string csv = plot::plot_curves(Rat(1), 8, Rat(3));
    std::istringstream in(csv);
    std::string line;
    int data = 0, nodes = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line == "sigma,tau,sign_fplus,sign_fminus") header = true;
        else if (line.rfind("# node:", 0) == 0) ++nodes;
        else if (!line.empty() && line[0] != '#') ++data;
    }
    CHECK(header);
    CHECK(data == 64);
    CHECK(nodes == 6);

    // The node layer contains (-(1+sqrt5)/2, (3-sqrt5)/2).
    auto pts = plot::conifold_node_points();
    double g = (1.0 + std::sqrt(5.0)) / 2.0, h = (3.0 - std::sqrt(5.0)) / 2.0;
    bool found = false;
    for (const auto& [s, t] : pts)
        if (std::abs(s + g) < 1e-9 && std::abs(t - h) < 1e-9) found = true;
    CHECK(found);

    // No node layer away from psi^5 = 1; a warning outside [0, 1].
    CHECK(plot::plot_curves(Rat(1, 2), 4, Rat(3)).find("# node") == std::string::npos);
    CHECK(plot::plot_curves(Rat(2), 4, Rat(3)).find("# warning") != std::string::npos);
    // psi^5 = 0 limit grid still emits sign data.
    CHECK(plot::plot_curves(Rat(0), 4, Rat(3)).find("sigma,tau") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    CheckContext ctx;
    ctx.seed = 7;
    ctx.samples = 5;
    auto a = run_matching("dwork.family_samples", ctx);
    auto b = run_matching("dwork.family_samples", ctx);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].status == CheckResult::Status::pass);
    CHECK(a[0].status == b[0].status);
    CHECK(a[0].details == b[0].details);
}
