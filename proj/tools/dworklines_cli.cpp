// Command-line runner: `verify` executes a check suite and writes a JSON or
// text report (exit code 0 iff every check passes); `plot-curves` samples the
// sign fields of the two curve branches onto a CSV grid.
#include "dwork/plot.hpp"
#include "dwork/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;

std::string status_name(dwork::CheckResult::Status s) {
    switch (s) {
        case dwork::CheckResult::Status::pass: return "pass";
        case dwork::CheckResult::Status::fail: return "fail";
        default: return "skipped";
    }
}

json report_json(uint64_t seed, const std::vector<dwork::CheckResult>& results) {
    json out;
    out["schema"] = 1;
    out["seed"] = seed;
    out["results"] = json::array();
    for (const auto& r : results)
        out["results"].push_back({{"check-id", r.id},
                                  {"status", status_name(r.status)},
                                  {"details", r.details},
                                  {"elapsed_ms", r.elapsed_ms},
                                  {"provenance", r.provenance}});
    return out;
}

std::string report_text(const std::vector<dwork::CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.status == dwork::CheckResult::Status::pass ? "PASS" : "FAIL") << "  " << r.id
            << "  (" << static_cast<long>(r.elapsed_ms) << " ms)";
        if (r.status != dwork::CheckResult::Status::pass) out << "  " << r.details;
        out << "\n";
    }
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the line families on the quintic pencil"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all";
    dwork::CheckContext ctx;
    if (const char* env = std::getenv("DWORKLINES_PRECISION"))
        ctx.precision_bits = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    std::string psi5_str = "1/2", format = "json", out_path;
    auto* verify = app.add_subcommand("verify", "run a check suite and report");
    verify->add_option("suite", suite,
                       "suite name (all, dwork, dp5, pluecker, picard, fiber) or id glob");
    verify->add_option("--psi5", psi5_str, "pencil parameter psi^5 as p/q");
    verify->add_option("--seed", ctx.seed, "random seed for sampled checks");
    verify->add_option("--samples", ctx.samples, "sample count for numeric checks");
    verify->add_option("--precision", ctx.precision_bits, "retry precision in bits");
    verify->add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    // plot-curves
    std::string plot_psi5 = "1", plot_out;
    int grid = 64;
    std::string window = "3";
    auto* plot = app.add_subcommand("plot-curves", "emit a CSV sign-field grid");
    plot->add_option("--psi5", plot_psi5, "pencil parameter psi^5 as p/q")->required();
    plot->add_option("--grid", grid, "grid resolution N (N x N samples)");
    plot->add_option("--window", window, "half-width a of the window [-a, a]^2 as p/q");
    plot->add_option("--out", plot_out, "output CSV path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            ctx.psi5 = dwork::rat_from_string(psi5_str);
            std::vector<dwork::CheckResult> results;
            try {
                results = dwork::run_matching(suite, ctx);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            write_output(out_path,
                         format == "json" ? report_json(ctx.seed, results).dump(2) + "\n"
                                          : report_text(results));
            for (const auto& r : results)
                if (r.status != dwork::CheckResult::Status::pass) return 1;
            return 0;
        }
        std::string csv =
            dwork::plot::plot_curves(dwork::rat_from_string(plot_psi5), grid,
                                     dwork::rat_from_string(window));
        write_output(plot_out, csv);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
