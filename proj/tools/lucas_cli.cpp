// Command-line interface for the Lucas-equation solver.
//
// Subcommands:
//   solve        find all solutions of A*U_n + B*U_m = C*U_{n1} + D*U_{m1}
//   paper-repro  re-run the published numerical experiment
//   families     enumerate parametric families for a coefficient box
//   verify       re-check a previously emitted JSON report
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lucas/report.hpp"

namespace {

int default_threads() {
    if (const char* env = std::getenv("LUCAS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for four-term Lucas-sequence equations"};
    app.require_subcommand(1);

    int threads = default_threads();
    app.add_option("--threads", threads, "worker count (output is independent of it)")
        ->check(CLI::PositiveNumber);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve A*U_n + B*U_m = C*U_{n1} + D*U_{m1}");
    std::int64_t A = 0, B = 0, C = 0, D = 0;
    std::string format = "json", out_path;
    bool self_check = false;
    solve_cmd->add_option("--A", A, "coefficient A (nonzero)")->required();
    solve_cmd->add_option("--B", B, "coefficient B (nonzero)")->required();
    solve_cmd->add_option("--C", C, "coefficient C")->required();
    solve_cmd->add_option("--D", D, "coefficient D")->required();
    solve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--out", out_path, "write the report to a file");
    solve_cmd->add_flag("--self-check", self_check,
                        "cross-check against the brute-force oracle on a small box");

    // paper-repro
    auto* repro_cmd = app.add_subcommand("paper-repro",
                                         "re-run the published numerical experiment");
    std::string convention = "least-index";
    repro_cmd->add_option("--convention", convention)
        ->check(CLI::IsMember({"tuple", "existence", "least-index"}));
    repro_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    repro_cmd->add_option("--out", out_path, "write the report to a file");

    // families
    auto* fam_cmd = app.add_subcommand("families", "enumerate parametric families");
    std::int64_t xmax = 1, coeff_box = -1;
    fam_cmd->add_option("--xmax", xmax, "coefficient bound X")->required();
    fam_cmd->add_option("--coeff-box", coeff_box,
                        "coefficient range [-box, box] (default: xmax)");
    fam_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    fam_cmd->add_option("--out", out_path, "write the report to a file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "re-check a JSON report");
    std::string input_path;
    verify_cmd->add_option("--input", input_path, "report to verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) {
            if (A == 0 || B == 0) {
                std::cerr << "error: A and B must be nonzero\n";
                return 2;
            }
            lucas::ProblemSpec spec(A, B, C, D);
            auto result = lucas::solve(spec, threads, self_check);
            if (self_check && !result.self_check_ok) {
                std::cerr << "error: self-check mismatch against brute-force oracle\n";
                return 1;
            }
            std::string text = format == "csv"
                                   ? lucas::solve_report_csv(result)
                                   : lucas::solve_report_json(spec, result).dump(2) + "\n";
            return write_output(text, out_path);
        }

        if (*repro_cmd) {
            lucas::Convention conv = convention == "tuple" ? lucas::Convention::Tuple
                                     : convention == "existence"
                                         ? lucas::Convention::Existence
                                         : lucas::Convention::LeastIndex;
            auto report = lucas::search_paper_example(conv, threads);
            auto families = lucas::find_families(1, 1, lucas::all_bounds(1));
            std::string text = format == "csv"
                                   ? lucas::paper_report_csv(report)
                                   : lucas::paper_report_json(report, families).dump(2) + "\n";
            return write_output(text, out_path);
        }

        if (*fam_cmd) {
            if (xmax < 1) {
                std::cerr << "error: --xmax must be >= 1\n";
                return 2;
            }
            if (coeff_box < 0) coeff_box = xmax;
            if (coeff_box < 1) {
                std::cerr << "error: --coeff-box must leave room for a nonzero leading "
                             "coefficient\n";
                return 2;
            }
            auto families = lucas::find_families(coeff_box, xmax, lucas::all_bounds(xmax));
            lucas::Json doc;
            doc["bounds"] = lucas::bounds_to_json(lucas::all_bounds(xmax));
            doc["families"] = lucas::Json::array();
            for (const auto& fam : families)
                doc["families"].push_back(lucas::family_to_json(fam));
            return write_output(doc.dump(2) + "\n", out_path);
        }

        if (*verify_cmd) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read " << input_path << "\n";
                return 2;
            }
            lucas::Json doc;
            try {
                doc = lucas::Json::parse(in);
            } catch (const std::exception& e) {
                std::cerr << "error: malformed report: " << e.what() << "\n";
                return 2;
            }
            std::vector<std::string> failures;
            try {
                failures = lucas::verify_report(doc);
            } catch (const std::exception& e) {
                std::cerr << "error: malformed report: " << e.what() << "\n";
                return 2;
            }
            for (const auto& f : failures) std::cerr << "FAIL " << f << "\n";
            if (failures.empty()) {
                std::cout << "ok\n";
                return 0;
            }
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
