// SPDX-License-Identifier: Apache-2.0
//
// minskew CLI: compute the measurement-induced non-locality of a state file,
// run family reproduction suites, or benchmark random states.
//
// Exit codes: 0 success, 1 file/parse error, 2 state validation failure,
// 3 non-convergence under --strict.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minskew/min_engine.hpp"
#include "minskew/state_io.hpp"
#include "minskew/suite.hpp"

namespace {

using namespace minskew;

struct ComputeOptions {
    std::string input;
    std::string output;
    double tol_degeneracy = 1e-8;
    double tol_sweep = 1e-12;
    int max_sweeps = 200;
    std::string basis_b = "computational";
    std::uint64_t seed = 0;
    bool strict = false;
};

int run_compute(const ComputeOptions& opt) {
    BipartiteState state = read_state_file(opt.input);

    MinConfig cfg;
    cfg.degeneracy_tol = opt.tol_degeneracy;
    cfg.sweep_tol = opt.tol_sweep;
    cfg.max_sweeps = opt.max_sweeps;
    cfg.random_b_basis = opt.basis_b == "random";
    cfg.b_basis_seed = opt.seed;
    cfg.strict = opt.strict;

    const MinReport report = min_skew(state, cfg);
    json doc = report_to_json(report);
    doc["input"] = opt.input;
    doc["dim_a"] = state.dim_a;
    doc["dim_b"] = state.dim_b;
    doc["basis_b"] = opt.basis_b;

    if (opt.output.empty()) {
        std::cout << doc.dump(1) << '\n';
    } else {
        std::ofstream out(opt.output);
        if (!out) throw Error("cannot write report file: " + opt.output);
        out << doc.dump(1) << '\n';
        std::cerr << "report written to " << opt.output << '\n';
    }
    return 0;
}

struct SuiteOptions {
    std::string family;
    int m = 0;
    int n = 0;
    int points = 0;
    double x_min = 0.0, x_max = 0.0;
    double alpha_min = 2.0, alpha_max = 5.0;
    std::uint64_t seed = 1;
    std::string csv_path;
    std::string plot_path;
    double tol_degeneracy = 1e-8;
    double tol_sweep = 1e-12;
    int max_sweeps = 200;
};

int run_suite_cmd(const SuiteOptions& opt) {
    const auto family = parse_family(opt.family);
    if (!family) throw ParamOutOfRangeError("unknown family: " + opt.family);

    SuiteSpec spec;
    spec.family = *family;
    spec.m = opt.m;
    spec.n = opt.n;
    spec.points = opt.points;
    spec.x_min = opt.x_min;
    spec.x_max = opt.x_max;
    spec.alpha_min = opt.alpha_min;
    spec.alpha_max = opt.alpha_max;
    spec.seed = opt.seed;
    spec.min_cfg.degeneracy_tol = opt.tol_degeneracy;
    spec.min_cfg.sweep_tol = opt.tol_sweep;
    spec.min_cfg.max_sweeps = opt.max_sweeps;

    std::vector<SuiteRow> partial;
    std::vector<SuiteRow> rows;
    try {
        rows = run_suite(spec, &std::cerr, &partial);
    } catch (...) {
        // flush whatever completed before the failure, then report it
        if (!partial.empty() && !opt.csv_path.empty()) {
            std::ofstream out(opt.csv_path);
            if (out) write_suite_csv(out, partial);
            std::cerr << "suite aborted; " << partial.size() << " partial rows flushed to "
                      << opt.csv_path << '\n';
        }
        throw;
    }

    if (opt.csv_path.empty()) {
        write_suite_csv(std::cout, rows);
    } else {
        std::ofstream out(opt.csv_path);
        if (!out) throw Error("cannot write CSV file: " + opt.csv_path);
        write_suite_csv(out, rows);
        std::cerr << rows.size() << " rows written to " << opt.csv_path << '\n';
    }
    if (!opt.plot_path.empty()) {
        const std::string title = std::string(family_name(*family)) + " suite";
        const std::string x_label = rows.empty() ? "x" : rows.front().param_name;
        write_suite_svg(opt.plot_path, rows, title, x_label);
        std::cerr << "plot written to " << opt.plot_path << '\n';
    }
    return 0;
}

struct BenchOptions {
    std::string dims = "4x4";
    int samples = 3;
    std::uint64_t seed = 1;
};

int run_bench(const BenchOptions& opt) {
    const auto sep = opt.dims.find('x');
    if (sep == std::string::npos)
        throw ParamOutOfRangeError("--dims must look like MxN, e.g. 20x20");
    const int m = std::stoi(opt.dims.substr(0, sep));
    const int n = std::stoi(opt.dims.substr(sep + 1));
    if (m < 2 || n < 2) throw ParamOutOfRangeError("--dims components must be >= 2");
    if (opt.samples < 1) throw ParamOutOfRangeError("--samples must be >= 1");

    std::cout << "sample,value,sweeps,rotations,wall_time_s\n";
    double total = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const BipartiteState state =
            interpolated_random_state(m, n, 0.5, opt.seed + static_cast<std::uint64_t>(i));
        const MinReport rep = min_skew(state);
        total += rep.wall_time_s;
        std::cout << i << ',' << format_g17(rep.value) << ',' << rep.total_sweeps() << ','
                  << rep.total_rotations() << ',' << format_g17(rep.wall_time_s) << '\n';
    }
    std::cout << "mean wall time: " << format_g17(total / opt.samples) << " s over "
              << opt.samples << " samples of " << m << "x" << n << " states\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-induced non-locality via joint diagonalization"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "compute the non-locality of a state file");
    compute->add_option("input", copt.input, "state JSON file")->required();
    compute->add_option("--output", copt.output, "write the JSON report here (default: stdout)");
    compute->add_option("--tol-degeneracy", copt.tol_degeneracy, "eigenvalue clustering tolerance");
    compute->add_option("--tol-sweep", copt.tol_sweep, "sweep convergence tolerance");
    compute->add_option("--max-sweeps", copt.max_sweeps, "sweep limit per subspace");
    compute->add_option("--basis-b", copt.basis_b, "B-side basis: computational|random")
        ->check(CLI::IsMember({"computational", "random"}));
    compute->add_option("--seed", copt.seed, "seed for --basis-b random");
    compute->add_flag("--strict", copt.strict, "exit 3 if a subspace does not converge");

    SuiteOptions sopt;
    CLI::App* suite = app.add_subcommand("suite", "run a family reproduction suite");
    suite->add_option("--family", sopt.family,
                      "pure|qubit-qudit|ppt|isotropic|werner|hybrid|random")
        ->required();
    suite->add_option("--m", sopt.m, "subsystem A dimension");
    suite->add_option("--n", sopt.n, "subsystem B dimension (hybrid: paired-ket count)");
    suite->add_option("--points", sopt.points, "grid points / sample count");
    suite->add_option("--x-min", sopt.x_min, "parameter grid start");
    suite->add_option("--x-max", sopt.x_max, "parameter grid end");
    suite->add_option("--alpha-min", sopt.alpha_min, "PPT grid start");
    suite->add_option("--alpha-max", sopt.alpha_max, "PPT grid end");
    suite->add_option("--seed", sopt.seed, "base seed for random families");
    suite->add_option("--csv", sopt.csv_path, "write CSV here (default: stdout)");
    suite->add_option("--plot", sopt.plot_path, "write an SVG chart here");
    suite->add_option("--tol-degeneracy", sopt.tol_degeneracy, "eigenvalue clustering tolerance");
    suite->add_option("--tol-sweep", sopt.tol_sweep, "sweep convergence tolerance");
    suite->add_option("--max-sweeps", sopt.max_sweeps, "sweep limit per subspace");

    BenchOptions bopt;
    CLI::App* bench = app.add_subcommand("bench", "time the pipeline on random states");
    bench->add_option("--dims", bopt.dims, "state dimensions MxN (default 4x4)");
    bench->add_option("--samples", bopt.samples, "number of random states");
    bench->add_option("--seed", bopt.seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return run_compute(copt);
        if (*suite) return run_suite_cmd(sopt);
        if (*bench) return run_bench(bopt);
    } catch (const minskew::NotConvergedError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 3;
    } catch (const minskew::FormatError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    } catch (const minskew::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
