// SPDX-License-Identifier: Apache-2.0
//
// Family reproduction suites: evaluate the numerical pipeline over a
// parameter grid next to the closed-form oracle (where one exists) and emit
// CSV / SVG. Grid points run on a small worker pool capped by the
// MIN_SKEW_THREADS environment variable; output order is by parameter value
// regardless of scheduling.

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "minskew/min_engine.hpp"
#include "minskew/oracles.hpp"
#include "minskew/states.hpp"
#include "minskew/svg.hpp"

namespace minskew {

enum class Family { Pure, QubitQudit, Ppt, Isotropic, Werner, Hybrid, Random };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Pure: return "pure";
        case Family::QubitQudit: return "qubit-qudit";
        case Family::Ppt: return "ppt";
        case Family::Isotropic: return "isotropic";
        case Family::Werner: return "werner";
        case Family::Hybrid: return "hybrid";
        case Family::Random: return "random";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::Pure, Family::QubitQudit, Family::Ppt, Family::Isotropic,
                     Family::Werner, Family::Hybrid, Family::Random})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

struct FamilyParams {
    Family family = Family::Pure;
    int m = 3;
    int n = 3;
    double alpha = 2.0;
    double x = 0.0;
    int hybrid_n = 2;
    std::uint64_t seed = 0;
};

struct SuiteRow {
    std::string family;
    FamilyParams params;
    std::string param_name;
    double param_value = 0.0;
    std::optional<double> analytic;
    double numeric = 0.0;
    std::optional<double> abs_error;
    int sweeps = 0;
    double wall_time_s = 0.0;
};

struct SuiteSpec {
    Family family = Family::Pure;
    int m = 0;          // 0 -> family default
    int n = 0;
    int points = 0;
    double x_min = 0.0, x_max = 0.0;      // used by isotropic/werner/hybrid/random
    double alpha_min = 2.0, alpha_max = 5.0;
    std::uint64_t seed = 1;
    MinConfig min_cfg;
};

namespace detail {

inline unsigned suite_worker_count(std::size_t jobs) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("MIN_SKEW_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) workers = static_cast<unsigned>(parsed);
    }
    if (workers > jobs) workers = static_cast<unsigned>(jobs == 0 ? 1 : jobs);
    return workers;
}

struct SuitePoint {
    FamilyParams params;
    std::string param_name;
    double param_value = 0.0;
};

}  // namespace detail

// Resolves defaults and builds the grid for a family sweep.
inline std::vector<detail::SuitePoint> suite_grid(SuiteSpec& spec) {
    auto& s = spec;
    switch (s.family) {
        case Family::Pure:
            if (s.m == 0) s.m = 3;
            if (s.n == 0) s.n = 3;
            if (s.points == 0) s.points = 20;
            break;
        case Family::QubitQudit:
            s.m = 2;
            if (s.n == 0) s.n = 4;
            if (s.points == 0) s.points = 20;
            break;
        case Family::Ppt:
            s.m = 3;
            s.n = 3;
            if (s.points == 0) s.points = 51;
            break;
        case Family::Isotropic:
            if (s.m == 0) s.m = 3;
            if (s.x_min == 0.0 && s.x_max == 0.0) { s.x_min = 0.0; s.x_max = 1.0; }
            if (s.points == 0) s.points = 21;
            break;
        case Family::Werner:
            if (s.m == 0) s.m = 3;
            if (s.x_min == 0.0 && s.x_max == 0.0) { s.x_min = -1.0; s.x_max = 1.0; }
            if (s.points == 0) s.points = 21;
            break;
        case Family::Hybrid:
            if (s.m == 0) s.m = 3;
            if (s.n == 0) s.n = 2;  // for hybrid, --n is the paired-ket count
            if (s.x_min == 0.0 && s.x_max == 0.0) { s.x_min = -1.0; s.x_max = 1.0; }
            if (s.points == 0) s.points = 21;
            break;
        case Family::Random:
            if (s.m == 0) s.m = 20;
            if (s.n == 0) s.n = 20;
            if (s.x_min == 0.0 && s.x_max == 0.0) { s.x_min = 0.0; s.x_max = 1.0; }
            if (s.points == 0) s.points = 51;
            break;
    }
    if (s.points < 1) throw ParamOutOfRangeError("suite: points must be >= 1");

    std::vector<detail::SuitePoint> grid;
    grid.reserve(static_cast<std::size_t>(s.points));
    for (int i = 0; i < s.points; ++i) {
        detail::SuitePoint pt;
        pt.params.family = s.family;
        pt.params.m = s.m;
        pt.params.n = s.n;
        pt.params.hybrid_n = s.n;
        pt.params.seed = s.seed;
        const double frac = s.points == 1 ? 0.0 : double(i) / (s.points - 1);
        switch (s.family) {
            case Family::Pure:
            case Family::QubitQudit:
                pt.param_name = "sample";
                pt.param_value = i;
                pt.params.seed = s.seed + static_cast<std::uint64_t>(i);
                break;
            case Family::Ppt:
                pt.param_name = "alpha";
                pt.param_value = s.alpha_min + (s.alpha_max - s.alpha_min) * frac;
                pt.params.alpha = pt.param_value;
                break;
            default:
                pt.param_name = "x";
                pt.param_value = s.x_min + (s.x_max - s.x_min) * frac;
                pt.params.x = pt.param_value;
                break;
        }
        grid.push_back(std::move(pt));
    }
    return grid;
}

inline BipartiteState suite_build_state(const FamilyParams& p) {
    switch (p.family) {
        case Family::Pure: return random_pure(p.m, p.n, p.seed);
        case Family::QubitQudit: return random_mixed_state(2, p.n, p.seed);
        case Family::Ppt: return ppt_state(p.alpha);
        case Family::Isotropic: return isotropic_state(p.m, p.x);
        case Family::Werner: return werner_state(p.m, p.x);
        case Family::Hybrid: return hybrid_state(p.m, p.hybrid_n, p.x);
        case Family::Random: return interpolated_random_state(p.m, p.n, p.x, p.seed);
    }
    throw Error("suite_build_state: unknown family");
}

inline std::optional<double> suite_analytic(const FamilyParams& p, const BipartiteState& state) {
    switch (p.family) {
        case Family::Pure: return pure_min(schmidt(state));
        case Family::QubitQudit: return qubit_qudit_min(state);
        case Family::Ppt: return ppt_min(p.alpha);
        case Family::Isotropic: return isotropic_min(p.m, p.x);
        case Family::Werner: return werner_min(p.m, p.x);
        case Family::Hybrid: return hybrid_min(p.m, p.hybrid_n, p.x);
        case Family::Random: return std::nullopt;
    }
    return std::nullopt;
}

// Runs the sweep. Diagnostics (m=3 hybrid branch surfacing, PSD violations)
// go to *diag when given; PSD-violating points are reported and skipped.
// Completed rows are appended to *partial as they finish, so callers can
// flush partial results if a later point throws.
inline std::vector<SuiteRow> run_suite(SuiteSpec spec, std::ostream* diag = nullptr,
                                       std::vector<SuiteRow>* partial = nullptr) {
    auto grid = suite_grid(spec);
    std::vector<std::optional<SuiteRow>> slots(grid.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex mutex;  // guards first_error and diag

    const auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= grid.size()) return;
            {
                std::scoped_lock lock(mutex);
                if (first_error) return;
            }
            const auto& pt = grid[idx];
            try {
                BipartiteState state = suite_build_state(pt.params);
                MinReport rep = min_skew(state, spec.min_cfg);
                SuiteRow row;
                row.family = family_name(pt.params.family);
                row.params = pt.params;
                row.param_name = pt.param_name;
                row.param_value = pt.param_value;
                row.numeric = rep.value;
                row.sweeps = rep.total_sweeps();
                row.wall_time_s = rep.wall_time_s;
                row.analytic = suite_analytic(pt.params, state);
                if (row.analytic) row.abs_error = std::abs(*row.analytic - row.numeric);
                slots[idx] = std::move(row);
            } catch (const NotPsdError& err) {
                std::scoped_lock lock(mutex);
                if (diag)
                    *diag << "suite: skipping " << pt.param_name << " = " << pt.param_value
                          << ": " << err.what() << '\n';
            } catch (...) {
                std::scoped_lock lock(mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const unsigned workers = detail::suite_worker_count(grid.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<SuiteRow> rows;
    rows.reserve(grid.size());
    for (auto& slot : slots)
        if (slot) {
            if (partial) partial->push_back(*slot);
            rows.push_back(std::move(*slot));
        }
    if (first_error) std::rethrow_exception(first_error);

    // Surface the m = 3 hybrid branch ambiguity instead of resolving it silently.
    if (diag && spec.family == Family::Hybrid && spec.m == 3) {
        for (const SuiteRow& row : rows) {
            const double x = row.param_value;
            if (x > -1.0 && x <= -14.0 / 15.0) {
                const auto [t3, t1] = hybrid_min_m3_branches(x);
                *diag << "suite: hybrid m=3 branch interval x = " << x
                      << ": t=3 branch = " << t3 << ", t=1 branch = " << t1
                      << " (numeric = " << row.numeric << ")\n";
            }
        }
    }
    return rows;
}

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_suite_csv(std::ostream& out, const std::vector<SuiteRow>& rows) {
    out << "family,param_name,param_value,analytic,numeric,abs_error,sweeps,wall_time_s\n";
    for (const SuiteRow& row : rows) {
        out << row.family << ',' << row.param_name << ',' << format_g17(row.param_value) << ','
            << (row.analytic ? format_g17(*row.analytic) : std::string()) << ','
            << format_g17(row.numeric) << ','
            << (row.abs_error ? format_g17(*row.abs_error) : std::string()) << ',' << row.sweeps
            << ',' << format_g17(row.wall_time_s) << '\n';
    }
}

inline void write_suite_svg(const std::string& path, const std::vector<SuiteRow>& rows,
                            const std::string& title, const std::string& x_label) {
    std::vector<PlotSeriesPoint> points;
    points.reserve(rows.size());
    for (const SuiteRow& row : rows)
        points.push_back(PlotSeriesPoint{row.param_value, row.analytic, row.numeric});
    std::ofstream out(path);
    if (!out) throw Error("cannot write SVG file: " + path);
    out << render_svg_chart(points, title, x_label);
}

}  // namespace minskew
