// SPDX-License-Identifier: Apache-2.0
//
// Measurement-induced non-locality of a bipartite state via the broken
// observable built from the eigenbasis of rho_A. Non-degenerate eigenvectors
// contribute fixed terms; inside each degenerate eigenspace the residual
// unitary freedom is optimized by inverse approximate joint diagonalization
// of the projected blocks of sqrt(rho). A random-search fallback provides an
// independent lower-bound oracle for small problems.

#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "minskew/jointdiag.hpp"
#include "minskew/linalg.hpp"
#include "minskew/metrology.hpp"
#include "minskew/random.hpp"
#include "minskew/states.hpp"

namespace minskew {

struct DegeneracyBlock {
    double eigenvalue = 0.0;  // cluster mean
    cmat vectors;             // m x D_alpha, orthonormal columns
};

struct DegeneracyPartition {
    cmat phi_n;                         // m x N non-degenerate eigenvectors
    std::vector<double> phi_n_values;   // their eigenvalues, ascending
    std::vector<DegeneracyBlock> blocks;
    double tolerance = 0.0;
    // Smallest eigenvalue gap across a cluster boundary; lets callers spot
    // spectra that straddle the tolerance. Infinity when there is one cluster.
    double min_boundary_gap = std::numeric_limits<double>::infinity();

    int total_dim() const {
        int d = static_cast<int>(phi_n.cols());
        for (const auto& b : blocks) d += static_cast<int>(b.vectors.cols());
        return d;
    }
};

// Clusters the ascending spectrum of rho_A by transitive closure of
// |l_i - l_j| < tol (adjacent-gap merging on the sorted list). Singleton
// clusters populate phi_n; larger ones become degenerate blocks.
inline DegeneracyPartition partition_degeneracies(const cmat& rho_a, double tol = 1e-8) {
    if (!(tol > 0.0)) throw ParamOutOfRangeError("partition_degeneracies: tol must be > 0");
    const HermitianEigenSystem es = hermitian_eig(rho_a);
    const Eigen::Index m = es.eigenvalues.size();

    DegeneracyPartition part;
    part.tolerance = tol;
    std::vector<Eigen::Index> nondeg;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= m; ++i) {
        const bool boundary = i == m || es.eigenvalues(i) - es.eigenvalues(i - 1) >= tol;
        if (!boundary) continue;
        const Eigen::Index size = i - start;
        if (size == 1) {
            nondeg.push_back(start);
        } else {
            DegeneracyBlock blk;
            blk.vectors = es.eigenvectors.middleCols(start, size);
            blk.eigenvalue = es.eigenvalues.segment(start, size).mean();
            part.blocks.push_back(std::move(blk));
        }
        if (i < m)
            part.min_boundary_gap =
                std::min(part.min_boundary_gap, es.eigenvalues(i) - es.eigenvalues(i - 1));
        start = i;
    }
    part.phi_n.resize(m, static_cast<Eigen::Index>(nondeg.size()));
    part.phi_n_values.reserve(nondeg.size());
    for (std::size_t k = 0; k < nondeg.size(); ++k) {
        part.phi_n.col(static_cast<Eigen::Index>(k)) = es.eigenvectors.col(nondeg[k]);
        part.phi_n_values.push_back(es.eigenvalues(nondeg[k]));
    }
    return part;
}

// The n x n grid of m x m blocks A_ij = (I_m (x) <psi_i|) sqrt(rho) (I_m (x) |psi_j>).
struct ProjectedMatrixSet {
    std::vector<cmat> a;  // a[i * n + j] = A_ij
    int dim_a = 0;
    int dim_b = 0;
    cmat basis_b;

    const cmat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim_b + j]; }
};

inline ProjectedMatrixSet build_a_matrices(const cmat& sqrt_rho, int m, int n,
                                           const cmat& basis_b) {
    if (sqrt_rho.rows() != static_cast<Eigen::Index>(m) * n || sqrt_rho.cols() != sqrt_rho.rows())
        throw DimensionMismatchError("build_a_matrices: sqrt_rho is not (m*n) x (m*n)");
    if (basis_b.rows() != n || basis_b.cols() != n)
        throw DimensionMismatchError("build_a_matrices: basis_b must be n x n");
    if (max_abs(basis_b.adjoint() * basis_b - cmat::Identity(n, n)) > 1e-10)
        throw NotUnitaryError("build_a_matrices: basis_b is not unitary");

    const bool computational = max_abs(basis_b - cmat::Identity(n, n)) == 0.0;
    cmat s;
    if (computational) {
        s = sqrt_rho;
    } else {
        const cmat w = kron(cmat::Identity(m, m), basis_b);
        s = w.adjoint() * sqrt_rho * w;
    }

    ProjectedMatrixSet set;
    set.dim_a = m;
    set.dim_b = n;
    set.basis_b = basis_b;
    set.a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cmat aij(m, m);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    aij(k, l) = s(k * n + i, l * n + j);
            set.a.push_back(std::move(aij));
        }
    }
    return set;
}

inline ProjectedMatrixSet build_a_matrices(const cmat& sqrt_rho, int m, int n) {
    return build_a_matrices(sqrt_rho, m, n, cmat::Identity(n, n));
}

struct MinConfig {
    double degeneracy_tol = 1e-8;
    double sweep_tol = 1e-12;
    int max_sweeps = 100;
    bool random_b_basis = false;     // default is the computational basis of B
    std::uint64_t b_basis_seed = 0;
    bool strict = false;             // throw NotConvergedError on unconverged subspaces
    bool trace_rotations = false;
};

struct SubspaceReport {
    int dimension = 0;
    double eigenvalue = 0.0;
    double objective = 0.0;
    int sweeps_used = 0;
    long rotations_applied = 0;
    bool converged = false;
};

struct MinReport {
    double value = 0.0;
    double nondegenerate_contribution = 0.0;
    std::vector<SubspaceReport> subspaces;
    std::optional<BrokenObservable> optimal_basis;
    double cross_check = 0.0;
    double wall_time_s = 0.0;
    double min_boundary_gap = std::numeric_limits<double>::infinity();

    int total_sweeps() const {
        int s = 0;
        for (const auto& r : subspaces) s += r.sweeps_used;
        return s;
    }
    long total_rotations() const {
        long r = 0;
        for (const auto& sub : subspaces) r += sub.rotations_applied;
        return r;
    }
    bool all_converged() const {
        for (const auto& r : subspaces)
            if (!r.converged) return false;
        return true;
    }
};

// Full pipeline: value = 1 - sum_ij sum_k |Phi_N^dagger A_ij Phi_N|_kk^2
//                          - sum_alpha min_U sum_ij sum_k |U^dagger B_ij U|_kk^2
// with B_ij the blocks of A_ij projected into the alpha-th degenerate
// eigenspace. The optimal broken observable is materialized and re-evaluated
// through min_direct as an end-to-end consistency check.
inline MinReport min_skew(const BipartiteState& state, const MinConfig& cfg = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = state.dim_a, n = state.dim_b;

    const cmat s = matrix_sqrt(state.rho);
    const cmat rho_a = partial_trace_b(state);
    const DegeneracyPartition part = partition_degeneracies(rho_a, cfg.degeneracy_tol);
    const cmat basis_b =
        cfg.random_b_basis ? haar_unitary(n, cfg.b_basis_seed) : cmat::Identity(n, n);
    const ProjectedMatrixSet set = build_a_matrices(s, m, n, basis_b);

    MinReport report;
    report.min_boundary_gap = part.min_boundary_gap;

    double fixed = 0.0;
    for (Eigen::Index k = 0; k < part.phi_n.cols(); ++k) {
        const cvec col = part.phi_n.col(k);
        for (const cmat& aij : set.a) fixed += std::norm((col.adjoint() * aij * col).value());
    }
    report.nondegenerate_contribution = fixed;

    double value = 1.0 - fixed;
    cmat optimal(m, m);
    Eigen::Index next_col = 0;
    for (Eigen::Index k = 0; k < part.phi_n.cols(); ++k)
        optimal.col(next_col++) = part.phi_n.col(k);

    for (const DegeneracyBlock& blk : part.blocks) {
        JointDiagProblem problem;
        problem.mode = DiagMode::Min;
        problem.sweep_tolerance = cfg.sweep_tol;
        problem.max_sweeps = cfg.max_sweeps;
        problem.trace_rotations = cfg.trace_rotations;
        problem.matrices.reserve(set.a.size());
        for (const cmat& aij : set.a)
            problem.matrices.push_back(blk.vectors.adjoint() * aij * blk.vectors);

        const JointDiagResult res = joint_diagonalize(problem);
        value -= res.objective;

        const cmat cols = blk.vectors * res.unitary.adjoint();
        for (Eigen::Index k = 0; k < cols.cols(); ++k) optimal.col(next_col++) = cols.col(k);

        report.subspaces.push_back(SubspaceReport{
            static_cast<int>(blk.vectors.cols()), blk.eigenvalue, res.objective, res.sweeps_used,
            res.rotations_applied, res.converged});
    }

    if (cfg.strict && !report.all_converged())
        throw NotConvergedError("min_skew: a degenerate subspace did not converge");

    report.value = value;
    report.optimal_basis.emplace(optimal, n);
    report.cross_check = min_direct(state, *report.optimal_basis);
    if (std::abs(report.value - report.cross_check) > 1e-9)
        throw InternalInconsistencyError("min_skew: cross-check differs from value by " +
                                         std::to_string(std::abs(report.value - report.cross_check)));
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace detail {

// sum_ij sum_k |v_k^dagger B_ij v_k|^2 for the columns v_k of a block basis.
inline double block_cost(const std::vector<cmat>& blocks, const cmat& u) {
    double cost = 0.0;
    for (const cmat& b : blocks)
        for (Eigen::Index k = 0; k < u.cols(); ++k)
            cost += std::norm((u.col(k).adjoint() * b * u.col(k)).value());
    return cost;
}

}  // namespace detail

// Random-search lower bound on the non-locality: evaluates the fixed-basis
// candidate over Haar-random unitaries inside each degenerate eigenspace
// (block costs are independent, so blocks are minimized separately) plus an
// exhaustive (theta, phi) grid for 2-dimensional blocks, refined once around
// the best coarse cell. Intended for small dimensions; every candidate it
// tries lower-bounds the true value.
inline double brute_force_min(const BipartiteState& state, int samples, std::uint64_t seed,
                              int grid_steps = 360, double degeneracy_tol = 1e-8) {
    const int m = state.dim_a, n = state.dim_b;
    const cmat s = matrix_sqrt(state.rho);
    const cmat rho_a = partial_trace_b(state);
    const DegeneracyPartition part = partition_degeneracies(rho_a, degeneracy_tol);
    const ProjectedMatrixSet set = build_a_matrices(s, m, n);

    double fixed = 0.0;
    for (Eigen::Index k = 0; k < part.phi_n.cols(); ++k) {
        const cvec col = part.phi_n.col(k);
        for (const cmat& aij : set.a) fixed += std::norm((col.adjoint() * aij * col).value());
    }

    Rng rng(seed);
    double total_block_cost = 0.0;
    for (const DegeneracyBlock& blk : part.blocks) {
        const int d = static_cast<int>(blk.vectors.cols());
        std::vector<cmat> blocks;
        blocks.reserve(set.a.size());
        for (const cmat& aij : set.a)
            blocks.push_back(blk.vectors.adjoint() * aij * blk.vectors);

        double best = detail::block_cost(blocks, cmat::Identity(d, d));
        for (int sample = 0; sample < samples; ++sample)
            best = std::min(best, detail::block_cost(blocks, haar_unitary(d, rng)));
        if (d == 2 && grid_steps > 0) {
            const auto eval = [&blocks](double theta, double phi) {
                const double c = std::cos(theta), sn = std::sin(theta);
                const cplx e(std::cos(phi), std::sin(phi));
                cmat u(2, 2);
                u << c, -sn * std::conj(e), sn * e, c;
                return detail::block_cost(blocks, u);
            };
            const double dt = (std::numbers::pi / 2.0) / grid_steps;
            const double dp = (2.0 * std::numbers::pi) / grid_steps;
            double best_theta = 0.0, best_phi = 0.0;
            for (int a = 0; a < grid_steps; ++a) {
                for (int b = 0; b < grid_steps; ++b) {
                    const double cost = eval(a * dt, b * dp);
                    if (cost < best) {
                        best = cost;
                        best_theta = a * dt;
                        best_phi = b * dp;
                    }
                }
            }
            // one refinement pass over the best coarse cell
            for (int a = -40; a <= 40; ++a)
                for (int b = -40; b <= 40; ++b)
                    best = std::min(best,
                                    eval(best_theta + a * dt / 40.0, best_phi + b * dp / 40.0));
        }
        total_block_cost += best;
    }
    return 1.0 - fixed - total_block_cost;
}

}  // namespace minskew
