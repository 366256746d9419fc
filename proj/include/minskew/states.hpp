// SPDX-License-Identifier: Apache-2.0
//
// Bipartite density matrices: the validated state type, reductions, the
// parameterized state families used as benchmarks, and seeded random states.
// Composite indexing is row-major: |a> (x) |b>  <->  index a * dim_b + b.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minskew/linalg.hpp"
#include "minskew/random.hpp"

namespace minskew {

struct BipartiteState {
    int dim_a = 0;
    int dim_b = 0;
    cmat rho;

    // Validates hermiticity (1e-10), unit trace (1e-10) and positivity
    // (eigenvalues >= -1e-10) on construction.
    BipartiteState(int m, int n, cmat density) : dim_a(m), dim_b(n), rho(std::move(density)) {
        if (m < 1 || n < 1)
            throw DimensionMismatchError("BipartiteState: dimensions must be positive");
        if (rho.rows() != static_cast<Eigen::Index>(m) * n || rho.cols() != rho.rows())
            throw DimensionMismatchError("BipartiteState: matrix is not (m*n) x (m*n)");
        require_finite(rho, "BipartiteState");
        if (hermitian_asymmetry(rho) > kHermitianTol)
            throw NonHermitianError("BipartiteState: density matrix not Hermitian");
        if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
            throw NonUnitTraceError("BipartiteState: trace differs from 1");
        Eigen::SelfAdjointEigenSolver<cmat> solver(rho, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -kPsdTol)
            throw NotPsdError("BipartiteState: negative eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
    }

    int total_dim() const { return dim_a * dim_b; }
};

// (rho_A)_{kl} = sum_j rho_{(k,j),(l,j)}
inline cmat partial_trace_b(const BipartiteState& state) {
    const int m = state.dim_a, n = state.dim_b;
    cmat a = cmat::Zero(m, m);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            for (int j = 0; j < n; ++j)
                a(k, l) += state.rho(k * n + j, l * n + j);
    return a;
}

struct SchmidtForm {
    rvec coefficients;  // non-negative, descending
    cmat basis_a;       // unitary; column i pairs with coefficients[i]
    cmat basis_b;
};

inline BipartiteState pure_state(const cvec& amplitudes, int m, int n) {
    if (amplitudes.size() != static_cast<Eigen::Index>(m) * n)
        throw DimensionMismatchError("pure_state: amplitude vector has wrong length");
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
        throw NonUnitNormError("pure_state: amplitudes are not normalized");
    return BipartiteState(m, n, amplitudes * amplitudes.adjoint());
}

// Schmidt decomposition of a pure bipartite state: the singular values of the
// m x n amplitude matrix, with bases chosen so that
// psi = sum_i u_i (basis_a col i) (x) (basis_b col i).
inline SchmidtForm schmidt(const BipartiteState& state) {
    const HermitianEigenSystem es = hermitian_eig(state.rho);
    const double top = es.eigenvalues(es.eigenvalues.size() - 1);
    if (top < 1.0 - 1e-8)
        throw NotPureError("schmidt: state is not pure (largest eigenvalue " +
                           std::to_string(top) + ")");
    const cvec psi = es.eigenvectors.col(es.eigenvectors.cols() - 1);
    cmat amp(state.dim_a, state.dim_b);
    for (int i = 0; i < state.dim_a; ++i)
        for (int j = 0; j < state.dim_b; ++j)
            amp(i, j) = psi(i * state.dim_b + j);
    Eigen::JacobiSVD<cmat> svd(amp, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return SchmidtForm{svd.singularValues(), svd.matrixU(), svd.matrixV().conjugate()};
}

// |Phi_m> = (1/sqrt(m)) sum_k |kk>
inline cvec max_entangled_ket(int m) {
    cvec phi = cvec::Zero(static_cast<Eigen::Index>(m) * m);
    for (int k = 0; k < m; ++k) phi(k * m + k) = 1.0 / std::sqrt(double(m));
    return phi;
}

// 3x3 PPT family: (2/7)|Phi_3><Phi_3| + (alpha/7) rho_+ + ((5-alpha)/7) rho_-
// where rho_± average |k, k±1 mod 3>.
inline BipartiteState ppt_state(double alpha) {
    if (!(alpha >= 2.0 && alpha <= 5.0))
        throw ParamOutOfRangeError("ppt_state: alpha must lie in [2, 5]");
    const int m = 3;
    cmat rho = cmat::Zero(9, 9);
    const cvec phi = max_entangled_ket(m);
    rho += (2.0 / 7.0) * (phi * phi.adjoint());
    for (int k = 0; k < 3; ++k) {
        const int up = k * 3 + (k + 1) % 3;    // |k, k+1>
        const int down = ((k + 1) % 3) * 3 + k;  // |k+1, k>
        rho(up, up) += alpha / 21.0;
        rho(down, down) += (5.0 - alpha) / 21.0;
    }
    return BipartiteState(m, m, rho);
}

// Isotropic family on m (x) m. The fidelity parameter x is the eigenvalue on
// |Phi><Phi|; positivity restricts it to [0, 1].
inline BipartiteState isotropic_state(int m, double x) {
    if (m < 2) throw ParamOutOfRangeError("isotropic_state: m must be >= 2");
    if (!(x >= 0.0 && x <= 1.0))
        throw ParamOutOfRangeError("isotropic_state: x must lie in [0, 1]");
    const int d = m * m;
    const cvec phi = max_entangled_ket(m);
    cmat rho = ((1.0 - x) / (d - 1.0)) * cmat::Identity(d, d);
    rho += ((d * x - 1.0) / (d - 1.0)) * (phi * phi.adjoint());
    return BipartiteState(m, m, rho);
}

// Swap operator V = sum_{kl} |kl><lk|.
inline cmat swap_operator(int m) {
    cmat v = cmat::Zero(static_cast<Eigen::Index>(m) * m, static_cast<Eigen::Index>(m) * m);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            v(k * m + l, l * m + k) = 1.0;
    return v;
}

inline BipartiteState werner_state(int m, double x) {
    if (m < 2) throw ParamOutOfRangeError("werner_state: m must be >= 2");
    if (!(x >= -1.0 && x <= 1.0))
        throw ParamOutOfRangeError("werner_state: x must lie in [-1, 1]");
    const double d3 = double(m) * m * m - m;
    cmat rho = ((m - x) / d3) * cmat::Identity(m * m, m * m);
    rho += ((m * x - 1.0) / d3) * swap_operator(m);
    return BipartiteState(m, m, rho);
}

// Hybrid family on m (x) m mixing the Werner state with a projector onto n
// paired kets. Kets are 1-indexed |1>..|m>, so the P sum over k = 2..n+1
// never overlaps |11><11|; with 0-indexed storage that is P over |kk> for
// k = 1..n against |00><00|.
inline BipartiteState hybrid_state(int m, int n, double x) {
    if (m < 3) throw ParamOutOfRangeError("hybrid_state: m must be >= 3");
    if (n < 2 || n > m - 1)
        throw ParamOutOfRangeError("hybrid_state: n must lie in [2, m-1]");
    if (!(x >= -1.0 && x <= 1.0))
        throw ParamOutOfRangeError("hybrid_state: x must lie in [-1, 1]");
    const int d = m * m;
    cmat p = cmat::Zero(d, d);
    for (int k = 1; k <= n; ++k) p(k * m + k, k * m + k) = 1.0 / n;
    cmat vac = cmat::Zero(d, d);
    vac(0, 0) = 1.0;
    const cmat w = werner_state(m, x).rho;
    cmat rho = (w + p) / 2.0 + ((1.0 - m + x) / (2.0 * (d - 1.0))) * (p - vac);
    return BipartiteState(m, m, rho);
}

inline BipartiteState random_pure(int m, int n, std::uint64_t seed) {
    Rng rng(seed);
    return pure_state(random_unit_vector(m * n, rng), m, n);
}

inline BipartiteState random_mixed_state(int m, int n, std::uint64_t seed) {
    return BipartiteState(m, n, ginibre_density(m * n, seed));
}

// (1-x)/(m n) I + x G with G a seeded Ginibre density matrix.
inline BipartiteState interpolated_random_state(int m, int n, double x, std::uint64_t seed) {
    if (!(x >= 0.0 && x <= 1.0))
        throw ParamOutOfRangeError("interpolated_random_state: x must lie in [0, 1]");
    const int d = m * n;
    cmat rho = ((1.0 - x) / d) * cmat::Identity(d, d) + x * ginibre_density(d, seed);
    return BipartiteState(m, n, rho);
}

inline BipartiteState mixed_interpolation(int d, double x, std::uint64_t seed) {
    if (d < 2) throw ParamOutOfRangeError("mixed_interpolation: d must be >= 2");
    return interpolated_random_state(d, d, x, seed);
}

}  // namespace minskew
