// SPDX-License-Identifier: Apache-2.0
//
// Skew information of a state against a broken observable (a complete set of
// rank-one projectors on subsystem A extended by the identity on B), the
// direct evaluation of the non-locality candidate at a fixed basis, and the
// quantum Fisher information bound check.

#pragma once

#include <vector>

#include "minskew/linalg.hpp"
#include "minskew/states.hpp"

namespace minskew {

// The set {K_k = |k><k| (x) I_n} for the m orthonormal columns |k> of basis.
struct BrokenObservable {
    cmat basis;  // m x m, orthonormal columns
    int dim_b = 0;

    BrokenObservable(cmat b, int n) : basis(std::move(b)), dim_b(n) {
        require_square(basis, "BrokenObservable");
        if (n < 1) throw DimensionMismatchError("BrokenObservable: dim_b must be positive");
        const cmat gram = basis.adjoint() * basis;
        if (max_abs(gram - cmat::Identity(basis.rows(), basis.cols())) > 1e-10)
            throw NotUnitaryError("BrokenObservable: columns are not orthonormal");
    }

    int dim_a() const { return static_cast<int>(basis.rows()); }

    // K_k = |k><k| (x) I_n materialized as a dense matrix.
    cmat projector(int k) const {
        const cvec col = basis.col(k);
        return kron(col * col.adjoint(), cmat::Identity(dim_b, dim_b));
    }
};

struct MetrologyCheck {
    double qfi = 0.0;
    double skew = 0.0;
    bool bound_satisfied = false;
    double slack = 0.0;  // 2 * skew - qfi / 4
};

// I(rho, K) = -(1/2) Tr([sqrt(rho), K]^2), always >= 0 for Hermitian inputs.
inline double skew_information(const cmat& sqrt_rho, const cmat& k) {
    const double value = -0.5 * commutator_trace_sq(sqrt_rho, k);
    if (value < -1e-12)
        throw InternalInconsistencyError("skew_information: negative value " +
                                         std::to_string(value));
    return value < 0.0 ? 0.0 : value;
}

// Candidate non-locality value 1 - sum_k Tr(sqrt(rho) K_k sqrt(rho) K_k) at a
// fixed orthonormal basis (no optimization). Evaluated along two independent
// routes -- the skew-information sum and the matrix-element form over the
// projected blocks -- which must agree to 1e-10; disagreement signals a
// linear-algebra bug upstream.
inline double min_direct(const BipartiteState& state, const BrokenObservable& obs) {
    const int m = state.dim_a, n = state.dim_b;
    if (obs.dim_a() != m || obs.dim_b != n)
        throw DimensionMismatchError("min_direct: observable does not match state dimensions");
    const cmat s = matrix_sqrt(state.rho);

    double skew_sum = 0.0;
    for (int k = 0; k < m; ++k) skew_sum += skew_information(s, obs.projector(k));

    // sum_k |T_k|_F^2 with (T_k)_{ij} = <k, i| sqrt(rho) |k, j>
    double block_sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const cvec col = obs.basis.col(k);
        cmat t = cmat::Zero(n, n);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const cplx w = std::conj(col(a)) * col(b);
                if (w == cplx(0.0, 0.0)) continue;
                t += w * s.block(a * n, b * n, n, n);
            }
        block_sum += t.squaredNorm();
    }
    const double direct = 1.0 - block_sum;

    if (std::abs(direct - skew_sum) > 1e-10)
        throw InternalInconsistencyError(
            "min_direct: skew-sum and matrix-element routes disagree by " +
            std::to_string(std::abs(direct - skew_sum)));
    return direct;
}

// Spectral form of the quantum Fisher information for the phase family
// e^{-iK phi} rho e^{iK phi}:
//   F_Q = 2 sum_{ij} (l_i - l_j)^2 / (l_i + l_j) |<i|K|j>|^2,
// terms with l_i + l_j < 1e-12 dropped.
inline double quantum_fisher_information(const BipartiteState& state, const cmat& k) {
    if (k.rows() != state.rho.rows() || k.cols() != state.rho.cols())
        throw DimensionMismatchError("quantum_fisher_information: dimension mismatch");
    require_hermitian(k, "quantum_fisher_information");
    const HermitianEigenSystem es = hermitian_eig(state.rho);
    const cmat kk = es.eigenvectors.adjoint() * k * es.eigenvectors;
    double f = 0.0;
    const Eigen::Index d = es.eigenvalues.size();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const double sum = es.eigenvalues(i) + es.eigenvalues(j);
            if (sum < 1e-12) continue;
            const double diff = es.eigenvalues(i) - es.eigenvalues(j);
            f += 2.0 * diff * diff / sum * std::norm(kk(i, j));
        }
    }
    return f;
}

// One check per K_k; requires the basis to commute with rho_A.
inline std::vector<MetrologyCheck> metrology_bound_check(const BipartiteState& state,
                                                         const BrokenObservable& obs) {
    const int m = state.dim_a;
    if (obs.dim_a() != m || obs.dim_b != state.dim_b)
        throw DimensionMismatchError("metrology_bound_check: observable/state mismatch");
    const cmat rho_a = partial_trace_b(state);
    for (int k = 0; k < m; ++k) {
        const cvec col = obs.basis.col(k);
        const cmat proj = col * col.adjoint();
        if (max_abs(proj * rho_a - rho_a * proj) > 1e-8)
            throw BasisNotCommutingError("metrology_bound_check: projector " + std::to_string(k) +
                                         " does not commute with rho_A");
    }
    const cmat s = matrix_sqrt(state.rho);
    std::vector<MetrologyCheck> checks;
    checks.reserve(m);
    for (int k = 0; k < m; ++k) {
        const cmat proj = obs.projector(k);
        MetrologyCheck chk;
        chk.skew = skew_information(s, proj);
        chk.qfi = quantum_fisher_information(state, proj);
        chk.slack = 2.0 * chk.skew - chk.qfi / 4.0;
        chk.bound_satisfied = chk.slack >= -1e-10;
        checks.push_back(chk);
    }
    return checks;
}

}  // namespace minskew
