// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "minskew/linalg.hpp"
#include "minskew/random.hpp"
#include "minskew/states.hpp"

namespace minskew::test {

inline cmat random_hermitian(int d, Rng& rng) {
    const cmat a = ginibre_matrix(d, d, rng);
    return (a + a.adjoint()) / (2.0 * std::sqrt(double(d)));
}

// Jointly diagonalizable set: a common Haar eigenbasis with random spectra.
inline std::vector<cmat> commuting_hermitian_set(int d, int count, Rng& rng) {
    const cmat v = haar_unitary(d, rng);
    std::vector<cmat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        rvec diag(d);
        for (int k = 0; k < d; ++k) diag(k) = rng.gaussian();
        out.push_back(v * diag.asDiagonal() * v.adjoint());
    }
    return out;
}

// Filters a random state so that rho_A acquires the prescribed spectrum while
// keeping the eigenbasis: rho -> (A (x) I) rho (A (x) I)^dagger with
// A = target^{1/2} rho_A^{-1/2}.
inline BipartiteState with_reduced_spectrum(const BipartiteState& st, const rvec& target) {
    const cmat rho_a = partial_trace_b(st);
    const HermitianEigenSystem es = hermitian_eig(rho_a);
    const int m = st.dim_a;
    cmat filter = cmat::Zero(m, m);
    for (int i = 0; i < m; ++i)
        filter += (std::sqrt(target(i)) / std::sqrt(es.eigenvalues(i))) *
                  es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    const cmat lift = kron(filter, cmat::Identity(st.dim_b, st.dim_b));
    cmat rho = lift * st.rho * lift.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    rho /= rho.trace().real();
    return BipartiteState(st.dim_a, st.dim_b, std::move(rho));
}

// Random 3 (x) n state whose rho_A has one 2-fold degenerate eigenvalue.
inline BipartiteState degenerate_reduced_state(int dim_b, std::uint64_t seed) {
    const BipartiteState st = random_mixed_state(3, dim_b, seed);
    rvec target(3);
    target << 0.2, 0.4, 0.4;
    return with_reduced_spectrum(st, target);
}

// Classical-quantum state sum_k p_k |k><k| (x) rho_B^k with distinct p_k.
inline BipartiteState classical_quantum_state(int m, int n, std::uint64_t seed) {
    cmat rho = cmat::Zero(m * n, m * n);
    double norm = 0.0;
    for (int k = 0; k < m; ++k) norm += k + 1.0;
    for (int k = 0; k < m; ++k) {
        cmat proj = cmat::Zero(m, m);
        proj(k, k) = 1.0;
        rho += ((k + 1.0) / norm) * kron(proj, ginibre_density(n, seed + static_cast<std::uint64_t>(k)));
    }
    return BipartiteState(m, n, std::move(rho));
}

inline cvec bell_ket() {
    cvec amp = cvec::Zero(4);
    amp(0) = amp(3) = 1.0 / std::sqrt(2.0);
    return amp;
}

}  // namespace minskew::test
