// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra primitives shared by every other module.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "minskew/errors.hpp"

namespace minskew {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

inline double max_abs(const cmat& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// Largest entry of |H - H^dagger|; zero for an exactly Hermitian matrix.
inline double hermitian_asymmetry(const cmat& h) {
    return max_abs(h - h.adjoint());
}

inline void require_square(const cmat& a, const char* what) {
    if (a.rows() == 0 || a.rows() != a.cols())
        throw DimensionMismatchError(std::string(what) + ": matrix must be square and non-empty");
}

inline void require_finite(const cmat& a, const char* what) {
    if (!a.allFinite())
        throw NonFiniteError(std::string(what) + ": matrix has NaN or Inf entries");
}

inline void require_hermitian(const cmat& a, const char* what, double tol = kHermitianTol) {
    require_square(a, what);
    require_finite(a, what);
    const double asym = hermitian_asymmetry(a);
    if (asym > tol)
        throw NonHermitianError(std::string(what) + ": asymmetry " + std::to_string(asym) +
                                " exceeds tolerance");
}

struct HermitianEigenSystem {
    rvec eigenvalues;   // ascending
    cmat eigenvectors;  // column k belongs to eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix with a deterministic phase
// convention: the largest-magnitude component of each eigenvector is made
// real and positive (first such component wins ties).
inline HermitianEigenSystem hermitian_eig(const cmat& h) {
    require_hermitian(h, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<cmat> solver((h + h.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eig: eigensolver did not converge");
    HermitianEigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
    for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < out.eigenvectors.rows(); ++i) {
            const double mag = std::abs(out.eigenvectors(i, k));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        const cplx z = out.eigenvectors(pivot, k);
        if (std::abs(z) > 0.0)
            out.eigenvectors.col(k) *= std::conj(z) / std::abs(z);
    }
    return out;
}

// Hermitian PSD square root. Eigenvalues in [-kPsdTol, kPsdTol] are flushed
// to zero before square-rooting: negatives for the PSD contract, and
// numerically-zero positives because sqrt() would amplify eigensolver
// roundoff on rank-deficient inputs from O(eps) to O(sqrt(eps)).
inline cmat matrix_sqrt(const cmat& rho) {
    const HermitianEigenSystem es = hermitian_eig(rho);
    if (es.eigenvalues.minCoeff() < -kPsdTol)
        throw NotPsdError("matrix_sqrt: eigenvalue " + std::to_string(es.eigenvalues.minCoeff()) +
                          " below -1e-10");
    rvec roots(es.eigenvalues.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i)
        roots(i) = es.eigenvalues(i) <= kPsdTol ? 0.0 : std::sqrt(es.eigenvalues(i));
    cmat s = es.eigenvectors * roots.asDiagonal() * es.eigenvectors.adjoint();
    return (s + s.adjoint()) / 2.0;
}

inline cmat kron(const cmat& a, const cmat& b) {
    cmat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Tr([S,K]^2) as a real number. The commutator of two Hermitian matrices is
// anti-Hermitian, so the trace is real up to roundoff; a larger imaginary
// residue signals an invalid input.
inline double commutator_trace_sq(const cmat& s, const cmat& k) {
    require_square(s, "commutator_trace_sq");
    if (s.rows() != k.rows() || s.cols() != k.cols())
        throw DimensionMismatchError("commutator_trace_sq: dimensions differ");
    const cmat c = s * k - k * s;
    const cplx t = c.cwiseProduct(c.transpose()).sum();  // sum_ij C_ij C_ji
    if (std::abs(t.imag()) > 1e-12)
        throw NonRealTraceError("commutator_trace_sq: imaginary residue " +
                                std::to_string(t.imag()));
    return t.real();
}

inline cmat pauli_x() {
    cmat s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

inline cmat pauli_y() {
    cmat s(2, 2);
    s << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    return s;
}

inline cmat pauli_z() {
    cmat s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

}  // namespace minskew
