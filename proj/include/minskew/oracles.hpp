// SPDX-License-Identifier: Apache-2.0
//
// Closed-form non-locality values for the benchmark state families; ground
// truth for the numerical pipeline.

#pragma once

#include <utility>

#include "minskew/linalg.hpp"
#include "minskew/states.hpp"

namespace minskew {

// 1 - sum_k u_k^4 = 1 - Tr(rho_A^2) for a pure state with Schmidt
// coefficients u_k.
inline double pure_min(const SchmidtForm& schmidt_form) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < schmidt_form.coefficients.size(); ++i) {
        const double u2 = schmidt_form.coefficients(i) * schmidt_form.coefficients(i);
        sum += u2 * u2;
    }
    return 1.0 - sum;
}

// Witness data for the qubit-qudit closed form: the 3x3 correlation matrix
// T_ij = Tr[sqrt(rho) (s_i (x) I) sqrt(rho) (s_j (x) I)] over the Pauli
// operators and the Bloch vector of rho_A.
struct QubitQuditWitness {
    Eigen::Matrix3d t_matrix = Eigen::Matrix3d::Zero();
    Eigen::Vector3d bloch_r = Eigen::Vector3d::Zero();
    double v_min = 0.0;
};

inline QubitQuditWitness qubit_qudit_witness(const BipartiteState& state) {
    if (state.dim_a != 2)
        throw WrongDimensionError("qubit_qudit_witness: dim_a must be 2");
    const int n = state.dim_b;
    const cmat s = matrix_sqrt(state.rho);
    const cmat eye = cmat::Identity(n, n);
    const cmat sig[3] = {kron(pauli_x(), eye), kron(pauli_y(), eye), kron(pauli_z(), eye)};

    QubitQuditWitness w;
    for (int i = 0; i < 3; ++i) {
        const cmat si_s = sig[i] * s;
        for (int j = i; j < 3; ++j) {
            const double t = (s * si_s * sig[j]).trace().real();
            w.t_matrix(i, j) = t;
            w.t_matrix(j, i) = t;
        }
    }
    const cmat rho_a = partial_trace_b(state);
    w.bloch_r(0) = (rho_a * pauli_x()).trace().real();
    w.bloch_r(1) = (rho_a * pauli_y()).trace().real();
    w.bloch_r(2) = (rho_a * pauli_z()).trace().real();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(w.t_matrix);
    w.v_min = es.eigenvalues().minCoeff();
    return w;
}

// Closed form for 2 (x) d states: (1 - v_min)/2 when the Bloch vector of
// rho_A vanishes, otherwise (1 - r^T T r / |r|^2)/2.
inline double qubit_qudit_min(const BipartiteState& state, double r_zero_tol = 1e-9) {
    const QubitQuditWitness w = qubit_qudit_witness(state);
    const double r2 = w.bloch_r.squaredNorm();
    if (std::sqrt(r2) < r_zero_tol) return 0.5 * (1.0 - w.v_min);
    return 0.5 * (1.0 - w.bloch_r.dot(w.t_matrix * w.bloch_r) / r2);
}

// Location of the sudden-change point of the PPT family.
inline double ppt_sudden_change_alpha() {
    const double inner = (383.0 - 34.0 * std::sqrt(94.0)) / 9.0;
    return (5.0 + std::sqrt(25.0 - 4.0 * inner)) / 2.0;
}

inline double ppt_min(double alpha) {
    if (!(alpha >= 2.0 && alpha <= 5.0))
        throw ParamOutOfRangeError("ppt_min: alpha must lie in [2, 5]");
    if (alpha <= ppt_sudden_change_alpha()) return 4.0 / 21.0;
    return (21.0 - std::sqrt(6.0 * (5.0 - alpha)) - std::sqrt(6.0 * alpha) -
            3.0 * std::sqrt(alpha * (5.0 - alpha))) /
           31.5;
}

namespace detail {

// Tiny closed-form values are flushed to exactly zero.
inline double clamp_tiny(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

}  // namespace detail

inline double isotropic_min(int m, double x) {
    if (m < 2) throw ParamOutOfRangeError("isotropic_min: m must be >= 2");
    if (!(x >= 0.0 && x <= 1.0))
        throw ParamOutOfRangeError("isotropic_min: x must lie in [0, 1]");
    const double m2 = double(m) * m;
    const double v =
        (m2 * x - 2.0 * x + 1.0 - 2.0 * std::sqrt(x * (1.0 - x) * (m2 - 1.0))) / (m * (1.0 + m));
    return detail::clamp_tiny(v);
}

inline double werner_min(int m, double x) {
    if (m < 2) throw ParamOutOfRangeError("werner_min: m must be >= 2");
    if (!(x >= -1.0 && x <= 1.0))
        throw ParamOutOfRangeError("werner_min: x must lie in [-1, 1]");
    const double m2 = double(m) * m;
    const double v = (m - x - std::sqrt((m2 - 1.0) * (1.0 - x * x))) / (2.0 * (1.0 + m));
    return detail::clamp_tiny(v);
}

namespace detail {

inline double hybrid_f3(double x) {
    return 11.0 + 3.5 * x - std::sqrt((7.0 * x + 22.0) * (x + 1.0)) +
           2.0 * std::sqrt(2.0 - 2.0 * x * x) - std::sqrt((4.0 * x + 44.0) * (1.0 - x));
}

inline double hybrid_m3_value(double x, double t) {
    return (9.0 - 3.0 * x - 6.0 * std::sqrt(2.0 - 2.0 * x * x) + (2.0 - t) * hybrid_f3(x)) / 48.0;
}

}  // namespace detail

// Both branch values of the m = 3 closed form at a given x; the switch
// parameter t jumps from 3 to 1 at x = -14/15.
inline std::pair<double, double> hybrid_min_m3_branches(double x) {
    return {detail::hybrid_m3_value(x, 3.0), detail::hybrid_m3_value(x, 1.0)};
}

inline double hybrid_min(int m, int n, double x) {
    if (m < 3) throw ParamOutOfRangeError("hybrid_min: m must be >= 3");
    if (n < 2 || n > m - 1)
        throw ParamOutOfRangeError("hybrid_min: n must lie in [2, m-1]");
    if (!(x >= -1.0 && x <= 1.0))
        throw ParamOutOfRangeError("hybrid_min: x must lie in [-1, 1]");
    if (m == 3) {
        const double t = x <= -14.0 / 15.0 ? 3.0 : 1.0;
        return detail::clamp_tiny(detail::hybrid_m3_value(x, t));
    }
    const double xp = (m - 1.0) * (1.0 + x);
    const double xm = (m + 1.0) * (1.0 - x);
    const double y = (double(m) * m + x - m) * double(m) / n;
    const double m3 = double(m) * m * m - m;
    const double bracket = 2.0 * (double(m) * m - x - 1.0) + xp * (m - 2.0 * n) + 2.0 * y +
                           (double(m) * m - m - 2.0 * n + 2.0) * std::sqrt(xp * xm) +
                           (2.0 * n - 2.0) * std::sqrt(xp + y) * (std::sqrt(xp) + std::sqrt(xm));
    return detail::clamp_tiny(0.75 - bracket / (4.0 * m3));
}

}  // namespace minskew
