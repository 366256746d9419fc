// SPDX-License-Identifier: Apache-2.0
//
// Approximate joint diagonalization of a set of complex matrices by cyclic
// Givens-rotation sweeps. Each rotation on an index pair (p, q) is solved in
// closed form: with the 2x2 blocks G_i = [[a_i, b_i], [c_i, d_i]] and
// g_i = [a_i - d_i, b_i + c_i, i(c_i - b_i)]^T, the transformed difference is
// a'_i - d'_i = v . g_i for v = [cos 2t, -sin 2t cos f, -sin 2t sin f], so the
// summed squared diagonals change by a Rayleigh quotient of the 3x3 matrix
// sum_i Re(g_i g_i^dagger). The extreme eigenvector of that matrix yields the
// optimal rotation; "max" mode diagonalizes, "min" mode equalizes diagonals.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "minskew/linalg.hpp"

namespace minskew {

enum class DiagMode { Max, Min };

struct GivensRotation {
    int p = 0;
    int q = 1;
    double theta = 0.0;  // in [0, pi/4]
    double phi = 0.0;

    bool is_identity() const { return theta == 0.0; }
};

struct RotationWorkspace {
    int p = 0;
    int q = 1;
    std::vector<Eigen::Matrix2cd> blocks;                   // per-matrix (p,q) block
    Eigen::Matrix<cplx, 3, Eigen::Dynamic> g;               // columns g_i
    Eigen::Matrix3d rayleigh = Eigen::Matrix3d::Zero();     // sum_i Re(g_i g_i^dagger)
    Eigen::Vector3d v = Eigen::Vector3d::UnitX();           // chosen unit vector
};

struct JointDiagProblem {
    std::vector<cmat> matrices;
    DiagMode mode = DiagMode::Min;
    double sweep_tolerance = 1e-12;
    int max_sweeps = 100;
    bool trace_rotations = false;  // record the objective after every rotation
};

struct JointDiagResult {
    cmat unitary;                       // U_o with transformed_i = U_o M_i U_o^dagger
    std::vector<cmat> transformed;
    std::vector<cvec> joint_eigenvalues;  // diagonals of the transformed matrices
    double objective = 0.0;
    int sweeps_used = 0;
    long rotations_applied = 0;
    bool converged = false;
    std::vector<double> objective_trace;  // per sweep
    std::vector<double> rotation_trace;   // per rotation, when requested
};

// sum_i sum_k |(M_i)_kk|^2
inline double objective(const std::vector<cmat>& matrices) {
    double total = 0.0;
    for (const cmat& m : matrices) total += m.diagonal().squaredNorm();
    return total;
}

namespace detail {

// Deterministic eigendecomposition of a 3x3 real symmetric matrix by a fixed
// cyclic Jacobi iteration; eigenvalues come back unsorted on the diagonal.
inline void sym3_eig(Eigen::Matrix3d a, Eigen::Vector3d& evals, Eigen::Matrix3d& evecs) {
    evecs.setIdentity();
    const double scale = a.norm();
    const double stop = scale > 0.0 ? 1e-30 * scale * scale : 0.0;
    for (int sweep = 0; sweep < 32; ++sweep) {
        const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
        if (off <= stop) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < 3; ++r) {
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < 3; ++r) {
                    const double apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
                for (int r = 0; r < 3; ++r) {
                    const double vp = evecs(r, p), vq = evecs(r, q);
                    evecs(r, p) = c * vp - s * vq;
                    evecs(r, q) = s * vp + c * vq;
                }
            }
        }
    }
    evals = a.diagonal();
}

}  // namespace detail

// Gathers the (p,q) blocks of all matrices and the derived Rayleigh matrix.
inline void build_workspace(const std::vector<cmat>& matrices, int p, int q,
                            RotationWorkspace& ws) {
    ws.p = p;
    ws.q = q;
    const auto count = static_cast<Eigen::Index>(matrices.size());
    ws.blocks.resize(matrices.size());
    ws.g.resize(3, count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const cmat& m = matrices[static_cast<std::size_t>(i)];
        Eigen::Matrix2cd& blk = ws.blocks[static_cast<std::size_t>(i)];
        blk << m(p, p), m(p, q), m(q, p), m(q, q);
        ws.g(0, i) = blk(0, 0) - blk(1, 1);
        ws.g(1, i) = blk(0, 1) + blk(1, 0);
        ws.g(2, i) = cplx(0, 1) * (blk(1, 0) - blk(0, 1));
    }
    ws.rayleigh = (ws.g * ws.g.adjoint()).real();
}

// Closed-form rotation solve. The extreme eigenvector is sign-fixed to
// v1 >= 0, which keeps theta in [0, pi/4] (inner rotations). Degenerate
// extreme eigenvalues are resolved deterministically by picking, inside the
// (near-)optimal eigenspace, the direction closest to e1 -- the smallest
// rotation among equally optimal ones. That makes exactly-flat problems
// (spread 0, e.g. isotropic-family blocks) and already-optimal pairs
// stationary instead of wandering through the optimal manifold on roundoff.
inline GivensRotation solve_rotation(RotationWorkspace& ws, DiagMode mode) {
    Eigen::Vector3d evals;
    Eigen::Matrix3d evecs;
    detail::sym3_eig(ws.rayleigh, evals, evecs);

    int lo = 0, hi = 0;
    for (int i = 1; i < 3; ++i) {
        if (evals(i) < evals(lo)) lo = i;
        if (evals(i) > evals(hi)) hi = i;
    }
    const double scale = std::max(std::abs(evals(hi)), std::abs(evals(lo)));
    const double window = 1e-13 * scale;
    const int extreme = mode == DiagMode::Max ? hi : lo;

    GivensRotation rot{ws.p, ws.q, 0.0, 0.0};
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    for (int i = 0; i < 3; ++i)
        if (std::abs(evals(i) - evals(extreme)) <= window) v += evecs(0, i) * evecs.col(i);
    const double vnorm = v.norm();
    if (vnorm > 1e-8) {
        v /= vnorm;  // projection of e1 onto the optimal eigenspace
    } else {
        v = evecs.col(extreme);
        v.normalize();
    }
    if (v(0) < 0.0) v = -v;

    // Never apply a rotation that scores worse than doing nothing; this keeps
    // the per-rotation objective exactly monotone even across tie-breaks.
    const double gain = v.dot(ws.rayleigh * v) - ws.rayleigh(0, 0);
    if ((mode == DiagMode::Max && gain < 0.0) || (mode == DiagMode::Min && gain > 0.0)) {
        ws.v = Eigen::Vector3d::UnitX();
        return rot;
    }
    ws.v = v;

    const double sin2t = std::hypot(v(1), v(2));
    rot.theta = 0.5 * std::atan2(sin2t, v(0));
    rot.phi = sin2t < 1e-15 ? 0.0 : std::atan2(-v(2), -v(1));
    return rot;
}

// Applies M_i <- U(theta,phi)^dagger M_i U(theta,phi) on rows/columns (p, q)
// of every matrix, and accumulates the same step into *unitary if given.
inline void apply_rotation(std::vector<cmat>& matrices, const GivensRotation& rot,
                           cmat* unitary = nullptr) {
    if (rot.is_identity()) return;
    const double c = std::cos(rot.theta);
    const double s = std::sin(rot.theta);
    const cplx eip(std::cos(rot.phi), std::sin(rot.phi));
    const cplx sp = s * eip;             // e^{i phi} sin
    const cplx sm = s * std::conj(eip);  // e^{-i phi} sin
    const int p = rot.p, q = rot.q;
    for (cmat& m : matrices) {
        const cvec colp = m.col(p);
        m.col(p) = c * colp - sm * m.col(q);
        m.col(q) = sp * colp + c * m.col(q);
        const Eigen::RowVectorXcd rowp = m.row(p);
        m.row(p) = c * rowp - sp * m.row(q);
        m.row(q) = sm * rowp + c * m.row(q);
    }
    if (unitary) {
        const Eigen::RowVectorXcd rowp = unitary->row(p);
        unitary->row(p) = c * rowp - sp * unitary->row(q);
        unitary->row(q) = sm * rowp + c * unitary->row(q);
    }
}

// Cyclic sweeps over all index pairs p < q until the largest |sin theta|
// seen in a full sweep drops below the tolerance. Non-convergence is
// reported through the flag, never thrown.
inline JointDiagResult joint_diagonalize(const JointDiagProblem& problem) {
    if (problem.matrices.empty())
        throw DimensionMismatchError("joint_diagonalize: empty matrix set");
    const Eigen::Index dim = problem.matrices.front().rows();
    for (const cmat& m : problem.matrices) {
        require_square(m, "joint_diagonalize");
        if (m.rows() != dim)
            throw DimensionMismatchError("joint_diagonalize: matrices differ in dimension");
        require_finite(m, "joint_diagonalize");
    }

    JointDiagResult result;
    result.transformed = problem.matrices;
    result.unitary = cmat::Identity(dim, dim);
    if (dim == 1) {
        result.converged = true;
        result.objective = objective(result.transformed);
        result.objective_trace.push_back(result.objective);
        result.joint_eigenvalues.reserve(result.transformed.size());
        for (const cmat& m : result.transformed)
            result.joint_eigenvalues.push_back(m.diagonal());
        return result;
    }

    RotationWorkspace ws;
    for (int sweep = 1; sweep <= problem.max_sweeps; ++sweep) {
        double max_sin = 0.0;
        for (int p = 0; p < dim - 1; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                build_workspace(result.transformed, p, q, ws);
                const GivensRotation rot = solve_rotation(ws, problem.mode);
                ++result.rotations_applied;
                max_sin = std::max(max_sin, std::abs(std::sin(rot.theta)));
                apply_rotation(result.transformed, rot, &result.unitary);
                if (problem.trace_rotations)
                    result.rotation_trace.push_back(objective(result.transformed));
            }
        }
        result.sweeps_used = sweep;
        result.objective_trace.push_back(objective(result.transformed));
        if (max_sin < problem.sweep_tolerance) {
            result.converged = true;
            break;
        }
    }

    result.objective = objective(result.transformed);
    result.joint_eigenvalues.reserve(result.transformed.size());
    for (const cmat& m : result.transformed)
        result.joint_eigenvalues.push_back(m.diagonal());
    return result;
}

}  // namespace minskew
