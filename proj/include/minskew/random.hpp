// SPDX-License-Identifier: Apache-2.0
//
// Seedable random matrix generators. Everything is built from mt19937_64
// plus Box-Muller, both fully specified algorithms, so a given seed yields
// the same stream on every platform (std::normal_distribution is
// implementation-defined and deliberately avoided).

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "minskew/linalg.hpp"

namespace minskew {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the second deviate of each pair is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Matrix of i.i.d. standard complex normal entries, filled row by row.
inline cmat ginibre_matrix(int rows, int cols, Rng& rng) {
    cmat g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = rng.complex_gaussian();
    return g;
}

// Random density matrix G G^dagger / Tr(G G^dagger) from the Ginibre ensemble.
inline cmat ginibre_density(int d, std::uint64_t seed) {
    if (d < 1) throw ParamOutOfRangeError("ginibre_density: d must be >= 1");
    Rng rng(seed);
    const cmat g = ginibre_matrix(d, d, rng);
    cmat rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) / 2.0;
}

// Haar-distributed unitary: QR of a Ginibre matrix with the diagonal of R
// phase-normalized.
inline cmat haar_unitary(int d, std::uint64_t seed) {
    if (d < 1) throw ParamOutOfRangeError("haar_unitary: d must be >= 1");
    Rng rng(seed);
    const cmat g = ginibre_matrix(d, d, rng);
    Eigen::HouseholderQR<cmat> qr(g);
    cmat q = qr.householderQ();
    const cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        const cplx diag = r(i, i);
        const double mag = std::abs(diag);
        q.col(i) *= mag > 0.0 ? diag / mag : cplx(1.0, 0.0);
    }
    return q;
}

// Haar unitary drawn from an existing stream (used for per-sample draws).
inline cmat haar_unitary(int d, Rng& rng) {
    const cmat g = ginibre_matrix(d, d, rng);
    Eigen::HouseholderQR<cmat> qr(g);
    cmat q = qr.householderQ();
    const cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        const cplx diag = r(i, i);
        const double mag = std::abs(diag);
        q.col(i) *= mag > 0.0 ? diag / mag : cplx(1.0, 0.0);
    }
    return q;
}

inline cvec random_unit_vector(int d, Rng& rng) {
    cvec v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
    v /= v.norm();
    return v;
}

}  // namespace minskew
