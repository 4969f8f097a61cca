#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "multiway/wavefunction.hpp"

namespace multiway {

/// 2x2 complex matrix, row-major entries (a b; c d).
struct Matrix2c {
    std::complex<double> a{0.0, 0.0};
    std::complex<double> b{0.0, 0.0};
    std::complex<double> c{0.0, 0.0};
    std::complex<double> d{0.0, 0.0};

    static Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

    friend Matrix2c operator*(const Matrix2c& x, const Matrix2c& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Matrix2c operator+(const Matrix2c& x, const Matrix2c& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Matrix2c operator-(const Matrix2c& x, const Matrix2c& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Matrix2c operator*(std::complex<double> s, const Matrix2c& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }

    WaveFunction apply(const WaveFunction& v) const {
        return {a * v.c0 + b * v.c1, c * v.c0 + d * v.c1};
    }
};

inline Matrix2c pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

/// Largest entrywise absolute difference.
inline double max_abs_diff(const Matrix2c& x, const Matrix2c& y) {
    return std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                    std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
}

/// Analytic solution of i dPsi/dt = X Psi with Psi(0) = |0> (hbar = 1):
/// Psi(t) = cos(t) |0> - i sin(t) |1>. Unit norm for every t.
inline WaveFunction exact_solution(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("exact_solution: t must be finite");
    return {{std::cos(t), 0.0}, {0.0, -std::sin(t)}};
}

inline double l2_error(const WaveFunction& x, const WaveFunction& y) {
    return std::sqrt(std::norm(x.c0 - y.c0) + std::norm(x.c1 - y.c1));
}

/// Central-difference residual of the Schroedinger equation at time t:
/// || i (Psi(t+h) - Psi(t-h)) / 2h - X Psi(t) ||_2. O(h^2) by construction.
inline double schrodinger_residual(double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("schrodinger_residual: h must be > 0");
    const WaveFunction fwd = exact_solution(t + h);
    const WaveFunction bwd = exact_solution(t - h);
    const WaveFunction rhs = pauli_x().apply(exact_solution(t));
    const std::complex<double> iu{0.0, 1.0};
    const std::complex<double> r0 = iu * (fwd.c0 - bwd.c0) / (2.0 * h) - rhs.c0;
    const std::complex<double> r1 = iu * (fwd.c1 - bwd.c1) / (2.0 * h) - rhs.c1;
    return std::sqrt(std::norm(r0) + std::norm(r1));
}

/// e^M by the 2x2 closed form: split M = s I + N with s = tr(M)/2 and N
/// traceless; then with mu^2 = -det(N),
///   e^M = e^s (cosh(mu) I + sinh(mu)/mu N).
/// sinh(mu)/mu is evaluated by series near mu = 0. No truncated iteration,
/// so this serves as the exact reference for the limit operator below.
inline Matrix2c expm_2x2(const Matrix2c& m) {
    const std::complex<double> s = 0.5 * (m.a + m.d);
    const Matrix2c n{m.a - s, m.b, m.c, m.d - s};
    const std::complex<double> mu_sq = -(n.a * n.d - n.b * n.c);
    const std::complex<double> mu = std::sqrt(mu_sq);
    std::complex<double> cosh_mu;
    std::complex<double> sinhc_mu;  // sinh(mu)/mu, entire in mu^2
    if (std::abs(mu) < 1e-4) {
        cosh_mu = 1.0 + mu_sq / 2.0 + mu_sq * mu_sq / 24.0;
        sinhc_mu = 1.0 + mu_sq / 6.0 + mu_sq * mu_sq / 120.0;
    } else {
        cosh_mu = std::cosh(mu);
        sinhc_mu = std::sinh(mu) / mu;
    }
    const std::complex<double> scale = std::exp(s);
    return {scale * (cosh_mu + sinhc_mu * n.a), scale * (sinhc_mu * n.b),
            scale * (sinhc_mu * n.c), scale * (cosh_mu + sinhc_mu * n.d)};
}

/// (I + M/n)^n by binary exponentiation in complex doubles. Converges to
/// e^M at rate O(1/n). Floating arithmetic is deliberate here: rounding
/// error (~1e-16 per multiply, ~60 multiplies at n = 1e6) sits far below
/// the O(1/n) method error this operator exists to expose.
inline Matrix2c expm_limit(const Matrix2c& m, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("expm_limit: n must be >= 1");
    const std::complex<double> inv_n{1.0 / static_cast<double>(n), 0.0};
    Matrix2c base = Matrix2c::identity() + inv_n * m;
    Matrix2c acc = Matrix2c::identity();
    std::uint64_t e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e != 0) base = base * base;
    }
    return acc;
}

}  // namespace multiway
