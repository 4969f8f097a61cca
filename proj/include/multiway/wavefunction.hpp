#pragma once

#include <cmath>
#include <complex>

namespace multiway {

/// Floating two-component qubit state (|0> and |1> coefficients).
struct WaveFunction {
    std::complex<double> c0{0.0, 0.0};
    std::complex<double> c1{0.0, 0.0};

    double norm() const { return std::sqrt(std::norm(c0) + std::norm(c1)); }

    bool is_finite() const {
        return std::isfinite(c0.real()) && std::isfinite(c0.imag()) &&
               std::isfinite(c1.real()) && std::isfinite(c1.imag());
    }
};

}  // namespace multiway
