#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace multiway {

using BigInt = boost::multiprecision::cpp_int;

/// Exact complex number a + b*i with arbitrary-precision integer parts.
/// All arithmetic is exact ring arithmetic; nothing here ever rounds.
class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long long value) : re_(value) {}  // NOLINT: implicit for integer literals
    GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussianInt(BigInt re) : re_(std::move(re)) {}

    static GaussianInt unit_i() { return {0, 1}; }
    static GaussianInt unit_minus_i() { return {0, -1}; }

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm_sq() == 1; }

    GaussianInt conj() const { return {re_, -im_}; }

    /// |z|^2 = z * conj(z), always a nonnegative rational integer.
    BigInt norm_sq() const { return re_ * re_ + im_ * im_; }

    /// Multiplication by -i: (a + bi)(-i) = b - ai. Cheap swap, no big multiply.
    GaussianInt times_minus_i() const { return {im_, -re_}; }
    GaussianInt times_i() const { return {-im_, re_}; }

    /// Squaring with two big multiplies instead of four:
    /// (a + bi)^2 = (a - b)(a + b) + 2ab i.
    GaussianInt squared() const {
        BigInt re = (re_ - im_) * (re_ + im_);
        BigInt im = re_ * im_;
        im <<= 1;
        return {std::move(re), std::move(im)};
    }

    GaussianInt operator-() const { return {-re_, -im_}; }

    GaussianInt& operator+=(const GaussianInt& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    /// Human-readable form: "0", "3", "-4i", "2+i", "3-4i".
    std::string str() const {
        if (im_ == 0) return re_.str();
        std::string imag;
        if (im_ == 1) {
            imag = "i";
        } else if (im_ == -1) {
            imag = "-i";
        } else {
            imag = im_.str() + "i";
        }
        if (re_ == 0) return imag;
        if (im_ > 0) return re_.str() + "+" + imag;
        return re_.str() + imag;
    }

private:
    BigInt re_;
    BigInt im_;
};

/// base^exp by exponentiation by squaring; O(log exp) Gaussian multiplies.
inline GaussianInt pow(GaussianInt base, std::uint64_t exp) {
    GaussianInt acc = 1;
    while (exp != 0) {
        if (exp & 1u) acc *= base;
        exp >>= 1u;
        if (exp != 0) base = base.squared();
    }
    return acc;
}

/// (-i)^m, 4-periodic in m.
inline GaussianInt minus_i_pow(std::uint64_t m) {
    switch (m & 3u) {
        case 0: return 1;
        case 1: return GaussianInt::unit_minus_i();
        case 2: return -1;
        default: return GaussianInt::unit_i();
    }
}

}  // namespace multiway
