#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "multiway/gaussian.hpp"
#include "multiway/renormalize.hpp"
#include "multiway/wavefunction.hpp"
#include "multiway/words.hpp"

namespace multiway {

/// The (unnormalized) sum of the coarse-grained images of all level-k words:
/// c0 |0> + c1 |1> with exact Gaussian-integer coefficients.
///
/// initial_m records the marked-symbol count of the level-0 word when known
/// (its residue mod 4 when reconstructed from a bare initial term); it fixes
/// which parity/realness pattern the coefficients follow.
struct TemplateVector {
    int K = 1;
    int level = 0;
    GaussianInt c0;
    GaussianInt c1;
    unsigned initial_m = 0;

    friend bool operator==(const TemplateVector& a, const TemplateVector& b) {
        return a.K == b.K && a.level == b.level && a.c0 == b.c0 && a.c1 == b.c1;
    }
    friend bool operator!=(const TemplateVector& a, const TemplateVector& b) {
        return !(a == b);
    }
};

namespace detail {

inline unsigned infer_initial_m(const QubitTerm& term) {
    for (unsigned j = 0; j < 4; ++j) {
        if (static_cast<int>(j & 1u) == term.basis && minus_i_pow(j) == term.amplitude)
            return j;
    }
    return 0;  // nonstandard unit amplitude; no word-derived m exists
}

inline void check_level(int level) {
    if (level < 0) throw std::invalid_argument("template level must be >= 0");
}

}  // namespace detail

/// Reference algorithm: enumerate every level-k word and sum its
/// coarse-grained term. Exponential work, capped by cfg.enumeration_cap.
inline TemplateVector template_bruteforce(const ModelConfig& cfg, int level) {
    detail::check_level(level);
    const MultiwayLevel lvl = enumerate_level(cfg, level);
    TemplateVector out;
    out.K = cfg.K;
    out.level = level;
    out.initial_m = static_cast<unsigned>(count_marked(cfg.initial_word, cfg.K));
    for (const Word& w : lvl.words) {
        const QubitTerm term = coarse_grain(w, cfg.K);
        if (term.basis == 0) {
            out.c0 += term.amplitude;
        } else {
            out.c1 += term.amplitude;
        }
    }
    return out;
}

/// Levelwise algorithm: k exact applications of the renormalized transfer
/// step T_{j+1} = (K I - i X) T_j. O(k) Gaussian operations (integer sizes
/// grow with j).
inline TemplateVector template_recurrence(int alphabet_max, int level,
                                          const QubitTerm& initial = QubitTerm::ket0()) {
    detail::check_level(level);
    if (alphabet_max < 1)
        throw std::invalid_argument("template_recurrence: K must be >= 1");
    GaussianInt c0 = initial.basis == 0 ? initial.amplitude : GaussianInt(0);
    GaussianInt c1 = initial.basis == 1 ? initial.amplitude : GaussianInt(0);
    const GaussianInt scale{alphabet_max};
    for (int j = 0; j < level; ++j) {
        GaussianInt next0 = scale * c0 + c1.times_minus_i();
        GaussianInt next1 = scale * c1 + c0.times_minus_i();
        c0 = std::move(next0);
        c1 = std::move(next1);
    }
    return {alphabet_max, level, std::move(c0), std::move(c1),
            detail::infer_initial_m(initial)};
}

/// Closed form: with z = (K+i)^k,
///   (K I - i X)^k |0> = Re(z) |0> - i Im(z) |1>
///   (K I - i X)^k |1> = -i Im(z) |0> + Re(z) |1>
/// computed by exponentiation by squaring, O(log k) Gaussian multiplies.
/// Bit-exactly equal to the recurrence and to brute force.
inline TemplateVector template_closedform(int alphabet_max, int level,
                                          const QubitTerm& initial = QubitTerm::ket0()) {
    detail::check_level(level);
    if (alphabet_max < 1)
        throw std::invalid_argument("template_closedform: K must be >= 1");
    const GaussianInt z = pow(GaussianInt{alphabet_max, 1},
                              static_cast<std::uint64_t>(level));
    const GaussianInt diag{z.re()};
    const GaussianInt swap{0, -z.im()};  // -i * Im(z)
    GaussianInt c0 = initial.basis == 0 ? diag : swap;
    GaussianInt c1 = initial.basis == 0 ? swap : diag;
    return {alphabet_max, level, initial.amplitude * c0, initial.amplitude * c1,
            detail::infer_initial_m(initial)};
}

/// Number of level-k words with exactly m appended marked symbols:
/// C(k,m) * K^(k-m). Sums to (K+1)^k over m.
inline BigInt class_multiplicity(int alphabet_max, int level, int m) {
    detail::check_level(level);
    if (alphabet_max < 1)
        throw std::invalid_argument("class_multiplicity: K must be >= 1");
    if (m < 0 || m > level)
        throw std::domain_error("class_multiplicity: m must satisfy 0 <= m <= k");
    BigInt binom = 1;
    for (int j = 1; j <= m; ++j) {
        binom *= level - m + j;
        binom /= j;  // exact at every step: C(k-m+j, j) is an integer
    }
    return binom * boost::multiprecision::pow(BigInt(alphabet_max),
                                              static_cast<unsigned>(level - m));
}

/// Combinatorial reconstruction: weight each appended-m class by (-i)^m and
/// split by parity. Independent of the three walk-based algorithms.
inline TemplateVector template_binomial(int alphabet_max, int level,
                                        const QubitTerm& initial = QubitTerm::ket0()) {
    detail::check_level(level);
    TemplateVector out;
    out.K = alphabet_max;
    out.level = level;
    out.initial_m = detail::infer_initial_m(initial);
    for (int m = 0; m <= level; ++m) {
        const GaussianInt weight =
            GaussianInt(class_multiplicity(alphabet_max, level, m)) *
            initial.amplitude * minus_i_pow(static_cast<std::uint64_t>(m));
        // m appended marks flip the basis bit m times
        if (((m & 1) ^ initial.basis) == 0) {
            out.c0 += weight;
        } else {
            out.c1 += weight;
        }
    }
    return out;
}

namespace detail {

/// num/den rounded to double via scaled evaluation: both operands are
/// truncated to ~256 leading bits before the floating divide, so values far
/// outside double's exponent range never appear as intermediates.
inline double big_ratio(const BigInt& num, const BigInt& den) {
    using boost::multiprecision::msb;
    if (den <= 0) throw std::invalid_argument("big_ratio: denominator must be positive");
    if (num == 0) return 0.0;
    const bool negative = num < 0;
    const BigInt mag = abs(num);
    constexpr long kPrecBits = 256;
    const long shift_num = std::max<long>(static_cast<long>(msb(mag)) - kPrecBits, 0);
    const long shift_den = std::max<long>(static_cast<long>(msb(den)) - kPrecBits, 0);
    const BigInt n = mag >> shift_num;
    const BigInt d = den >> shift_den;
    const double q = n.convert_to<double>() / d.convert_to<double>();
    const long exp2 = shift_num - shift_den;
    if (exp2 > 2000)
        throw std::overflow_error("normalized value exceeds double range");
    const double r = std::ldexp(q, static_cast<int>(std::max<long>(exp2, -2000)));
    if (!std::isfinite(r))
        throw std::overflow_error("normalized value exceeds double range");
    return negative ? -r : r;
}

}  // namespace detail

/// K^(-k) * T as floating complex. Exact integers are divided before any
/// conversion, so huge coefficients with moderate quotients are fine; a
/// quotient outside double range throws std::overflow_error.
inline WaveFunction normalize_template(const TemplateVector& t) {
    const BigInt den = boost::multiprecision::pow(BigInt(t.K),
                                                  static_cast<unsigned>(t.level));
    return {{detail::big_ratio(t.c0.re(), den), detail::big_ratio(t.c0.im(), den)},
            {detail::big_ratio(t.c1.re(), den), detail::big_ratio(t.c1.im(), den)}};
}

/// {"K":2,"k":2,"c0":["3","0"],"c1":["0","-4"]} with decimal bignum strings.
inline std::string to_json(const TemplateVector& t) {
    std::string out = "{\"K\":" + std::to_string(t.K);
    out += ",\"k\":" + std::to_string(t.level);
    out += ",\"c0\":[\"" + t.c0.re().str() + "\",\"" + t.c0.im().str() + "\"]";
    out += ",\"c1\":[\"" + t.c1.re().str() + "\",\"" + t.c1.im().str() + "\"]}";
    return out;
}

}  // namespace multiway
