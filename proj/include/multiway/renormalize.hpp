#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiway/gaussian.hpp"
#include "multiway/words.hpp"

namespace multiway {

/// A single-qubit basis term: amplitude * |basis>, amplitude a unit
/// Gaussian integer (one of 1, -i, -1, i).
struct QubitTerm {
    GaussianInt amplitude;
    int basis;  // 0 or 1

    QubitTerm(GaussianInt amp, int b) : amplitude(std::move(amp)), basis(b) {
        if (basis != 0 && basis != 1)
            throw std::invalid_argument("QubitTerm: basis must be 0 or 1");
        if (!amplitude.is_unit())
            throw std::invalid_argument("QubitTerm: amplitude must be a unit (1, -1, i, -i)");
    }

    static QubitTerm ket0() { return {1, 0}; }
    static QubitTerm ket1() { return {1, 1}; }

    friend bool operator==(const QubitTerm& a, const QubitTerm& b) {
        return a.basis == b.basis && a.amplitude == b.amplitude;
    }
    friend bool operator!=(const QubitTerm& a, const QubitTerm& b) { return !(a == b); }
};

/// Serialization used in graphs and tables: |0> is written x and |1> is
/// written y, prefixed by the unit amplitude. One of
/// "x", "-ix", "-x", "ix", "y", "-iy", "-y", "iy".
inline std::string to_string(const QubitTerm& t) {
    std::string prefix;
    if (t.amplitude == GaussianInt(-1)) {
        prefix = "-";
    } else if (t.amplitude == GaussianInt::unit_i()) {
        prefix = "i";
    } else if (t.amplitude == GaussianInt::unit_minus_i()) {
        prefix = "-i";
    }
    return prefix + (t.basis == 0 ? "x" : "y");
}

/// m = number of occurrences of the marked symbol a_K in w.
inline int count_marked(const Word& w, int alphabet_max) {
    if (alphabet_max < 1) throw std::invalid_argument("count_marked: K must be >= 1");
    const auto top = static_cast<std::uint32_t>(alphabet_max);
    int m = 0;
    for (Symbol s : w.symbols) {
        if (s.index > top)
            throw std::invalid_argument("count_marked: word not valid for K=" +
                                        std::to_string(alphabet_max));
        if (s.index == top) ++m;
    }
    return m;
}

/// Coarse-grain a word to (-i)^m |m mod 2>, m the marked-symbol count.
/// Depends on w only through m.
inline QubitTerm coarse_grain(const Word& w, int alphabet_max) {
    const auto m = static_cast<std::uint64_t>(count_marked(w, alphabet_max));
    return {minus_i_pow(m), static_cast<int>(m & 1u)};
}

/// One rule group of the renormalized multiset: source |b> maps to
/// factor * |b'>, repeated `multiplicity` times.
struct RenormalizedRule {
    int source_basis;
    int target_basis;
    GaussianInt factor;
    int multiplicity;
};

/// The renormalized rule multiset for parameter K:
///   |0> -> |0>        (K times)
///   |1> -> |1>        (K times)
///   |0> -> -i |1>     (once)
///   |1> -> -i |0>     (once)
/// Total multiplicity 2K+2; K+1 rules apply to each basis state.
inline std::array<RenormalizedRule, 4> renormalized_ruleset(int alphabet_max) {
    if (alphabet_max < 1)
        throw std::invalid_argument("renormalized_ruleset: K must be >= 1");
    return {RenormalizedRule{0, 0, 1, alphabet_max},
            RenormalizedRule{1, 1, 1, alphabet_max},
            RenormalizedRule{0, 1, GaussianInt::unit_minus_i(), 1},
            RenormalizedRule{1, 0, GaussianInt::unit_minus_i(), 1}};
}

/// Apply one rule instance to a term whose basis matches the rule source.
inline QubitTerm apply_rule(const RenormalizedRule& rule, const QubitTerm& term) {
    if (term.basis != rule.source_basis)
        throw std::invalid_argument("apply_rule: rule source does not match term basis");
    return {term.amplitude * rule.factor, rule.target_basis};
}

/// Expand the full multiset of rule applications to a term: K+1 result
/// terms (self-basis rules first, then the marked rule), matching the
/// coarse-grained images of the K+1 successors of any preimage word.
inline std::vector<QubitTerm> apply_ruleset(int alphabet_max, const QubitTerm& term) {
    std::vector<QubitTerm> out;
    out.reserve(static_cast<std::size_t>(alphabet_max) + 1);
    for (const RenormalizedRule& rule : renormalized_ruleset(alphabet_max)) {
        if (rule.source_basis != term.basis) continue;
        for (int n = 0; n < rule.multiplicity; ++n) out.push_back(apply_rule(rule, term));
    }
    return out;
}

}  // namespace multiway
