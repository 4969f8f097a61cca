#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multiway {

/// One alphabet element a_i, identified by its subindex.
struct Symbol {
    std::uint32_t index = 0;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// A state of the rewriting system: a finite sequence of symbols.
struct Word {
    std::vector<Symbol> symbols;

    Word() = default;
    explicit Word(std::vector<Symbol> syms) : symbols(std::move(syms)) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    Word appended(Symbol s) const {
        Word w = *this;
        w.symbols.push_back(s);
        return w;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Thrown when an enumeration would materialize more words than the
/// configured cap allows; callers should switch to the closed-form path.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// (K+1)^level if it does not exceed cap, nullopt otherwise. Overflow-safe:
/// stops as soon as the running product passes cap.
inline std::optional<std::uint64_t> level_word_count(int alphabet_max, int level,
                                                     std::uint64_t cap) {
    const std::uint64_t branch = static_cast<std::uint64_t>(alphabet_max) + 1;
    std::uint64_t count = 1;
    for (int j = 0; j < level; ++j) {
        if (count > cap / branch) return std::nullopt;
        count *= branch;
    }
    if (count > cap) return std::nullopt;
    return count;
}

/// Model parameters: alphabet {a_0..a_K}, the level-0 word, and the cap on
/// how many words a single level may materialize.
struct ModelConfig {
    int K;
    Word initial_word;
    std::uint64_t enumeration_cap;

    static constexpr std::uint64_t kDefaultCap = 10'000'000;

    explicit ModelConfig(int alphabet_max, Word initial,
                         std::uint64_t cap = kDefaultCap)
        : K(alphabet_max), initial_word(std::move(initial)), enumeration_cap(cap) {
        if (K < 1) throw std::invalid_argument("ModelConfig: K must be >= 1");
        if (initial_word.empty())
            throw std::invalid_argument("ModelConfig: initial word must be nonempty");
        if (enumeration_cap < 1)
            throw std::invalid_argument("ModelConfig: enumeration cap must be >= 1");
        validate_word(initial_word);
    }

    /// Convenience: initial condition a_0.
    explicit ModelConfig(int alphabet_max, std::uint64_t cap = kDefaultCap)
        : ModelConfig(alphabet_max, Word{{Symbol{0}}}, cap) {}

    bool symbol_in_range(Symbol s) const {
        return s.index <= static_cast<std::uint32_t>(K);
    }

    void validate_word(const Word& w) const {
        for (Symbol s : w.symbols) {
            if (!symbol_in_range(s))
                throw std::invalid_argument("word contains symbol a_" +
                                            std::to_string(s.index) +
                                            " outside alphabet bound K=" +
                                            std::to_string(K));
        }
    }

    void require_level_within_cap(int level) const {
        if (!level_word_count(K, level, enumeration_cap)) {
            throw CapExceeded("level " + std::to_string(level) + " of the K=" +
                              std::to_string(K) +
                              " system exceeds the enumeration cap of " +
                              std::to_string(enumeration_cap) +
                              " words; use the closed-form template path");
        }
    }
};

/// One level of the multiway system, words in canonical order
/// (lexicographic by appended suffix).
struct MultiwayLevel {
    int level = 0;
    std::vector<Word> words;
};

/// All K+1 one-step successors of w, in symbol order a_0 .. a_K.
inline std::vector<Word> successors(const Word& w, const ModelConfig& cfg) {
    cfg.validate_word(w);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(cfg.K) + 1);
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(cfg.K); ++i) {
        out.push_back(w.appended(Symbol{i}));
    }
    return out;
}

/// All level-k words reachable from the initial condition. Append rules never
/// collide, so the level holds exactly (K+1)^k distinct words; suffixes are
/// generated by an odometer so no intermediate levels are materialized.
inline MultiwayLevel enumerate_level(const ModelConfig& cfg, int level) {
    if (level < 0) throw std::invalid_argument("enumerate_level: level must be >= 0");
    cfg.require_level_within_cap(level);
    const auto count = level_word_count(cfg.K, level, cfg.enumeration_cap);

    MultiwayLevel out;
    out.level = level;
    out.words.reserve(static_cast<std::size_t>(*count));

    Word current = cfg.initial_word;
    current.symbols.resize(cfg.initial_word.size() + static_cast<std::size_t>(level),
                           Symbol{0});
    const std::size_t base = cfg.initial_word.size();
    const std::uint32_t top = static_cast<std::uint32_t>(cfg.K);
    for (std::uint64_t n = 0; n < *count; ++n) {
        out.words.push_back(current);
        // Increment the suffix odometer (most significant digit first).
        for (std::size_t pos = current.symbols.size(); pos > base; --pos) {
            Symbol& digit = current.symbols[pos - 1];
            if (digit.index < top) {
                ++digit.index;
                break;
            }
            digit.index = 0;
        }
    }
    return out;
}

/// All (parent, child) rewriting events between level k and level k+1,
/// ordered by parent then appended symbol.
inline std::vector<std::pair<Word, Word>> level_edges(const ModelConfig& cfg, int level) {
    cfg.require_level_within_cap(level + 1);
    const MultiwayLevel parents = enumerate_level(cfg, level);
    std::vector<std::pair<Word, Word>> edges;
    edges.reserve(parents.words.size() * (static_cast<std::size_t>(cfg.K) + 1));
    for (const Word& w : parents.words) {
        for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(cfg.K); ++i) {
            edges.emplace_back(w, w.appended(Symbol{i}));
        }
    }
    return edges;
}

/// Figure convention: subindices only. Digits are concatenated while the
/// alphabet fits in one digit each ("002"), hyphen-separated otherwise
/// ("0-10-3").
inline std::string to_string(const Word& w, int alphabet_max) {
    std::string out;
    const bool compact = alphabet_max <= 9;
    for (std::size_t j = 0; j < w.symbols.size(); ++j) {
        if (!compact && j > 0) out += '-';
        out += std::to_string(w.symbols[j].index);
    }
    return out;
}

/// Inverse of to_string. Hyphenated input is split on '-'; otherwise each
/// character is a digit when K <= 9, and the whole string is a single
/// subindex when K > 9.
inline Word parse_word(const std::string& text, int alphabet_max) {
    if (text.empty()) throw std::invalid_argument("parse_word: empty word");
    std::vector<Symbol> symbols;
    auto push_index = [&symbols](const std::string& token) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_word: bad symbol index '" + token + "'");
        symbols.push_back(Symbol{static_cast<std::uint32_t>(std::stoul(token))});
    };
    if (text.find('-') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t dash = text.find('-', start);
            push_index(text.substr(start, dash == std::string::npos ? dash : dash - start));
            if (dash == std::string::npos) break;
            start = dash + 1;
        }
    } else if (alphabet_max <= 9) {
        for (char c : text) push_index(std::string(1, c));
    } else {
        push_index(text);
    }
    return Word{std::move(symbols)};
}

}  // namespace multiway
