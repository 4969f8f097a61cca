#pragma once

#include <string>

#include "multiway/renormalize.hpp"
#include "multiway/words.hpp"

namespace multiway {

/// Graphviz export of the multiway system down to `depth` levels.
///
/// Raw mode: one node per word, labeled by its subindex string. Renormalized
/// mode: words collapse to their coarse-grained class per level (one node per
/// (level, marked count), labeled "x"/"-iy"/...), and the K same-basis rule
/// applications become a single edge labeled "×K", or K parallel edges when
/// parallel_edges is set. Output is deterministic byte-for-byte.
inline std::string export_multiway_dot(const ModelConfig& cfg, int depth,
                                       bool renormalized,
                                       bool parallel_edges = false) {
    if (depth < 0) throw std::invalid_argument("export_multiway_dot: depth must be >= 0");
    cfg.require_level_within_cap(depth);

    std::string out;
    if (!renormalized) {
        out = "digraph multiway {\n  rankdir=TB;\n";
        for (int level = 0; level <= depth; ++level) {
            for (const Word& w : enumerate_level(cfg, level).words) {
                out += "  \"" + to_string(w, cfg.K) + "\";\n";
            }
        }
        for (int level = 0; level < depth; ++level) {
            for (const auto& [parent, child] : level_edges(cfg, level)) {
                out += "  \"" + to_string(parent, cfg.K) + "\" -> \"" +
                       to_string(child, cfg.K) + "\";\n";
            }
        }
        out += "}\n";
        return out;
    }

    const int m0 = count_marked(cfg.initial_word, cfg.K);
    auto node_id = [](int level, int m) {
        return "\"L" + std::to_string(level) + ".m" + std::to_string(m) + "\"";
    };
    auto node_label = [](int m) {
        return to_string(QubitTerm{minus_i_pow(static_cast<std::uint64_t>(m)), m & 1});
    };

    out = "digraph renormalized {\n  rankdir=TB;\n";
    for (int level = 0; level <= depth; ++level) {
        for (int m = m0; m <= m0 + level; ++m) {
            out += "  " + node_id(level, m) + " [label=\"" + node_label(m) + "\"];\n";
        }
    }
    for (int level = 0; level < depth; ++level) {
        for (int m = m0; m <= m0 + level; ++m) {
            if (parallel_edges) {
                for (int n = 0; n < cfg.K; ++n) {
                    out += "  " + node_id(level, m) + " -> " + node_id(level + 1, m) +
                           ";\n";
                }
            } else {
                out += "  " + node_id(level, m) + " -> " + node_id(level + 1, m) +
                       " [label=\"×" + std::to_string(cfg.K) + "\"];\n";
            }
            out += "  " + node_id(level, m) + " -> " + node_id(level + 1, m + 1) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace multiway
