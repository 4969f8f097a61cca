#include <catch2/catch_amalgamated.hpp>

#include <multiway/dot.hpp>

#include <algorithm>

using multiway::ModelConfig;
using multiway::Symbol;
using multiway::Word;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("raw DOT export of the depth-1 system") {
    const std::string dot = multiway::export_multiway_dot(ModelConfig(2), 1, false);
    REQUIRE(dot ==
            "digraph multiway {\n"
            "  rankdir=TB;\n"
            "  \"0\";\n"
            "  \"00\";\n"
            "  \"01\";\n"
            "  \"02\";\n"
            "  \"0\" -> \"00\";\n"
            "  \"0\" -> \"01\";\n"
            "  \"0\" -> \"02\";\n"
            "}\n");
}

TEST_CASE("depth 0 exports a single node and no edges") {
    const std::string dot = multiway::export_multiway_dot(ModelConfig(2), 0, false);
    REQUIRE(count_lines_with(dot, ";") == 2);  // rankdir + one node
    REQUIRE(count_lines_with(dot, "->") == 0);
    REQUIRE(dot.find("\"0\";") != std::string::npos);
}

TEST_CASE("raw DOT node and edge counts scale with the level sizes") {
    const std::string dot = multiway::export_multiway_dot(ModelConfig(2), 3, false);
    // Nodes: 1 + 3 + 9 + 27; edges: 3 + 9 + 27.
    REQUIRE(count_lines_with(dot, "->") == 39);
    REQUIRE(count_lines_with(dot, ";") == 1 + 40 + 39);
}

TEST_CASE("renormalized DOT merges the self-basis rules into one labeled edge") {
    const std::string dot = multiway::export_multiway_dot(ModelConfig(2), 1, true);
    REQUIRE(dot ==
            "digraph renormalized {\n"
            "  rankdir=TB;\n"
            "  \"L0.m0\" [label=\"x\"];\n"
            "  \"L1.m0\" [label=\"x\"];\n"
            "  \"L1.m1\" [label=\"-iy\"];\n"
            "  \"L0.m0\" -> \"L1.m0\" [label=\"×2\"];\n"
            "  \"L0.m0\" -> \"L1.m1\";\n"
            "}\n");
}

TEST_CASE("parallel-edges mode expands multiplicity instead of labeling") {
    const std::string dot =
        multiway::export_multiway_dot(ModelConfig(3), 1, true, true);
    REQUIRE(count_lines_with(dot, "\"L0.m0\" -> \"L1.m0\";") == 3);
    REQUIRE(count_lines_with(dot, "\"L0.m0\" -> \"L1.m1\";") == 1);
    REQUIRE(dot.find("label=\"×") == std::string::npos);
}

TEST_CASE("renormalized labels follow the coarse-grained phases down the levels") {
    const std::string dot = multiway::export_multiway_dot(ModelConfig(2), 4, true);
    // m = 0..4 across the deepest level: x, -iy, -x, iy, x again.
    REQUIRE(dot.find("\"L4.m0\" [label=\"x\"];") != std::string::npos);
    REQUIRE(dot.find("\"L4.m1\" [label=\"-iy\"];") != std::string::npos);
    REQUIRE(dot.find("\"L4.m2\" [label=\"-x\"];") != std::string::npos);
    REQUIRE(dot.find("\"L4.m3\" [label=\"iy\"];") != std::string::npos);
    REQUIRE(dot.find("\"L4.m4\" [label=\"x\"];") != std::string::npos);
}

TEST_CASE("marked initial words shift the renormalized labels") {
    const ModelConfig cfg(2, Word{{Symbol{2}}});
    const std::string dot = multiway::export_multiway_dot(cfg, 1, true);
    REQUIRE(dot.find("\"L0.m1\" [label=\"-iy\"];") != std::string::npos);
    REQUIRE(dot.find("\"L1.m2\" [label=\"-x\"];") != std::string::npos);
}

TEST_CASE("DOT output is byte-stable across calls") {
    const ModelConfig cfg(3);
    for (bool renormalized : {false, true}) {
        const auto a = multiway::export_multiway_dot(cfg, 3, renormalized);
        const auto b = multiway::export_multiway_dot(cfg, 3, renormalized);
        REQUIRE(a == b);
    }
}

TEST_CASE("export respects the enumeration cap and depth validation") {
    const ModelConfig small(2, Word{{Symbol{0}}}, 10);
    REQUIRE_THROWS_AS(multiway::export_multiway_dot(small, 3, false),
                      multiway::CapExceeded);
    REQUIRE_THROWS_AS(multiway::export_multiway_dot(ModelConfig(2), -1, false),
                      std::invalid_argument);
}
