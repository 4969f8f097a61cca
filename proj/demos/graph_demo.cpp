// Prints the K=2 multiway system to depth 3, raw and coarse-grained.
// Pipe either graph into `dot -Tsvg` to render it.

#include <multiway/multiway.hpp>

#include <iostream>

int main() {
    const multiway::ModelConfig cfg(2);
    std::cout << multiway::export_multiway_dot(cfg, 3, /*renormalized=*/false)
              << '\n'
              << multiway::export_multiway_dot(cfg, 3, /*renormalized=*/true);
    return 0;
}
