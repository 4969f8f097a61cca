// How fast do normalized templates approach the analytic solution?
// Doubling K from 25 to 800 at t = 1 should roughly halve the error.

#include <multiway/multiway.hpp>

#include <cstdio>

int main() {
    multiway::SweepConfig cfg;
    cfg.t_values = {0.5, 1.0, 2.0};
    cfg.K_values = {25, 50, 100, 200, 400, 800};

    std::printf("%6s %6s %6s %14s %14s\n", "t", "K", "k", "err_l2", "norm_defect");
    const auto records = multiway::run_convergence_sweep(cfg);
    for (const auto& r : records) {
        std::printf("%6g %6d %6d %14.6e %14.6e\n", r.t, r.K, r.level, r.err_l2,
                    r.norm_defect);
    }
    for (std::size_t begin = 0; begin < records.size();) {
        std::size_t end = begin;
        while (end < records.size() && records[end].t == records[begin].t) ++end;
        const std::vector<multiway::ConvergenceRecord> group(records.begin() + begin,
                                                             records.begin() + end);
        std::printf("t=%g: fitted log-log slope %.4f\n", group.front().t,
                    multiway::fit_convergence_rate(group));
        begin = end;
    }
    return 0;
}
