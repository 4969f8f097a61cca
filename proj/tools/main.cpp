// Command-line harness: multiway graph export, template computation,
// analytic wave function, convergence sweeps and the matrix-exponential
// limit check.
//
// Exit codes: 0 success, 1 usage error, 2 enumeration cap exceeded,
// 3 file I/O error.

#include <CLI11.hpp>

#include <multiway/multiway.hpp>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitIo = 3;

struct GraphArgs {
    int K = 2;
    int depth = 3;
    bool renormalized = false;
    bool parallel_edges = false;
    std::string init = "0";
};

struct TemplateArgs {
    int K = 2;
    int level = 0;
    std::string algo = "closedform";
};

struct WaveArgs {
    double t = 0.0;
};

struct ConvergeArgs {
    std::vector<double> t_values;
    std::vector<int> K_values;
    std::string algo = "closedform";
    std::string out;
    bool continuous_norm = false;
};

struct ExpmArgs {
    double t = 1.0;
    std::vector<std::int64_t> n_values;
};

void run_graph(const GraphArgs& args) {
    multiway::ModelConfig cfg(args.K, multiway::parse_word(args.init, args.K));
    std::fputs(
        multiway::export_multiway_dot(cfg, args.depth, args.renormalized,
                                      args.parallel_edges)
            .c_str(),
        stdout);
}

void run_template(const TemplateArgs& args) {
    const multiway::TemplateAlgo algo = multiway::parse_algo(args.algo);
    multiway::TemplateVector result;
    switch (algo) {
        case multiway::TemplateAlgo::bruteforce:
            result = multiway::template_bruteforce(multiway::ModelConfig(args.K),
                                                   args.level);
            break;
        case multiway::TemplateAlgo::recurrence:
            result = multiway::template_recurrence(args.K, args.level);
            break;
        case multiway::TemplateAlgo::closedform:
            result = multiway::template_closedform(args.K, args.level);
            break;
    }
    std::printf("%s\n", multiway::to_json(result).c_str());
}

void run_wave(const WaveArgs& args) {
    const multiway::WaveFunction psi = multiway::exact_solution(args.t);
    std::printf("{\"t\":%s,\"c0\":[%s,%s],\"c1\":[%s,%s]}\n",
                multiway::format_double(args.t).c_str(),
                multiway::format_double(psi.c0.real()).c_str(),
                multiway::format_double(psi.c0.imag()).c_str(),
                multiway::format_double(psi.c1.real()).c_str(),
                multiway::format_double(psi.c1.imag()).c_str());
}

void run_converge(const ConvergeArgs& args) {
    multiway::SweepConfig cfg;
    cfg.t_values = args.t_values;
    cfg.K_values = args.K_values;
    cfg.algo = multiway::parse_algo(args.algo);
    cfg.output_path = args.out;
    cfg.continuous_normalization = args.continuous_norm;
    const std::vector<multiway::ConvergenceRecord> records =
        multiway::run_convergence_sweep(cfg);

    // One fitted slope per t, in the same (sorted) order as the CSV rows.
    for (std::size_t begin = 0; begin < records.size();) {
        std::size_t end = begin;
        while (end < records.size() && records[end].t == records[begin].t) ++end;
        const std::vector<multiway::ConvergenceRecord> group(records.begin() + begin,
                                                             records.begin() + end);
        try {
            std::printf("t=%s slope=%.6f\n",
                        multiway::format_double(group.front().t).c_str(),
                        multiway::fit_convergence_rate(group));
        } catch (const std::invalid_argument&) {
            std::printf("t=%s slope=n/a\n",
                        multiway::format_double(group.front().t).c_str());
        }
        begin = end;
    }
}

void run_expm_check(const ExpmArgs& args) {
    const std::complex<double> minus_i{0.0, -1.0};
    const multiway::Matrix2c generator =
        (minus_i * std::complex<double>{args.t, 0.0}) * multiway::pauli_x();
    const multiway::Matrix2c reference = multiway::expm_2x2(generator);
    double prev_err = 0.0;
    bool have_prev = false;
    for (std::int64_t n : args.n_values) {
        const double err =
            multiway::max_abs_diff(multiway::expm_limit(generator, n), reference);
        if (have_prev && err > 0.0) {
            std::printf("n=%" PRId64 " err_max=%.6e ratio=%.5f\n", n, err,
                        err / prev_err);
        } else {
            std::printf("n=%" PRId64 " err_max=%.6e\n", n, err);
        }
        prev_err = err;
        have_prev = true;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Append-rule multiway rewriting system, its qubit coarse-graining, and "
        "convergence of normalized templates to the Pauli-X wave function"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Key/value config file mirroring the flags; sections name "
                   "subcommands, command-line flags take precedence");

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "Export the multiway system as DOT");
    graph->configurable();
    graph->add_option("--K", graph_args.K, "Alphabet bound K (symbols a_0..a_K)")
        ->required();
    graph->add_option("--depth", graph_args.depth, "Deepest level to export")
        ->required();
    graph->add_flag("--renormalized", graph_args.renormalized,
                    "Label states by their coarse-grained qubit terms");
    graph->add_flag("--parallel-edges", graph_args.parallel_edges,
                    "Expand the merged xK self-basis edge into K parallel edges");
    graph->add_option("--init", graph_args.init,
                      "Initial word, subindex string (e.g. 002, or 0-10-3 when "
                      "K > 9)");

    TemplateArgs template_args;
    auto* tmpl = app.add_subcommand("template", "Compute a template vector as JSON");
    tmpl->configurable();
    tmpl->add_option("--K", template_args.K, "Alphabet bound K")->required();
    tmpl->add_option("--k", template_args.level, "Level")->required();
    tmpl->add_option("--algo", template_args.algo,
                     "bruteforce | recurrence | closedform");

    WaveArgs wave_args;
    auto* wave = app.add_subcommand("wave", "Analytic solution cos(t)|0> - i sin(t)|1>");
    wave->configurable();
    wave->add_option("--t", wave_args.t, "Time")->required();

    ConvergeArgs converge_args;
    auto* converge = app.add_subcommand(
        "converge", "Sweep normalized templates against the analytic solution");
    converge->configurable();
    converge->add_option("--t-list", converge_args.t_values, "Times, comma separated")
        ->required()
        ->delimiter(',');
    converge
        ->add_option("--K-list,--k-list", converge_args.K_values,
                     "K values, comma separated, strictly increasing")
        ->required()
        ->delimiter(',');
    converge->add_option("--algo", converge_args.algo,
                         "bruteforce | recurrence | closedform");
    converge->add_option("--out", converge_args.out, "CSV output path")->required();
    converge->add_flag(
        "--continuous-norm", converge_args.continuous_norm,
        "Normalize by K^(-tK) instead of K^(-floor(tK)); level k = floor(tK) "
        "either way (products within 1 ulp of an integer round to it)");

    ExpmArgs expm_args;
    auto* expm = app.add_subcommand(
        "expm-check", "Compare (I - itX/n)^n against the closed-form exponential");
    expm->configurable();
    expm->add_option("--t", expm_args.t, "Time");
    expm->add_option("--n-list", expm_args.n_values, "n values, comma separated")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (graph->parsed()) {
            run_graph(graph_args);
        } else if (tmpl->parsed()) {
            run_template(template_args);
        } else if (wave->parsed()) {
            run_wave(wave_args);
        } else if (converge->parsed()) {
            run_converge(converge_args);
        } else if (expm->parsed()) {
            run_expm_check(expm_args);
        }
    } catch (const multiway::CapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const multiway::FileError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitOk;
}
