#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiway/continuum.hpp"
#include "multiway/templates.hpp"
#include "multiway/words.hpp"

namespace multiway {

enum class TemplateAlgo { bruteforce, recurrence, closedform };

inline std::string to_string(TemplateAlgo algo) {
    switch (algo) {
        case TemplateAlgo::bruteforce: return "bruteforce";
        case TemplateAlgo::recurrence: return "recurrence";
        case TemplateAlgo::closedform: return "closedform";
    }
    throw std::invalid_argument("unknown algo");
}

inline TemplateAlgo parse_algo(const std::string& name) {
    if (name == "bruteforce") return TemplateAlgo::bruteforce;
    if (name == "recurrence") return TemplateAlgo::recurrence;
    if (name == "closedform") return TemplateAlgo::closedform;
    throw std::invalid_argument("unknown algo '" + name +
                                "' (expected bruteforce, recurrence or closedform)");
}

/// File write failure, message carries the offending path.
class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

/// One grid point of a (K, t) sweep against the analytic solution.
struct ConvergenceRecord {
    int K = 1;
    double t = 0.0;
    int level = 0;  // floor(t * K), the "k" column
    double err_l2 = 0.0;
    double norm_defect = 0.0;
    TemplateAlgo algo = TemplateAlgo::closedform;
};

struct SweepConfig {
    std::vector<double> t_values;
    std::vector<int> K_values;
    TemplateAlgo algo = TemplateAlgo::closedform;
    std::string output_path;  // empty: records only, no file
    bool continuous_normalization = false;
    std::uint64_t enumeration_cap = ModelConfig::kDefaultCap;
};

/// floor(t*K) with one guard: a product within 1 ulp of an integer is
/// rounded to it, so 0.3 * 10 lands on 3 rather than 2.
inline int floor_level(double t, int K) {
    const double p = t * static_cast<double>(K);
    const double nearest = std::nearbyint(p);
    const double ulp = std::nextafter(std::abs(p), std::numeric_limits<double>::infinity()) -
                       std::abs(p);
    if (std::abs(p - nearest) <= ulp) return static_cast<int>(nearest);
    return static_cast<int>(std::floor(p));
}

/// %.17g (round-trip exact for doubles); -0 prints as 0.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

namespace detail {

inline TemplateVector sweep_template(TemplateAlgo algo, int K, int level,
                                     std::uint64_t cap) {
    switch (algo) {
        case TemplateAlgo::bruteforce:
            return template_bruteforce(ModelConfig(K, cap), level);
        case TemplateAlgo::recurrence:
            return template_recurrence(K, level);
        case TemplateAlgo::closedform:
            return template_closedform(K, level);
    }
    throw std::invalid_argument("unknown algo");
}

inline void validate_sweep_config(const SweepConfig& cfg) {
    if (cfg.t_values.empty()) throw std::invalid_argument("sweep: t list is empty");
    if (cfg.K_values.empty()) throw std::invalid_argument("sweep: K list is empty");
    for (double t : cfg.t_values) {
        if (!std::isfinite(t) || t < 0.0)
            throw std::invalid_argument("sweep: t values must be finite and >= 0");
    }
    int prev = 0;
    for (int k_value : cfg.K_values) {
        if (k_value < 1) throw std::invalid_argument("sweep: K values must be >= 1");
        if (k_value <= prev)
            throw std::invalid_argument("sweep: K values must be strictly increasing");
        prev = k_value;
    }
}

}  // namespace detail

/// Header plus one row per record: `K,t,k,err_l2,norm_defect,algo`.
/// Doubles carry 17 significant digits (round-trip exact).
inline std::string to_csv(const std::vector<ConvergenceRecord>& records) {
    std::string out = "K,t,k,err_l2,norm_defect,algo\n";
    for (const ConvergenceRecord& r : records) {
        out += std::to_string(r.K);
        out += ',';
        out += format_double(r.t);
        out += ',';
        out += std::to_string(r.level);
        out += ',';
        out += format_double(r.err_l2);
        out += ',';
        out += format_double(r.norm_defect);
        out += ',';
        out += to_string(r.algo);
        out += '\n';
    }
    return out;
}

inline void write_csv(const std::vector<ConvergenceRecord>& records,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot open '" + path + "' for writing");
    out << to_csv(records);
    out.flush();
    if (!out) throw FileError("failed writing sweep CSV to '" + path + "'");
}

/// Evaluate the normalized template K^(-floor(tK)) T_floor(tK) against the
/// analytic solution on the whole (t, K) grid. Records are sorted by (t, K)
/// and written to cfg.output_path (when set) as CSV.
///
/// continuous_normalization swaps the prefactor for K^(-tK), i.e. the
/// real-valued exponent instead of the integer level; the two coincide
/// whenever t*K is an integer.
inline std::vector<ConvergenceRecord> run_convergence_sweep(const SweepConfig& cfg) {
    detail::validate_sweep_config(cfg);
    std::vector<double> ts = cfg.t_values;
    std::sort(ts.begin(), ts.end());

    std::vector<ConvergenceRecord> records;
    records.reserve(ts.size() * cfg.K_values.size());
    for (double t : ts) {
        const WaveFunction reference = exact_solution(t);
        for (int k_value : cfg.K_values) {
            const int level = floor_level(t, k_value);
            const TemplateVector tmpl =
                detail::sweep_template(cfg.algo, k_value, level, cfg.enumeration_cap);
            WaveFunction wf = normalize_template(tmpl);
            if (cfg.continuous_normalization) {
                const double extra = std::exp(
                    (static_cast<double>(level) - t * static_cast<double>(k_value)) *
                    std::log(static_cast<double>(k_value)));
                wf.c0 *= extra;
                wf.c1 *= extra;
            }
            records.push_back({k_value, t, level, l2_error(wf, reference),
                               wf.norm() - 1.0, cfg.algo});
        }
    }
    if (!cfg.output_path.empty()) write_csv(records, cfg.output_path);
    return records;
}

/// Least-squares slope of log(err_l2) against log(K) for records sharing one
/// t. Near -1 when the error decays like 1/K. Degenerate inputs (fewer than
/// 3 points, any zero error, repeated K, mixed t) are rejected.
inline double fit_convergence_rate(const std::vector<ConvergenceRecord>& records) {
    if (records.size() < 3)
        throw std::invalid_argument("fit_convergence_rate: need at least 3 records");
    std::vector<int> ks;
    for (const ConvergenceRecord& r : records) {
        if (!(r.err_l2 > 0.0))
            throw std::invalid_argument("fit_convergence_rate: err_l2 must be > 0");
        if (r.t != records.front().t)
            throw std::invalid_argument("fit_convergence_rate: records mix t values");
        ks.push_back(r.K);
    }
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
        throw std::invalid_argument("fit_convergence_rate: K values must be distinct");

    const double n = static_cast<double>(records.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const ConvergenceRecord& r : records) {
        mean_x += std::log(static_cast<double>(r.K));
        mean_y += std::log(r.err_l2);
    }
    mean_x /= n;
    mean_y /= n;
    double cov = 0.0;
    double var = 0.0;
    for (const ConvergenceRecord& r : records) {
        const double dx = std::log(static_cast<double>(r.K)) - mean_x;
        const double dy = std::log(r.err_l2) - mean_y;
        cov += dx * dy;
        var += dx * dx;
    }
    return cov / var;
}

}  // namespace multiway
