#include "qlls/protocol.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "qlls/analytics.hpp"
#include "qlls/numerics.hpp"

namespace qlls {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int head_count(std::uint64_t bits, int registers) {
    const std::uint64_t mask = (1ULL << registers) - 1ULL;
    return registers - std::popcount(bits & mask);
}

std::string bit_string(std::uint64_t bits, int registers) {
    std::string out(static_cast<std::size_t>(registers), '0');
    for (int j = 0; j < registers; ++j) {
        out[static_cast<std::size_t>(j)] = ((bits >> j) & 1ULL) ? '1' : '0';
    }
    return out;
}

std::vector<std::optional<double>> one_run(const RunConfig& config, std::uint64_t run_index) {
    RandomStream stream(derive_seed(config.master_seed,
                                    static_cast<std::uint64_t>(config.M), run_index));
    const std::vector<AcquisitionRecord> records = acquire(config, stream);
    if (config.estimator == Estimator::est1) {
        return estimate1_all(records, config.n);
    }
    return estimate2_all(records, config);
}

ValidationEntry all_failed_entry(double reference, int k_runs) {
    ValidationEntry entry;
    entry.reference = reference;
    entry.mean = entry.variance = entry.mse = entry.se_mean = entry.mse_mean = kNaN;
    entry.successes = 0;
    entry.failed = k_runs;
    return entry;
}

}  // namespace

std::string estimator_name(Estimator e) {
    return e == Estimator::est1 ? "est1" : "est2";
}

Estimator estimator_from_name(const std::string& name) {
    if (name == "est1") {
        return Estimator::est1;
    }
    if (name == "est2") {
        return Estimator::est2;
    }
    throw std::invalid_argument("unknown estimator '" + name + "' (expected est1 or est2)");
}

std::string reference_name(Reference r) {
    return r == Reference::analytic ? "analytic" : "discretized";
}

Reference reference_from_name(const std::string& name) {
    if (name == "analytic") {
        return Reference::analytic;
    }
    if (name == "discretized") {
        return Reference::discretized;
    }
    throw std::invalid_argument("unknown reference '" + name +
                                "' (expected analytic or discretized)");
}

void RunConfig::validate() const {
    if (n < 0 || n + 1 > 63) {
        throw std::invalid_argument("n must lie in [0, 62]");
    }
    if (N < 1 || M < 1 || K < 1) {
        throw std::invalid_argument("N, M, K must be positive");
    }
    if (!measure.haar_unitary_part()) {
        throw std::invalid_argument("protocol runs need a flat or bures measure");
    }
    if (design == nullptr) {
        throw std::invalid_argument("protocol runs need a design");
    }
    if (design->declared_t < n + 1) {
        throw std::invalid_argument("design order " + std::to_string(design->declared_t) +
                                    " is insufficient for n = " + std::to_string(n));
    }
}

std::vector<AcquisitionRecord> acquire(const RunConfig& config, RandomStream& stream) {
    config.validate();
    const DiscreteWeights grid = discrete_weights(config.measure, config.N);
    std::vector<double> omega_cdf(grid.omega.size());
    KahanSum running;
    for (std::size_t i = 0; i < grid.omega.size(); ++i) {
        running.add(grid.omega[i]);
        omega_cdf[i] = running.value();
    }

    const int registers = config.n + 1;
    std::vector<AcquisitionRecord> records;
    records.reserve(static_cast<std::size_t>(config.M));
    for (long long shot = 0; shot < config.M; ++shot) {
        AcquisitionRecord record;
        const std::size_t i = stream.from_cdf(omega_cdf);
        record.segment = static_cast<std::uint32_t>(i + 1);
        for (int j = 0; j < registers; ++j) {
            const std::uint64_t label = stream.bernoulli(grid.w0[i]) ? 0ULL : 1ULL;
            record.prep_bits |= label << j;
        }
        record.u_index = static_cast<std::uint32_t>(stream.index(config.design->elements.size()));
        const Unitary2& u = config.design->elements[record.u_index];
        const double head_prob[2] = {u.head_amplitude_sq(0), u.head_amplitude_sq(1)};
        for (int j = 0; j < registers; ++j) {
            const int label = static_cast<int>((record.prep_bits >> j) & 1ULL);
            const std::uint64_t outcome = stream.bernoulli(head_prob[label]) ? 0ULL : 1ULL;
            record.outcome_bits |= outcome << j;
        }
        records.push_back(record);
    }
    return records;
}

std::optional<double> estimate1(const std::vector<AcquisitionRecord>& records, int n, int k) {
    long long sifted = 0;
    long long heads = 0;
    for (const AcquisitionRecord& record : records) {
        if (head_count(record.outcome_bits, n) != k) {
            continue;
        }
        ++sifted;
        heads += ((record.outcome_bits >> n) & 1ULL) == 0ULL ? 1 : 0;
    }
    if (sifted == 0) {
        return std::nullopt;
    }
    return static_cast<double>(heads) / static_cast<double>(sifted);
}

std::vector<std::optional<double>> estimate1_all(const std::vector<AcquisitionRecord>& records,
                                                 int n) {
    std::vector<long long> sifted(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> heads(static_cast<std::size_t>(n) + 1, 0);
    for (const AcquisitionRecord& record : records) {
        const auto k = static_cast<std::size_t>(head_count(record.outcome_bits, n));
        ++sifted[k];
        heads[k] += ((record.outcome_bits >> n) & 1ULL) == 0ULL ? 1 : 0;
    }
    std::vector<std::optional<double>> out(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        if (sifted[k] > 0) {
            out[k] = static_cast<double>(heads[k]) / static_cast<double>(sifted[k]);
        }
    }
    return out;
}

std::vector<std::optional<double>> estimate2_all(const std::vector<AcquisitionRecord>& records,
                                                 const RunConfig& config) {
    config.validate();
    const int n = config.n;
    const DiscreteWeights grid = discrete_weights(config.measure, config.N);

    // tr(L_i Pi) is linear in the known preparation weights:
    // tr(L_i Pi) = w0_i <0|Pi|0> + (1 - w0_i) <1|Pi|1>, so one frequency per
    // (eigenstate label, measured projector) recovers every segment's cell
    // value at once: a register prepared in |a> and rotated by an element
    // with projector Pi is a Bernoulli sample of <a|Pi|a> regardless of its
    // segment. Elements sharing a projector pool their samples; keying on
    // anything finer (the per-segment cells of near-empty occupancy) would
    // pin the plug-in bias at small M instead of letting it fade as 1/M.
    const std::size_t element_count = config.design->elements.size();
    std::vector<std::size_t> class_of(element_count);
    std::vector<std::array<double, 3>> class_key;
    std::vector<double> class_multiplicity;
    for (std::size_t u = 0; u < element_count; ++u) {
        // Projector U+ P U is determined by its diagonal and off-diagonal.
        const Complex2x2& mat = config.design->elements[u].matrix();
        const cd cross = std::conj(mat.m[0]) * mat.m[1];
        const std::array<double, 3> key = {std::norm(mat.m[0]), cross.real(), cross.imag()};
        std::size_t c = class_key.size();
        for (std::size_t existing = 0; existing < class_key.size(); ++existing) {
            if (std::abs(class_key[existing][0] - key[0]) < 1e-9 &&
                std::abs(class_key[existing][1] - key[1]) < 1e-9 &&
                std::abs(class_key[existing][2] - key[2]) < 1e-9) {
                c = existing;
                break;
            }
        }
        if (c == class_key.size()) {
            class_key.push_back(key);
            class_multiplicity.push_back(0.0);
        }
        class_of[u] = c;
        class_multiplicity[c] += 1.0;
    }
    const std::size_t class_count = class_key.size();

    struct Cell {
        long long heads = 0;
        long long total = 0;
    };
    std::vector<Cell> cells(2 * class_count);
    for (const AcquisitionRecord& record : records) {
        const std::size_t c = class_of[record.u_index];
        for (int j = 0; j < n; ++j) {
            Cell& cell = cells[((record.prep_bits >> j) & 1ULL) * class_count + c];
            cell.total += 1;
            cell.heads += ((record.outcome_bits >> j) & 1ULL) == 0ULL ? 1 : 0;
        }
    }

    // A class survives only with samples for both eigenstates; surviving
    // classes are dropped from numerator and denominator alike.
    std::vector<double> head_given_label[2];
    std::vector<double> surviving_multiplicity;
    for (std::size_t c = 0; c < class_count; ++c) {
        const Cell& head_side = cells[c];
        const Cell& tail_side = cells[class_count + c];
        if (head_side.total == 0 || tail_side.total == 0) {
            continue;
        }
        head_given_label[0].push_back(static_cast<double>(head_side.heads) /
                                      static_cast<double>(head_side.total));
        head_given_label[1].push_back(static_cast<double>(tail_side.heads) /
                                      static_cast<double>(tail_side.total));
        surviving_multiplicity.push_back(class_multiplicity[c]);
    }

    std::vector<std::optional<double>> out(static_cast<std::size_t>(n) + 1);
    if (surviving_multiplicity.empty()) {
        return out;
    }
    for (int k = 0; k <= n; ++k) {
        KahanSum num;
        KahanSum den;
        for (int i = 0; i < config.N; ++i) {
            const double w0 = grid.w0[static_cast<std::size_t>(i)];
            const double omega = grid.omega[static_cast<std::size_t>(i)];
            for (std::size_t c = 0; c < surviving_multiplicity.size(); ++c) {
                const double q = w0 * head_given_label[0][c] +
                                 (1.0 - w0) * head_given_label[1][c];
                const double weight = omega * surviving_multiplicity[c];
                const double tail_part = ipow(1.0 - q, n - k);
                num.add(weight * ipow(q, k + 1) * tail_part);
                den.add(weight * ipow(q, k) * tail_part);
            }
        }
        if (den.value() > 0.0) {
            out[static_cast<std::size_t>(k)] = num.value() / den.value();
        }
    }
    return out;
}

ValidationEntry validate(const std::vector<std::optional<double>>& estimates, double reference) {
    ValidationEntry entry;
    entry.reference = reference;
    KahanSum sum;
    for (const std::optional<double>& value : estimates) {
        if (value.has_value()) {
            sum.add(*value);
            ++entry.successes;
        } else {
            ++entry.failed;
        }
    }
    if (entry.successes == 0) {
        throw std::invalid_argument("no successful estimates to validate");
    }
    const double count = entry.successes;
    entry.mean = sum.value() / count;
    KahanSum squares;
    for (const std::optional<double>& value : estimates) {
        if (value.has_value()) {
            const double d = *value - entry.mean;
            squares.add(d * d);
        }
    }
    entry.variance = squares.value() / count;
    const double bias = entry.mean - reference;
    entry.mse = std::sqrt(bias * bias + entry.variance);
    entry.se_mean = std::sqrt(entry.variance / count);
    entry.mse_mean = std::sqrt(bias * bias + entry.variance / count);
    return entry;
}

RunResult run_experiment(const RunConfig& config, Reference reference) {
    config.validate();
    std::vector<std::future<std::vector<std::optional<double>>>> futures;
    futures.reserve(static_cast<std::size_t>(config.K));
    for (int run = 0; run < config.K; ++run) {
        futures.push_back(std::async(std::launch::async, one_run, config,
                                     static_cast<std::uint64_t>(run)));
    }
    std::vector<std::vector<std::optional<double>>> per_run;
    per_run.reserve(futures.size());
    for (std::future<std::vector<std::optional<double>>>& f : futures) {
        per_run.push_back(f.get());
    }

    RunResult result;
    result.config = config;
    result.reference = reference;
    for (int k = 0; k <= config.n; ++k) {
        const double ref =
            reference == Reference::analytic
                ? p_qlls(config.measure, config.n, k)
                : p_discretized(config.measure, config.n, k, *config.design, config.N);
        std::vector<std::optional<double>> column;
        column.reserve(per_run.size());
        bool any = false;
        for (const std::vector<std::optional<double>>& run : per_run) {
            column.push_back(run[static_cast<std::size_t>(k)]);
            any = any || run[static_cast<std::size_t>(k)].has_value();
        }
        result.per_k.push_back(any ? validate(column, ref) : all_failed_entry(ref, config.K));
    }
    return result;
}

std::vector<RunResult> convergence_sweep(const RunConfig& config,
                                         const std::vector<long long>& m_list,
                                         Reference reference) {
    std::vector<RunResult> out;
    out.reserve(m_list.size());
    for (long long m : m_list) {
        RunConfig point = config;
        point.M = m;
        out.push_back(run_experiment(point, reference));
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope needs at least two matched points");
    }
    const double count = static_cast<double>(x.size());
    KahanSum sx;
    KahanSum sy;
    KahanSum sxx;
    KahanSum sxy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log10(x[i]);
        const double ly = std::log10(y[i]);
        sx.add(lx);
        sy.add(ly);
        sxx.add(lx * lx);
        sxy.add(lx * ly);
    }
    const double denom = sxx.value() - sx.value() * sx.value() / count;
    if (denom <= 0.0) {
        throw std::invalid_argument("slope needs distinct x values");
    }
    return (sxy.value() - sx.value() * sy.value() / count) / denom;
}

void write_records_csv(std::ostream& out, const std::vector<AcquisitionRecord>& records, int n) {
    out << "# qlls 0.1.0 records\n";
    out << "u_index,i,a,bits\n";
    for (const AcquisitionRecord& record : records) {
        out << record.u_index << ',' << record.segment << ',' << bit_string(record.prep_bits, n + 1)
            << ',' << bit_string(record.outcome_bits, n + 1) << '\n';
    }
}

void write_simulation_csv(std::ostream& out, const std::vector<RunResult>& results) {
    if (results.empty()) {
        throw std::invalid_argument("no results to write");
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "# qlls 0.1.0 simulate seed=%llu reference=%s\n",
                  static_cast<unsigned long long>(results.front().config.master_seed),
                  reference_name(results.front().reference).c_str());
    out << buf;
    out << "measure,estimator,n,k,M,K,mean,variance,mse,failed_runs\n";
    for (const RunResult& result : results) {
        for (std::size_t k = 0; k < result.per_k.size(); ++k) {
            const ValidationEntry& entry = result.per_k[k];
            out << result.config.measure.name() << ',' << estimator_name(result.config.estimator)
                << ',' << result.config.n << ',' << k << ',' << result.config.M << ','
                << result.config.K;
            const double cols[3] = {entry.mean, entry.variance, entry.mse};
            for (double v : cols) {
                std::snprintf(buf, sizeof(buf), ",%.12g", v);
                out << buf;
            }
            out << ',' << entry.failed << '\n';
        }
    }
}

}  // namespace qlls
