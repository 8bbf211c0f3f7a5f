#pragma once
// Stochastic measurement protocol: shot acquisition from the discretized
// ensemble, the sifting (est1) and plug-in (est2) estimators, and K-run
// validation statistics with schedule-independent parallel execution.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlls/designs.hpp"
#include "qlls/measures.hpp"
#include "qlls/random.hpp"

namespace qlls {

// est1 sifts on the first n registers; est2 plugs pooled cell frequencies
// into the discretized closed form.
enum class Estimator { est1, est2 };

std::string estimator_name(Estimator e);
Estimator estimator_from_name(const std::string& name);

struct RunConfig {
    int n = 2;
    int N = 50;
    long long M = 1000;
    int K = 30;
    MeasureSpec measure = MeasureSpec::flat();
    const DesignSet* design = &clifford_design();
    Estimator estimator = Estimator::est1;
    std::uint64_t master_seed = 1;

    // Throws std::invalid_argument; requires a Haar-part measure, n + 1 <= 63
    // register bits, design order >= n + 1, and positive N, M, K.
    void validate() const;
};

// One shot: n + 1 registers prepared in per-register eigenstates of the
// segment's diagonal state, rotated by one design element, measured in the
// computational basis. Bit j of the masks belongs to register j; value 0
// is a head in both masks (eigenstate label 0, outcome 0).
struct AcquisitionRecord {
    std::uint32_t u_index = 0;  // into design.elements
    std::uint32_t segment = 0;  // 1..N
    std::uint64_t prep_bits = 0;
    std::uint64_t outcome_bits = 0;
};

// Draw order per record is frozen for reproducibility: segment, the n + 1
// preparation bits, the design element, the n + 1 outcome bits.
std::vector<AcquisitionRecord> acquire(const RunConfig& config, RandomStream& stream);

// Head frequency of register n among records with exactly k heads in
// registers 0..n-1; empty sift leaves the estimate undefined.
std::optional<double> estimate1(const std::vector<AcquisitionRecord>& records, int n, int k);
std::vector<std::optional<double>> estimate1_all(const std::vector<AcquisitionRecord>& records,
                                                 int n);

// Reconstructs every (segment, element) cell value in the discretized ratio
// from head frequencies of registers 0..n-1 pooled per (eigenstate label,
// measured projector); projectors missing either label are dropped from
// numerator and denominator alike.
std::vector<std::optional<double>> estimate2_all(const std::vector<AcquisitionRecord>& records,
                                                 const RunConfig& config);

struct ValidationEntry {
    double reference = 0.0;
    double mean = 0.0;
    double variance = 0.0;  // population variance over successful runs
    double mse = 0.0;       // sqrt(bias^2 + variance)
    double se_mean = 0.0;   // sqrt(variance / successes)
    double mse_mean = 0.0;  // sqrt(bias^2 + variance / successes)
    int successes = 0;
    int failed = 0;
};

// Mean, population variance, and rms distance to the reference over the
// defined estimates; throws std::invalid_argument when all runs failed.
ValidationEntry validate(const std::vector<std::optional<double>>& estimates, double reference);

enum class Reference { analytic, discretized };

std::string reference_name(Reference r);
Reference reference_from_name(const std::string& name);

struct RunResult {
    RunConfig config;
    Reference reference = Reference::analytic;
    // One entry per k = 0..n; an all-failed k carries NaN statistics and
    // failed == K rather than aborting the sweep.
    std::vector<ValidationEntry> per_k;
};

// K independent acquire-and-estimate runs on streams derived from
// (master_seed, M, run index), reduced in run order.
RunResult run_experiment(const RunConfig& config, Reference reference = Reference::analytic);

// run_experiment per M, ascending M expected.
std::vector<RunResult> convergence_sweep(const RunConfig& config,
                                         const std::vector<long long>& m_list,
                                         Reference reference = Reference::analytic);

// Least-squares slope of log10(y) against log10(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// `u_index,i,a,bits` with the preparation and outcome registers as 0/1
// strings of length n + 1.
void write_records_csv(std::ostream& out, const std::vector<AcquisitionRecord>& records, int n);

// `measure,estimator,n,k,M,K,mean,variance,mse,failed_runs`, 12 significant
// digits, one '#' header comment; byte-deterministic given the config.
void write_simulation_csv(std::ostream& out, const std::vector<RunResult>& results);

}  // namespace qlls
