#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "qlls/analytics.hpp"
#include "qlls/protocol.hpp"

using namespace qlls;

namespace {

// Fixed-order design stand-in whose declared order is asserted, not earned;
// lets tests pin the rotation to the identity.
DesignSet identity_design() {
    DesignSet d;
    d.name = "identity";
    d.declared_t = 63;
    d.elements.push_back(Unitary2(Complex2x2::identity()));
    return d;
}

AcquisitionRecord record(std::uint32_t u_index, std::uint32_t segment, std::uint64_t prep,
                         std::uint64_t outcome) {
    AcquisitionRecord r;
    r.u_index = u_index;
    r.segment = segment;
    r.prep_bits = prep;
    r.outcome_bits = outcome;
    return r;
}

int head_count_first_n(std::uint64_t outcome, int n) {
    const std::uint64_t mask = (1ULL << n) - 1;
    return n - std::popcount(outcome & mask);
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig config;
    CHECK_NOTHROW(config.validate());
    config.n = 4;  // clifford is a 3-design; n + 1 = 5 moments needed
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.design = &icosahedral_design();
    CHECK_NOTHROW(config.validate());
    config.measure = MeasureSpec::classical();
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = RunConfig{};
    config.M = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = RunConfig{};
    config.n = -1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("acquire yields M records with fields in range") {
    RunConfig config;
    config.M = 500;
    RandomStream stream(7);
    const auto records = acquire(config, stream);
    REQUIRE(records.size() == 500);
    for (const auto& r : records) {
        CHECK(r.segment >= 1);
        CHECK(r.segment <= static_cast<std::uint32_t>(config.N));
        CHECK(r.u_index < clifford_design().elements.size());
        CHECK((r.prep_bits >> (config.n + 1)) == 0);
        CHECK((r.outcome_bits >> (config.n + 1)) == 0);
    }

    RunConfig empty = config;
    empty.M = 0;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("acquire: preparation bits follow the head weights") {
    // flat, N = 1: single segment with w0 = 1/2, so preparation labels are
    // fair coin flips across all registers.
    RunConfig config;
    config.N = 1;
    config.M = 4000;
    RandomStream stream(11);
    const auto records = acquire(config, stream);
    int heads = 0, total = 0;
    for (const auto& r : records) {
        for (int j = 0; j <= config.n; ++j) {
            heads += ((r.prep_bits >> j) & 1) == 0;
            ++total;
        }
    }
    const double freq = static_cast<double>(heads) / total;
    const double se = std::sqrt(0.25 / total);
    CHECK(std::abs(freq - 0.5) < 4.0 * se);
}

TEST_CASE("acquire: identity rotation copies preparations to outcomes") {
    const DesignSet identity = identity_design();
    RunConfig config;
    config.design = &identity;
    config.M = 300;
    RandomStream stream(3);
    for (const auto& r : acquire(config, stream)) {
        CHECK(r.outcome_bits == r.prep_bits);
    }
}

TEST_CASE("estimate1 worked examples") {
    // Patterns {01, 10, 00, 11} on the first two registers, third register
    // {0, 1, 0, 1}: the k = 1 sift keeps {01, 10}, head frequency 1/2.
    // Heads are zeros; register j sits at mask bit j, so pattern "01" with
    // third bit 0 is mask 0b010 (register 1 set, registers 0 and 2 clear).
    std::vector<AcquisitionRecord> records = {
        record(0, 1, 0, 0b010),  // pattern 01, third 0: sifted head
        record(0, 1, 0, 0b101),  // pattern 10, third 1: sifted tail
        record(0, 1, 0, 0b000),  // pattern 00: two heads, not sifted
        record(0, 1, 0, 0b111),  // pattern 11: zero heads, not sifted
    };
    const auto estimate = estimate1(records, 2, 1);
    REQUIRE(estimate.has_value());
    CHECK(*estimate == doctest::Approx(0.5).epsilon(1e-15));

    // All heads everywhere: the k = n sift returns frequency one.
    std::vector<AcquisitionRecord> all_heads(5, record(0, 1, 0, 0));
    const auto full = estimate1(all_heads, 2, 2);
    REQUIRE(full.has_value());
    CHECK(*full == doctest::Approx(1.0).epsilon(1e-15));

    // Empty sift: the only record carries zero heads, k = 2 asks for two.
    std::vector<AcquisitionRecord> one = {record(0, 1, 0, 0b011)};
    CHECK_FALSE(estimate1(one, 2, 2).has_value());
}

TEST_CASE("estimate1_all partitions the records by head count") {
    RunConfig config;
    config.M = 2000;
    RandomStream stream(5);
    const auto records = acquire(config, stream);
    int by_k[3] = {0, 0, 0};
    for (const auto& r : records) ++by_k[head_count_first_n(r.outcome_bits, 2)];
    CHECK(by_k[0] + by_k[1] + by_k[2] == 2000);

    const auto estimates = estimate1_all(records, 2);
    REQUIRE(estimates.size() == 3);
    for (int k = 0; k <= 2; ++k) {
        if (by_k[k] > 0) {
            REQUIRE(estimates[k].has_value());
            CHECK(*estimates[k] >= 0.0);
            CHECK(*estimates[k] <= 1.0);
        }
    }
}

TEST_CASE("estimate2 at the exact fixed point reproduces the discretized law") {
    // Synthetic records whose pooled frequencies equal |<0|U|a>|^2 exactly:
    // per element, one record per label side with round(n q) heads among the
    // first n registers (q in {0, 1/2, 1} for the clifford projectors).
    RunConfig config;
    config.n = 2;
    config.N = 50;
    config.K = 1;
    std::vector<AcquisitionRecord> records;
    const auto& elements = clifford_design().elements;
    for (std::uint32_t u = 0; u < elements.size(); ++u) {
        for (std::uint64_t label : {0ULL, 1ULL}) {
            const double q = elements[u].head_amplitude_sq(static_cast<int>(label));
            const int heads = static_cast<int>(std::lround(2 * q));
            std::uint64_t outcome = 0;
            for (int j = 0; j < 2 - heads; ++j) outcome |= 1ULL << j;  // tails first
            const std::uint64_t prep = label ? 0b111 : 0b000;
            records.push_back(record(u, 1 + (u % 50), prep, outcome));
        }
    }
    const auto estimates = estimate2_all(records, config);
    REQUIRE(estimates.size() == 3);
    for (int k = 0; k <= 2; ++k) {
        REQUIRE(estimates[k].has_value());
        const double target = p_discretized(MeasureSpec::flat(), 2, k, clifford_design(), 50);
        CHECK(*estimates[k] == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("estimate2: all-head frequencies give unit ratio at k = n") {
    // Both label sides of a single element, every pooled bit a head: the
    // plug-in ratio for k = n is 1^{n+1} / 1^n = 1.
    RunConfig config;
    config.n = 2;
    config.N = 3;
    std::vector<AcquisitionRecord> records = {
        record(0, 1, 0b000, 0b000),
        record(0, 2, 0b111, 0b000),
    };
    const auto estimates = estimate2_all(records, config);
    REQUIRE(estimates[2].has_value());
    CHECK(*estimates[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("estimate2 ignores the last register") {
    RunConfig config;
    config.n = 2;
    std::vector<AcquisitionRecord> base = {
        record(0, 1, 0b000, 0b001),
        record(0, 1, 0b111, 0b010),
        record(3, 2, 0b000, 0b010),
        record(3, 2, 0b111, 0b001),
    };
    std::vector<AcquisitionRecord> flipped = base;
    for (auto& r : flipped) r.outcome_bits ^= 0b100;  // toggle register n only
    CHECK(estimate2_all(base, config) == estimate2_all(flipped, config));
}

TEST_CASE("estimate2 with no records is undefined") {
    RunConfig config;
    const auto estimates = estimate2_all({}, config);
    for (const auto& e : estimates) CHECK_FALSE(e.has_value());
}

TEST_CASE("validate worked examples") {
    const ValidationEntry both = validate({0.4, 0.6}, 0.5);
    CHECK(both.mean == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(both.variance == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(both.mse == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(both.successes == 2);
    CHECK(both.failed == 0);

    const ValidationEntry constant = validate({0.25, 0.25, 0.25}, 0.25);
    CHECK(constant.variance == doctest::Approx(0.0));
    CHECK(constant.mse == doctest::Approx(0.0));

    const ValidationEntry with_failure = validate({0.4, std::nullopt, 0.6}, 0.5);
    CHECK(with_failure.mean == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(with_failure.successes == 2);
    CHECK(with_failure.failed == 1);

    CHECK_THROWS_AS(validate({std::nullopt, std::nullopt}, 0.5), std::invalid_argument);
}

TEST_CASE("validate invariants: mse dominates bias and spread") {
    const std::vector<std::optional<double>> estimates = {0.38, 0.41, 0.44, 0.36, 0.42};
    const ValidationEntry entry = validate(estimates, 0.40);
    const double bias = entry.mean - entry.reference;
    CHECK(entry.mse >= std::abs(bias) - 1e-12);
    CHECK(entry.mse >= std::sqrt(entry.variance) - 1e-12);
    CHECK(entry.se_mean == doctest::Approx(std::sqrt(entry.variance / 5)).epsilon(1e-12));
    CHECK(entry.mse_mean ==
          doctest::Approx(std::sqrt(bias * bias + entry.variance / 5)).epsilon(1e-12));
}

TEST_CASE("run_experiment is deterministic under parallel execution") {
    RunConfig config;
    config.M = 400;
    config.K = 16;
    config.master_seed = 99;
    const RunResult a = run_experiment(config);
    const RunResult b = run_experiment(config);
    REQUIRE(a.per_k.size() == b.per_k.size());
    for (std::size_t k = 0; k < a.per_k.size(); ++k) {
        CHECK(a.per_k[k].mean == b.per_k[k].mean);
        CHECK(a.per_k[k].variance == b.per_k[k].variance);
        CHECK(a.per_k[k].mse == b.per_k[k].mse);
    }

    std::ostringstream csv_a, csv_b;
    write_simulation_csv(csv_a, {a});
    write_simulation_csv(csv_b, {b});
    CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("estimator duality holds within statistical error") {
    RunConfig config;
    config.M = 1000;
    config.K = 30;
    config.master_seed = 17;
    const RunResult result = run_experiment(config);
    const double sum = result.per_k[0].mean + result.per_k[2].mean;
    const double se = std::sqrt(result.per_k[0].se_mean * result.per_k[0].se_mean +
                                result.per_k[2].se_mean * result.per_k[2].se_mean);
    CHECK(std::abs(sum - 1.0) < 3.0 * se);
}

TEST_CASE("est1 converges to the discretized law, not past it") {
    RunConfig config;
    config.M = 100000;
    config.K = 10;
    config.master_seed = 23;
    const RunResult result = run_experiment(config, Reference::discretized);
    for (int k = 0; k <= 2; ++k) {
        const ValidationEntry& e = result.per_k[k];
        CHECK(std::abs(e.mean - e.reference) < 3.0 * e.se_mean);
    }
}

TEST_CASE("est2 small-sample bias: negative at k = 0, positive at k = n") {
    RunConfig config;
    config.estimator = Estimator::est2;
    config.M = 10;
    config.K = 400;
    config.master_seed = 11;
    const RunResult result = run_experiment(config);
    const ValidationEntry& low = result.per_k[0];
    const ValidationEntry& high = result.per_k[2];
    CHECK(low.mean - low.reference < -3.0 * low.se_mean);
    CHECK(high.mean - high.reference > 3.0 * high.se_mean);
}

TEST_CASE("convergence sweep and slope fitting") {
    RunConfig config;
    config.M = 100;
    config.K = 8;
    config.master_seed = 31;
    const auto results = convergence_sweep(config, {100, 400, 1600});
    REQUIRE(results.size() == 3);
    std::vector<double> xs = {100, 400, 1600};
    std::vector<double> ys;
    for (const auto& r : results) ys.push_back(r.per_k[1].mse);
    const double slope = loglog_slope(xs, ys);
    CHECK(slope < 0.0);  // error shrinks with M
    CHECK(loglog_slope({1, 10, 100}, {1, 0.1, 0.01}) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(loglog_slope({1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(loglog_slope({5, 5}, {1, 2}), std::invalid_argument);
}

TEST_CASE("records csv format") {
    RunConfig config;
    config.M = 3;
    RandomStream stream(41);
    const auto records = acquire(config, stream);
    std::ostringstream out;
    write_records_csv(out, records, config.n);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind('#', 0) == 0);
    std::getline(in, line);
    CHECK(line == "u_index,i,a,bits");
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string u, i, a, bits;
        std::getline(cells, u, ',');
        std::getline(cells, i, ',');
        std::getline(cells, a, ',');
        std::getline(cells, bits, ',');
        CHECK(a.size() == 3);
        CHECK(bits.size() == 3);
        CHECK(a.find_first_not_of("01") == std::string::npos);
        CHECK(bits.find_first_not_of("01") == std::string::npos);
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("derived seeds separate runs and sweep points") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t m : {100ULL, 1000ULL}) {
        for (std::uint64_t run = 0; run < 50; ++run) {
            seeds.insert(derive_seed(1, m, run));
        }
    }
    CHECK(seeds.size() == 100);
}
