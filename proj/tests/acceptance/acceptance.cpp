// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
//   bperiod_acceptance [--threads N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "../invariance.hpp"
#include "../oracles.hpp"
#include "bperiod/fisher_dist.hpp"
#include "bperiod/parallel.hpp"
#include "bperiod/series.hpp"
#include "bperiod/simulate.hpp"
#include "bperiod/spectral.hpp"
#include "bperiod/theory.hpp"

using namespace bperiod;

namespace {

constexpr std::size_t kReps = 20000;
constexpr std::uint64_t kSeed = 20261016;
std::size_t g_threads = 0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void expect(bool ok, std::string what) {
        pass = pass && ok;
        lines.push_back(fmt::format("    {} {}", ok ? "ok  " : "FAIL", what));
    }
};

ScenarioSpec scenario(ScenarioKind kind, std::size_t r, double step = 0.01) {
    ScenarioSpec s;
    s.kind = kind;
    s.r = r;
    s.step = step;
    s.replications = kReps;
    s.seed = kSeed;
    return s;
}

void expect_rate(Outcome& out, const std::string& label, const ScenarioSpec& spec, double target, double tol) {
    const auto est = estimate_power(spec, g_threads);
    out.expect(std::abs(est.rate - target) <= tol,
               fmt::format("{}: rate {:.4f} (se {:.4f}), target {:.4f} +- {}", label, est.rate, est.std_error, target,
                           tol));
}

void expect_at_least(Outcome& out, const std::string& label, const ScenarioSpec& spec, double floor) {
    const auto est = estimate_power(spec, g_threads);
    out.expect(est.rate >= floor, fmt::format("{}: rate {:.4f}, required >= {}", label, est.rate, floor));
}

Outcome critical_value_check() {
    Outcome out;
    const auto cv = critical_value(29, 0.05);
    out.expect(std::abs(cv.approx - 0.2033) <= 5e-4,
               fmt::format("q=29 alpha=0.05: approx {:.6f} (exact {:.6f}), target 0.2033 +- 5e-4", cv.approx,
                           cv.exact));
    return out;
}

Outcome table1() {
    Outcome out;
    for (int i = 1; i <= 9; ++i) {
        auto s = scenario(ScenarioKind::Constant, 1);
        s.p1 = i / 10.0;
        expect_rate(out, fmt::format("p1={:.1f}", s.p1), s, 0.05, 0.01);
    }
    return out;
}

Outcome table2() {
    Outcome out;
    expect_rate(out, "r=30", scenario(ScenarioKind::ArithStep, 30, 0.01), 0.7473, 0.02);
    expect_rate(out, "r=20", scenario(ScenarioKind::ArithStep, 20, 0.01), 0.2939, 0.02);
    expect_rate(out, "r=15", scenario(ScenarioKind::ArithStep, 15, 0.01), 0.1350, 0.015);
    expect_rate(out, "r=7", scenario(ScenarioKind::ArithStep, 7, 0.01), 0.05, 0.01);
    return out;
}

Outcome table3() {
    Outcome out;
    expect_rate(out, "r=20", scenario(ScenarioKind::ArithStep, 20, 0.02), 0.9685, 0.01);
    expect_rate(out, "r=15", scenario(ScenarioKind::ArithStep, 15, 0.02), 0.7550, 0.02);
    expect_rate(out, "r=10", scenario(ScenarioKind::ArithStep, 10, 0.02), 0.3204, 0.02);
    expect_at_least(out, "r=30", scenario(ScenarioKind::ArithStep, 30, 0.02), 0.999);
    return out;
}

Outcome table4() {
    Outcome out;
    expect_rate(out, "r=3", scenario(ScenarioKind::Endpoints, 3), 0.9750, 0.01);
    expect_rate(out, "r=4", scenario(ScenarioKind::Endpoints, 4), 0.8362, 0.02);
    expect_rate(out, "r=2", scenario(ScenarioKind::Endpoints, 2), 0.05, 0.01);
    return out;
}

Outcome table5() {
    Outcome out;
    for (std::size_t r : {4u, 6u, 8u, 9u, 10u}) {
        expect_at_least(out, fmt::format("r={}", r), scenario(ScenarioKind::Sine, r), 0.999);
    }
    for (std::size_t r : {2u, 3u, 5u, 7u}) {
        expect_rate(out, fmt::format("r={}", r), scenario(ScenarioKind::Sine, r), 0.05, 0.01);
    }
    return out;
}

Outcome pi_digits() {
    Outcome out;
    auto s = scenario(ScenarioKind::PiDigits, 120);
    s.n = 120;
    s.d = 12;
    expect_rate(out, "n=120 d=12", s, 0.05, 0.012);
    return out;
}

Outcome distribution_oracle() {
    Outcome out;
    constexpr std::size_t count = 100000;
    for (std::size_t q : {2u, 5u, 14u, 29u}) {
        const std::size_t d = 2 * q + 2;
        const auto draws = sample_limit_statistic(d, std::vector<double>(d, 1.0), count, kSeed + q, g_threads);
        // the required grid, plus two points inside (1/q, 1) so small q is not trivially 1
        const double qd = static_cast<double>(q);
        for (double x : {0.1, 0.2, 0.3, 1.5 / qd, 2.5 / qd}) {
            if (x >= 1.0) continue;
            const double expected = tail(q, x);
            const auto hits = std::count_if(draws.begin(), draws.end(), [x](double g) { return g >= x; });
            const double rate = static_cast<double>(hits) / count;
            const double se = std::sqrt(expected * (1.0 - expected) / count);
            out.expect(std::abs(rate - expected) <= 3.0 * se,
                       fmt::format("q={:2} x={:.4f}: empirical {:.5f}, tail {:.5f}, 3 se = {:.5f}", q, x, rate,
                                   expected, 3.0 * se));
        }
    }
    return out;
}

Outcome theory_brute_force() {
    Outcome out;
    std::size_t pairs = 0, mismatched = 0, not_constant = 0, not_periodic = 0;
    for (std::size_t r = 1; r <= 24; ++r) {
        for (std::size_t d = 3; d <= 24; ++d) {
            for (std::uint64_t trial = 0; trial < 5; ++trial) {
                StreamRng rng(kSeed, (r * 100 + d) * 10 + trial);
                std::vector<double> p(r);
                // dyadic rationals k/64, so every partial sum is exact
                for (auto& v : p) v = static_cast<double>(rng() % 65) / 64.0;
                const auto e = limits_e(PeriodicProfile(p), d);
                if (e != oracle::limits_e(p, d)) ++mismatched;
                const std::size_t b = std::gcd(r, d);
                if (b == 1 && std::any_of(e.begin(), e.end(), [&](double v) { return v != e.front(); })) {
                    ++not_constant;
                }
                for (std::size_t i = 0; i + b < d; ++i) {
                    if (e[i] != e[i + b]) {
                        ++not_periodic;
                        break;
                    }
                }
            }
            ++pairs;
        }
    }
    out.expect(mismatched == 0, fmt::format("limits_e equals the defining sum exactly ({} mismatches)", mismatched));
    out.expect(not_constant == 0, fmt::format("gcd(r,d)=1 gives constant e ({} violations)", not_constant));
    out.expect(not_periodic == 0, fmt::format("e is gcd(r,d)-periodic ({} violations)", not_periodic));
    out.lines.push_back(fmt::format("    info {} (r, d) pairs, 5 profiles each", pairs));
    return out;
}

Outcome consistency() {
    Outcome out;
    const PeriodicProfile profile({0.2, 0.5, 0.8});
    const std::size_t d = 6;
    const auto summary = detectability(profile, d);
    if (!summary.limit_g) {
        out.expect(false, "limit g(e) must exist for this profile");
        return out;
    }
    const double limit = *summary.limit_g;
    const SpectralPlan plan(d);
    std::vector<double> means;
    for (std::size_t n : {600u, 6000u, 60000u}) {
        constexpr std::size_t reps = 500;
        std::vector<double> dev(reps);
        parallel_for(reps, g_threads, [&](std::size_t k) {
            StreamRng rng(kSeed + n, k);
            dev[k] = std::abs(plan.fisher_g(fold(simulate_series(profile, n, rng), d).z).value - limit);
        });
        means.push_back(std::accumulate(dev.begin(), dev.end(), 0.0) / reps);
    }
    out.expect(means[0] > means[1] && means[1] > means[2],
               fmt::format("mean |g - g(e)| at n=600/6000/60000: {:.6f} > {:.6f} > {:.6f} (g(e) = {:.4f})", means[0],
                           means[1], means[2], limit));
    return out;
}

Outcome invariances() {
    Outcome out;
    testing::InvarianceTally total;
    for (std::size_t d = 3; d <= 64; ++d) {
        const auto t = testing::check_invariances(d, 1000, kSeed);
        total.vectors += t.vectors;
        total.shift_failures += t.shift_failures;
        total.scale_failures += t.scale_failures;
        total.affine_failures += t.affine_failures;
        total.worst_shift = std::max(total.worst_shift, t.worst_shift);
        total.worst_scale = std::max(total.worst_scale, t.worst_scale);
        total.worst_affine = std::max(total.worst_affine, t.worst_affine);
    }
    out.expect(total.shift_failures == 0, fmt::format("shift: {} failures, worst relative change {:.2e} (tol {:.0e})",
                                                      total.shift_failures, total.worst_shift, testing::kShiftTolerance));
    out.expect(total.scale_failures == 0, fmt::format("scale: {} failures, worst |dg| {:.2e} (tol {:.0e})",
                                                      total.scale_failures, total.worst_scale, testing::kScaleTolerance));
    out.expect(total.affine_failures == 0,
               fmt::format("affine recentering: {} failures, worst |dg| {:.2e} (tol {:.0e})", total.affine_failures,
                           total.worst_affine, testing::kScaleTolerance));
    out.lines.push_back(fmt::format("    info {} vectors, d = 3..64", total.vectors));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--threads") g_threads = static_cast<std::size_t>(std::atoi(argv[i + 1]));
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1  critical value k_0.05 for q = 29", critical_value_check},
        {"AC2  null level, constant p1 = 0.1..0.9", table1},
        {"AC3  arithmetic profile, step 0.01", table2},
        {"AC4  arithmetic profile, step 0.02", table3},
        {"AC5  linear profile 0.4 -> 0.6", table4},
        {"AC6  sine profile", table5},
        {"AC7  pi-digit probabilities", pi_digits},
        {"AC8  null law of g against the exact tail", distribution_oracle},
        {"AC9  structure of the limits e_i", theory_brute_force},
        {"AC10 consistency under a detectable alternative", consistency},
        {"AC11 spectral invariances", invariances},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = run();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::cout << fmt::format("[{}] {} ({:.1f}s)\n", outcome.pass ? "PASS" : "FAIL", name, took.count());
        for (const auto& line : outcome.lines) std::cout << line << '\n';
        std::cout.flush();
        failures += outcome.pass ? 0 : 1;
    }
    std::cout << fmt::format("\n{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
