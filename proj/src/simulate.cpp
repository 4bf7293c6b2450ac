#include "bperiod/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "bperiod/fisher_dist.hpp"
#include "bperiod/parallel.hpp"
#include "bperiod/spectral.hpp"

namespace bperiod {

namespace {

constexpr std::array kKindNames = {"CONSTANT", "ARITH_STEP", "ENDPOINTS", "SINE", "PI_DIGITS", "RANDOM_IID"};
constexpr std::array kTableNames = {"T1", "T2", "T3", "T4", "T5", "PI"};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::toupper(static_cast<unsigned char>(x)) == std::toupper(static_cast<unsigned char>(y));
           });
}

// sin(pi * num / den), exactly zero when num/den is an integer.
double sin_pi_ratio(std::size_t num, std::size_t den) {
    const std::size_t reduced = num % (2 * den);
    if (reduced % den == 0) return 0.0;
    return std::sin(std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(den));
}

}  // namespace

const char* to_string(ScenarioKind kind) noexcept {
    return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (iequals(name, kKindNames[i])) return static_cast<ScenarioKind>(i);
    }
    return std::nullopt;
}

void ScenarioSpec::validate() const {
    if (d < 3) throw std::invalid_argument("d too small (q would be 0)");
    if (n < d) throw std::invalid_argument("series shorter than d");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("invalid level");
    if (replications < 1) throw std::invalid_argument("replications must be at least 1");
    if (kind != ScenarioKind::RandomIid) {
        (void)build_profile(*this);
    }
}

std::size_t ScenarioSpec::reported_period() const noexcept {
    switch (kind) {
        case ScenarioKind::Constant: return 1;
        case ScenarioKind::RandomIid: return n;
        default: return r;
    }
}

PeriodicProfile build_profile(const ScenarioSpec& spec) {
    std::vector<double> p;
    const std::size_t r = spec.r;
    switch (spec.kind) {
        case ScenarioKind::Constant:
            p = {spec.p1};
            break;
        case ScenarioKind::ArithStep: {
            if (r < 1) throw std::invalid_argument("r must be positive");
            const double centre = (static_cast<double>(r) + 1.0) / 2.0;
            for (std::size_t i = 1; i <= r; ++i) {
                p.push_back(spec.mean + spec.step * (static_cast<double>(i) - centre));
            }
            break;
        }
        case ScenarioKind::Endpoints:
            if (r < 2) throw std::invalid_argument("ENDPOINTS requires r >= 2");
            for (std::size_t i = 1; i <= r; ++i) {
                const double t = static_cast<double>(i - 1) / static_cast<double>(r - 1);
                p.push_back(spec.p_lo + (spec.p_hi - spec.p_lo) * t);
            }
            break;
        case ScenarioKind::Sine:
            if (r < 2) throw std::invalid_argument("SINE requires r >= 2");
            // arguments 4 pi (i-1)/(r-1), both endpoints included
            for (std::size_t i = 1; i <= r; ++i) {
                p.push_back(0.4 * sin_pi_ratio(4 * (i - 1), r - 1) + 0.5);
            }
            break;
        case ScenarioKind::PiDigits:
            if (r < 1 || r > kPiDigits.size()) throw std::invalid_argument("PI_DIGITS length must be in 1..120");
            for (std::size_t i = 0; i < r; ++i) {
                p.push_back(static_cast<double>(kPiDigits[i] - '0') / 10.0);
            }
            break;
        case ScenarioKind::RandomIid:
            throw std::invalid_argument("RANDOM_IID profiles are drawn per replication");
    }
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("probability outside [0,1]");
    }
    return PeriodicProfile(std::move(p));
}

BinarySeries simulate_series(const PeriodicProfile& profile, std::size_t n, StreamRng& rng) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const auto p = profile.p();
    const std::size_t r = p.size();
    std::vector<std::uint8_t> bits(n);
    std::size_t c = 0;
    for (std::size_t l = 0; l < n; ++l) {
        bits[l] = static_cast<std::uint8_t>(rng.bernoulli(p[c]));
        if (++c == r) c = 0;
    }
    return BinarySeries(std::move(bits));
}

PeriodicProfile draw_random_profile(std::size_t n, StreamRng& rng) {
    std::vector<double> p(n);
    for (auto& v : p) v = rng.uniform();
    return PeriodicProfile(std::move(p));
}

PowerEstimate estimate_power(const ScenarioSpec& spec, std::size_t threads) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    const SpectralPlan plan(spec.d);
    const auto cv = critical_value(plan.q(), spec.alpha);
    std::optional<PeriodicProfile> fixed;
    if (spec.kind != ScenarioKind::RandomIid) fixed = build_profile(spec);

    std::atomic<std::size_t> rejections{0};
    parallel_for(spec.replications, threads, [&](std::size_t k) {
        StreamRng rng(spec.seed, k);
        const auto series = fixed ? simulate_series(*fixed, spec.n, rng)
                                  : simulate_series(draw_random_profile(spec.n, rng), spec.n, rng);
        const auto folded = fold(series, spec.d);
        if (plan.fisher_g(folded.z).value > cv.approx) {
            rejections.fetch_add(1, std::memory_order_relaxed);
        }
    });

    PowerEstimate est;
    est.scenario = spec;
    est.rejections = rejections.load();
    const auto reps = static_cast<double>(spec.replications);
    est.rate = static_cast<double>(est.rejections) / reps;
    est.std_error = std::sqrt(est.rate * (1.0 - est.rate) / reps);
    est.k_alpha_approx = cv.approx;
    est.k_alpha_exact = cv.exact;
    est.elapsed = std::chrono::steady_clock::now() - start;
    return est;
}

const char* to_string(TableId id) noexcept {
    return kTableNames[static_cast<std::size_t>(id)];
}

std::optional<TableId> parse_table_id(std::string_view name) {
    for (std::size_t i = 0; i < kTableNames.size(); ++i) {
        if (iequals(name, kTableNames[i])) return static_cast<TableId>(i);
    }
    return std::nullopt;
}

std::vector<ScenarioSpec> table_scenarios(TableId id, std::size_t replications, std::uint64_t seed) {
    ScenarioSpec base;
    base.replications = replications;
    base.seed = seed;

    std::vector<ScenarioSpec> out;
    auto period_sweep = [&](ScenarioKind kind, std::size_t r_max) {
        for (std::size_t r = 2; r <= r_max; ++r) {
            ScenarioSpec s = base;
            s.kind = kind;
            s.r = r;
            out.push_back(s);
        }
    };

    switch (id) {
        case TableId::T1:
            for (int i = 1; i <= 9; ++i) {
                ScenarioSpec s = base;
                s.kind = ScenarioKind::Constant;
                s.p1 = i / 10.0;
                out.push_back(s);
            }
            break;
        case TableId::T2:
            base.step = 0.01;
            period_sweep(ScenarioKind::ArithStep, 30);
            break;
        case TableId::T3:
            base.step = 0.02;
            period_sweep(ScenarioKind::ArithStep, 30);
            break;
        case TableId::T4:
            period_sweep(ScenarioKind::Endpoints, 30);
            break;
        case TableId::T5:
            period_sweep(ScenarioKind::Sine, 10);
            break;
        case TableId::PI: {
            ScenarioSpec s = base;
            s.kind = ScenarioKind::PiDigits;
            s.r = 120;
            s.n = 120;
            s.d = 12;
            out.push_back(s);
            break;
        }
    }
    return out;
}

PowerTable run_table(TableId id, std::size_t replications, std::uint64_t seed, std::size_t threads) {
    PowerTable table;
    table.id = id;
    switch (id) {
        case TableId::T1: table.title = "Empirical level, constant success probability p1"; break;
        case TableId::T2: table.title = "Rejection rate, arithmetic profile with step 0.01 and mean 0.5"; break;
        case TableId::T3: table.title = "Rejection rate, arithmetic profile with step 0.02 and mean 0.5"; break;
        case TableId::T4: table.title = "Rejection rate, linear profile from p_1 = 0.4 to p_r = 0.6"; break;
        case TableId::T5: table.title = "Rejection rate, sine profile 0.4 sin(x) + 0.5 on [0, 4 pi]"; break;
        case TableId::PI: table.title = "Rejection rate, p_i = i-th decimal digit of pi / 10 (n=120, d=12)"; break;
    }
    for (const auto& spec : table_scenarios(id, replications, seed)) {
        std::string label = spec.kind == ScenarioKind::Constant ? fmt::format("p1={:.1f}", spec.p1)
                                                                : fmt::format("r={}", spec.r);
        table.rows.push_back({std::move(label), estimate_power(spec, threads)});
    }
    return table;
}

std::string to_csv_row(const PowerEstimate& est, int precision) {
    const auto& s = est.scenario;
    return fmt::format("{},{},{},{},{},{},{},{:.{}f},{:.{}f}", to_string(s.kind), s.reported_period(), s.n, s.d,
                       s.alpha, s.replications, est.rejections, est.rate, precision, est.std_error, precision);
}

}  // namespace bperiod
