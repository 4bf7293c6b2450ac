#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bperiod/rng.hpp"
#include "bperiod/series.hpp"
#include "bperiod/theory.hpp"

namespace bperiod {

enum class ScenarioKind {
    Constant,   ///< p_1 = p1
    ArithStep,  ///< p_i = mean + step (i - (r+1)/2)
    Endpoints,  ///< p_i = p_lo + (p_hi - p_lo)(i-1)/(r-1)
    Sine,       ///< p_i = 0.4 sin(4 pi (i-1)/(r-1)) + 0.5
    PiDigits,   ///< p_i = (i-th decimal digit of pi) / 10, i = 1..r
    RandomIid,  ///< p_1..p_n i.i.d. uniform on [0,1], redrawn every replication
};

[[nodiscard]] const char* to_string(ScenarioKind kind) noexcept;
/// Accepts the names produced by to_string, case-insensitively.
[[nodiscard]] std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::Constant;
    std::size_t r = 1;  ///< period; number of digits for PiDigits
    double p1 = 0.5;
    double step = 0.01;
    double mean = 0.5;
    double p_lo = 0.4;
    double p_hi = 0.6;
    std::size_t n = 1200;
    std::size_t d = 60;
    double alpha = 0.05;
    std::size_t replications = 20000;
    std::uint64_t seed = 1;

    /// @throws std::invalid_argument on out-of-range settings
    void validate() const;
    /// Period reported in output: 1 for Constant, n for RandomIid, otherwise r.
    [[nodiscard]] std::size_t reported_period() const noexcept;
};

/// First 120 decimal digits of pi (after the decimal point).
inline constexpr std::string_view kPiDigits =
    "141592653589793238462643383279502884197169399375105820974944"
    "592307816406286208998628034825342117067982148086513282306647";

/**
 * @brief Success probabilities for a deterministic scenario.
 *
 * @throws std::invalid_argument for RandomIid (drawn per replication), r < 2 for
 *         Endpoints or Sine, PiDigits with r > 120, or any resulting p outside
 *         [0,1] ("probability outside [0,1]")
 */
[[nodiscard]] PeriodicProfile build_profile(const ScenarioSpec& spec);

/// Y_l ~ Bernoulli(p_{((l-1) mod r)+1}), drawn in order l = 1..n from rng.
[[nodiscard]] BinarySeries simulate_series(const PeriodicProfile& profile, std::size_t n, StreamRng& rng);

/// n probabilities drawn i.i.d. uniform on [0,1] from rng.
[[nodiscard]] PeriodicProfile draw_random_profile(std::size_t n, StreamRng& rng);

struct PowerEstimate {
    ScenarioSpec scenario;
    std::size_t rejections = 0;
    double rate = 0.0;
    double std_error = 0.0;
    double k_alpha_approx = 0.0;  ///< threshold used for rejection
    double k_alpha_exact = 0.0;   ///< reported for comparison
    std::chrono::duration<double> elapsed{};
};

/**
 * @brief Monte Carlo rejection rate of the g test for a scenario.
 *
 * Replication k draws from StreamRng(seed, k): RandomIid first draws its n
 * probabilities, then the series is simulated, folded with d, and rejected iff
 * the statistic exceeds the leading-term critical value. The count does not
 * depend on the number of threads.
 */
[[nodiscard]] PowerEstimate estimate_power(const ScenarioSpec& spec, std::size_t threads = 0);

enum class TableId { T1, T2, T3, T4, T5, PI };

[[nodiscard]] const char* to_string(TableId id) noexcept;
[[nodiscard]] std::optional<TableId> parse_table_id(std::string_view name);

struct TableRow {
    std::string label;  ///< "p1=0.3", "r=12", ...
    PowerEstimate estimate;
};

struct PowerTable {
    TableId id = TableId::T1;
    std::string title;
    std::vector<TableRow> rows;
};

/// Scenario specs making up a table, in row order.
[[nodiscard]] std::vector<ScenarioSpec> table_scenarios(TableId id, std::size_t replications, std::uint64_t seed);

/// Runs every cell of a table. All cells share the seed, so neighbouring rows use common random numbers.
[[nodiscard]] PowerTable run_table(TableId id, std::size_t replications, std::uint64_t seed, std::size_t threads = 0);

inline constexpr std::string_view kPowerCsvHeader = "scenario,r,n,d,alpha,replications,rejections,rate,std_error";

/// One CSV record matching kPowerCsvHeader; rate and std_error use `precision` decimals.
[[nodiscard]] std::string to_csv_row(const PowerEstimate& est, int precision = 4);

}  // namespace bperiod
