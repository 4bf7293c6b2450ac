#pragma once

#include <cstddef>
#include <string>

#include "bperiod/series.hpp"
#include "bperiod/simulate.hpp"
#include "bperiod/theory.hpp"

namespace bperiod {

enum class Decision { Accept, Reject };

[[nodiscard]] const char* to_string(Decision decision) noexcept;

/// Outcome of the g test on one binary series.
struct TestReport {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t q = 0;
    std::size_t blocks = 0;
    std::size_t discarded = 0;
    double alpha = 0.05;
    double statistic = 0.0;
    bool degenerate = false;
    std::size_t argmax_j = 1;
    double p_exact = 1.0;
    double p_approx = 1.0;
    double k_alpha_exact = 1.0;
    double k_alpha_approx = 1.0;
    Decision decision = Decision::Accept;        ///< statistic > k_alpha_approx
    Decision decision_exact = Decision::Accept;  ///< statistic > k_alpha_exact
    bool exact_tail_capped = false;              ///< q above kMaxExactQ, exact columns use the approximation
};

/**
 * fold -> fisher_g -> p-values and critical values.
 * @throws std::invalid_argument on d < 3, n < d or alpha outside (0, 1)
 */
[[nodiscard]] TestReport run_test(const BinarySeries& series, std::size_t d, double alpha);

/// Decimal places: 4 by default, 17 significant digits with full precision.
struct NumberFormat {
    bool full_precision = false;
};

[[nodiscard]] std::string format_text(const TestReport& report, NumberFormat fmt = {});
[[nodiscard]] std::string csv_header_test();
[[nodiscard]] std::string format_csv(const TestReport& report, NumberFormat fmt = {});
[[nodiscard]] std::string format_json(const TestReport& report);

[[nodiscard]] std::string format_text(const AsymptoticSummary& summary, NumberFormat fmt = {});
[[nodiscard]] std::string format_csv(const AsymptoticSummary& summary, NumberFormat fmt = {});

/// Row per cell with rate, standard error, rejections and elapsed time.
[[nodiscard]] std::string format_text(const PowerTable& table, NumberFormat fmt = {});
/// kPowerCsvHeader followed by one row per cell.
[[nodiscard]] std::string format_csv(const PowerTable& table, NumberFormat fmt = {});

}  // namespace bperiod
