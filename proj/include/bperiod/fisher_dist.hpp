#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bperiod/spectral.hpp"

namespace bperiod {

/// Largest q for which the alternating tail sum is evaluated; above it tail() uses
/// the leading-term approximation (see tail_is_exact()).
inline constexpr std::size_t kMaxExactQ = 500;

/// Largest q whose binomial coefficients are formed as exact integers.
inline constexpr std::size_t kMaxIntegerBinomialQ = 50;

/**
 * @brief Null tail P(g >= x) of Fisher's g with q frequencies.
 *
 * Evaluates sum_{j=1}^q (-1)^{j+1} C(q,j) (1 - j x)_+^{q-1} in long double with
 * Neumaier compensated summation. Binomials are exact integers for q <= 50 and
 * a running product beyond. When the terms are too large for the cancellation
 * to leave a double-accurate result (x just above 1/q, large q) the sum is
 * redone in 200-digit binary floating point. The result is clamped to [0, 1];
 * x <= 1/q gives 1 and x >= 1 gives 0 (for q = 1, every x <= 1 gives 1). For
 * q > kMaxExactQ the leading term q (1-x)^{q-1} is returned instead.
 *
 * @throws std::invalid_argument if q < 1 ("invalid q")
 */
[[nodiscard]] double tail(std::size_t q, double x);

/// Leading-term approximation min(1, q (1-x)_+^{q-1}) of the tail.
[[nodiscard]] double tail_approx(std::size_t q, double x);

[[nodiscard]] constexpr bool tail_is_exact(std::size_t q) noexcept { return q <= kMaxExactQ; }

/// Exact-tail p-value; 1 for a degenerate statistic.
[[nodiscard]] double p_value(std::size_t q, const GStatistic& g);

/// Leading-term p-value; 1 for a degenerate statistic.
[[nodiscard]] double p_value_approx(std::size_t q, const GStatistic& g);

struct CriticalValue {
    std::size_t q = 0;
    double alpha = 0.0;
    double exact = 0.0;   ///< root of tail(q, x) = alpha on [1/q, 1]
    double approx = 0.0;  ///< root of q (1-x)^{q-1} = alpha
};

/**
 * @brief Critical values of the g test at level alpha.
 *
 * The exact value is found by bisection to |dx| <= 1e-10 (tail is continuous
 * and decreasing on [1/q, 1]). For q = 1 the statistic is identically 1 and
 * both values are 1.
 *
 * @throws std::invalid_argument if q < 1 or alpha is outside (0, 1) ("invalid level")
 */
[[nodiscard]] CriticalValue critical_value(std::size_t q, double alpha);

/**
 * @brief Draws g(w_1 N_1, ..., w_d N_d) for i.i.d. standard normal N_i.
 *
 * Draw k uses StreamRng(seed, k), so the output is identical for any thread
 * count. Degenerate draws (probability zero) are returned as 0.
 *
 * @throws std::invalid_argument if d < 3, count < 1, weights.size() != d, or a
 *         weight is not positive ("invalid weight")
 */
[[nodiscard]] std::vector<double> sample_limit_statistic(std::size_t d, std::span<const double> weights,
                                                         std::size_t count, std::uint64_t seed,
                                                         std::size_t threads = 0);

}  // namespace bperiod
