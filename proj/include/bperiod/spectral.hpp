#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bperiod {

/// Number of Fourier frequencies used by the statistic: q = floor((d-1)/2).
[[nodiscard]] constexpr std::size_t fourier_count(std::size_t d) noexcept {
    return d >= 1 ? (d - 1) / 2 : 0;
}

/// Periodogram ordinates I(w_1)..I(w_q) at w_j = 2*pi*j/d of a length-d series.
struct PeriodogramSet {
    std::vector<double> values;  ///< values[j-1] = I(w_j)
    std::size_t d = 0;

    [[nodiscard]] std::size_t q() const noexcept { return values.size(); }
    [[nodiscard]] double total() const noexcept;
};

/// Fisher's g for a length-d series, with the zero-denominator guard applied.
struct GStatistic {
    double value = 0.0;        ///< 0 when degenerate, otherwise in [1/q, 1]
    std::size_t argmax_j = 1;  ///< smallest maximizing frequency index (1-based)
    bool degenerate = false;   ///< series lies in the set where all I(w_j) vanish
    std::size_t q = 0;
};

/**
 * @brief Precomputed twiddle factors for a fixed series length d.
 *
 * Evaluates the periodogram by direct summation, O(d*q) per call. The plan is
 * immutable and may be shared between threads.
 */
class SpectralPlan {
public:
    /// @throws std::invalid_argument if d < 3 ("q would be 0")
    explicit SpectralPlan(std::size_t d);

    [[nodiscard]] std::size_t d() const noexcept { return d_; }
    [[nodiscard]] std::size_t q() const noexcept { return fourier_count(d_); }

    /// Sum_{l=1}^d x_l exp(-i l w_j) for j = 1..q.
    [[nodiscard]] std::vector<std::complex<double>> transform(std::span<const double> x) const;
    [[nodiscard]] PeriodogramSet periodogram(std::span<const double> x) const;
    [[nodiscard]] bool in_set_A(std::span<const double> x) const;
    [[nodiscard]] GStatistic fisher_g(std::span<const double> x) const;

private:
    void check_length(std::span<const double> x) const;

    std::size_t d_;
    std::vector<double> cos_;  ///< cos(2*pi*m/d), m = 0..d-1
    std::vector<double> sin_;
};

/**
 * Tolerance for membership in the degenerate set, relative to input energy:
 * 1e-12 * d * max(1, sum x_l^2).
 */
[[nodiscard]] double set_A_tolerance(std::span<const double> x);

/// @throws std::invalid_argument if x.size() < 3
[[nodiscard]] PeriodogramSet periodogram(std::span<const double> x);

/// True iff every ordinate at j = 1..q vanishes (up to set_A_tolerance).
[[nodiscard]] bool in_set_A(std::span<const double> x);

/**
 * @brief max_j I(w_j) / sum_m I(w_m), or a degenerate zero when x is in the set A.
 */
[[nodiscard]] GStatistic fisher_g(std::span<const double> x);

}  // namespace bperiod
