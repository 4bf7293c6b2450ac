#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bperiod {

/// Position (1-based) and message describing why a sequence is not a valid binary series.
struct SeriesError {
    std::size_t position;  ///< 1-based index of the offending value, 0 for whole-series errors
    std::string message;
};

/**
 * @brief Checks that every value is 0 or 1.
 *
 * Returns std::nullopt for a valid series. An empty sequence is reported with
 * position 0 and the message "empty series".
 */
[[nodiscard]] std::optional<SeriesError> validate(std::span<const int> values);

/// Ordered 0/1 observations Y_1..Y_n. Immutable once constructed.
class BinarySeries {
public:
    /// @throws std::invalid_argument when validate() rejects the values
    explicit BinarySeries(std::span<const int> values);
    explicit BinarySeries(std::vector<std::uint8_t> bits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    /// 1-based access, matching the indexing used in reports.
    [[nodiscard]] int at(std::size_t i) const;
    [[nodiscard]] std::span<const std::uint8_t> values() const noexcept { return bits_; }
    [[nodiscard]] std::size_t count_ones() const noexcept;

    friend bool operator==(const BinarySeries&, const BinarySeries&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/**
 * @brief The d block means Z_1..Z_d of a binary series.
 *
 * z[i-1] averages Y_i, Y_{i+d}, ..., Y_{i+(blocks-1)d}, where blocks = floor(n/d).
 * The trailing n - d*blocks observations do not enter any mean.
 */
struct FoldedSeries {
    std::vector<double> z;
    std::vector<std::size_t> ones;  ///< ones[i-1] = blocks * z[i-1], kept as exact counts
    std::size_t d = 0;
    std::size_t blocks = 0;
    std::size_t n = 0;

    [[nodiscard]] std::size_t discarded() const noexcept { return n - d * blocks; }
};

/**
 * @brief Folds a binary series of length n into d block means.
 *
 * @throws std::invalid_argument if d < 3 ("d too small (q would be 0)") or
 *         n < d ("series shorter than d")
 */
[[nodiscard]] FoldedSeries fold(const BinarySeries& series, std::size_t d);

}  // namespace bperiod
