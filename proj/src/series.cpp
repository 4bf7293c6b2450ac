#include "bperiod/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bperiod {

std::optional<SeriesError> validate(std::span<const int> values) {
    if (values.empty()) {
        return SeriesError{0, "empty series"};
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0 && values[i] != 1) {
            return SeriesError{i + 1, "value out of alphabet at position " + std::to_string(i + 1)};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::uint8_t> checked_bits(std::span<const int> values) {
    if (auto err = validate(values)) {
        throw std::invalid_argument(err->message);
    }
    return {values.begin(), values.end()};
}

}  // namespace

BinarySeries::BinarySeries(std::span<const int> values) : bits_(checked_bits(values)) {}

BinarySeries::BinarySeries(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("empty series");
    }
    auto bad = std::find_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; });
    if (bad != bits_.end()) {
        auto pos = static_cast<std::size_t>(bad - bits_.begin()) + 1;
        throw std::invalid_argument("value out of alphabet at position " + std::to_string(pos));
    }
}

int BinarySeries::at(std::size_t i) const {
    if (i == 0 || i > bits_.size()) {
        throw std::out_of_range("series index out of range");
    }
    return bits_[i - 1];
}

std::size_t BinarySeries::count_ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

FoldedSeries fold(const BinarySeries& series, std::size_t d) {
    if (d < 3) {
        throw std::invalid_argument("d too small (q would be 0)");
    }
    const std::size_t n = series.size();
    if (n < d) {
        throw std::invalid_argument("series shorter than d");
    }

    FoldedSeries out;
    out.d = d;
    out.n = n;
    out.blocks = n / d;
    out.ones.assign(d, 0);

    auto bits = series.values();
    for (std::size_t k = 0; k < out.blocks; ++k) {
        const std::size_t base = k * d;
        for (std::size_t i = 0; i < d; ++i) {
            out.ones[i] += bits[base + i];
        }
    }

    out.z.resize(d);
    const auto denom = static_cast<double>(out.blocks);
    for (std::size_t i = 0; i < d; ++i) {
        out.z[i] = static_cast<double>(out.ones[i]) / denom;
    }
    return out;
}

}  // namespace bperiod
