#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bperiod/series.hpp"
#include "bperiod/simulate.hpp"
#include "bperiod/theory.hpp"

namespace bperiod {

/// Malformed input file. line and column are 1-based; column 0 means the whole line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Series files (format version 1): tokens 0/1 separated by whitespace, commas or
// newlines. Lines whose first non-blank character is '#' are comments.
[[nodiscard]] BinarySeries read_series(std::istream& in);
[[nodiscard]] BinarySeries read_series_file(const std::filesystem::path& path);
/// Writes a version comment followed by `per_line` tokens per line.
void write_series(std::ostream& out, const BinarySeries& series, std::size_t per_line = 60);

// Profile files: one declared period p_1..p_r as real tokens, same separators and comments.
[[nodiscard]] PeriodicProfile read_profile(std::istream& in);
[[nodiscard]] PeriodicProfile read_profile_file(const std::filesystem::path& path);

// Scenario files: `key = value` lines with keys kind, r (alias length), p1, step,
// mean, p_lo, p_hi, n, d, alpha, replications, seed and an optional format = 1.
// Omitted keys keep the ScenarioSpec defaults.
[[nodiscard]] ScenarioSpec read_scenario(std::istream& in);
[[nodiscard]] ScenarioSpec read_scenario_file(const std::filesystem::path& path);
void write_scenario(std::ostream& out, const ScenarioSpec& spec);

}  // namespace bperiod
