#include "bperiod/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace bperiod {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(column == 0 ? fmt::format("line {}: {}", line, what)
                                     : fmt::format("line {}, column {}: {}", line, column, what)),
      line_(line),
      column_(column) {}

namespace {

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == ',';
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_comment_or_blank(std::string_view line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

// Calls visit(token, line, column) for every token outside comment lines.
void for_each_token(std::istream& in,
                    const std::function<void(std::string_view, std::size_t, std::size_t)>& visit) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_separator(line[i])) ++i;
            const std::size_t begin = i;
            while (i < line.size() && !is_separator(line[i])) ++i;
            if (i > begin) visit(std::string_view(line).substr(begin, i - begin), line_no, begin + 1);
        }
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

double parse_real(std::string_view token, std::size_t line, std::size_t column) {
    const std::string s(token);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw ParseError(line, column, fmt::format("not a number: '{}'", token));
    }
    return v;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
    const std::string s(token);
    char* end = nullptr;
    errno = 0;
    if (s.empty() || s.front() == '-') throw ParseError(line, 0, fmt::format("not a non-negative integer: '{}'", token));
    const auto v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw ParseError(line, 0, fmt::format("not a non-negative integer: '{}'", token));
    }
    return v;
}

}  // namespace

BinarySeries read_series(std::istream& in) {
    std::vector<std::uint8_t> bits;
    for_each_token(in, [&](std::string_view tok, std::size_t line, std::size_t col) {
        if (tok == "0") {
            bits.push_back(0);
        } else if (tok == "1") {
            bits.push_back(1);
        } else {
            throw ParseError(line, col,
                             fmt::format("value out of alphabet at position {}: '{}'", bits.size() + 1, tok));
        }
    });
    if (bits.empty()) throw ParseError(0, 0, "empty series");
    return BinarySeries(std::move(bits));
}

BinarySeries read_series_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_series(in);
}

void write_series(std::ostream& out, const BinarySeries& series, std::size_t per_line) {
    if (per_line == 0) per_line = series.size();
    out << "# binary series v1, n=" << series.size() << '\n';
    const auto bits = series.values();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out << static_cast<int>(bits[i]);
        out << ((i + 1) % per_line == 0 || i + 1 == bits.size() ? '\n' : ' ');
    }
}

PeriodicProfile read_profile(std::istream& in) {
    std::vector<double> p;
    for_each_token(in, [&](std::string_view tok, std::size_t line, std::size_t col) {
        const double v = parse_real(tok, line, col);
        if (!(v >= 0.0 && v <= 1.0)) throw ParseError(line, col, "probability outside [0,1]");
        p.push_back(v);
    });
    if (p.empty()) throw ParseError(0, 0, "empty profile");
    return PeriodicProfile(std::move(p));
}

PeriodicProfile read_profile_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_profile(in);
}

ScenarioSpec read_scenario(std::istream& in) {
    ScenarioSpec spec;
    bool have_kind = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (is_comment_or_blank(raw)) continue;
        const std::string_view line = raw;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, 0, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError(line_no, 0, fmt::format("missing value for '{}'", key));
        const std::size_t col = eq + 2;

        if (key == "format") {
            if (parse_unsigned(value, line_no) != 1) throw ParseError(line_no, 0, "unsupported scenario format");
        } else if (key == "kind") {
            auto kind = parse_scenario_kind(value);
            if (!kind) throw ParseError(line_no, 0, fmt::format("unknown scenario kind '{}'", value));
            spec.kind = *kind;
            have_kind = true;
        } else if (key == "r" || key == "length") {
            spec.r = parse_unsigned(value, line_no);
        } else if (key == "p1") {
            spec.p1 = parse_real(value, line_no, col);
        } else if (key == "step") {
            spec.step = parse_real(value, line_no, col);
        } else if (key == "mean") {
            spec.mean = parse_real(value, line_no, col);
        } else if (key == "p_lo") {
            spec.p_lo = parse_real(value, line_no, col);
        } else if (key == "p_hi") {
            spec.p_hi = parse_real(value, line_no, col);
        } else if (key == "n") {
            spec.n = parse_unsigned(value, line_no);
        } else if (key == "d") {
            spec.d = parse_unsigned(value, line_no);
        } else if (key == "alpha") {
            spec.alpha = parse_real(value, line_no, col);
        } else if (key == "replications") {
            spec.replications = parse_unsigned(value, line_no);
        } else if (key == "seed") {
            spec.seed = parse_unsigned(value, line_no);
        } else {
            throw ParseError(line_no, 0, fmt::format("unknown key '{}'", key));
        }
    }
    if (!have_kind) throw ParseError(line_no, 0, "scenario is missing 'kind'");
    return spec;
}

ScenarioSpec read_scenario_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_scenario(in);
}

void write_scenario(std::ostream& out, const ScenarioSpec& spec) {
    out << "format = 1\n";
    out << "kind = " << to_string(spec.kind) << '\n';
    out << "r = " << spec.r << '\n';
    out << fmt::format("p1 = {}\nstep = {}\nmean = {}\np_lo = {}\np_hi = {}\n", spec.p1, spec.step, spec.mean,
                       spec.p_lo, spec.p_hi);
    out << "n = " << spec.n << "\nd = " << spec.d << '\n';
    out << fmt::format("alpha = {}\n", spec.alpha);
    out << "replications = " << spec.replications << "\nseed = " << spec.seed << '\n';
}

}  // namespace bperiod
