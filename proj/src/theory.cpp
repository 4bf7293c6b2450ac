#include "bperiod/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bperiod/spectral.hpp"

namespace bperiod {

PeriodicProfile::PeriodicProfile(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("profile must contain at least one probability");
    }
    for (double v : p_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("probability outside [0,1]");
        }
    }
}

std::size_t PeriodicProfile::effective_period() const noexcept {
    const std::size_t r = p_.size();
    for (std::size_t s = 1; s < r; ++s) {
        if (r % s != 0) continue;
        bool periodic = true;
        for (std::size_t i = s; i < r && periodic; ++i) {
            periodic = p_[i] == p_[i - s];
        }
        if (periodic) return s;
    }
    return r;
}

bool PeriodicProfile::has_boundary_probability() const noexcept {
    return std::any_of(p_.begin(), p_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

namespace {

void check_d(std::size_t d) {
    if (d < 3) throw std::invalid_argument("d too small (q would be 0)");
}

// How often each residue c = (i-1 + k d) mod r, k = 0..r-1, occurs. Summing
// count[c] * f(p_c) in index order regroups the defining sum so that indices i
// sharing a coset produce bit-identical results.
std::vector<std::size_t> coset_counts(std::size_t r, std::size_t d, std::size_t i) {
    std::vector<std::size_t> count(r, 0);
    const std::size_t step = d % r;
    std::size_t c = (i - 1) % r;
    for (std::size_t k = 0; k < r; ++k) {
        ++count[c];
        c += step;
        if (c >= r) c -= r;
    }
    return count;
}

template <class F>
double coset_mean(const PeriodicProfile& profile, std::size_t d, std::size_t i, F&& f) {
    const std::size_t r = profile.r();
    const auto count = coset_counts(r, d, i);
    const auto p = profile.p();
    double sum = 0.0;
    for (std::size_t c = 0; c < r; ++c) {
        if (count[c] != 0) sum += static_cast<double>(count[c]) * f(p[c]);
    }
    return sum / static_cast<double>(r);
}

double e_at(const PeriodicProfile& profile, std::size_t d, std::size_t i) {
    return coset_mean(profile, d, i, [](double p) { return p; });
}

std::vector<double> per_index(const PeriodicProfile& profile, std::size_t d, double (*f)(double)) {
    check_d(d);
    std::vector<double> out(d);
    for (std::size_t i = 1; i <= d; ++i) out[i - 1] = coset_mean(profile, d, i, f);
    return out;
}

// floor((d - k) / r) + 1 for k in 1..r, which is zero when k > d.
std::size_t occurrences(std::size_t d, std::size_t r, std::size_t k) {
    return k > d ? 0 : (d - k) / r + 1;
}

bool nearly_constant(std::span<const double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo <= 1e-12 * std::max(1.0, std::max(std::abs(*lo), std::abs(*hi)));
}

}  // namespace

std::vector<double> limits_e(const PeriodicProfile& profile, std::size_t d) {
    return per_index(profile, d, [](double p) { return p; });
}

std::vector<double> limits_v(const PeriodicProfile& profile, std::size_t d) {
    return per_index(profile, d, [](double p) { return p * (1.0 - p); });
}

std::complex<double> detect_sum(const PeriodicProfile& profile, std::size_t d) {
    check_d(d);
    const std::size_t r = profile.r();
    const std::size_t b = std::gcd(r, d);
    // Neumaier summation on each component
    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
    auto add = [](double& s, double& c, double v) {
        const double t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    };
    for (std::size_t k = 1; k <= r; ++k) {
        const auto weight = static_cast<double>(occurrences(d, r, k));
        if (weight == 0.0) continue;
        const double amp = e_at(profile, d, k) * weight;
        // exp(-2 pi i k / b) depends only on k mod b
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k % b) / static_cast<double>(b);
        add(re, re_c, amp * std::cos(angle));
        add(im, im_c, amp * std::sin(angle));
    }
    return {re + re_c, im + im_c};
}

double detect_sum_tolerance(const PeriodicProfile& profile, std::size_t d) {
    check_d(d);
    const std::size_t r = profile.r();
    double total = 0.0;
    for (std::size_t k = 1; k <= r; ++k) total += std::abs(e_at(profile, d, k));
    return 1e-10 * total * static_cast<double>(d / r + 1);
}

AsymptoticSummary detectability(const PeriodicProfile& profile, std::size_t d) {
    check_d(d);
    AsymptoticSummary s;
    s.r = profile.r();
    s.d = d;
    s.b = std::gcd(s.r, d);
    s.e = limits_e(profile, d);
    s.v = limits_v(profile, d);
    s.e_in_A = in_set_A(s.e);
    s.detect_sum = detect_sum(profile, d);
    s.effective_period = profile.effective_period();

    if (s.r >= 3 && s.b > 1) {
        const bool nonzero = std::abs(s.detect_sum) > detect_sum_tolerance(profile, d);
        s.detectability = nonzero ? Detectability::NonZero : Detectability::Inconclusive;
        // With b = 2 the sum measures the alternating component, which the set A admits.
        if (nonzero && s.b >= 3 && s.e_in_A) s.consistent = false;
    }

    if (!s.e_in_A) {
        s.limit_g = fisher_g(s.e).value;
        s.regime = PowerRegime::Consistent;
    } else {
        s.regime = nearly_constant(s.v) ? PowerRegime::NullLike : PowerRegime::R2Limit;
    }

    if (profile.has_boundary_probability()) {
        s.warnings.emplace_back("profile contains a probability of 0 or 1");
    }
    if (s.effective_period < s.r) {
        s.warnings.emplace_back("declared period " + std::to_string(s.r) + " is not minimal; effective period is " +
                                std::to_string(s.effective_period));
    }
    if (s.r > d) {
        s.warnings.emplace_back("period exceeds d; the limits e_i assume r <= d");
    }
    if (s.r >= 3 && s.b == 2 && s.detectability == Detectability::NonZero && s.e_in_A) {
        s.warnings.emplace_back("gcd(r,d) = 2: a nonzero divisor sum only reflects the alternating component");
    }
    if (!s.consistent) {
        s.warnings.emplace_back("nonzero divisor sum but limits lie in the degenerate set");
    }
    return s;
}

PowerRegime predict_power_regime(const PeriodicProfile& profile, std::size_t d) {
    return detectability(profile, d).regime;
}

const char* to_string(PowerRegime regime) noexcept {
    switch (regime) {
        case PowerRegime::NullLike: return "NULL_LIKE";
        case PowerRegime::R2Limit: return "R2_LIMIT";
        case PowerRegime::Consistent: return "CONSISTENT";
    }
    return "UNKNOWN";
}

const char* to_string(Detectability det) noexcept {
    switch (det) {
        case Detectability::NotApplicable: return "not_applicable";
        case Detectability::NonZero: return "nonzero";
        case Detectability::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

}  // namespace bperiod
