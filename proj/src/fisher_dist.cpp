#include "bperiod/fisher_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bperiod/parallel.hpp"
#include "bperiod/rng.hpp"

namespace bperiod {

namespace {

void check_q(std::size_t q) {
    if (q < 1) throw std::invalid_argument("invalid q");
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(long double v) noexcept {
        const long double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] long double value() const noexcept { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

struct LongDoubleSum {
    long double value = 0.0L;
    long double magnitude = 0.0L;  ///< sum of |term|
};

// Near x = 1/q the sum cancels terms many orders of magnitude larger than the
// result, so terms are formed in extended precision.
LongDoubleSum alternating_tail_ld(std::size_t q, long double x) {
    const auto power = static_cast<long double>(q - 1);
    CompensatedSum sum;
    long double magnitude = 0.0L;
    std::uint64_t int_binom = 1;
    long double binom = 1.0L;
    for (std::size_t j = 1; j <= q; ++j) {
        if (q <= kMaxIntegerBinomialQ) {
            int_binom = int_binom * (q - j + 1) / j;  // exact: C(q,j-1)(q-j+1) is divisible by j
            binom = static_cast<long double>(int_binom);
        } else {
            // running product; lgamma-based binomials lose ~1e-17 relative per term,
            // which the cancellation amplifies to ~1e-10 absolute by q = 70
            binom = binom * static_cast<long double>(q - j + 1) / static_cast<long double>(j);
        }
        const long double base = 1.0L - static_cast<long double>(j) * x;
        if (base <= 0.0L) break;
        const long double term = binom * std::pow(base, power);
        magnitude += term;
        sum.add(j % 2 == 1 ? term : -term);
    }
    return {sum.value(), magnitude};
}

// Same sum in 200 significant digits. sum |term| <= 2^q < 1e151 for q <= 500,
// which leaves ~50 digits after cancellation.
double alternating_tail_mp(std::size_t q, double x) {
    using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    const Wide xw(x);
    Wide sum = 0;
    Wide binom = 1;
    for (std::size_t j = 1; j <= q; ++j) {
        binom = binom * static_cast<unsigned>(q - j + 1) / static_cast<unsigned>(j);
        const Wide base = 1 - static_cast<unsigned>(j) * xw;
        if (base <= 0) break;
        const Wide term = binom * boost::multiprecision::pow(base, static_cast<int>(q - 1));
        if (j % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return static_cast<double>(sum);
}

double alternating_tail(std::size_t q, double x) {
    const auto ld = alternating_tail_ld(q, static_cast<long double>(x));
    // worst-case rounding of the terms, a few ulps of long double each
    const long double error = ld.magnitude * 8.0L * std::numeric_limits<long double>::epsilon();
    if (error <= 1e-17L) return static_cast<double>(ld.value);
    return alternating_tail_mp(q, x);
}

}  // namespace

double tail_approx(std::size_t q, double x) {
    check_q(q);
    if (q == 1) return x <= 1.0 ? 1.0 : 0.0;
    if (x >= 1.0) return 0.0;
    const double base = std::max(0.0, 1.0 - x);
    return std::clamp(static_cast<double>(q) * std::pow(base, static_cast<double>(q - 1)), 0.0, 1.0);
}

double tail(std::size_t q, double x) {
    check_q(q);
    // q = 1: the statistic is identically 1
    if (q == 1) return x <= 1.0 ? 1.0 : 0.0;
    if (x >= 1.0) return 0.0;
    if (x * static_cast<double>(q) <= 1.0) return 1.0;
    if (!tail_is_exact(q)) return tail_approx(q, x);
    return std::clamp(alternating_tail(q, x), 0.0, 1.0);
}

double p_value(std::size_t q, const GStatistic& g) {
    check_q(q);
    return g.degenerate ? 1.0 : tail(q, g.value);
}

double p_value_approx(std::size_t q, const GStatistic& g) {
    check_q(q);
    return g.degenerate ? 1.0 : tail_approx(q, g.value);
}

CriticalValue critical_value(std::size_t q, double alpha) {
    check_q(q);
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("invalid level");
    }
    CriticalValue cv{q, alpha, 1.0, 1.0};
    if (q == 1) return cv;

    cv.approx = 1.0 - std::pow(alpha / static_cast<double>(q), 1.0 / static_cast<double>(q - 1));

    double lo = 1.0 / static_cast<double>(q);  // tail = 1 > alpha
    double hi = 1.0;                           // tail = 0 < alpha
    // Run past the 1e-10 requirement until the bracket stops shrinking.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (tail(q, mid) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    cv.exact = 0.5 * (lo + hi);
    return cv;
}

std::vector<double> sample_limit_statistic(std::size_t d, std::span<const double> weights, std::size_t count,
                                           std::uint64_t seed, std::size_t threads) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    if (weights.size() != d) throw std::invalid_argument("weights must have length d");
    if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
        throw std::invalid_argument("invalid weight");
    }
    const SpectralPlan plan(d);

    std::vector<double> out(count);
    parallel_for(count, threads, [&](std::size_t k) {
        StreamRng rng(seed, k);
        std::vector<double> x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = weights[i] * rng.normal();
        out[k] = plan.fisher_g(x).value;
    });
    return out;
}

}  // namespace bperiod
