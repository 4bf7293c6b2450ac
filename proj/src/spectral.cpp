#include "bperiod/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace bperiod {

double PeriodogramSet::total() const noexcept {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

SpectralPlan::SpectralPlan(std::size_t d) : d_(d) {
    if (d < 3) {
        throw std::invalid_argument("q would be 0");
    }
    cos_.resize(d);
    sin_.resize(d);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (std::size_t m = 0; m < d; ++m) {
        const double angle = step * static_cast<double>(m);
        cos_[m] = std::cos(angle);
        sin_[m] = std::sin(angle);
    }
}

void SpectralPlan::check_length(std::span<const double> x) const {
    if (x.size() != d_) {
        throw std::invalid_argument("series length does not match plan length d");
    }
}

std::vector<std::complex<double>> SpectralPlan::transform(std::span<const double> x) const {
    check_length(x);
    const std::size_t q = this->q();
    std::vector<std::complex<double>> out(q);
    for (std::size_t j = 1; j <= q; ++j) {
        double re = 0.0;
        double im = 0.0;
        // exponent index (l*j) mod d, advanced incrementally
        std::size_t m = j % d_;
        for (std::size_t l = 0; l < d_; ++l) {
            re += x[l] * cos_[m];
            im -= x[l] * sin_[m];
            m += j;
            if (m >= d_) m -= d_;
        }
        out[j - 1] = {re, im};
    }
    return out;
}

PeriodogramSet SpectralPlan::periodogram(std::span<const double> x) const {
    const auto dft = transform(x);
    PeriodogramSet out;
    out.d = d_;
    out.values.resize(dft.size());
    const auto inv_d = 1.0 / static_cast<double>(d_);
    std::transform(dft.begin(), dft.end(), out.values.begin(),
                   [inv_d](const std::complex<double>& s) { return std::norm(s) * inv_d; });
    return out;
}

double set_A_tolerance(std::span<const double> x) {
    double energy = 0.0;
    for (double v : x) energy += v * v;
    return 1e-12 * static_cast<double>(x.size()) * std::max(1.0, energy);
}

bool SpectralPlan::in_set_A(std::span<const double> x) const {
    return periodogram(x).total() <= set_A_tolerance(x);
}

GStatistic SpectralPlan::fisher_g(std::span<const double> x) const {
    const auto pg = periodogram(x);
    GStatistic g;
    g.q = pg.q();
    const double total = pg.total();
    if (total <= set_A_tolerance(x)) {
        g.degenerate = true;
        return g;
    }
    const double top = *std::max_element(pg.values.begin(), pg.values.end());
    // ties up to rounding go to the smallest j
    const auto it = std::find_if(pg.values.begin(), pg.values.end(),
                                 [top](double v) { return v >= top * (1.0 - 1e-12); });
    g.argmax_j = static_cast<std::size_t>(it - pg.values.begin()) + 1;
    g.value = std::clamp(top / total, 1.0 / static_cast<double>(g.q), 1.0);
    return g;
}

PeriodogramSet periodogram(std::span<const double> x) {
    return SpectralPlan(x.size()).periodogram(x);
}

bool in_set_A(std::span<const double> x) {
    return SpectralPlan(x.size()).in_set_A(x);
}

GStatistic fisher_g(std::span<const double> x) {
    return SpectralPlan(x.size()).fisher_g(x);
}

}  // namespace bperiod
