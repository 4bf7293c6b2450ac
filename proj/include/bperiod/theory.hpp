#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bperiod {

/// Success probabilities p_1..p_r of one declared period. Each p_i lies in [0, 1].
class PeriodicProfile {
public:
    /// @throws std::invalid_argument if p is empty or any p_i is outside [0, 1]
    explicit PeriodicProfile(std::vector<double> p);

    [[nodiscard]] std::size_t r() const noexcept { return p_.size(); }
    [[nodiscard]] std::span<const double> p() const noexcept { return p_; }
    /// p at a 1-based index of the periodic extension (any i >= 1).
    [[nodiscard]] double at(std::size_t i) const noexcept { return p_[(i - 1) % p_.size()]; }

    /// Smallest s dividing r with p_{i+s} = p_i for all i.
    [[nodiscard]] std::size_t effective_period() const noexcept;
    [[nodiscard]] bool has_boundary_probability() const noexcept;

private:
    std::vector<double> p_;
};

/// e_i = (1/r) sum_{k=0}^{r-1} p_{i+kd}, i = 1..d.
[[nodiscard]] std::vector<double> limits_e(const PeriodicProfile& profile, std::size_t d);

/// v_i = (1/r) sum_{k=0}^{r-1} p_{i+kd} (1 - p_{i+kd}), i = 1..d.
[[nodiscard]] std::vector<double> limits_v(const PeriodicProfile& profile, std::size_t d);

/**
 * Sum_{k=1}^r e_k exp(-2 pi i k / b) (floor((d-k)/r) + 1) with b = gcd(r, d).
 * e_k for k > d is taken from the defining formula.
 */
[[nodiscard]] std::complex<double> detect_sum(const PeriodicProfile& profile, std::size_t d);

/// Zero threshold for detect_sum: 1e-10 * sum_k |e_k| * (floor(d/r) + 1).
[[nodiscard]] double detect_sum_tolerance(const PeriodicProfile& profile, std::size_t d);

enum class Detectability {
    NotApplicable,  ///< r < 3 or b = 1, the nonzero-sum criterion does not apply
    NonZero,        ///< |detect_sum| above tolerance
    Inconclusive,   ///< |detect_sum| at numerical zero
};

enum class PowerRegime {
    NullLike,    ///< e in A and v constant: same limit law as under the null
    R2Limit,     ///< e in A and v non-constant: weighted-normal limit law
    Consistent,  ///< e not in A: statistic converges to g(e)
};

struct AsymptoticSummary {
    std::size_t r = 0;
    std::size_t d = 0;
    std::size_t b = 0;  ///< gcd(r, d)
    std::vector<double> e;
    std::vector<double> v;
    bool e_in_A = false;
    std::complex<double> detect_sum;
    Detectability detectability = Detectability::NotApplicable;
    std::optional<double> limit_g;  ///< g(e) when e is not in A
    /// False only if a nonzero sum with r >= 3 and b >= 3 coexists with e in A.
    bool consistent = true;
    std::size_t effective_period = 0;
    PowerRegime regime = PowerRegime::NullLike;
    std::vector<std::string> warnings;
};

/// @throws std::invalid_argument if d < 3
[[nodiscard]] AsymptoticSummary detectability(const PeriodicProfile& profile, std::size_t d);

/// @throws std::invalid_argument if d < 3
[[nodiscard]] PowerRegime predict_power_regime(const PeriodicProfile& profile, std::size_t d);

[[nodiscard]] const char* to_string(PowerRegime regime) noexcept;
[[nodiscard]] const char* to_string(Detectability det) noexcept;

}  // namespace bperiod
