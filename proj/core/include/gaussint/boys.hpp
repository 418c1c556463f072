#pragma once

#include <vector>

namespace gaussint {

/// Highest Boys order the evaluator is sized and validated for.
inline constexpr int kBoysMaxOrder = 28;

/// Evaluation constants. The defaults are validated; t_switch may be moved
/// anywhere inside [20, 200] without changing any result past tolerance.
struct BoysConfig {
    /// Argument above which the closed-form large-T branch replaces the series.
    double t_switch = 30.0;
    /// Relative term size at which the small-T series is truncated.
    double series_epsilon = 1e-16;
};

/// True iff the configuration lies in the validated range.
bool boys_config_valid(const BoysConfig& cfg);

/// Process-wide default used by the two-argument overload. Set once at
/// startup, before any concurrent evaluation; throws on an invalid config.
void set_boys_config(const BoysConfig& cfg);
BoysConfig get_boys_config();

/// F_0(T)..F_mmax(T) at a fixed argument T, with F_m(T) the integral of
/// t^(2m) exp(-T t^2) over [0, 1]. Strictly decreasing in m for T > 0 and
/// consistent under the downward recursion
/// F_m = (2 T F_{m+1} + exp(-T)) / (2m + 1).
struct BoysTable {
    double T = 0.0;
    std::vector<double> values;

    double operator[](int m) const { return values[static_cast<std::size_t>(m)]; }
    int max_order() const { return static_cast<int>(values.size()) - 1; }
};

/// Evaluate the table. T must be finite and non-negative, 0 <= m_max <= 28.
BoysTable boys(int m_max, double T);
BoysTable boys(int m_max, double T, const BoysConfig& cfg);

}  // namespace gaussint
