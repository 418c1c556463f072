#include "gaussint/boys.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussint {

namespace {

// F_mmax by the all-positive-terms series
//   F_m(T) = exp(-T) * sum_k (2T)^k (2m-1)!! / (2m+2k+1)!!
// stable for any T; term count grows roughly like T.
double series_top(int m, double T, double eps) {
    const double twoT = 2.0 * T;
    double term = 1.0 / (2.0 * m + 1.0);
    double sum = term;
    for (int k = 1; k < 20000; ++k) {
        term *= twoT / (2.0 * m + 2.0 * k + 1.0);
        sum += term;
        if (term < eps * sum) break;
    }
    return std::exp(-T) * sum;
}

// F_mmax for large T: the half-line Gaussian moment minus the exact tail
//   F_m(T) = (2m-1)!!/(2T)^m * sqrt(pi/T)/2  -  integral over [1, inf),
// the tail satisfying tail_m = exp(-T)/(2T) + (2m-1)/(2T) * tail_{m-1}
// with tail_0 = sqrt(pi/T)/2 * erfc(sqrt(T)). The recursion damps for
// m < T + 1/2, which the validated t_switch range guarantees.
double large_t_top(int m, double T) {
    const double sqrtT = std::sqrt(T);
    const double half_sqrt_pi_over_T = 0.5 * std::sqrt(std::numbers::pi / T);
    const double expmT = std::exp(-T);
    const double inv2T = 1.0 / (2.0 * T);
    double head = half_sqrt_pi_over_T;
    double tail = half_sqrt_pi_over_T * std::erfc(sqrtT);
    for (int k = 1; k <= m; ++k) {
        head *= (2.0 * k - 1.0) * inv2T;
        tail = expmT * inv2T + (2.0 * k - 1.0) * inv2T * tail;
    }
    return head - tail;
}

}  // namespace

bool boys_config_valid(const BoysConfig& cfg) {
    return cfg.t_switch >= 20.0 && cfg.t_switch <= 200.0 && cfg.series_epsilon > 0.0 &&
           cfg.series_epsilon <= 1e-10;
}

namespace {
BoysConfig g_default_config{};
}

void set_boys_config(const BoysConfig& cfg) {
    if (!boys_config_valid(cfg)) throw std::domain_error("Boys configuration outside validated range");
    g_default_config = cfg;
}

BoysConfig get_boys_config() { return g_default_config; }

BoysTable boys(int m_max, double T) { return boys(m_max, T, g_default_config); }

BoysTable boys(int m_max, double T, const BoysConfig& cfg) {
    if (!std::isfinite(T) || T < 0.0) throw std::domain_error("Boys argument must be finite and >= 0");
    if (m_max < 0 || m_max > kBoysMaxOrder) throw std::domain_error("Boys order out of supported range");
    if (!boys_config_valid(cfg)) throw std::domain_error("Boys configuration outside validated range");

    BoysTable table;
    table.T = T;
    table.values.assign(static_cast<std::size_t>(m_max) + 1, 0.0);

    if (T == 0.0) {
        for (int m = 0; m <= m_max; ++m) table.values[static_cast<std::size_t>(m)] = 1.0 / (2.0 * m + 1.0);
        return table;
    }

    table.values[static_cast<std::size_t>(m_max)] =
        (T < cfg.t_switch) ? series_top(m_max, T, cfg.series_epsilon) : large_t_top(m_max, T);

    const double expmT = std::exp(-T);
    for (int m = m_max - 1; m >= 0; --m)
        table.values[static_cast<std::size_t>(m)] =
            (2.0 * T * table.values[static_cast<std::size_t>(m) + 1] + expmT) / (2.0 * m + 1.0);
    return table;
}

}  // namespace gaussint
