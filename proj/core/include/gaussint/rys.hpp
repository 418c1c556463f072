#pragma once

#include <vector>

#include "gaussint/eri.hpp"

namespace gaussint {

/// An n-point quadrature rule for the weight exp(-T t^2) on [0, 1]: nodes are
/// the positive zeros of the n-th Rys polynomial, strictly increasing inside
/// (0, 1); weights are positive and sum to F_0(T). The rule integrates even
/// powers exactly: sum_i t_i^(2m) W_i = F_m(T) for m <= 2n-1.
struct RysRule {
    int n = 0;
    double T = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Construct the rule from the Boys moments F_0..F_{2n-1}. Supported for
/// 1 <= n <= 10 (sized for the g-function cap).
RysRule rys_rule(int n, double T);

/// (ss|ss) through the one-point rule: the degree-0 integrand makes
/// I = C_0 W_1 = C_0 F_0(T), reproducing the closed form.
double eri_ssss_via_rys(const QuartetGeometry& geom);

}  // namespace gaussint
