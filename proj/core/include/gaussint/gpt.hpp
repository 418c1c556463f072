#pragma once

#include "gaussint/angular.hpp"
#include "gaussint/geometry.hpp"

namespace gaussint {

/// Gaussian Product Theorem data for one primitive pair: the product of two
/// Gaussians on A and B is a single Gaussian of exponent gamma on the
/// composite center P, scaled by the prefactor K = exp(-a1*a2*|AB|^2/gamma).
///
/// Sign convention: PA = P - A and PB = P - B, so that (x - A_x) expands as
/// (x_P + PA_x) with no alternating signs in the binomial prefactors.
struct GaussianPair {
    double gamma = 0.0;  ///< a1 + a2
    Vec3 P;              ///< (a1*A + a2*B) / gamma
    double K = 0.0;      ///< exp(-a1*a2*|AB|^2/gamma), in (0, 1]
    Vec3 PA;             ///< P - A
    Vec3 PB;             ///< P - B
    double AB2 = 0.0;    ///< |A - B|^2
};

GaussianPair make_pair(double alpha1, const Vec3& A, double alpha2, const Vec3& B);

/// Coefficient f_k of x_P^k in (x_P + pa)^l1 (x_P + pb)^l2, as the explicit
/// double sum over binomial pairs. Retained as the test oracle for the
/// single-sum form below.
double binomial_prefactor(int k, int l1, int l2, double pa, double pb);

/// Same coefficient computed as a single sum over q = k+q even,
/// max(-k, k-2*l2) <= q <= min(k, 2*l1-k) in steps of 2. Production form.
double binomial_prefactor_single_sum(int k, int l1, int l2, double pa, double pb);

/// Upper bound on |overlap| of the (unnormalized) primitive pair with
/// component indices n1, n2: K * (pi/gamma)^(3/2) * polynomial moment bound.
/// Feeds the ERI screening estimate.
double pair_overlap_bound(const GaussianPair& pair, const AngularMomentumIndex& n1,
                          const AngularMomentumIndex& n2);

}  // namespace gaussint
