#include "gaussint/gpt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaussint/angular.hpp"

namespace gaussint {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

GaussianPair make_pair(double alpha1, const Vec3& A, double alpha2, const Vec3& B) {
    if (alpha1 <= 0.0 || alpha2 <= 0.0) throw std::domain_error("primitive exponents must be positive");
    GaussianPair p;
    p.gamma = alpha1 + alpha2;
    p.P = (alpha1 * A + alpha2 * B) / p.gamma;
    const Vec3 d = B - A;
    p.AB2 = d.norm2();
    p.K = std::exp(-alpha1 * alpha2 * p.AB2 / p.gamma);
    // P - A = (alpha2/gamma)(B - A) exactly; the displacement form avoids the
    // cancellation of subtracting nearby centers and keeps the weighted-center
    // relation alpha1 PA + alpha2 PB = 0 tight.
    const Vec3 s = d / p.gamma;
    p.PA = alpha2 * s;
    p.PB = (-alpha1) * s;
    return p;
}

double binomial_prefactor(int k, int l1, int l2, double pa, double pb) {
    if (l1 < 0 || l2 < 0 || k < 0 || k > l1 + l2)
        throw std::domain_error("binomial prefactor order out of range");
    double f = 0.0;
    const int ilo = std::max(0, k - l2);
    const int ihi = std::min(k, l1);
    for (int i = ilo; i <= ihi; ++i) {
        const int j = k - i;
        f += binomial(l1, i) * binomial(l2, j) * ipow(pa, l1 - i) * ipow(pb, l2 - j);
    }
    return f;
}

double binomial_prefactor_single_sum(int k, int l1, int l2, double pa, double pb) {
    if (l1 < 0 || l2 < 0 || k < 0 || k > l1 + l2)
        throw std::domain_error("binomial prefactor order out of range");
    // Both bound candidates share the parity of k, so the first admissible q
    // already has k+q even.
    const int qlo = std::max(-k, k - 2 * l2);
    const int qhi = std::min(k, 2 * l1 - k);
    double f = 0.0;
    for (int q = qlo; q <= qhi; q += 2) {
        const int i = (k + q) / 2;
        const int j = (k - q) / 2;
        f += binomial(l1, i) * binomial(l2, j) * ipow(pa, l1 - i) * ipow(pb, l2 - j);
    }
    return f;
}

double pair_overlap_bound(const GaussianPair& pair, const AngularMomentumIndex& n1,
                          const AngularMomentumIndex& n2) {
    const double root = std::sqrt(std::numbers::pi / pair.gamma);
    double bound = pair.K * root * root * root;
    // Per-axis moment bound: sum of f_2i (2i-1)!!/(2 gamma)^i over the even
    // powers, with |PA|,|PB| componentwise absolute values so every term
    // dominates its signed counterpart.
    for (int axis = 0; axis < 3; ++axis) {
        const int l1 = n1[axis];
        const int l2 = n2[axis];
        const double pa = std::abs(pair.PA[axis]);
        const double pb = std::abs(pair.PB[axis]);
        double m = 0.0;
        for (int i = 0; 2 * i <= l1 + l2; ++i)
            m += binomial_prefactor(2 * i, l1, l2, pa, pb) * double_factorial(2 * i - 1) /
                 ipow(2.0 * pair.gamma, i);
        bound *= m;
    }
    return bound;
}

}  // namespace gaussint
