#include "gaussint/angular.hpp"

#include <array>
#include <stdexcept>

namespace gaussint {

namespace {

constexpr int kPascalMax = 32;

constexpr std::array<std::array<double, kPascalMax + 1>, kPascalMax + 1> make_pascal() {
    std::array<std::array<double, kPascalMax + 1>, kPascalMax + 1> c{};
    for (int n = 0; n <= kPascalMax; ++n) {
        c[n][0] = 1.0;
        for (int k = 1; k <= n; ++k)
            c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
    }
    return c;
}

constexpr auto kPascal = make_pascal();

}  // namespace

AngularMomentumIndex AngularMomentumIndex::raised(int axis) const {
    AngularMomentumIndex r = *this;
    ++r[axis];
    return r;
}

AngularMomentumIndex AngularMomentumIndex::lowered(int axis) const {
    AngularMomentumIndex r = *this;
    if (r[axis] == 0) throw std::domain_error("angular momentum component decremented below zero");
    --r[axis];
    return r;
}

std::vector<AngularMomentumIndex> enumerate_cartesian_components(int lambda) {
    if (lambda < 0) throw std::domain_error("negative angular momentum");
    std::vector<AngularMomentumIndex> out;
    out.reserve(static_cast<std::size_t>(shell_size(lambda)));
    for (int nx = lambda; nx >= 0; --nx)
        for (int ny = lambda - nx; ny >= 0; --ny)
            out.push_back({nx, ny, lambda - nx - ny});
    return out;
}

const std::vector<AngularMomentumIndex>& cartesian_components(int lambda) {
    constexpr int kCacheMax = 12;
    static const auto cache = [] {
        std::vector<std::vector<AngularMomentumIndex>> c;
        c.reserve(kCacheMax + 1);
        for (int l = 0; l <= kCacheMax; ++l) c.push_back(enumerate_cartesian_components(l));
        return c;
    }();
    if (lambda < 0 || lambda > kCacheMax)
        throw std::domain_error("angular momentum outside cached range");
    return cache[static_cast<std::size_t>(lambda)];
}

double double_factorial(int k) {
    if (k < -1) throw std::domain_error("double factorial defined for k >= -1 only");
    double r = 1.0;
    for (int i = k; i > 1; i -= 2) r *= i;
    return r;
}

double binomial(int n, int k) {
    if (n < 0 || n > kPascalMax) throw std::domain_error("binomial table supports 0 <= n <= 32");
    if (k < 0 || k > n) return 0.0;
    return kPascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace gaussint
