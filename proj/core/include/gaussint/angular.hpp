#pragma once

#include <vector>

namespace gaussint {

/// Highest angular momentum handled by the production recursions (g functions).
inline constexpr int kMaxAngularMomentum = 4;

/// Exponent triple (nx, ny, nz) of a Cartesian Gaussian. The sum of the
/// components is the angular momentum ("orbital quantum number") lambda.
struct AngularMomentumIndex {
    int nx = 0;
    int ny = 0;
    int nz = 0;

    int total() const { return nx + ny + nz; }

    int operator[](int axis) const { return axis == 0 ? nx : (axis == 1 ? ny : nz); }
    int& operator[](int axis) { return axis == 0 ? nx : (axis == 1 ? ny : nz); }

    /// Triad arithmetic: n + 1_axis.
    AngularMomentumIndex raised(int axis) const;
    /// Triad arithmetic: n - 1_axis. Throws std::domain_error below zero.
    AngularMomentumIndex lowered(int axis) const;

    friend bool operator==(const AngularMomentumIndex&, const AngularMomentumIndex&) = default;
};

/// Number of Cartesian components of a shell: (lambda+1)(lambda+2)/2.
constexpr int shell_size(int lambda) { return (lambda + 1) * (lambda + 2) / 2; }

/// All component triples of angular momentum lambda in canonical order:
/// lexicographically decreasing in (nx, ny, nz), e.g. for d:
/// (2,0,0),(1,1,0),(1,0,1),(0,2,0),(0,1,1),(0,0,2).
std::vector<AngularMomentumIndex> enumerate_cartesian_components(int lambda);

/// Cached per-lambda component list (lambda <= 12).
const std::vector<AngularMomentumIndex>& cartesian_components(int lambda);

/// Position of a triple within the canonical order of its shell.
constexpr int component_index(int lambda, int nx, int ny) {
    return (lambda - nx) * (lambda - nx + 1) / 2 + (lambda - nx - ny);
}
inline int component_index(const AngularMomentumIndex& n) {
    return component_index(n.total(), n.nx, n.ny);
}

/// k!! with the empty-product conventions (-1)!! = 0!! = 1.
/// Exact for k <= 29; a correctly rounded double beyond that.
double double_factorial(int k);

/// Binomial coefficient from a Pascal-triangle table, n <= 32.
double binomial(int n, int k);

}  // namespace gaussint
