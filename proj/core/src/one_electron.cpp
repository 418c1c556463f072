#include "gaussint/one_electron.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaussint/boys.hpp"

namespace gaussint {

namespace {

double axis_moment(const GaussianPair& pair, int axis, int l1, int l2) {
    const double pa = pair.PA[axis];
    const double pb = pair.PB[axis];
    double sum = 0.0;
    for (int i = 0; 2 * i <= l1 + l2; ++i) {
        double term = binomial_prefactor_single_sum(2 * i, l1, l2, pa, pb) *
                      double_factorial(2 * i - 1);
        for (int k = 0; k < i; ++k) term /= 2.0 * pair.gamma;
        sum += term;
    }
    return sum * std::sqrt(std::numbers::pi / pair.gamma);
}

}  // namespace

ContractedFunction make_function(const ContractedShell& shell, const AngularMomentumIndex& n) {
    if (n.total() != shell.angular_momentum())
        throw std::domain_error("component index does not match the shell's angular momentum");
    return {shell.center(), n, shell.primitives(), contracted_norm(shell.primitives(), n)};
}

ContractedFunction basis_function(const BasisSet& basis, int i) {
    const BasisFunction& f = basis.functions[static_cast<std::size_t>(i)];
    const ContractedShell& shell = basis.shells[static_cast<std::size_t>(f.shell)];
    return {shell.center(), f.index, shell.primitives(), f.norm};
}

double overlap_prim_ss(const GaussianPair& pair) {
    const double root = std::sqrt(std::numbers::pi / pair.gamma);
    return pair.K * root * root * root;
}

double overlap_prim(const GaussianPair& pair, const AngularMomentumIndex& n1,
                    const AngularMomentumIndex& n2) {
    return pair.K * axis_moment(pair, 0, n1.nx, n2.nx) * axis_moment(pair, 1, n1.ny, n2.ny) *
           axis_moment(pair, 2, n1.nz, n2.nz);
}

double kinetic_prim_asym(const GaussianPair& pair, const AngularMomentumIndex& n1,
                         const AngularMomentumIndex& n2, double alpha2) {
    double t = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        const int l2 = n2[axis];
        t += alpha2 * (2 * l2 + 1) * overlap_prim(pair, n1, n2);
        t -= 2.0 * alpha2 * alpha2 * overlap_prim(pair, n1, n2.raised(axis).raised(axis));
        if (l2 >= 2)
            t -= 0.5 * l2 * (l2 - 1) * overlap_prim(pair, n1, n2.lowered(axis).lowered(axis));
    }
    return t;
}

double kinetic_prim_sym(const GaussianPair& pair, const AngularMomentumIndex& n1,
                        const AngularMomentumIndex& n2, double alpha1, double alpha2) {
    double t = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        const int l1 = n1[axis];
        const int l2 = n2[axis];
        t += 2.0 * alpha1 * alpha2 * overlap_prim(pair, n1.raised(axis), n2.raised(axis));
        if (l1 >= 1 && l2 >= 1)
            t += 0.5 * l1 * l2 * overlap_prim(pair, n1.lowered(axis), n2.lowered(axis));
        if (l2 >= 1) t -= alpha1 * l2 * overlap_prim(pair, n1.raised(axis), n2.lowered(axis));
        if (l1 >= 1) t -= alpha2 * l1 * overlap_prim(pair, n1.lowered(axis), n2.raised(axis));
    }
    return t;
}

double nuclear_prim_ss(const GaussianPair& pair, const Vec3& C) {
    const double U = pair.gamma * (pair.P - C).norm2();
    return 2.0 * std::numbers::pi / pair.gamma * pair.K * boys(0, U)[0];
}

double nuclear_prim(const GaussianPair& pair, const AngularMomentumIndex& n1,
                    const AngularMomentumIndex& n2, const Vec3& C) {
    const int la = n1.total();
    const int lb = n2.total();
    const int E = la + lb;
    const Vec3 PC = pair.P - C;
    const Vec3 AB = pair.PB - pair.PA;  // A - B

    // aux[e] holds [e|1/r_C|0]^(m) blocks, m = 0 .. E - e.
    const double base = 2.0 * std::numbers::pi / pair.gamma * pair.K;
    const BoysTable fm = boys(E, pair.gamma * PC.norm2());
    std::vector<std::vector<double>> aux(static_cast<std::size_t>(E) + 1);
    aux[0].resize(static_cast<std::size_t>(E) + 1);
    for (int m = 0; m <= E; ++m) aux[0][static_cast<std::size_t>(m)] = base * fm[m];

    const double inv2g = 1.0 / (2.0 * pair.gamma);
    for (int e = 1; e <= E; ++e) {
        const auto& comps = cartesian_components(e);
        const int mmax = E - e;
        aux[static_cast<std::size_t>(e)].assign(comps.size() * (static_cast<std::size_t>(mmax) + 1), 0.0);
        for (std::size_t ic = 0; ic < comps.size(); ++ic) {
            const AngularMomentumIndex& a = comps[ic];
            const int axis = a.nx > 0 ? 0 : (a.ny > 0 ? 1 : 2);
            const AngularMomentumIndex a1 = a.lowered(axis);
            const int i1 = component_index(a1);
            const int i2 = a1[axis] > 0 ? component_index(a1.lowered(axis)) : -1;
            const auto& lower = aux[static_cast<std::size_t>(e) - 1];
            const std::size_t lw = static_cast<std::size_t>(E - (e - 1)) + 1;
            for (int m = 0; m <= mmax; ++m) {
                double v = pair.PA[axis] * lower[static_cast<std::size_t>(i1) * lw + static_cast<std::size_t>(m)] -
                           PC[axis] * lower[static_cast<std::size_t>(i1) * lw + static_cast<std::size_t>(m) + 1];
                if (i2 >= 0) {
                    const auto& lower2 = aux[static_cast<std::size_t>(e) - 2];
                    const std::size_t lw2 = static_cast<std::size_t>(E - (e - 2)) + 1;
                    v += a1[axis] * inv2g *
                         (lower2[static_cast<std::size_t>(i2) * lw2 + static_cast<std::size_t>(m)] -
                          lower2[static_cast<std::size_t>(i2) * lw2 + static_cast<std::size_t>(m) + 1]);
                }
                aux[static_cast<std::size_t>(e)][ic * (static_cast<std::size_t>(mmax) + 1) +
                                                 static_cast<std::size_t>(m)] = v;
            }
        }
    }

    if (lb == 0) {
        const std::size_t w = static_cast<std::size_t>(E - la) + 1;
        return aux[static_cast<std::size_t>(la)][static_cast<std::size_t>(component_index(n1)) * w];
    }

    // Transfer angular momentum from A to B: (a, b+1_i) = (a+1_i, b) + AB_i (a, b).
    // cur[e] is a block [na(e)][nb(bl)] of physical (m = 0) values.
    std::vector<std::vector<double>> cur(static_cast<std::size_t>(E) + 1);
    for (int e = la; e <= E; ++e) {
        const auto& comps = cartesian_components(e);
        const std::size_t w = static_cast<std::size_t>(E - e) + 1;
        cur[static_cast<std::size_t>(e)].resize(comps.size());
        for (std::size_t ic = 0; ic < comps.size(); ++ic)
            cur[static_cast<std::size_t>(e)][ic] = aux[static_cast<std::size_t>(e)][ic * w];
    }
    for (int bl = 1; bl <= lb; ++bl) {
        const auto& bcomps = cartesian_components(bl);
        std::vector<std::vector<double>> next(static_cast<std::size_t>(E) + 1);
        for (int e = la; e <= E - bl; ++e) {
            const auto& acomps = cartesian_components(e);
            next[static_cast<std::size_t>(e)].assign(acomps.size() * bcomps.size(), 0.0);
            for (std::size_t ib = 0; ib < bcomps.size(); ++ib) {
                const AngularMomentumIndex& b = bcomps[ib];
                const int axis = b.nx > 0 ? 0 : (b.ny > 0 ? 1 : 2);
                const AngularMomentumIndex b1 = b.lowered(axis);
                const std::size_t jb = static_cast<std::size_t>(component_index(b1));
                const std::size_t wprev = static_cast<std::size_t>(shell_size(bl - 1));
                for (std::size_t ia = 0; ia < acomps.size(); ++ia) {
                    const std::size_t up = static_cast<std::size_t>(component_index(acomps[ia].raised(axis)));
                    next[static_cast<std::size_t>(e)][ia * bcomps.size() + ib] =
                        cur[static_cast<std::size_t>(e) + 1][up * wprev + jb] +
                        AB[axis] * cur[static_cast<std::size_t>(e)][ia * wprev + jb];
                }
            }
        }
        cur = std::move(next);
    }
    return cur[static_cast<std::size_t>(la)][static_cast<std::size_t>(component_index(n1)) *
                                                 static_cast<std::size_t>(shell_size(lb)) +
                                             static_cast<std::size_t>(component_index(n2))];
}

namespace {

template <typename F>
double contract_pairs(const ContractedFunction& a, const ContractedFunction& b, F&& prim) {
    double sum = 0.0;
    for (const auto& pa : a.primitives)
        for (const auto& pb : b.primitives) {
            const GaussianPair pair = make_pair(pa.exponent, a.center, pb.exponent, b.center);
            sum += pa.coefficient * pb.coefficient * prim(pair, pa.exponent, pb.exponent);
        }
    return a.norm * b.norm * sum;
}

}  // namespace

double overlap_contracted(const ContractedFunction& a, const ContractedFunction& b) {
    return contract_pairs(a, b, [&](const GaussianPair& p, double, double) {
        return overlap_prim(p, a.index, b.index);
    });
}

double kinetic_contracted(const ContractedFunction& a, const ContractedFunction& b) {
    return contract_pairs(a, b, [&](const GaussianPair& p, double a1, double a2) {
        return kinetic_prim_sym(p, a.index, b.index, a1, a2);
    });
}

double nuclear_contracted(const ContractedFunction& a, const ContractedFunction& b, const Vec3& C) {
    return contract_pairs(a, b, [&](const GaussianPair& p, double, double) {
        return nuclear_prim(p, a.index, b.index, C);
    });
}

OneElectronMatrices build_matrices(const BasisSet& basis, const Molecule& molecule) {
    const int dim = basis.dimension();
    OneElectronMatrices m{SymmetricMatrix(dim), SymmetricMatrix(dim), SymmetricMatrix(dim)};
    std::vector<ContractedFunction> funcs;
    funcs.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) funcs.push_back(basis_function(basis, i));

    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            m.S.set(i, j, overlap_contracted(funcs[static_cast<std::size_t>(i)], funcs[static_cast<std::size_t>(j)]));
            m.T.set(i, j, kinetic_contracted(funcs[static_cast<std::size_t>(i)], funcs[static_cast<std::size_t>(j)]));
            double v = 0.0;
            for (const auto& atom : molecule.atoms())
                v -= atom.charge * nuclear_contracted(funcs[static_cast<std::size_t>(i)],
                                                      funcs[static_cast<std::size_t>(j)], atom.position);
            m.V.set(i, j, v);
        }
    }
    return m;
}

}  // namespace gaussint
