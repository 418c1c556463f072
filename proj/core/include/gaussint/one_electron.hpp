#pragma once

#include <vector>

#include "gaussint/basis.hpp"
#include "gaussint/gpt.hpp"

namespace gaussint {

/// Dense symmetric matrix stored as the packed lower triangle.
class SymmetricMatrix {
  public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int dimension)
        : dim_(dimension),
          data_(static_cast<std::size_t>(dimension) * (dimension + 1) / 2, 0.0) {}

    int dimension() const { return dim_; }
    double at(int i, int j) const { return data_[pack(i, j)]; }
    void set(int i, int j, double v) { data_[pack(i, j)] = v; }
    const std::vector<double>& packed() const { return data_; }

  private:
    static std::size_t pack(int i, int j) {
        if (i < j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }
    int dim_ = 0;
    std::vector<double> data_;
};

/// One normalized Cartesian basis function, flattened out of its shell.
struct ContractedFunction {
    Vec3 center;
    AngularMomentumIndex index;
    std::vector<PrimitiveWeight> primitives;
    double norm = 1.0;
};

ContractedFunction make_function(const ContractedShell& shell, const AngularMomentumIndex& n);
ContractedFunction basis_function(const BasisSet& basis, int i);

/// Overlap of two unnormalized s primitives: K (pi/gamma)^(3/2).
double overlap_prim_ss(const GaussianPair& pair);

/// Overlap of two unnormalized primitives of arbitrary angular momentum.
double overlap_prim(const GaussianPair& pair, const AngularMomentumIndex& n1,
                    const AngularMomentumIndex& n2);

/// Kinetic-energy integral over unnormalized primitives, asymmetric form:
/// per axis, a2(2 l2 + 1) <0|0> - 2 a2^2 <0|+2> - l2(l2-1)/2 <0|-2>.
double kinetic_prim_asym(const GaussianPair& pair, const AngularMomentumIndex& n1,
                         const AngularMomentumIndex& n2, double alpha2);

/// Kinetic-energy integral, symmetric form: per axis,
/// l1 l2/2 <-1|-1> + 2 a1 a2 <+1|+1> - a1 l2 <+1|-1> - a2 l1 <-1|+1>.
/// Identical value to the asymmetric form; the default production backend.
double kinetic_prim_sym(const GaussianPair& pair, const AngularMomentumIndex& n1,
                        const AngularMomentumIndex& n2, double alpha1, double alpha2);

/// <a|1/r_C|b> for two unnormalized s primitives: (2 pi K/gamma) F_0(gamma |PC|^2).
/// Positive; the -Z factor is applied by the matrix driver.
double nuclear_prim_ss(const GaussianPair& pair, const Vec3& C);

/// <a|1/r_C|b> for arbitrary angular momentum via the one-electron vertical
/// recurrence on center A seeded by (2 pi K/gamma) F_m(gamma |PC|^2), plus a
/// geometry-only transfer to center B.
double nuclear_prim(const GaussianPair& pair, const AngularMomentumIndex& n1,
                    const AngularMomentumIndex& n2, const Vec3& C);

double overlap_contracted(const ContractedFunction& a, const ContractedFunction& b);
double kinetic_contracted(const ContractedFunction& a, const ContractedFunction& b);
double nuclear_contracted(const ContractedFunction& a, const ContractedFunction& b, const Vec3& C);

struct OneElectronMatrices {
    SymmetricMatrix S;  ///< overlap (dimensionless)
    SymmetricMatrix T;  ///< kinetic energy (hartree)
    SymmetricMatrix V;  ///< nuclear attraction, -sum_C Z_C <i|1/r_C|j> (hartree)
};

OneElectronMatrices build_matrices(const BasisSet& basis, const Molecule& molecule);

}  // namespace gaussint
