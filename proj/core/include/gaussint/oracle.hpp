#pragma once

#include "gaussint/basis.hpp"
#include "gaussint/eri.hpp"

namespace gaussint::oracle {

/// Reference engines for tests and acceptance runs only. Nothing here may
/// call into the eri module's recurrence paths (os_vrr_class, os_full_class,
/// hrr_transfer, compute_class_contracted); shared inputs are limited to the
/// boys module and the plain geometry/angular types.

/// Primitive ERI class built by repeated application of the differential
/// relation to the closed-form (ss|ss): raising an index on a center is a
/// polynomial in that center's coordinate derivatives, and every derivative
/// of the closed form is propagated analytically through dF_m/dT = -F_{m+1}.
EriClass eri_by_differentiation(double za, const Vec3& A, double zb, const Vec3& B, double zc,
                                const Vec3& C, double zd, const Vec3& D, int la, int lb, int lc,
                                int ld);

/// The same oracle contracted identically to the production drivers, with
/// its own contraction loop and per-component normalization.
EriClass eri_by_differentiation_contracted(const ContractedShell& a, const ContractedShell& b,
                                           const ContractedShell& c, const ContractedShell& d);

enum class OneElectronKind { overlap, kinetic, nuclear };

/// Numerical quadrature of a primitive one-electron integral: Gauss-Hermite
/// tensor grids aligned to the pair's composite center for overlap/kinetic,
/// a spherical radial x angular product grid centered at the nucleus for the
/// nuclear kind. Refines by doubling until two successive estimates agree;
/// throws std::runtime_error when the refinement cap is hit first.
double quadrature_one_electron(OneElectronKind kind, const PrimitiveGaussian& a,
                               const PrimitiveGaussian& b, const Vec3* nucleus = nullptr);

/// (ss|ss) of two concentric s charge clouds with pair exponents zeta_bra
/// and zeta_ket by radial quadrature against the ket cloud's potential.
double eri_ssss_concentric(double zeta_bra, double zeta_ket);

}  // namespace gaussint::oracle
