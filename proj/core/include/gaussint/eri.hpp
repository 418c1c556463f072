#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gaussint/basis.hpp"
#include "gaussint/geometry.hpp"

namespace gaussint {

/// Geometry of one primitive shell quartet (ab|cd): bra pair on A,B with
/// zeta = za + zb, ket pair on C,D with eta = zc + zd, the reduced exponent
/// rho = zeta*eta/(zeta+eta), the exponent-weighted midpoint
/// W = (zeta P + eta Q)/(zeta + eta), and T = rho |PQ|^2.
struct QuartetGeometry {
    double zeta = 0.0;
    Vec3 P, PA, AB;
    double K1 = 0.0;
    double eta = 0.0;
    Vec3 Q, QC, CD;
    double K2 = 0.0;
    double rho = 0.0;
    Vec3 W;
    double T = 0.0;

    /// 2 pi^(5/2) K1 K2 / (zeta eta sqrt(zeta+eta)), the (ss|ss) prefactor.
    double prefactor() const;
};

QuartetGeometry make_quartet(double za, const Vec3& A, double zb, const Vec3& B, double zc,
                             const Vec3& C, double zd, const Vec3& D);

/// Closed-form (ss|ss) over unnormalized primitives: prefactor * F_0(T).
double eri_ssss(const QuartetGeometry& geom);

/// Auxiliary base values (00|00)^(m) = prefactor * F_m(T), m = 0..m_max.
std::vector<double> eri_ssss_aux(const QuartetGeometry& geom, int m_max);

/// A shell quartet's block of integrals in canonical Cartesian component
/// order, flattened [ia][ib][ic][id] row-major.
struct EriClass {
    std::array<int, 4> am{0, 0, 0, 0};
    std::vector<double> values;

    int size(int which) const { return shell_size(am[static_cast<std::size_t>(which)]); }
    double at(int ia, int ib, int ic, int id) const {
        return values[static_cast<std::size_t>(((ia * size(1) + ib) * size(2) + ic) * size(3) + id)];
    }
};

/// Pyramid of [e0|f0] primitive blocks at auxiliary order zero, produced by
/// the vertical recurrence from the (00|00)^(m) base values. Blocks are
/// dense ncart(e) x ncart(f).
struct VrrTable {
    int le_max = 0;
    int lf_max = 0;
    std::vector<std::vector<double>> blocks;  // index e*(lf_max+1)+f

    std::vector<double>& at(int e, int f) {
        return blocks[static_cast<std::size_t>(e * (lf_max + 1) + f)];
    }
    const std::vector<double>& at(int e, int f) const {
        return blocks[static_cast<std::size_t>(e * (lf_max + 1) + f)];
    }
};

VrrTable os_vrr_class(const QuartetGeometry& geom, int le_max, int lf_max);
VrrTable os_vrr_class(const QuartetGeometry& geom, int le_max, int lf_max,
                      std::span<const double> base);

/// Full primitive class by top-down evaluation of the six-term recurrence,
/// memoized within the quartet. Must agree with the VRR+HRR pipeline.
EriClass os_full_class(const QuartetGeometry& geom, int la, int lb, int lc, int ld);
EriClass os_full_class(const QuartetGeometry& geom, int la, int lb, int lc, int ld,
                       std::span<const double> base);

/// Horizontal (transfer) recurrence: builds (ab|cd) from a table of (e0|f0)
/// blocks spanning la <= e <= la+lb, lc <= f <= lc+ld. Prefactors depend on
/// geometry only, so the input may be contracted.
EriClass hrr_transfer(const VrrTable& table, const Vec3& AB, const Vec3& CD, int la, int lb,
                      int lc, int ld);

enum class EriBackend {
    os,         ///< per-primitive full classes, contracted at the end
    hgp,        ///< per-primitive [e0|f0], contract, one transfer per class
    ssss_only,  ///< closed form; s shells only
};

/// Contracted class over four shells, per-component normalization applied.
EriClass compute_class_contracted(const ContractedShell& a, const ContractedShell& b,
                                  const ContractedShell& c, const ContractedShell& d,
                                  EriBackend backend);

/// Rigorous-shape magnitude bound used to skip quartets: the (ss|ss)
/// prefactor structure with per-shell moment factors.
double quartet_bound(const ContractedShell& a, const ContractedShell& b,
                     const ContractedShell& c, const ContractedShell& d);

/// One canonical ERI: i >= j, k >= l, (ij) >= (kl) compound, 0-based.
struct EriRecord {
    std::uint32_t i = 0, j = 0, k = 0, l = 0;
    double value = 0.0;
};

struct EriResult {
    std::vector<EriRecord> records;  ///< canonically ordered, unique
    std::uint64_t quartets_computed = 0;
    std::uint64_t quartets_screened = 0;
};

/// Every unique quadruple once, canonically ordered. Quartets whose bound
/// falls below screen_threshold are skipped (threshold 0 skips nothing).
/// threads = 0 picks hardware concurrency; output is scheduler-independent.
EriResult compute_all(const BasisSet& basis, EriBackend backend, double screen_threshold,
                      int threads = 1);

}  // namespace gaussint
