#include "gaussint/oracle.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gaussint/boys.hpp"

namespace gaussint::oracle {

namespace {

// ---------------------------------------------------------------------------
// Derivative tables for the closed-form (ss|ss).
//
// With u = AB_d, v = CD_d, w = PQ_d the closed form factorizes as
//   (ss|ss) = c0 * prod_d e^(-b1 u_d^2) * prod_d e^(-b2 v_d^2) * F_0(rho |w|^2)
// and the center-coordinate derivatives are constant-coefficient
// combinations of d/du, d/dv, d/dw, so every mixed partial is a product of
// one-dimensional Gaussian-derivative values and one entry of the Boys-kernel
// derivative table below.
// ---------------------------------------------------------------------------

// p-th derivative values of exp(-b x^2) at x, p = 0..pmax (Leibniz on
// f' = -2 b x f).
std::vector<double> gaussian_derivatives(double b, double x, int pmax) {
    std::vector<double> g(static_cast<std::size_t>(pmax) + 1);
    g[0] = std::exp(-b * x * x);
    for (int p = 0; p <= pmax - 1; ++p)
        g[static_cast<std::size_t>(p) + 1] =
            -2.0 * b * (x * g[static_cast<std::size_t>(p)] +
                        (p > 0 ? p * g[static_cast<std::size_t>(p) - 1] : 0.0));
    return g;
}

// Mixed derivatives d^t/dwx d^u/dwy d^v/dwz of F_m(rho |w|^2), derived from
// dF_m/dT = -F_{m+1} and Leibniz; stored for all auxiliary orders m so the
// recursion closes.
class BoysKernelDerivatives {
  public:
    BoysKernelDerivatives(double rho, const Vec3& PQ, int order) : order_(order), dim_(order + 1) {
        const BoysTable fm = boys(order, rho * PQ.norm2());
        table_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_ * dim_, 0.0);
        for (int m = 0; m <= order; ++m) at(m, 0, 0, 0) = fm[m];
        for (int total = 1; total <= order; ++total) {
            for (int t = 0; t <= total; ++t)
                for (int u = 0; u + t <= total; ++u) {
                    const int v = total - t - u;
                    for (int m = 0; m + total <= order; ++m) {
                        double val = 0.0;
                        if (t > 0) {
                            val = -2.0 * rho * PQ[0] * at(m + 1, t - 1, u, v);
                            if (t > 1) val += -2.0 * rho * (t - 1) * at(m + 1, t - 2, u, v);
                        } else if (u > 0) {
                            val = -2.0 * rho * PQ[1] * at(m + 1, t, u - 1, v);
                            if (u > 1) val += -2.0 * rho * (u - 1) * at(m + 1, t, u - 2, v);
                        } else {
                            val = -2.0 * rho * PQ[2] * at(m + 1, t, u, v - 1);
                            if (v > 1) val += -2.0 * rho * (v - 1) * at(m + 1, t, u, v - 2);
                        }
                        at(m, t, u, v) = val;
                    }
                }
        }
    }

    double physical(int t, int u, int v) const { return at_c(0, t, u, v); }

  private:
    double& at(int m, int t, int u, int v) {
        return table_[static_cast<std::size_t>(((m * dim_ + t) * dim_ + u) * dim_ + v)];
    }
    double at_c(int m, int t, int u, int v) const {
        return table_[static_cast<std::size_t>(((m * dim_ + t) * dim_ + u) * dim_ + v)];
    }
    int order_;
    int dim_;
    std::vector<double> table_;
};

// Coefficients of the index-raising operator: a Cartesian index n on a
// center of exponent z equals sum_k W[n][k] (d/dR)^k applied to the s
// function, from phi(n+1) = (1/2z)(d/dR phi(n)) + (n/2z) phi(n-1).
std::vector<std::vector<double>> raising_polynomial(double z, int nmax) {
    std::vector<std::vector<double>> W(static_cast<std::size_t>(nmax) + 1);
    W[0] = {1.0};
    if (nmax == 0) return W;
    const double inv2z = 1.0 / (2.0 * z);
    W[1] = {0.0, inv2z};
    for (int n = 1; n < nmax; ++n) {
        auto& next = W[static_cast<std::size_t>(n) + 1];
        next.assign(static_cast<std::size_t>(n) + 2, 0.0);
        for (int k = 0; k <= n; ++k) next[static_cast<std::size_t>(k) + 1] += inv2z * W[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        for (int k = 0; k < n; ++k) next[static_cast<std::size_t>(k)] += n * inv2z * W[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
    }
    return W;
}

// Bivariate operator polynomial over (d/dpair-diff, d/dPQ): coefficients of
// (c1 dG + c2 dW)^k accumulated over the raising polynomial of one center.
// grid[p][q] with p the pair-diff order and q the PQ order.
std::vector<std::vector<double>> center_operator(const std::vector<double>& raise, double c1,
                                                 double c2) {
    const int n = static_cast<int>(raise.size()) - 1;
    std::vector<std::vector<double>> out(static_cast<std::size_t>(n) + 1,
                                         std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
    for (int k = 0; k <= n; ++k) {
        const double wk = raise[static_cast<std::size_t>(k)];
        if (wk == 0.0) continue;
        for (int p = 0; p <= k; ++p) {
            double c = wk;
            for (int t = 0; t < p; ++t) c *= c1;
            for (int t = 0; t < k - p; ++t) c *= c2;
            out[static_cast<std::size_t>(p)][static_cast<std::size_t>(k - p)] +=
                c * static_cast<double>(gaussint::binomial(k, p));
        }
    }
    return out;
}

std::vector<std::vector<double>> convolve2(const std::vector<std::vector<double>>& x,
                                           const std::vector<std::vector<double>>& y) {
    const std::size_t px = x.size(), qx = x[0].size();
    const std::size_t py = y.size(), qy = y[0].size();
    std::vector<std::vector<double>> out(px + py - 1, std::vector<double>(qx + qy - 1, 0.0));
    for (std::size_t i = 0; i < px; ++i)
        for (std::size_t j = 0; j < qx; ++j) {
            if (x[i][j] == 0.0) continue;
            for (std::size_t k = 0; k < py; ++k)
                for (std::size_t l = 0; l < qy; ++l) out[i + k][j + l] += x[i][j] * y[k][l];
        }
    return out;
}

struct QuartetFrame {
    double zeta, eta, rho, c0, b1, b2;
    Vec3 AB, CD, PQ;
    double za, zb, zc, zd;
};

QuartetFrame make_frame(double za, const Vec3& A, double zb, const Vec3& B, double zc,
                        const Vec3& C, double zd, const Vec3& D) {
    QuartetFrame f;
    f.za = za;
    f.zb = zb;
    f.zc = zc;
    f.zd = zd;
    f.zeta = za + zb;
    f.eta = zc + zd;
    f.rho = f.zeta * f.eta / (f.zeta + f.eta);
    f.AB = A - B;
    f.CD = C - D;
    const Vec3 P = (za * A + zb * B) / f.zeta;
    const Vec3 Q = (zc * C + zd * D) / f.eta;
    f.PQ = P - Q;
    f.b1 = za * zb / f.zeta;
    f.b2 = zc * zd / f.eta;
    constexpr double two_pi_to_5_2 = 2.0 * 17.493418327624862846262821679872;
    f.c0 = two_pi_to_5_2 / (f.zeta * f.eta * std::sqrt(f.zeta + f.eta));
    return f;
}

}  // namespace

EriClass eri_by_differentiation(double za, const Vec3& A, double zb, const Vec3& B, double zc,
                                const Vec3& C, double zd, const Vec3& D, int la, int lb, int lc,
                                int ld) {
    const QuartetFrame f = make_frame(za, A, zb, B, zc, C, zd, D);
    const int order = la + lb + lc + ld;

    const BoysKernelDerivatives R(f.rho, f.PQ, order);
    std::array<std::vector<double>, 3> E1, E2;
    for (int d = 0; d < 3; ++d) {
        E1[static_cast<std::size_t>(d)] = gaussian_derivatives(f.b1, f.AB[d], la + lb);
        E2[static_cast<std::size_t>(d)] = gaussian_derivatives(f.b2, f.CD[d], lc + ld);
    }

    const auto WA = raising_polynomial(za, la);
    const auto WB = raising_polynomial(zb, lb);
    const auto WC = raising_polynomial(zc, lc);
    const auto WD = raising_polynomial(zd, ld);

    // Per-direction derivative weights of the bra/ket Gaussian factors as a
    // function of the residual PQ-derivative order.
    auto direction_weights = [&](int d, int na, int nb, int nc, int nd) {
        const auto bra = convolve2(center_operator(WA[static_cast<std::size_t>(na)], 1.0, za / f.zeta),
                                   center_operator(WB[static_cast<std::size_t>(nb)], -1.0, zb / f.zeta));
        const auto ket = convolve2(center_operator(WC[static_cast<std::size_t>(nc)], 1.0, -zc / f.eta),
                                   center_operator(WD[static_cast<std::size_t>(nd)], -1.0, -zd / f.eta));
        std::vector<double> vb(bra[0].size(), 0.0);
        for (std::size_t p = 0; p < bra.size(); ++p)
            for (std::size_t q = 0; q < bra[p].size(); ++q)
                vb[q] += bra[p][q] * E1[static_cast<std::size_t>(d)][p];
        std::vector<double> vk(ket[0].size(), 0.0);
        for (std::size_t r = 0; r < ket.size(); ++r)
            for (std::size_t s = 0; s < ket[r].size(); ++s)
                vk[s] += ket[r][s] * E2[static_cast<std::size_t>(d)][r];
        std::vector<double> v(vb.size() + vk.size() - 1, 0.0);
        for (std::size_t q = 0; q < vb.size(); ++q)
            for (std::size_t s = 0; s < vk.size(); ++s) v[q + s] += vb[q] * vk[s];
        return v;
    };

    EriClass cls;
    cls.am = {la, lb, lc, ld};
    cls.values.resize(static_cast<std::size_t>(shell_size(la)) * shell_size(lb) * shell_size(lc) *
                      shell_size(ld));
    const auto& as = cartesian_components(la);
    const auto& bs = cartesian_components(lb);
    const auto& cs = cartesian_components(lc);
    const auto& ds = cartesian_components(ld);
    std::size_t idx = 0;
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& c : cs)
                for (const auto& d : ds) {
                    const auto vx = direction_weights(0, a.nx, b.nx, c.nx, d.nx);
                    const auto vy = direction_weights(1, a.ny, b.ny, c.ny, d.ny);
                    const auto vz = direction_weights(2, a.nz, b.nz, c.nz, d.nz);
                    double sum = 0.0;
                    for (std::size_t qx = 0; qx < vx.size(); ++qx) {
                        if (vx[qx] == 0.0) continue;
                        for (std::size_t qy = 0; qy < vy.size(); ++qy) {
                            if (vy[qy] == 0.0) continue;
                            for (std::size_t qz = 0; qz < vz.size(); ++qz) {
                                if (vz[qz] == 0.0) continue;
                                sum += vx[qx] * vy[qy] * vz[qz] *
                                       R.physical(static_cast<int>(qx), static_cast<int>(qy),
                                                  static_cast<int>(qz));
                            }
                        }
                    }
                    cls.values[idx++] = f.c0 * sum;
                }
    return cls;
}

EriClass eri_by_differentiation_contracted(const ContractedShell& a, const ContractedShell& b,
                                           const ContractedShell& c, const ContractedShell& d) {
    const int la = a.angular_momentum(), lb = b.angular_momentum();
    const int lc = c.angular_momentum(), ld = d.angular_momentum();
    EriClass cls;
    cls.am = {la, lb, lc, ld};
    cls.values.assign(static_cast<std::size_t>(shell_size(la)) * shell_size(lb) * shell_size(lc) *
                          shell_size(ld),
                      0.0);
    for (const auto& pa : a.primitives())
        for (const auto& pb : b.primitives())
            for (const auto& pc : c.primitives())
                for (const auto& pd : d.primitives()) {
                    const double w = pa.coefficient * pb.coefficient * pc.coefficient * pd.coefficient;
                    const EriClass prim =
                        eri_by_differentiation(pa.exponent, a.center(), pb.exponent, b.center(),
                                               pc.exponent, c.center(), pd.exponent, d.center(),
                                               la, lb, lc, ld);
                    for (std::size_t i = 0; i < cls.values.size(); ++i)
                        cls.values[i] += w * prim.values[i];
                }

    std::array<std::vector<double>, 4> norms;
    const std::array<const ContractedShell*, 4> shells{&a, &b, &c, &d};
    for (std::size_t s = 0; s < 4; ++s)
        for (const auto& n : cartesian_components(shells[s]->angular_momentum()))
            norms[s].push_back(contracted_norm(shells[s]->primitives(), n));
    std::size_t idx = 0;
    for (double fa : norms[0])
        for (double fb : norms[1])
            for (double fc : norms[2])
                for (double fd : norms[3]) cls.values[idx++] *= fa * fb * fc * fd;
    return cls;
}

// ---------------------------------------------------------------------------
// Quadrature oracles.
// ---------------------------------------------------------------------------

namespace {

struct Rule1d {
    std::vector<double> nodes, weights;
};

// Gauss rules from the symmetric tridiagonal Jacobi matrices.
Rule1d jacobi_rule(int n, const std::vector<double>& offdiag, double mu0) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        jac(k, k + 1) = offdiag[static_cast<std::size_t>(k)];
        jac(k + 1, k) = offdiag[static_cast<std::size_t>(k)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    Rule1d r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double q0 = es.eigenvectors()(0, i);
        r.weights[static_cast<std::size_t>(i)] = mu0 * q0 * q0;
    }
    return r;
}

const Rule1d& hermite_rule(int n) {
    static std::mutex mu;
    static std::map<int, Rule1d> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> off;
    for (int k = 1; k < n; ++k) off.push_back(std::sqrt(0.5 * k));
    return cache.emplace(n, jacobi_rule(n, off, std::sqrt(std::numbers::pi))).first->second;
}

const Rule1d& legendre_rule(int n) {
    static std::mutex mu;
    static std::map<int, Rule1d> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> off;
    for (int k = 1; k < n; ++k) off.push_back(k / std::sqrt(4.0 * k * k - 1.0));
    return cache.emplace(n, jacobi_rule(n, off, 2.0)).first->second;
}

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

double poly_part(const PrimitiveGaussian& g, const Vec3& r) {
    return ipow(r[0] - g.center[0], g.index.nx) * ipow(r[1] - g.center[1], g.index.ny) *
           ipow(r[2] - g.center[2], g.index.nz);
}

// Laplacian of b at r divided by the Gaussian factor exp(-alpha |r-B|^2):
// per axis l(l-1)u^(l-2) - 2a(2l+1)u^l + 4a^2 u^(l+2), times the other axes.
double laplacian_poly(const PrimitiveGaussian& g, const Vec3& r) {
    std::array<double, 3> u{r[0] - g.center[0], r[1] - g.center[1], r[2] - g.center[2]};
    std::array<int, 3> l{g.index.nx, g.index.ny, g.index.nz};
    const double a = g.exponent;
    double sum = 0.0;
    for (int d = 0; d < 3; ++d) {
        double axis = -2.0 * a * (2 * l[static_cast<std::size_t>(d)] + 1) *
                          ipow(u[static_cast<std::size_t>(d)], l[static_cast<std::size_t>(d)]) +
                      4.0 * a * a * ipow(u[static_cast<std::size_t>(d)], l[static_cast<std::size_t>(d)] + 2);
        if (l[static_cast<std::size_t>(d)] >= 2)
            axis += l[static_cast<std::size_t>(d)] * (l[static_cast<std::size_t>(d)] - 1) *
                    ipow(u[static_cast<std::size_t>(d)], l[static_cast<std::size_t>(d)] - 2);
        double rest = 1.0;
        for (int o = 0; o < 3; ++o)
            if (o != d) rest *= ipow(u[static_cast<std::size_t>(o)], l[static_cast<std::size_t>(o)]);
        sum += axis * rest;
    }
    return sum;
}

struct PassResult {
    double value = 0.0;
    double magnitude = 0.0;  ///< sum of |weighted integrand|, the natural zero scale
};

PassResult hermite_pass(OneElectronKind kind, const PrimitiveGaussian& a,
                        const PrimitiveGaussian& b, int npoints) {
    const double gamma = a.exponent + b.exponent;
    const Vec3 P = (a.exponent * a.center + b.exponent * b.center) / gamma;
    const double inv_sqrt_gamma = 1.0 / std::sqrt(gamma);
    const Rule1d& rule = hermite_rule(npoints);

    PassResult res;
    for (std::size_t ix = 0; ix < rule.nodes.size(); ++ix)
        for (std::size_t iy = 0; iy < rule.nodes.size(); ++iy)
            for (std::size_t iz = 0; iz < rule.nodes.size(); ++iz) {
                const double sx = rule.nodes[ix], sy = rule.nodes[iy], sz = rule.nodes[iz];
                const Vec3 r = P + Vec3{sx, sy, sz} * inv_sqrt_gamma;
                const double expo = -a.exponent * (r - a.center).norm2() -
                                    b.exponent * (r - b.center).norm2() + sx * sx + sy * sy + sz * sz;
                double h = poly_part(a, r) * std::exp(expo);
                h *= (kind == OneElectronKind::overlap) ? poly_part(b, r) : -0.5 * laplacian_poly(b, r);
                const double w = rule.weights[ix] * rule.weights[iy] * rule.weights[iz];
                res.value += w * h;
                res.magnitude += std::abs(w * h);
            }
    const double jac = inv_sqrt_gamma * inv_sqrt_gamma * inv_sqrt_gamma;
    res.value *= jac;
    res.magnitude *= jac;
    return res;
}

PassResult spherical_pass(const PrimitiveGaussian& a, const PrimitiveGaussian& b, const Vec3& C,
                          int nr, int ntheta) {
    const double rmax = std::max((a.center - C).norm() + std::sqrt(75.0 / a.exponent),
                                 (b.center - C).norm() + std::sqrt(75.0 / b.exponent));
    const Rule1d& radial = legendre_rule(nr);
    const Rule1d& polar = legendre_rule(ntheta);
    const int nphi = 2 * ntheta;
    const double dphi = 2.0 * std::numbers::pi / nphi;

    PassResult res;
    for (std::size_t ir = 0; ir < radial.nodes.size(); ++ir) {
        const double r = 0.5 * rmax * (radial.nodes[ir] + 1.0);
        const double wr = 0.5 * rmax * radial.weights[ir];
        for (std::size_t it = 0; it < polar.nodes.size(); ++it) {
            const double ct = polar.nodes[it];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            const double wt = polar.weights[it];
            for (int ip = 0; ip < nphi; ++ip) {
                const double phi = dphi * ip;
                const Vec3 x = C + Vec3{r * st * std::cos(phi), r * st * std::sin(phi), r * ct};
                const double fa = poly_part(a, x) * std::exp(-a.exponent * (x - a.center).norm2());
                const double fb = poly_part(b, x) * std::exp(-b.exponent * (x - b.center).norm2());
                // r^2 dr from the Jacobian against 1/r from the operator.
                const double term = wr * wt * dphi * fa * fb * r;
                res.value += term;
                res.magnitude += std::abs(term);
            }
        }
    }
    return res;
}

}  // namespace

double quadrature_one_electron(OneElectronKind kind, const PrimitiveGaussian& a,
                               const PrimitiveGaussian& b, const Vec3* nucleus) {
    // Converged when two refinements agree relative to the value, with an
    // absolute floor tied to the integrand magnitude so exact zeros (parity
    // nodes) terminate cleanly.
    double last_diff = 0.0;
    if (kind == OneElectronKind::nuclear) {
        if (nucleus == nullptr) throw std::invalid_argument("nuclear quadrature needs a center");
        PassResult prev = spherical_pass(a, b, *nucleus, 48, 20);
        for (int level = 1; level <= 4; ++level) {
            const PassResult cur = spherical_pass(a, b, *nucleus, 48 << level, 20 << level);
            last_diff = std::abs(cur.value - prev.value);
            if (last_diff <= std::max(1e-9 * std::abs(cur.value), 1e-12 * cur.magnitude))
                return cur.value;
            prev = cur;
        }
        throw std::runtime_error(
            "quadrature did not converge: nuclear refinement cap reached, last two estimates "
            "differ by " +
            std::to_string(last_diff));
    }
    PassResult prev = hermite_pass(kind, a, b, 8);
    for (int level = 1; level <= 3; ++level) {
        const PassResult cur = hermite_pass(kind, a, b, 8 << level);
        last_diff = std::abs(cur.value - prev.value);
        if (last_diff <= std::max(1e-10 * std::abs(cur.value), 1e-13 * cur.magnitude))
            return cur.value;
        prev = cur;
    }
    throw std::runtime_error(
        "quadrature did not converge: Hermite refinement cap reached, last two estimates differ "
        "by " +
        std::to_string(last_diff));
}

double eri_ssss_concentric(double zeta_bra, double zeta_ket) {
    // E = 4 pi (pi/eta)^(3/2) * integral of r exp(-zeta r^2) erf(sqrt(eta) r).
    const double rmax = std::sqrt(90.0 / std::min(zeta_bra, zeta_ket));
    const Rule1d& rule = legendre_rule(200);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * rmax * (rule.nodes[i] + 1.0);
        total += 0.5 * rmax * rule.weights[i] * r * std::exp(-zeta_bra * r * r) *
                 std::erf(std::sqrt(zeta_ket) * r);
    }
    return 4.0 * std::numbers::pi * std::pow(std::numbers::pi / zeta_ket, 1.5) * total;
}

}  // namespace gaussint::oracle
