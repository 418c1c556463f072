#include "gaussint/eri.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "gaussint/boys.hpp"
#include "gaussint/gpt.hpp"

namespace gaussint {

namespace {

int first_axis(const AngularMomentumIndex& n) { return n.nx > 0 ? 0 : (n.ny > 0 ? 1 : 2); }

}  // namespace

double QuartetGeometry::prefactor() const {
    constexpr double two_pi_to_5_2 = 2.0 * 17.493418327624862846262821679872;  // 2 pi^(5/2)
    return two_pi_to_5_2 * K1 * K2 / (zeta * eta * std::sqrt(zeta + eta));
}

QuartetGeometry make_quartet(double za, const Vec3& A, double zb, const Vec3& B, double zc,
                             const Vec3& C, double zd, const Vec3& D) {
    QuartetGeometry g;
    g.zeta = za + zb;
    g.eta = zc + zd;
    g.P = (za * A + zb * B) / g.zeta;
    g.Q = (zc * C + zd * D) / g.eta;
    g.PA = (zb / g.zeta) * (B - A);  // P - A in displacement form
    g.QC = (zd / g.eta) * (D - C);
    g.AB = A - B;
    g.CD = C - D;
    g.K1 = std::exp(-za * zb * g.AB.norm2() / g.zeta);
    g.K2 = std::exp(-zc * zd * g.CD.norm2() / g.eta);
    g.rho = g.zeta * g.eta / (g.zeta + g.eta);
    g.W = (g.zeta * g.P + g.eta * g.Q) / (g.zeta + g.eta);
    g.T = g.rho * (g.P - g.Q).norm2();
    return g;
}

double eri_ssss(const QuartetGeometry& geom) { return geom.prefactor() * boys(0, geom.T)[0]; }

std::vector<double> eri_ssss_aux(const QuartetGeometry& geom, int m_max) {
    const BoysTable fm = boys(m_max, geom.T);
    const double pref = geom.prefactor();
    std::vector<double> base(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) base[static_cast<std::size_t>(m)] = pref * fm[m];
    return base;
}

// ---------------------------------------------------------------------------
// Vertical recurrence: dense [e0|f0]^(m) pyramid.
// ---------------------------------------------------------------------------

VrrTable os_vrr_class(const QuartetGeometry& geom, int le_max, int lf_max) {
    const auto base = eri_ssss_aux(geom, le_max + lf_max);
    return os_vrr_class(geom, le_max, lf_max, base);
}

VrrTable os_vrr_class(const QuartetGeometry& geom, int le_max, int lf_max,
                      std::span<const double> base) {
    const int M = le_max + lf_max;
    if (static_cast<int>(base.size()) < M + 1)
        throw std::invalid_argument("base values must cover auxiliary orders 0..le_max+lf_max");

    // W - P = -eta/(zeta+eta) (P - Q) and W - Q = zeta/(zeta+eta) (P - Q).
    const Vec3 PQ = geom.P - geom.Q;
    const Vec3 WP = (-geom.eta / (geom.zeta + geom.eta)) * PQ;
    const Vec3 WQ = (geom.zeta / (geom.zeta + geom.eta)) * PQ;
    const double inv2z = 1.0 / (2.0 * geom.zeta);
    const double inv2e = 1.0 / (2.0 * geom.eta);
    const double inv2ze = 1.0 / (2.0 * (geom.zeta + geom.eta));
    const double eta_frac = geom.eta / (geom.zeta + geom.eta);
    const double zeta_frac = geom.zeta / (geom.zeta + geom.eta);

    // work[e][f] holds values for m = 0..M-e-f, layout [m][ia][ic].
    std::vector<std::vector<double>> work(static_cast<std::size_t>((le_max + 1) * (lf_max + 1)));
    auto blk = [&](int e, int f) -> std::vector<double>& {
        return work[static_cast<std::size_t>(e * (lf_max + 1) + f)];
    };
    auto val = [&](int e, int f, int m, int ia, int ic) -> double {
        const int nc = shell_size(f);
        const int na = shell_size(e);
        return blk(e, f)[static_cast<std::size_t>((m * na + ia) * nc + ic)];
    };

    blk(0, 0).assign(base.begin(), base.begin() + M + 1);

    // Ket ladder at e = 0.
    for (int f = 1; f <= lf_max; ++f) {
        const auto& comps = cartesian_components(f);
        const int nc = shell_size(f);
        blk(0, f).assign(static_cast<std::size_t>((M - f + 1)) * static_cast<std::size_t>(nc), 0.0);
        for (int ic = 0; ic < nc; ++ic) {
            const AngularMomentumIndex& c = comps[static_cast<std::size_t>(ic)];
            const int ax = first_axis(c);
            const AngularMomentumIndex c1 = c.lowered(ax);
            const int jc1 = component_index(c1);
            const int jc2 = c1[ax] > 0 ? component_index(c1.lowered(ax)) : -1;
            for (int m = 0; m <= M - f; ++m) {
                double v = geom.QC[ax] * val(0, f - 1, m, 0, jc1) +
                           WQ[ax] * val(0, f - 1, m + 1, 0, jc1);
                if (jc2 >= 0)
                    v += c1[ax] * inv2e *
                         (val(0, f - 2, m, 0, jc2) - zeta_frac * val(0, f - 2, m + 1, 0, jc2));
                blk(0, f)[static_cast<std::size_t>(m * nc + ic)] = v;
            }
        }
    }

    // Bra ladder at every f.
    for (int f = 0; f <= lf_max; ++f) {
        const auto& ket_comps = cartesian_components(f);
        const int nc = shell_size(f);
        for (int e = 1; e <= le_max; ++e) {
            const auto& comps = cartesian_components(e);
            const int na = shell_size(e);
            blk(e, f).assign(static_cast<std::size_t>(M - e - f + 1) * static_cast<std::size_t>(na) *
                                 static_cast<std::size_t>(nc),
                             0.0);
            for (int ia = 0; ia < na; ++ia) {
                const AngularMomentumIndex& a = comps[static_cast<std::size_t>(ia)];
                const int ax = first_axis(a);
                const AngularMomentumIndex a1 = a.lowered(ax);
                const int ja1 = component_index(a1);
                const int ja2 = a1[ax] > 0 ? component_index(a1.lowered(ax)) : -1;
                for (int ic = 0; ic < nc; ++ic) {
                    const AngularMomentumIndex& c = ket_comps[static_cast<std::size_t>(ic)];
                    const int jcl = c[ax] > 0 ? component_index(c.lowered(ax)) : -1;
                    for (int m = 0; m <= M - e - f; ++m) {
                        double v = geom.PA[ax] * val(e - 1, f, m, ja1, ic) +
                                   WP[ax] * val(e - 1, f, m + 1, ja1, ic);
                        if (ja2 >= 0)
                            v += a1[ax] * inv2z *
                                 (val(e - 2, f, m, ja2, ic) -
                                  eta_frac * val(e - 2, f, m + 1, ja2, ic));
                        if (jcl >= 0) v += c[ax] * inv2ze * val(e - 1, f - 1, m + 1, ja1, jcl);
                        blk(e, f)[static_cast<std::size_t>((m * na + ia) * nc + ic)] = v;
                    }
                }
            }
        }
    }

    VrrTable out;
    out.le_max = le_max;
    out.lf_max = lf_max;
    out.blocks.resize(static_cast<std::size_t>((le_max + 1) * (lf_max + 1)));
    for (int e = 0; e <= le_max; ++e)
        for (int f = 0; f <= lf_max; ++f) {
            const std::size_t n =
                static_cast<std::size_t>(shell_size(e)) * static_cast<std::size_t>(shell_size(f));
            out.at(e, f).assign(blk(e, f).begin(), blk(e, f).begin() + static_cast<std::ptrdiff_t>(n));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Six-term recurrence, top-down with memoization.
// ---------------------------------------------------------------------------

namespace {

class OsEvaluator {
  public:
    OsEvaluator(const QuartetGeometry& g, std::span<const double> base)
        : g_(g),
          base_(base),
          WP_((-g.eta / (g.zeta + g.eta)) * (g.P - g.Q)),
          WQ_((g.zeta / (g.zeta + g.eta)) * (g.P - g.Q)),
          inv2z_(1.0 / (2.0 * g.zeta)),
          inv2e_(1.0 / (2.0 * g.eta)),
          inv2ze_(1.0 / (2.0 * (g.zeta + g.eta))),
          eta_frac_(g.eta / (g.zeta + g.eta)),
          zeta_frac_(g.zeta / (g.zeta + g.eta))  {}

    double value(const AngularMomentumIndex& a, const AngularMomentumIndex& b,
                 const AngularMomentumIndex& c, const AngularMomentumIndex& d, int m) {
        const std::uint64_t key = encode(a, b, c, d, m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const double v = compute(a, b, c, d, m);
        memo_.emplace(key, v);
        return v;
    }

  private:
    static std::uint64_t encode(const AngularMomentumIndex& a, const AngularMomentumIndex& b,
                                const AngularMomentumIndex& c, const AngularMomentumIndex& d,
                                int m) {
        auto pack = [](const AngularMomentumIndex& n) -> std::uint64_t {
            return static_cast<std::uint64_t>(n.nx) | (static_cast<std::uint64_t>(n.ny) << 4) |
                   (static_cast<std::uint64_t>(n.nz) << 8);
        };
        return pack(a) | (pack(b) << 12) | (pack(c) << 24) | (pack(d) << 36) |
               (static_cast<std::uint64_t>(m) << 48);
    }

    double compute(const AngularMomentumIndex& a, const AngularMomentumIndex& b,
                   const AngularMomentumIndex& c, const AngularMomentumIndex& d, int m) {
        if (a.total() > 0) {
            // Reduce a through the six-term relation.
            const int ax = first_axis(a);
            const AngularMomentumIndex a1 = a.lowered(ax);
            double v = g_.PA[ax] * value(a1, b, c, d, m) + WP_[ax] * value(a1, b, c, d, m + 1);
            if (a1[ax] > 0) {
                const AngularMomentumIndex a2 = a1.lowered(ax);
                v += a1[ax] * inv2z_ *
                     (value(a2, b, c, d, m) - eta_frac_ * value(a2, b, c, d, m + 1));
            }
            if (b[ax] > 0) {
                const AngularMomentumIndex b1 = b.lowered(ax);
                v += b[ax] * inv2z_ *
                     (value(a1, b1, c, d, m) - eta_frac_ * value(a1, b1, c, d, m + 1));
            }
            if (c[ax] > 0) v += c[ax] * inv2ze_ * value(a1, b, c.lowered(ax), d, m + 1);
            if (d[ax] > 0) v += d[ax] * inv2ze_ * value(a1, b, c, d.lowered(ax), m + 1);
            return v;
        }
        if (b.total() > 0) {
            // Transfer b toward a; prefactor is geometric only.
            const int ax = first_axis(b);
            const AngularMomentumIndex b1 = b.lowered(ax);
            return value(AngularMomentumIndex{}.raised(ax), b1, c, d, m) +
                   g_.AB[ax] * value(AngularMomentumIndex{}, b1, c, d, m);
        }
        if (d.total() > 0) {
            const int ax = first_axis(d);
            const AngularMomentumIndex d1 = d.lowered(ax);
            return value(a, b, c.raised(ax), d1, m) + g_.CD[ax] * value(a, b, c, d1, m);
        }
        if (c.total() > 0) {
            const int ax = first_axis(c);
            const AngularMomentumIndex c1 = c.lowered(ax);
            double v = g_.QC[ax] * value(a, b, c1, d, m) + WQ_[ax] * value(a, b, c1, d, m + 1);
            if (c1[ax] > 0) {
                const AngularMomentumIndex c2 = c1.lowered(ax);
                v += c1[ax] * inv2e_ *
                     (value(a, b, c2, d, m) - zeta_frac_ * value(a, b, c2, d, m + 1));
            }
            return v;
        }
        return base_[static_cast<std::size_t>(m)];
    }

    const QuartetGeometry& g_;
    std::span<const double> base_;
    Vec3 WP_, WQ_;
    double inv2z_, inv2e_, inv2ze_, eta_frac_, zeta_frac_;
    std::unordered_map<std::uint64_t, double> memo_;
};

}  // namespace

EriClass os_full_class(const QuartetGeometry& geom, int la, int lb, int lc, int ld) {
    const auto base = eri_ssss_aux(geom, la + lb + lc + ld);
    return os_full_class(geom, la, lb, lc, ld, base);
}

EriClass os_full_class(const QuartetGeometry& geom, int la, int lb, int lc, int ld,
                       std::span<const double> base) {
    if (static_cast<int>(base.size()) < la + lb + lc + ld + 1)
        throw std::invalid_argument("base values must cover auxiliary orders 0..la+lb+lc+ld");
    OsEvaluator eval(geom, base);
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
                for (const auto& d : ds) cls.values[idx++] = eval.value(a, b, c, d, 0);
    return cls;
}

// ---------------------------------------------------------------------------
// Horizontal (transfer) recurrence.
// ---------------------------------------------------------------------------

EriClass hrr_transfer(const VrrTable& table, const Vec3& AB, const Vec3& CD, int la, int lb,
                      int lc, int ld) {
    if (table.le_max < la + lb || table.lf_max < lc + ld)
        throw std::invalid_argument("transfer table does not span the requested class");

    const int nc = shell_size(lc);
    const int nd = shell_size(ld);

    // Ket side: for each e, turn {(e0|f0)} into (e0|cd).
    std::vector<std::vector<double>> ket(static_cast<std::size_t>(la + lb) + 1);
    for (int e = la; e <= la + lb; ++e) {
        const int na = shell_size(e);
        // cur[f]: [ia][if][id_level] values for the current d ladder step.
        std::vector<std::vector<double>> cur(static_cast<std::size_t>(lc + ld) + 1);
        for (int f = lc; f <= lc + ld; ++f) cur[static_cast<std::size_t>(f)] = table.at(e, f);
        for (int dl = 1; dl <= ld; ++dl) {
            const auto& dcomps = cartesian_components(dl);
            const int ndl = shell_size(dl);
            const int ndp = shell_size(dl - 1);
            std::vector<std::vector<double>> next(static_cast<std::size_t>(lc + ld) + 1);
            for (int f = lc; f <= lc + ld - dl; ++f) {
                const auto& fcomps = cartesian_components(f);
                const int nf = shell_size(f);
                const int nfu = shell_size(f + 1);
                auto& dst = next[static_cast<std::size_t>(f)];
                dst.assign(static_cast<std::size_t>(na) * nf * ndl, 0.0);
                const auto& src = cur[static_cast<std::size_t>(f)];
                const auto& srcu = cur[static_cast<std::size_t>(f) + 1];
                for (int id = 0; id < ndl; ++id) {
                    const AngularMomentumIndex& d = dcomps[static_cast<std::size_t>(id)];
                    const int ax = first_axis(d);
                    const int jd = component_index(d.lowered(ax));
                    for (int ic = 0; ic < nf; ++ic) {
                        const int icu = component_index(fcomps[static_cast<std::size_t>(ic)].raised(ax));
                        for (int ia = 0; ia < na; ++ia)
                            dst[static_cast<std::size_t>((ia * nf + ic) * ndl + id)] =
                                srcu[static_cast<std::size_t>((ia * nfu + icu) * ndp + jd)] +
                                CD[ax] * src[static_cast<std::size_t>((ia * nf + ic) * ndp + jd)];
                    }
                }
            }
            cur = std::move(next);
        }
        ket[static_cast<std::size_t>(e)] = std::move(cur[static_cast<std::size_t>(lc)]);
    }

    // Bra side: transfer b out of the e ladder. Blocks are [ia][ib][ic*nd+id].
    const std::size_t ketsz = static_cast<std::size_t>(nc) * nd;
    std::vector<std::vector<double>> cur = std::move(ket);
    for (int bl = 1; bl <= lb; ++bl) {
        const auto& bcomps = cartesian_components(bl);
        const int nbl = shell_size(bl);
        const int nbp = shell_size(bl - 1);
        std::vector<std::vector<double>> next(static_cast<std::size_t>(la + lb) + 1);
        for (int e = la; e <= la + lb - bl; ++e) {
            const auto& acomps = cartesian_components(e);
            const int na = shell_size(e);
            auto& dst = next[static_cast<std::size_t>(e)];
            dst.assign(static_cast<std::size_t>(na) * nbl * ketsz, 0.0);
            const auto& src = cur[static_cast<std::size_t>(e)];
            const auto& srcu = cur[static_cast<std::size_t>(e) + 1];
            for (int ib = 0; ib < nbl; ++ib) {
                const AngularMomentumIndex& b = bcomps[static_cast<std::size_t>(ib)];
                const int ax = first_axis(b);
                const int jb = component_index(b.lowered(ax));
                for (int ia = 0; ia < na; ++ia) {
                    const int iau = component_index(acomps[static_cast<std::size_t>(ia)].raised(ax));
                    for (std::size_t kk = 0; kk < ketsz; ++kk)
                        dst[(static_cast<std::size_t>(ia) * nbl + static_cast<std::size_t>(ib)) * ketsz + kk] =
                            srcu[(static_cast<std::size_t>(iau) * nbp + static_cast<std::size_t>(jb)) * ketsz + kk] +
                            AB[ax] * src[(static_cast<std::size_t>(ia) * nbp + static_cast<std::size_t>(jb)) * ketsz + kk];
                }
            }
        }
        cur = std::move(next);
    }

    EriClass cls;
    cls.am = {la, lb, lc, ld};
    cls.values = std::move(cur[static_cast<std::size_t>(la)]);
    return cls;
}

// ---------------------------------------------------------------------------
// Contraction drivers.
// ---------------------------------------------------------------------------

namespace {

std::vector<double> component_norms(const ContractedShell& s) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (const auto& n : cartesian_components(s.angular_momentum()))
        out.push_back(contracted_norm(s.primitives(), n));
    return out;
}

void apply_norms(EriClass& cls, const std::vector<double>& na, const std::vector<double>& nb,
                 const std::vector<double>& nc, const std::vector<double>& nd) {
    std::size_t idx = 0;
    for (double fa : na)
        for (double fb : nb)
            for (double fc : nc)
                for (double fd : nd) cls.values[idx++] *= fa * fb * fc * fd;
}

}  // namespace

EriClass compute_class_contracted(const ContractedShell& a, const ContractedShell& b,
                                  const ContractedShell& c, const ContractedShell& d,
                                  EriBackend backend) {
    const int la = a.angular_momentum(), lb = b.angular_momentum();
    const int lc = c.angular_momentum(), ld = d.angular_momentum();

    EriClass cls;
    cls.am = {la, lb, lc, ld};
    cls.values.assign(static_cast<std::size_t>(shell_size(la)) * shell_size(lb) * shell_size(lc) *
                          shell_size(ld),
                      0.0);

    if (backend == EriBackend::ssss_only) {
        if (la + lb + lc + ld != 0)
            throw std::domain_error("ssss-only backend requires an all-s quartet");
        double sum = 0.0;
        for (const auto& pa : a.primitives())
            for (const auto& pb : b.primitives())
                for (const auto& pc : c.primitives())
                    for (const auto& pd : d.primitives())
                        sum += pa.coefficient * pb.coefficient * pc.coefficient * pd.coefficient *
                               eri_ssss(make_quartet(pa.exponent, a.center(), pb.exponent,
                                                     b.center(), pc.exponent, c.center(),
                                                     pd.exponent, d.center()));
        cls.values[0] = sum;
    } else if (backend == EriBackend::os) {
        for (const auto& pa : a.primitives())
            for (const auto& pb : b.primitives())
                for (const auto& pc : c.primitives())
                    for (const auto& pd : d.primitives()) {
                        const double w =
                            pa.coefficient * pb.coefficient * pc.coefficient * pd.coefficient;
                        const EriClass prim = os_full_class(
                            make_quartet(pa.exponent, a.center(), pb.exponent, b.center(),
                                         pc.exponent, c.center(), pd.exponent, d.center()),
                            la, lb, lc, ld);
                        for (std::size_t i = 0; i < cls.values.size(); ++i)
                            cls.values[i] += w * prim.values[i];
                    }
    } else {
        // HGP: contract the [e0|f0] pyramid, then one transfer per class.
        VrrTable contracted;
        contracted.le_max = la + lb;
        contracted.lf_max = lc + ld;
        contracted.blocks.resize(static_cast<std::size_t>((la + lb + 1) * (lc + ld + 1)));
        for (int e = 0; e <= la + lb; ++e)
            for (int f = 0; f <= lc + ld; ++f)
                contracted.at(e, f).assign(
                    static_cast<std::size_t>(shell_size(e)) * static_cast<std::size_t>(shell_size(f)), 0.0);
        for (const auto& pa : a.primitives())
            for (const auto& pb : b.primitives())
                for (const auto& pc : c.primitives())
                    for (const auto& pd : d.primitives()) {
                        const double w =
                            pa.coefficient * pb.coefficient * pc.coefficient * pd.coefficient;
                        const VrrTable prim = os_vrr_class(
                            make_quartet(pa.exponent, a.center(), pb.exponent, b.center(),
                                         pc.exponent, c.center(), pd.exponent, d.center()),
                            la + lb, lc + ld);
                        for (int e = la; e <= la + lb; ++e)
                            for (int f = lc; f <= lc + ld; ++f) {
                                auto& dst = contracted.at(e, f);
                                const auto& src = prim.at(e, f);
                                for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += w * src[i];
                            }
                    }
        cls = hrr_transfer(contracted, a.center() - b.center(), c.center() - d.center(), la, lb,
                           lc, ld);
    }

    apply_norms(cls, component_norms(a), component_norms(b), component_norms(c),
                component_norms(d));
    return cls;
}

// ---------------------------------------------------------------------------
// Screening and the canonical driver.
// ---------------------------------------------------------------------------

namespace {

/// max over components of |N_comp| / primitive_norm(alpha, comp): an L2-style
/// moment of the normalized function's primitive expansion.
double shell_moment(const ContractedShell& s) {
    double worst = 0.0;
    for (const auto& n : cartesian_components(s.angular_momentum())) {
        const double norm = contracted_norm(s.primitives(), n);
        double sum = 0.0;
        for (const auto& p : s.primitives())
            sum += std::abs(p.coefficient) / primitive_norm(p.exponent, n);
        worst = std::max(worst, norm * sum);
    }
    return worst;
}

double pair_decay(const ContractedShell& s1, const ContractedShell& s2) {
    const double ab2 = (s1.center() - s2.center()).norm2();
    double sum = 0.0;
    for (const auto& p1 : s1.primitives())
        for (const auto& p2 : s2.primitives()) {
            const double g = p1.exponent + p2.exponent;
            sum += std::exp(-p1.exponent * p2.exponent * ab2 / g) / g;
        }
    return sum;
}

double min_exponent(const ContractedShell& s) {
    double m = s.primitives().front().exponent;
    for (const auto& p : s.primitives()) m = std::min(m, p.exponent);
    return m;
}

}  // namespace

double quartet_bound(const ContractedShell& a, const ContractedShell& b,
                     const ContractedShell& c, const ContractedShell& d) {
    constexpr double two_pi_to_5_2 = 2.0 * 17.493418327624862846262821679872;
    const double inv_sqrt =
        1.0 / std::sqrt(min_exponent(a) + min_exponent(b) + min_exponent(c) + min_exponent(d));
    return two_pi_to_5_2 * inv_sqrt * pair_decay(a, b) * pair_decay(c, d) * shell_moment(a) *
           shell_moment(b) * shell_moment(c) * shell_moment(d);
}

namespace {

struct ShellPair {
    int i = 0, j = 0;  // i >= j
};

std::uint64_t pair_id(std::uint64_t i, std::uint64_t j) { return i * (i + 1) / 2 + j; }

struct Quartet {
    int a, b, c, d;
};

void scatter_records(const EriClass& cls, const BasisSet& basis, const Quartet& q,
                     std::vector<EriRecord>& out) {
    const auto first = [&](int s) {
        return static_cast<std::uint32_t>(basis.shell_first_function[static_cast<std::size_t>(s)]);
    };
    const std::uint32_t fa = first(q.a), fb = first(q.b), fc = first(q.c), fd = first(q.d);
    std::size_t idx = 0;
    for (int ia = 0; ia < cls.size(0); ++ia)
        for (int ib = 0; ib < cls.size(1); ++ib)
            for (int ic = 0; ic < cls.size(2); ++ic)
                for (int id = 0; id < cls.size(3); ++id, ++idx) {
                    std::uint32_t i = fa + static_cast<std::uint32_t>(ia);
                    std::uint32_t j = fb + static_cast<std::uint32_t>(ib);
                    std::uint32_t k = fc + static_cast<std::uint32_t>(ic);
                    std::uint32_t l = fd + static_cast<std::uint32_t>(id);
                    if (i < j) std::swap(i, j);
                    if (k < l) std::swap(k, l);
                    if (pair_id(i, j) < pair_id(k, l)) {
                        std::swap(i, k);
                        std::swap(j, l);
                    }
                    out.push_back({i, j, k, l, cls.values[idx]});
                }
}

}  // namespace

EriResult compute_all(const BasisSet& basis, EriBackend backend, double screen_threshold,
                      int threads) {
    if (screen_threshold < 0.0) throw std::domain_error("screen threshold must be >= 0");
    const int nshells = static_cast<int>(basis.shells.size());
    std::vector<ShellPair> pairs;
    for (int i = 0; i < nshells; ++i)
        for (int j = 0; j <= i; ++j) pairs.push_back({i, j});

    std::vector<Quartet> quartets;
    for (std::size_t p1 = 0; p1 < pairs.size(); ++p1)
        for (std::size_t p2 = 0; p2 <= p1; ++p2)
            quartets.push_back({pairs[p1].i, pairs[p1].j, pairs[p2].i, pairs[p2].j});

    int nthreads = threads;
    if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, static_cast<int>(std::max<std::size_t>(quartets.size(), 1)));

    struct ChunkResult {
        std::vector<EriRecord> records;
        std::uint64_t computed = 0;
        std::uint64_t screened = 0;
    };
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(nthreads));

    auto run_chunk = [&](int t) {
        ChunkResult& res = chunks[static_cast<std::size_t>(t)];
        const std::size_t lo = quartets.size() * static_cast<std::size_t>(t) / static_cast<std::size_t>(nthreads);
        const std::size_t hi =
            quartets.size() * (static_cast<std::size_t>(t) + 1) / static_cast<std::size_t>(nthreads);
        for (std::size_t qi = lo; qi < hi; ++qi) {
            const Quartet& q = quartets[qi];
            const ContractedShell& sa = basis.shells[static_cast<std::size_t>(q.a)];
            const ContractedShell& sb = basis.shells[static_cast<std::size_t>(q.b)];
            const ContractedShell& sc = basis.shells[static_cast<std::size_t>(q.c)];
            const ContractedShell& sd = basis.shells[static_cast<std::size_t>(q.d)];
            if (screen_threshold > 0.0 && quartet_bound(sa, sb, sc, sd) < screen_threshold) {
                ++res.screened;
                continue;
            }
            const EriClass cls = compute_class_contracted(sa, sb, sc, sd, backend);
            ++res.computed;
            scatter_records(cls, basis, q, res.records);
        }
    };

    if (nthreads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(nthreads) - 1);
        for (int t = 1; t < nthreads; ++t) workers.emplace_back(run_chunk, t);
        run_chunk(0);
        for (auto& w : workers) w.join();
    }

    EriResult result;
    for (auto& ch : chunks) {
        result.quartets_computed += ch.computed;
        result.quartets_screened += ch.screened;
        result.records.insert(result.records.end(), ch.records.begin(), ch.records.end());
    }

    // Canonical total order; the value tiebreak keeps duplicate resolution
    // independent of scheduling and sort implementation.
    std::sort(result.records.begin(), result.records.end(),
              [](const EriRecord& x, const EriRecord& y) {
                  const auto kx = std::array<std::uint64_t, 2>{pair_id(x.i, x.j), pair_id(x.k, x.l)};
                  const auto ky = std::array<std::uint64_t, 2>{pair_id(y.i, y.j), pair_id(y.k, y.l)};
                  if (kx != ky) return kx < ky;
                  return x.value < y.value;
              });
    result.records.erase(std::unique(result.records.begin(), result.records.end(),
                                     [](const EriRecord& x, const EriRecord& y) {
                                         return x.i == y.i && x.j == y.j && x.k == y.k && x.l == y.l;
                                     }),
                         result.records.end());
    return result;
}

}  // namespace gaussint
