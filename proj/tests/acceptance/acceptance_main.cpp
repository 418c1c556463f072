// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 drives the installed CLI as a subprocess; pass its
// path with --cli and a scratch directory with --work.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gaussint/basis.hpp"
#include "gaussint/boys.hpp"
#include "gaussint/eri.hpp"
#include "gaussint/gpt.hpp"
#include "gaussint/one_electron.hpp"
#include "gaussint/oracle.hpp"
#include "gaussint/rys.hpp"

using namespace gaussint;

namespace {

std::string g_cli_path;
std::filesystem::path g_work_dir;

constexpr const char* kHydrogenSto3g = R"(H 0
S 3 1.00
      3.42525091    0.15432897
      0.62391373    0.53532814
      0.16885540    0.44463454
****
)";

struct Criterion {
    int number;
    const char* title;
    bool (*run)(std::string& detail);
};

double rel(double got, double want, double floor_scale = 0.0) {
    const double scale = std::max({std::abs(got), std::abs(want), floor_scale});
    return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

double class_max(const EriClass& c) {
    double m = 0.0;
    for (double v : c.values) m = std::max(m, std::abs(v));
    return m;
}

// --- 1: kinetic-form identity ----------------------------------------------

bool crit_kinetic(std::string& detail) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> box(-2.5, 2.5);
    std::uniform_real_distribution<double> lexp(std::log(0.05), std::log(50.0));
    std::uniform_int_distribution<int> comp(0, 4);
    auto draw = [&] {
        AngularMomentumIndex n{comp(rng), comp(rng), comp(rng)};
        while (n.total() > 4) n = {comp(rng), comp(rng), comp(rng)};
        return n;
    };
    double worst = 0.0;
    for (int i = 0; i < 1200; ++i) {
        const auto n1 = draw(), n2 = draw();
        const double a1 = std::exp(lexp(rng)), a2 = std::exp(lexp(rng));
        const auto pair =
            make_pair(a1, Vec3{box(rng), box(rng), box(rng)}, a2, Vec3{box(rng), box(rng), box(rng)});
        const double asym = kinetic_prim_asym(pair, n1, n2, a2);
        const double sym = kinetic_prim_sym(pair, n1, n2, a1, a2);
        // Deviation relative to the expression magnitude: the always-present
        // <+1|+1> coupling term bounds the scale at which the two forms are
        // defined, keeping the measure finite at sign crossings.
        double term_scale = 0.0;
        for (int d = 0; d < 3; ++d)
            term_scale += std::abs(2.0 * a1 * a2 * overlap_prim(pair, n1.raised(d), n2.raised(d)));
        const double scale = std::max({std::abs(asym), std::abs(sym), term_scale});
        if (scale > 0.0) worst = std::max(worst, std::abs(asym - sym) / scale);
    }
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max relative deviation %.3e", worst);
        detail = buf;
    }
    return worst <= 1e-12;
}

// --- 2: Boys correctness ----------------------------------------------------

bool crit_boys(std::string& detail) {
    double worst_erf = 0.0;
    for (double T : {1e-8, 0.1, 1.0, 10.0, 100.0}) {
        const double ref = 0.5 * std::sqrt(M_PI / T) * std::erf(std::sqrt(T));
        worst_erf = std::max(worst_erf, rel(boys(0, T)[0], ref));
    }
    double worst_zero = 0.0;
    const auto at0 = boys(16, 0.0);
    for (int m = 0; m <= 16; ++m)
        worst_zero = std::max(worst_zero, std::abs(at0[m] - 1.0 / (2 * m + 1)));
    double worst_down = 0.0;
    for (double T : {0.05, 0.9, 7.0, 29.0, 31.0, 120.0}) {
        const auto t = boys(16, T);
        for (int m = 0; m < 16; ++m) {
            const double rhs = (2.0 * T * t[m + 1] + std::exp(-T)) / (2 * m + 1);
            worst_down = std::max(worst_down, std::abs(t[m] - rhs) / t[m]);
        }
    }
    std::ostringstream os;
    os << "erf " << worst_erf << ", F_m(0) " << worst_zero << ", downward " << worst_down;
    detail = os.str();
    return worst_erf <= 1e-13 && worst_zero <= 1e-15 && worst_down <= 1e-14;
}

// --- 3: GPT reconstruction ---------------------------------------------------

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

double primitive_at(double alpha, const Vec3& R, const AngularMomentumIndex& n, const Vec3& r) {
    return ipow(r[0] - R[0], n.nx) * ipow(r[1] - R[1], n.ny) * ipow(r[2] - R[2], n.nz) *
           std::exp(-alpha * (r - R).norm2());
}

bool crit_gpt(std::string& detail) {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> box(-1.5, 1.5), expd(0.2, 3.0), pt(-2.0, 2.0);
    std::uniform_int_distribution<int> comp(0, 2);
    double worst = 0.0;
    for (int cfg = 0; cfg < 220; ++cfg) {
        const double a1 = expd(rng), a2 = expd(rng);
        const Vec3 A{box(rng), box(rng), box(rng)}, B{box(rng), box(rng), box(rng)};
        AngularMomentumIndex n1{comp(rng), comp(rng), comp(rng)};
        AngularMomentumIndex n2{comp(rng), comp(rng), comp(rng)};
        while (n1.total() > 2) n1 = {comp(rng), comp(rng), comp(rng)};
        while (n2.total() > 2) n2 = {comp(rng), comp(rng), comp(rng)};
        const auto pair = make_pair(a1, A, a2, B);

        std::vector<Vec3> points;
        double scale = 0.0;
        for (int i = 0; i < 100; ++i) {
            points.push_back({pt(rng), pt(rng), pt(rng)});
            scale = std::max(scale, std::abs(primitive_at(a1, A, n1, points.back()) *
                                             primitive_at(a2, B, n2, points.back())));
        }
        const int l1[3] = {n1.nx, n1.ny, n1.nz};
        const int l2[3] = {n2.nx, n2.ny, n2.nz};
        for (const auto& r : points) {
            const double lhs = primitive_at(a1, A, n1, r) * primitive_at(a2, B, n2, r);
            double rhs = pair.K * std::exp(-pair.gamma * (r - pair.P).norm2());
            for (int d = 0; d < 3; ++d) {
                double axis = 0.0;
                for (int k = 0; k <= l1[d] + l2[d]; ++k)
                    axis += binomial_prefactor_single_sum(k, l1[d], l2[d], pair.PA[d], pair.PB[d]) *
                            ipow(r[d] - pair.P[d], k);
                rhs *= axis;
            }
            if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max pointwise deviation %.3e", worst);
        detail = buf;
    }
    return worst <= 1e-12;
}

// --- 4: one-electron oracle agreement ---------------------------------------

bool crit_one_electron_oracle(std::string& detail) {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    std::uniform_real_distribution<double> lexp(std::log(0.1), std::log(10.0));
    std::uniform_int_distribution<int> comp(0, 2);
    auto draw = [&] {
        AngularMomentumIndex n{comp(rng), comp(rng), comp(rng)};
        while (n.total() > 2) n = {comp(rng), comp(rng), comp(rng)};
        return n;
    };
    double worst = 0.0;
    int nuclear_inside = 0;
    for (int i = 0; i < 100; ++i) {
        PrimitiveGaussian a{std::exp(lexp(rng)), draw(), {box(rng), box(rng), box(rng)}};
        PrimitiveGaussian b{std::exp(lexp(rng)), draw(), {box(rng), box(rng), box(rng)}};
        const auto pair = make_pair(a.exponent, a.center, b.exponent, b.center);
        const int kind = i % 3;
        if (kind == 0) {
            const double v = overlap_prim(pair, a.index, b.index);
            const double q = oracle::quadrature_one_electron(oracle::OneElectronKind::overlap, a, b);
            worst = std::max(worst, rel(v, q, 1e-8));
        } else if (kind == 1) {
            const double v = kinetic_prim_sym(pair, a.index, b.index, a.exponent, b.exponent);
            const double q = oracle::quadrature_one_electron(oracle::OneElectronKind::kinetic, a, b);
            worst = std::max(worst, rel(v, q, 1e-8));
        } else {
            // place the nucleus inside the charge overlap region every third
            // nuclear case: at the pair's composite center
            Vec3 C{box(rng), box(rng), box(rng)};
            if (i % 9 == 2) {
                C = pair.P;
                ++nuclear_inside;
            }
            const double v = nuclear_prim(pair, a.index, b.index, C);
            const double q =
                oracle::quadrature_one_electron(oracle::OneElectronKind::nuclear, a, b, &C);
            worst = std::max(worst, rel(v, q, 1e-8));
        }
    }
    std::ostringstream os;
    os << "max relative deviation " << worst << " (" << nuclear_inside << " nuclei inside overlap)";
    detail = os.str();
    return worst <= 1e-7 && nuclear_inside >= 10;
}

// --- 5: ERI backend triangle -------------------------------------------------

bool crit_backend_triangle(std::string& detail) {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> box(-1.5, 1.5), expd(0.15, 4.0);
    std::uniform_int_distribution<int> am(0, 2);
    auto rv = [&] { return Vec3{box(rng), box(rng), box(rng)}; };
    double worst = 0.0;

    auto check_quartet = [&](int la, int lb, int lc, int ld) {
        const Vec3 A = rv(), B = rv(), C = rv(), D = rv();
        const double za = expd(rng), zb = expd(rng), zc = expd(rng), zd = expd(rng);
        const auto g = make_quartet(za, A, zb, B, zc, C, zd, D);
        const auto os = os_full_class(g, la, lb, lc, ld);
        const auto hgp = hrr_transfer(os_vrr_class(g, la + lb, lc + ld), A - B, C - D, la, lb, lc, ld);
        const auto orc = oracle::eri_by_differentiation(za, A, zb, B, zc, C, zd, D, la, lb, lc, ld);
        const double scale = std::max({class_max(os), class_max(hgp), class_max(orc)});
        if (scale == 0.0) return;
        for (std::size_t i = 0; i < os.values.size(); ++i) {
            worst = std::max(worst, std::abs(os.values[i] - hgp.values[i]) / scale);
            worst = std::max(worst, std::abs(os.values[i] - orc.values[i]) / scale);
            worst = std::max(worst, std::abs(hgp.values[i] - orc.values[i]) / scale);
        }
    };

    for (int i = 0; i < 200; ++i) check_quartet(am(rng), am(rng), am(rng), am(rng));
    const int high[][4] = {{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {3, 1, 0, 0},
                           {3, 0, 1, 0}, {1, 0, 3, 0}, {3, 1, 1, 0}, {3, 0, 1, 1}, {3, 3, 0, 0},
                           {3, 0, 3, 0}, {4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4},
                           {4, 1, 0, 0}, {4, 0, 1, 0}, {4, 0, 0, 1}, {4, 2, 0, 0}, {4, 0, 4, 0},
                           {4, 4, 0, 0}, {2, 2, 3, 1}};
    for (const auto& c : high) check_quartet(c[0], c[1], c[2], c[3]);

    // contracted: STO-3G-like three-primitive contractions, OS vs HGP
    const auto lib = load_basis(kHydrogenSto3g);
    const auto& prims = lib.shells("H")[0].primitives;
    double worst_c = 0.0;
    for (int rep = 0; rep < 6; ++rep) {
        const ContractedShell sa(rv(), am(rng), prims), sb(rv(), am(rng), prims);
        const ContractedShell sc(rv(), am(rng), prims), sd(rv(), am(rng), prims);
        const auto o = compute_class_contracted(sa, sb, sc, sd, EriBackend::os);
        const auto h = compute_class_contracted(sa, sb, sc, sd, EriBackend::hgp);
        const double scale = std::max(class_max(o), class_max(h));
        for (std::size_t i = 0; i < o.values.size(); ++i)
            worst_c = std::max(worst_c, std::abs(o.values[i] - h.values[i]) / scale);
    }

    std::ostringstream osd;
    osd << "primitive triangle " << worst << ", contracted os-vs-hgp " << worst_c;
    detail = osd.str();
    return worst <= 1e-10 && worst_c <= 1e-11;
}

// --- 6: class cardinality ----------------------------------------------------

bool crit_cardinality(std::string& detail) {
    const ContractedShell p(Vec3{0, 0, 0}, 1, {{1.0, 1.0}});
    const ContractedShell s(Vec3{0, 0, 1}, 0, {{0.8, 1.0}});
    const ContractedShell d(Vec3{1, 0, 0}, 2, {{1.2, 1.0}});
    if (compute_class_contracted(p, s, s, d, EriBackend::hgp).values.size() != 18) {
        detail = "(ps|sd) size mismatch";
        return false;
    }
    for (int la = 0; la <= 4; ++la)
        for (int lc = 0; lc <= 4; ++lc) {
            const ContractedShell a(Vec3{0, 0, 0}, la, {{1.0, 1.0}});
            const ContractedShell c(Vec3{0, 0, 1}, lc, {{0.9, 1.0}});
            const auto cls = compute_class_contracted(a, s, c, s, EriBackend::hgp);
            if (static_cast<int>(cls.values.size()) !=
                shell_size(la) * shell_size(lc)) {
                detail = "product formula violated";
                return false;
            }
        }
    detail = "all class sizes match (lambda+1)(lambda+2)/2 products";
    return true;
}

// --- 7: Rys exactness ---------------------------------------------------------

bool crit_rys(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
        for (double T : {0.0, 0.1, 1.0, 10.0, 100.0}) {
            const auto rule = rys_rule(n, T);
            const auto fm = boys(2 * n - 1, T);
            for (int m = 0; m <= 2 * n - 1; ++m) {
                double s = 0.0;
                for (int i = 0; i < n; ++i)
                    s += std::pow(rule.nodes[static_cast<std::size_t>(i)], 2 * m) *
                         rule.weights[static_cast<std::size_t>(i)];
                worst = std::max(worst, std::abs(s - fm[m]) / fm[m]);
            }
        }
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> box(-2.0, 2.0), expd(0.1, 8.0);
    auto rv = [&] { return Vec3{box(rng), box(rng), box(rng)}; };
    double worst_ssss = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto g = make_quartet(expd(rng), rv(), expd(rng), rv(), expd(rng), rv(), expd(rng), rv());
        worst_ssss = std::max(worst_ssss, rel(eri_ssss_via_rys(g), eri_ssss(g)));
    }
    std::ostringstream os;
    os << "moment exactness " << worst << ", (ss|ss) via rule " << worst_ssss;
    detail = os.str();
    return worst <= 1e-10 && worst_ssss <= 1e-12;
}

// --- 8: symmetry and invariance ----------------------------------------------

bool crit_symmetry(std::string& detail) {
    const auto lib = load_basis(kHydrogenSto3g);
    BasisSetLibrary mixed;
    mixed.add("H", {0, lib.shells("H")[0].primitives});
    mixed.add("H", {1, {{0.8, 1.0}}});
    const Molecule mol({{"H", 1, {0, 0, 0}}, {"H", 1, {0, 0, 1.4}}});
    const auto basis = build_basis(mol, mixed);
    const auto m = build_matrices(basis, mol);

    // independent recomputation of (j,i)
    double worst_sym = 0.0;
    for (int i = 0; i < basis.dimension(); ++i)
        for (int j = 0; j < i; ++j) {
            const auto fi = basis_function(basis, i), fj = basis_function(basis, j);
            worst_sym = std::max(worst_sym,
                                 std::abs(overlap_contracted(fi, fj) - overlap_contracted(fj, fi)));
            worst_sym = std::max(worst_sym,
                                 std::abs(kinetic_contracted(fi, fj) - kinetic_contracted(fj, fi)));
            for (const auto& atom : mol.atoms())
                worst_sym = std::max(worst_sym, std::abs(nuclear_contracted(fi, fj, atom.position) -
                                                         nuclear_contracted(fj, fi, atom.position)));
        }

    double worst_diag = 0.0;
    for (int i = 0; i < basis.dimension(); ++i)
        worst_diag = std::max(worst_diag, std::abs(m.S.at(i, i) - 1.0));

    // ERI 8-fold permutational symmetry on a mixed s/p quartet
    const ContractedShell sa(Vec3{0, 0, 0}, 0, lib.shells("H")[0].primitives);
    const ContractedShell pb(Vec3{0, 0, 1.4}, 1, {{0.8, 1.0}});
    const auto ab = compute_class_contracted(sa, pb, pb, sa, EriBackend::hgp);
    const auto ba = compute_class_contracted(pb, sa, sa, pb, EriBackend::hgp);
    const auto swapped = compute_class_contracted(pb, sa, pb, sa, EriBackend::hgp);
    double worst_perm = 0.0;
    const double scale = class_max(ab);
    for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic) {
            worst_perm = std::max(
                worst_perm, std::abs(ab.at(0, ib, ic, 0) - ba.at(ib, 0, 0, ic)) / scale);
            worst_perm = std::max(
                worst_perm, std::abs(ab.at(0, ib, ic, 0) - swapped.at(ic, 0, ib, 0)) / scale);
        }

    // global translation
    const Vec3 t{0.9, -1.7, 2.2};
    const Molecule mol_t({{"H", 1, t}, {"H", 1, Vec3{0, 0, 1.4} + t}});
    const auto basis_t = build_basis(mol_t, mixed);
    const auto mt = build_matrices(basis_t, mol_t);
    double worst_trans = 0.0;
    for (int i = 0; i < basis.dimension(); ++i)
        for (int j = 0; j <= i; ++j) {
            worst_trans = std::max(worst_trans, rel(mt.S.at(i, j), m.S.at(i, j), 1.0));
            worst_trans = std::max(worst_trans, rel(mt.T.at(i, j), m.T.at(i, j), 1.0));
            worst_trans = std::max(worst_trans, rel(mt.V.at(i, j), m.V.at(i, j), 1.0));
        }
    const auto e1 = compute_all(basis, EriBackend::hgp, 0.0);
    const auto e2 = compute_all(basis_t, EriBackend::hgp, 0.0);
    double emax = 0.0;
    for (const auto& r : e1.records) emax = std::max(emax, std::abs(r.value));
    for (std::size_t i = 0; i < e1.records.size(); ++i)
        worst_trans = std::max(worst_trans,
                               std::abs(e1.records[i].value - e2.records[i].value) / emax);

    std::ostringstream os;
    os << "hermiticity " << worst_sym << ", S diag " << worst_diag << ", 8-fold " << worst_perm
       << ", translation " << worst_trans;
    detail = os.str();
    return worst_sym <= 1e-13 && worst_diag <= 1e-12 && worst_perm <= 1e-12 && worst_trans <= 1e-12;
}

// --- 9: closed-form spot values ------------------------------------------------

bool crit_spot_values(std::string& detail) {
    const Vec3 O{0, 0, 0};
    const double N = primitive_norm(1.0, {0, 0, 0});
    const double eri =
        N * N * N * N * eri_ssss(make_quartet(1.0, O, 1.0, O, 1.0, O, 1.0, O));
    const double eri_q = N * N * N * N * oracle::eri_ssss_concentric(2.0, 2.0);
    const double want_eri = 2.0 / std::sqrt(M_PI);

    bool ok = std::abs(eri - want_eri) <= 1e-12 && std::abs(eri_q - want_eri) <= 1e-9;
    double worst_v = 0.0, worst_t = 0.0;
    for (double alpha : {0.5, 1.0, 2.5}) {
        const double Na = primitive_norm(alpha, {0, 0, 0});
        const auto pair = make_pair(alpha, O, alpha, O);
        worst_v = std::max(worst_v, std::abs(Na * Na * nuclear_prim_ss(pair, O) -
                                             2.0 * std::sqrt(2.0 * alpha / M_PI)));
        worst_t = std::max(worst_t, std::abs(Na * Na * kinetic_prim_sym(pair, {0, 0, 0}, {0, 0, 0},
                                                                        alpha, alpha) -
                                             1.5 * alpha));
    }
    std::ostringstream os;
    os << "(ss|ss) err " << std::abs(eri - want_eri) << ", nuclear err " << worst_v
       << ", kinetic err " << worst_t;
    detail = os.str();
    return ok && worst_v <= 1e-10 && worst_t <= 1e-12;
}

// --- 10: CLI determinism and round-trip ----------------------------------------

int run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::array<std::uint32_t, 4>, double> parse_text_eri(const std::filesystem::path& p) {
    std::map<std::array<std::uint32_t, 4>, double> out;
    std::ifstream in(p);
    std::uint32_t i, j, k, l;
    double v;
    while (in >> i >> j >> k >> l >> v) out[{i, j, k, l}] = v;
    return out;
}

std::map<std::array<std::uint32_t, 4>, double> parse_binary_eri(const std::filesystem::path& p) {
    std::map<std::array<std::uint32_t, 4>, double> out;
    std::ifstream in(p, std::ios::binary);
    char magic[4];
    in.read(magic, 4);
    if (std::string(magic, 4) != "GINT") return out;
    char version;
    in.read(&version, 1);
    if (version != 1) return out;
    while (true) {
        std::uint32_t idx[4];
        double v;
        in.read(reinterpret_cast<char*>(idx), sizeof idx);
        if (!in) break;
        in.read(reinterpret_cast<char*>(&v), sizeof v);
        if (!in) break;
        out[{idx[0], idx[1], idx[2], idx[3]}] = v;
    }
    return out;
}

bool crit_cli(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no --cli path given";
        return false;
    }
    const auto work = g_work_dir / "cli";
    std::filesystem::remove_all(work);
    std::filesystem::create_directories(work);
    const auto mol = work / "h2.xyz";
    {
        std::ofstream out(mol);
        out << "2\nhydrogen molecule\nH 0 0 0\nH 0 0 1.4\n";
    }
    const std::string base = "--mol " + mol.string() + " --basis sto-3g";

    if (run_cli(base + " --out " + (work / "r1").string()) != 0 ||
        run_cli(base + " --out " + (work / "r2").string()) != 0 ||
        run_cli(base + " --out " + (work / "rb").string() + " --format binary") != 0 ||
        run_cli(base + " --out " + (work / "ros").string() + " --backend os") != 0) {
        detail = "CLI run failed";
        return false;
    }

    for (const char* f : {"overlap.txt", "kinetic.txt", "nuclear.txt", "eri.txt"}) {
        if (slurp(work / "r1" / f) != slurp(work / "r2" / f)) {
            detail = std::string("outputs differ between runs: ") + f;
            return false;
        }
        if (slurp(work / "r1" / f).empty()) {
            detail = std::string("empty output: ") + f;
            return false;
        }
    }

    const auto text = parse_text_eri(work / "r1" / "eri.txt");
    const auto bin = parse_binary_eri(work / "rb" / "eri.bin");
    if (text.size() != 6 || text != bin) {
        detail = "text and binary ERI decode differently";
        return false;
    }

    const auto os_records = parse_text_eri(work / "ros" / "eri.txt");
    if (os_records.size() != text.size()) {
        detail = "backend record counts differ";
        return false;
    }
    double worst = 0.0;
    for (const auto& [key, v] : text) {
        const auto it = os_records.find(key);
        if (it == os_records.end()) {
            detail = "backend record sets differ";
            return false;
        }
        worst = std::max(worst, std::abs(v - it->second) / std::max(std::abs(v), 1e-300));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "byte-identical reruns; text == binary; os-vs-hgp %.3e", worst);
    detail = buf;
    return worst <= 1e-11;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") g_cli_path = argv[i + 1];
        if (flag == "--work") g_work_dir = argv[i + 1];
    }
    if (g_work_dir.empty()) g_work_dir = std::filesystem::temp_directory_path();

    const Criterion criteria[] = {
        {1, "kinetic-form identity (asymmetric vs symmetric)", crit_kinetic},
        {2, "Boys correctness (erf form, values at zero, downward recursion)", crit_boys},
        {3, "Gaussian product reconstruction", crit_gpt},
        {4, "one-electron integrals vs quadrature oracle", crit_one_electron_oracle},
        {5, "ERI backend triangle (six-term / transfer pipeline / oracle)", crit_backend_triangle},
        {6, "class cardinality", crit_cardinality},
        {7, "Rys rule exactness and (ss|ss) equivalence", crit_rys},
        {8, "symmetry and invariance suite", crit_symmetry},
        {9, "closed-form spot values", crit_spot_values},
        {10, "CLI determinism and round-trip", crit_cli},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const bool ok = c.run(detail);
        std::printf("%s criterion %d: %s  [%s]\n", ok ? "PASS" : "FAIL", c.number, c.title,
                    detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
