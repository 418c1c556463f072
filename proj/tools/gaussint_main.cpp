// Batch front end: molecule + basis in, integral matrices and the ERI tensor
// out. Also hosts the embedded self-test corpus.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gaussint/basis.hpp"
#include "gaussint/boys.hpp"
#include "gaussint/eri.hpp"
#include "gaussint/one_electron.hpp"
#include "gaussint/oracle.hpp"
#include "gaussint/rys.hpp"

namespace {

constexpr double kBohrPerAngstrom = 1.0 / 0.52917721092;

constexpr const char* kSto3g = R"(! STO-3G minimal basis, H through Ne
****
H 0
S 3 1.00
      3.42525091    0.15432897
      0.62391373    0.53532814
      0.16885540    0.44463454
****
He 0
S 3 1.00
      6.36242139    0.15432897
      1.15892300    0.53532814
      0.31364979    0.44463454
****
Li 0
S 3 1.00
     16.11957500    0.15432897
      2.93620070    0.53532814
      0.79465050    0.44463454
SP 3 1.00
      0.63628970   -0.09996723    0.15591627
      0.14786010    0.39951283    0.60768372
      0.04808870    0.70011547    0.39195739
****
Be 0
S 3 1.00
     30.16787100    0.15432897
      5.49511530    0.53532814
      1.48719270    0.44463454
SP 3 1.00
      1.31483310   -0.09996723    0.15591627
      0.30553890    0.39951283    0.60768372
      0.09937070    0.70011547    0.39195739
****
B 0
S 3 1.00
     48.79111300    0.15432897
      8.88736220    0.53532814
      2.40526700    0.44463454
SP 3 1.00
      2.23695610   -0.09996723    0.15591627
      0.51982050    0.39951283    0.60768372
      0.16906180    0.70011547    0.39195739
****
C 0
S 3 1.00
     71.61683700    0.15432897
     13.04509600    0.53532814
      3.53051220    0.44463454
SP 3 1.00
      2.94124940   -0.09996723    0.15591627
      0.68348310    0.39951283    0.60768372
      0.22228990    0.70011547    0.39195739
****
N 0
S 3 1.00
     99.10616900    0.15432897
     18.05231200    0.53532814
      4.88566020    0.44463454
SP 3 1.00
      3.78045590   -0.09996723    0.15591627
      0.87849660    0.39951283    0.60768372
      0.28571440    0.70011547    0.39195739
****
O 0
S 3 1.00
    130.70932000    0.15432897
     23.80886100    0.53532814
      6.44360830    0.44463454
SP 3 1.00
      5.03315130   -0.09996723    0.15591627
      1.16959610    0.39951283    0.60768372
      0.38038900    0.70011547    0.39195739
****
F 0
S 3 1.00
    166.67913000    0.15432897
     30.36081200    0.53532814
      8.21682070    0.44463454
SP 3 1.00
      6.46480320   -0.09996723    0.15591627
      1.50228120    0.39951283    0.60768372
      0.48858850    0.70011547    0.39195739
****
Ne 0
S 3 1.00
    207.01561000    0.15432897
     37.70815100    0.53532814
     10.20529700    0.44463454
SP 3 1.00
      8.24631510   -0.09996723    0.15591627
      1.91626620    0.39951283    0.60768372
      0.62322930    0.70011547    0.39195739
****
)";

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

gaussint::Molecule load_molecule(const std::string& path, bool angstrom) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": empty molecule file");
    int natoms = 0;
    try {
        natoms = std::stoi(line);
    } catch (const std::exception&) {
        throw DataError(path + ": first line must be the atom count");
    }
    std::getline(in, line);  // comment
    std::vector<gaussint::Atom> atoms;
    for (int i = 0; i < natoms; ++i) {
        if (!std::getline(in, line)) throw DataError(path + ": unexpected end of file");
        std::istringstream ls(line);
        std::string sym;
        double x, y, z;
        if (!(ls >> sym >> x >> y >> z))
            throw DataError(path + ": line " + std::to_string(i + 3) + ": expected 'Symbol x y z'");
        const double f = angstrom ? kBohrPerAngstrom : 1.0;
        atoms.push_back({sym, gaussint::element_charge(sym), {x * f, y * f, z * f}});
    }
    return gaussint::Molecule(std::move(atoms));
}

void write_matrix(const std::filesystem::path& path, const char* name,
                  const gaussint::SymmetricMatrix& m) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw DataError("cannot write file: " + path.string());
    std::fprintf(f, "# %s %d\n", name, m.dimension());
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j <= i; ++j) std::fprintf(f, "%d %d %.17g\n", i + 1, j + 1, m.at(i, j));
    std::fclose(f);
}

void write_eri_text(const std::filesystem::path& path, const std::vector<gaussint::EriRecord>& recs) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw DataError("cannot write file: " + path.string());
    for (const auto& r : recs)
        std::fprintf(f, "%u %u %u %u %.17g\n", r.i + 1, r.j + 1, r.k + 1, r.l + 1, r.value);
    std::fclose(f);
}

void write_eri_binary(const std::filesystem::path& path, const std::vector<gaussint::EriRecord>& recs) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw DataError("cannot write file: " + path.string());
    std::fwrite("GINT", 1, 4, f);
    const unsigned char version = 1;
    std::fwrite(&version, 1, 1, f);
    for (const auto& r : recs) {
        const std::uint32_t idx[4] = {r.i + 1, r.j + 1, r.k + 1, r.l + 1};
        std::fwrite(idx, sizeof(std::uint32_t), 4, f);
        std::fwrite(&r.value, sizeof(double), 1, f);
    }
    std::fclose(f);
}

int resolve_threads() {
    const char* env = std::getenv("GAUSSINT_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const long v = std::stol(env);
        return v <= 0 ? 0 : static_cast<int>(v);
    } catch (const std::exception&) {
        return 0;
    }
}

// ---------------------------------------------------------------------------
// Self-test suites. Report text depends only on the seed.
// ---------------------------------------------------------------------------

bool suite_kinetic_identity(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.5, 2.5);
    std::uniform_real_distribution<double> lexp(std::log(0.05), std::log(50.0));
    std::uniform_int_distribution<int> comp(0, 4);
    auto draw_index = [&] {
        gaussint::AngularMomentumIndex n{comp(rng), comp(rng), comp(rng)};
        while (n.total() > 4) n = {comp(rng), comp(rng), comp(rng)};
        return n;
    };
    double worst = 0.0;
    for (int i = 0; i < 250; ++i) {
        const auto n1 = draw_index();
        const auto n2 = draw_index();
        const double a1 = std::exp(lexp(rng));
        const double a2 = std::exp(lexp(rng));
        const gaussint::Vec3 A{box(rng), box(rng), box(rng)};
        const gaussint::Vec3 B{box(rng), box(rng), box(rng)};
        const auto pair = gaussint::make_pair(a1, A, a2, B);
        const double asym = gaussint::kinetic_prim_asym(pair, n1, n2, a2);
        const double sym = gaussint::kinetic_prim_sym(pair, n1, n2, a1, a2);
        double term_scale = 0.0;
        for (int d = 0; d < 3; ++d)
            term_scale += std::abs(2.0 * a1 * a2 *
                                   gaussint::overlap_prim(pair, n1.raised(d), n2.raised(d)));
        const double scale = std::max({std::abs(asym), std::abs(sym), term_scale});
        if (scale > 0.0) worst = std::max(worst, std::abs(asym - sym) / scale);
    }
    return worst <= 1e-12;
}

bool suite_boys_erf() {
    for (double T : {1e-8, 0.1, 1.0, 10.0, 100.0}) {
        const double f0 = gaussint::boys(0, T)[0];
        const double ref = 0.5 * std::sqrt(M_PI / T) * std::erf(std::sqrt(T));
        if (std::abs(f0 - ref) / ref > 1e-13) return false;
    }
    const auto at0 = gaussint::boys(16, 0.0);
    for (int m = 0; m <= 16; ++m)
        if (std::abs(at0[m] - 1.0 / (2 * m + 1)) > 1e-15) return false;
    for (double T : {0.5, 3.0, 27.0, 64.0}) {
        const auto t = gaussint::boys(16, T);
        for (int m = 0; m < 16; ++m) {
            const double rhs = (2.0 * T * t[m + 1] + std::exp(-T)) / (2 * m + 1);
            if (std::abs(t[m] - rhs) / t[m] > 1e-14) return false;
        }
    }
    return true;
}

bool suite_rys_exactness() {
    for (int n = 1; n <= 6; ++n)
        for (double T : {0.0, 0.1, 1.0, 10.0, 100.0}) {
            const auto rule = gaussint::rys_rule(n, T);
            const auto fm = gaussint::boys(2 * n - 1, T);
            for (int m = 0; m <= 2 * n - 1; ++m) {
                double s = 0.0;
                for (int i = 0; i < n; ++i)
                    s += std::pow(rule.nodes[static_cast<std::size_t>(i)], 2 * m) *
                         rule.weights[static_cast<std::size_t>(i)];
                if (std::abs(s - fm[m]) / fm[m] > 1e-10) return false;
            }
        }
    return true;
}

bool suite_backend_triangle(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    std::uniform_real_distribution<double> expd(0.15, 4.0);
    std::uniform_int_distribution<int> am(0, 2);
    auto rvec = [&] { return gaussint::Vec3{box(rng), box(rng), box(rng)}; };
    for (int trial = 0; trial < 25; ++trial) {
        const int la = am(rng), lb = am(rng), lc = am(rng), ld = am(rng);
        const gaussint::Vec3 A = rvec(), B = rvec(), C = rvec(), D = rvec();
        const double za = expd(rng), zb = expd(rng), zc = expd(rng), zd = expd(rng);
        const auto g = gaussint::make_quartet(za, A, zb, B, zc, C, zd, D);
        const auto os = gaussint::os_full_class(g, la, lb, lc, ld);
        const auto tab = gaussint::os_vrr_class(g, la + lb, lc + ld);
        const auto hgp = gaussint::hrr_transfer(tab, A - B, C - D, la, lb, lc, ld);
        const auto orc =
            gaussint::oracle::eri_by_differentiation(za, A, zb, B, zc, C, zd, D, la, lb, lc, ld);
        double scale = 0.0;
        for (double v : orc.values) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) return false;
        for (std::size_t i = 0; i < os.values.size(); ++i) {
            if (std::abs(os.values[i] - hgp.values[i]) / scale > 1e-10) return false;
            if (std::abs(os.values[i] - orc.values[i]) / scale > 1e-10) return false;
        }
    }
    // Contracted agreement on an STO-3G-like pair of contractions.
    const auto lib = gaussint::load_basis(kSto3g);
    const auto& shells = lib.shells("O");
    const gaussint::ContractedShell s1(gaussint::Vec3{0, 0, 0}, shells[1].angular_momentum,
                                       shells[1].primitives);
    const gaussint::ContractedShell p1(gaussint::Vec3{0, 0, 1.1}, shells[2].angular_momentum,
                                       shells[2].primitives);
    const auto os = gaussint::compute_class_contracted(s1, p1, p1, s1, gaussint::EriBackend::os);
    const auto hg = gaussint::compute_class_contracted(s1, p1, p1, s1, gaussint::EriBackend::hgp);
    double scale = 0.0;
    for (double v : os.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < os.values.size(); ++i)
        if (std::abs(os.values[i] - hg.values[i]) / scale > 1e-11) return false;
    return true;
}

int run_selftest(std::uint64_t seed) {
    struct Suite {
        const char* name;
        bool ok;
    };
    const Suite suites[] = {
        {"kinetic-identity", suite_kinetic_identity(seed)},
        {"boys-erf", suite_boys_erf()},
        {"rys-exactness", suite_rys_exactness()},
        {"backend-triangle", suite_backend_triangle(seed)},
    };
    bool all = true;
    for (const auto& s : suites) {
        std::printf("%s %s\n", s.ok ? "PASS" : "FAIL", s.name);
        all = all && s.ok;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaussint: molecular integrals over contracted Cartesian Gaussians"};

    std::string mol_path, basis_arg, out_dir = ".", backend_str = "hgp", format = "text";
    double screen = 1e-14;
    double t_switch = gaussint::BoysConfig{}.t_switch;
    bool angstrom = false, selftest = false, verbose = false;
    std::uint64_t seed = 12345;

    app.add_option("--mol", mol_path, "molecule file (XYZ-like, coordinates in bohr)");
    app.add_option("--basis", basis_arg, "basis file path or built-in name (sto-3g)");
    app.add_option("--backend", backend_str, "ERI backend: os, hgp, or ssss-only")
        ->check(CLI::IsMember({"os", "hgp", "ssss-only"}));
    app.add_option("--screen", screen, "quartet screening threshold (0 disables)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "ERI output format")->check(CLI::IsMember({"text", "binary"}));
    app.add_flag("--angstrom", angstrom, "molecule coordinates are in angstrom");
    app.add_option("--boys-t-switch", t_switch, "Boys large-argument switch (validated range 20..200)");
    app.add_flag("--selftest", selftest, "run the embedded invariant corpus and exit");
    app.add_option("--seed", seed, "seed for the self-test corpus");
    app.add_flag("-v,--verbose", verbose, "progress output on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    gaussint::BoysConfig boys_cfg;
    boys_cfg.t_switch = t_switch;
    if (!gaussint::boys_config_valid(boys_cfg)) {
        std::fprintf(stderr, "error: --boys-t-switch %g is out of the validated range [20, 200]\n",
                     t_switch);
        return 2;
    }
    gaussint::set_boys_config(boys_cfg);

    if (screen < 0.0) {
        std::fprintf(stderr, "error: --screen must be >= 0\n");
        return 2;
    }

    if (selftest) return run_selftest(seed);

    if (mol_path.empty() || basis_arg.empty()) {
        std::fprintf(stderr, "error: --mol and --basis are required (or use --selftest)\n");
        return 2;
    }

    gaussint::EriBackend backend = gaussint::EriBackend::hgp;
    if (backend_str == "os") backend = gaussint::EriBackend::os;
    if (backend_str == "ssss-only") backend = gaussint::EriBackend::ssss_only;

    try {
        const auto t0 = std::chrono::steady_clock::now();

        const gaussint::Molecule molecule = load_molecule(mol_path, angstrom);
        std::string lower = basis_arg;
        for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const gaussint::BasisSetLibrary library =
            gaussint::load_basis(lower == "sto-3g" ? std::string(kSto3g) : read_file(basis_arg));
        const gaussint::BasisSet basis = gaussint::build_basis(molecule, library);

        for (const auto& shell : basis.shells)
            if (shell.angular_momentum() > gaussint::kMaxAngularMomentum)
                throw DataError("unsupported angular momentum in basis (max is g)");

        if (verbose)
            std::fprintf(stderr, "basis: %zu shells, dimension %d\n", basis.shells.size(),
                         basis.dimension());

        const std::filesystem::path out(out_dir);
        std::filesystem::create_directories(out);

        const auto matrices = gaussint::build_matrices(basis, molecule);
        write_matrix(out / "overlap.txt", "overlap", matrices.S);
        write_matrix(out / "kinetic.txt", "kinetic", matrices.T);
        write_matrix(out / "nuclear.txt", "nuclear", matrices.V);

        const auto eri = gaussint::compute_all(basis, backend, screen, resolve_threads());
        if (format == "binary")
            write_eri_binary(out / "eri.bin", eri.records);
        else
            write_eri_text(out / "eri.txt", eri.records);

        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::printf("dimension %d, shells %zu; quartets computed %llu, screened %llu; "
                    "records %zu; wall %lld ms\n",
                    basis.dimension(), basis.shells.size(),
                    static_cast<unsigned long long>(eri.quartets_computed),
                    static_cast<unsigned long long>(eri.quartets_screened), eri.records.size(),
                    static_cast<long long>(ms));
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
