#include "gaussint/basis.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gaussint {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

std::string canonical_symbol(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

constexpr std::array<std::string_view, 36> kElements = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr"};

}  // namespace

double primitive_norm(double alpha, const AngularMomentumIndex& n) {
    if (alpha <= 0.0) throw std::domain_error("primitive exponent must be positive");
    const int l = n.total();
    const double df = double_factorial(2 * n.nx - 1) * double_factorial(2 * n.ny - 1) *
                      double_factorial(2 * n.nz - 1);
    return std::pow(2.0 / std::numbers::pi, 0.75) * ipow(2.0, l) *
           std::pow(alpha, 0.25 * (2 * l + 3)) / std::sqrt(df);
}

double contracted_norm(const std::vector<PrimitiveWeight>& primitives, const AngularMomentumIndex& n) {
    if (primitives.empty()) throw std::domain_error("empty contraction");
    const int l = n.total();
    double s = 0.0;
    for (const auto& pi : primitives) {
        if (pi.exponent <= 0.0) throw std::domain_error("primitive exponent must be positive");
        for (const auto& pj : primitives)
            s += pi.coefficient * pj.coefficient / std::pow(pi.exponent + pj.exponent, l + 1.5);
    }
    if (!(s > 0.0)) throw std::domain_error("degenerate contraction: self-overlap is not positive");
    const double df = double_factorial(2 * n.nx - 1) * double_factorial(2 * n.ny - 1) *
                      double_factorial(2 * n.nz - 1);
    const double so = std::pow(std::numbers::pi, 1.5) * df / ipow(2.0, l) * s;
    return 1.0 / std::sqrt(so);
}

ContractedShell::ContractedShell(const Vec3& center, int angular_momentum,
                                 std::vector<PrimitiveWeight> primitives)
    : center_(center), l_(angular_momentum), primitives_(std::move(primitives)) {
    if (l_ < 0) throw std::domain_error("negative angular momentum");
    if (primitives_.empty()) throw std::domain_error("shell needs at least one primitive");
    for (const auto& p : primitives_)
        if (p.exponent <= 0.0) throw std::domain_error("primitive exponent must be positive");
    std::stable_sort(primitives_.begin(), primitives_.end(),
                     [](const PrimitiveWeight& a, const PrimitiveWeight& b) { return a.exponent > b.exponent; });
    // Merge equal exponents so the stored order is strictly decreasing.
    std::vector<PrimitiveWeight> merged;
    for (const auto& p : primitives_) {
        if (!merged.empty() && merged.back().exponent == p.exponent)
            merged.back().coefficient += p.coefficient;
        else
            merged.push_back(p);
    }
    primitives_ = std::move(merged);
}

Molecule::Molecule(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::domain_error("molecule needs at least one atom");
    for (auto& a : atoms_) {
        if (a.charge < 1) throw std::domain_error("nuclear charge must be >= 1");
        for (int i = 0; i < 3; ++i)
            if (!std::isfinite(a.position[i])) throw std::domain_error("non-finite atomic position");
        a.symbol = canonical_symbol(a.symbol);
    }
}

int element_charge(std::string_view symbol) {
    const std::string canon = canonical_symbol(symbol);
    for (std::size_t i = 0; i < kElements.size(); ++i)
        if (kElements[i] == canon) return static_cast<int>(i) + 1;
    throw std::invalid_argument("unknown element symbol: " + canon);
}

void BasisSetLibrary::add(const std::string& element, ShellTemplate shell) {
    elements_[canonical_symbol(element)].push_back(std::move(shell));
}

bool BasisSetLibrary::has(std::string_view element) const {
    return elements_.count(canonical_symbol(element)) > 0;
}

const std::vector<ShellTemplate>& BasisSetLibrary::shells(std::string_view element) const {
    auto it = elements_.find(canonical_symbol(element));
    if (it == elements_.end())
        throw std::invalid_argument("element not present in basis library: " + canonical_symbol(element));
    return it->second;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("basis parse error at line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& tok, int line) {
    std::string t = tok;
    for (char& ch : t)
        if (ch == 'D' || ch == 'd') ch = 'e';
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "expected a number, got '" + tok + "'");
    }
    if (pos != t.size()) parse_fail(line, "trailing characters in number '" + tok + "'");
    return v;
}

int angular_letter(const std::string& letters, int line) {
    if (letters == "S") return 0;
    if (letters == "P") return 1;
    if (letters == "D") return 2;
    if (letters == "F") return 3;
    parse_fail(line, "unknown angular-momentum letter '" + letters + "'");
}

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto bang = raw.find('!'); bang != std::string::npos) raw.erase(bang);
        std::istringstream ls(raw);
        Line l;
        l.number = number;
        std::string tok;
        while (ls >> tok) l.tokens.push_back(tok);
        if (!l.tokens.empty()) lines.push_back(std::move(l));
    }
    return lines;
}

/// Convert a file coefficient (over a normalized primitive) to the internal
/// coefficient over the unnormalized primitive. The reference component
/// (lambda, 0, 0) fixes only a shell-level scale that the per-function
/// normalization absorbs.
double to_unnormalized(double coefficient, double exponent, int l) {
    return coefficient * primitive_norm(exponent, AngularMomentumIndex{l, 0, 0});
}

}  // namespace

BasisSetLibrary load_basis(std::string_view text) {
    BasisSetLibrary lib;
    const auto lines = tokenize(text);
    std::size_t pos = 0;

    while (pos < lines.size()) {
        // Separators before the first element block are tolerated.
        if (lines[pos].tokens[0] == "****") {
            ++pos;
            continue;
        }
        const Line& header = lines[pos];
        if (header.tokens.size() != 2 || header.tokens[1] != "0")
            parse_fail(header.number, "expected element header '<Symbol> 0'");
        const std::string element = canonical_symbol(header.tokens[0]);
        ++pos;

        bool closed = false;
        while (pos < lines.size()) {
            if (lines[pos].tokens[0] == "****") {
                ++pos;
                closed = true;
                break;
            }
            const Line& shell_header = lines[pos];
            if (shell_header.tokens.size() != 3)
                parse_fail(shell_header.number, "expected shell header '<L> <nprim> <scale>'");
            std::string letters = shell_header.tokens[0];
            for (char& ch : letters) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            const bool is_sp = letters == "SP";
            const int nprim = static_cast<int>(parse_number(shell_header.tokens[1], shell_header.number));
            const double scale = parse_number(shell_header.tokens[2], shell_header.number);
            if (nprim < 1) parse_fail(shell_header.number, "primitive count must be >= 1");
            if (scale <= 0.0) parse_fail(shell_header.number, "scale factor must be positive");
            const int l = is_sp ? 0 : angular_letter(letters, shell_header.number);
            ++pos;

            std::vector<PrimitiveWeight> prim_s, prim_p;
            for (int i = 0; i < nprim; ++i, ++pos) {
                if (pos >= lines.size())
                    parse_fail(shell_header.number, "unexpected end of file inside shell block");
                const Line& data = lines[pos];
                const std::size_t want = is_sp ? 3 : 2;
                if (data.tokens.size() != want)
                    parse_fail(data.number, "expected " + std::to_string(want) + " numbers");
                const double raw_exp = parse_number(data.tokens[0], data.number);
                if (raw_exp <= 0.0) parse_fail(data.number, "exponent must be positive");
                const double exponent = raw_exp * scale * scale;
                const double c0 = parse_number(data.tokens[1], data.number);
                if (is_sp) {
                    const double c1 = parse_number(data.tokens[2], data.number);
                    prim_s.push_back({exponent, to_unnormalized(c0, exponent, 0)});
                    prim_p.push_back({exponent, to_unnormalized(c1, exponent, 1)});
                } else {
                    prim_s.push_back({exponent, to_unnormalized(c0, exponent, l)});
                }
            }
            lib.add(element, ShellTemplate{l, std::move(prim_s)});
            if (is_sp) lib.add(element, ShellTemplate{1, std::move(prim_p)});
        }
        if (!closed) parse_fail(lines.back().number, "element block not terminated by '****'");
    }
    return lib;
}

std::string serialize_basis(const BasisSetLibrary& library) {
    static constexpr const char* kLetters = "SPDF";
    std::string out;
    char buf[64];
    for (const auto& [element, shells] : library.elements()) {
        out += element;
        out += " 0\n";
        for (const auto& shell : shells) {
            std::snprintf(buf, sizeof buf, "%c %zu 1.00\n", kLetters[shell.angular_momentum],
                          shell.primitives.size());
            out += buf;
            for (const auto& p : shell.primitives) {
                const double file_coef =
                    p.coefficient /
                    primitive_norm(p.exponent, AngularMomentumIndex{shell.angular_momentum, 0, 0});
                std::snprintf(buf, sizeof buf, "  %.17g %.17g\n", p.exponent, file_coef);
                out += buf;
            }
        }
        out += "****\n";
    }
    return out;
}

BasisSet build_basis(const Molecule& molecule, const BasisSetLibrary& library) {
    BasisSet basis;
    for (const auto& atom : molecule.atoms()) {
        for (const auto& tmpl : library.shells(atom.symbol)) {
            const int shell_idx = static_cast<int>(basis.shells.size());
            basis.shells.emplace_back(atom.position, tmpl.angular_momentum, tmpl.primitives);
            basis.shell_first_function.push_back(basis.dimension());
            for (const auto& n : cartesian_components(tmpl.angular_momentum))
                basis.functions.push_back({shell_idx, n, contracted_norm(tmpl.primitives, n)});
        }
    }
    return basis;
}

}  // namespace gaussint
