#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaussint/angular.hpp"
#include "gaussint/geometry.hpp"

namespace gaussint {

/// A single unnormalized Cartesian Gaussian x^nx y^ny z^nz exp(-alpha r^2)
/// centered at `center` (exponent in bohr^-2).
struct PrimitiveGaussian {
    double exponent = 1.0;
    AngularMomentumIndex index;
    Vec3 center;
};

/// One (exponent, coefficient) term of a contraction. Coefficients multiply
/// unnormalized primitives.
struct PrimitiveWeight {
    double exponent = 0.0;
    double coefficient = 0.0;
};

/// Normalization constant of a primitive: the N making the self-overlap of
/// N * x^nx y^ny z^nz exp(-alpha r^2) equal 1.
double primitive_norm(double alpha, const AngularMomentumIndex& n);

/// Normalization constant of a contraction over unnormalized primitives with
/// the given component index. Reduces to primitive_norm for a single term
/// with unit coefficient. Throws on a degenerate (non-positive self-overlap)
/// contraction.
double contracted_norm(const std::vector<PrimitiveWeight>& primitives, const AngularMomentumIndex& n);

/// A contracted shell: one center, one angular momentum, a shared primitive
/// expansion. Expands to shell_size(angular_momentum) Cartesian functions.
/// Primitives are canonicalized to strictly decreasing exponent order
/// (duplicate exponents merged). Immutable after construction.
class ContractedShell {
  public:
    ContractedShell(const Vec3& center, int angular_momentum, std::vector<PrimitiveWeight> primitives);

    const Vec3& center() const { return center_; }
    int angular_momentum() const { return l_; }
    const std::vector<PrimitiveWeight>& primitives() const { return primitives_; }
    int size() const { return shell_size(l_); }

  private:
    Vec3 center_;
    int l_ = 0;
    std::vector<PrimitiveWeight> primitives_;
};

struct Atom {
    std::string symbol;
    int charge = 0;  ///< nuclear charge Z
    Vec3 position;   ///< bohr
};

/// A molecule: at least one atom, finite positions, Z >= 1.
class Molecule {
  public:
    explicit Molecule(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

  private:
    std::vector<Atom> atoms_;
};

/// Nuclear charge for an element symbol (H..Kr), case-insensitive.
/// Throws std::invalid_argument for unknown symbols.
int element_charge(std::string_view symbol);

/// A shell template from a basis-set file: angular momentum plus the
/// primitive expansion, with coefficients already converted to multiply
/// unnormalized primitives.
struct ShellTemplate {
    int angular_momentum = 0;
    std::vector<PrimitiveWeight> primitives;
};

/// Element symbol -> shell templates, in file order.
class BasisSetLibrary {
  public:
    void add(const std::string& element, ShellTemplate shell);
    bool has(std::string_view element) const;
    const std::vector<ShellTemplate>& shells(std::string_view element) const;
    const std::map<std::string, std::vector<ShellTemplate>>& elements() const { return elements_; }

  private:
    std::map<std::string, std::vector<ShellTemplate>> elements_;
};

/// Parse a Gaussian94-style basis file. Errors carry the offending line
/// number. File coefficients are interpreted as multiplying normalized
/// primitives and are converted on ingestion.
BasisSetLibrary load_basis(std::string_view text);

/// Write a library back in the same grammar (S/P emitted separately).
std::string serialize_basis(const BasisSetLibrary& library);

/// One Cartesian basis function: a shell component plus its per-component
/// normalization constant.
struct BasisFunction {
    int shell = 0;
    AngularMomentumIndex index;
    double norm = 1.0;
};

/// A placed basis: shells on atomic centers (atom order, then library order)
/// plus the flattened, individually normalized function list.
struct BasisSet {
    std::vector<ContractedShell> shells;
    std::vector<BasisFunction> functions;
    std::vector<int> shell_first_function;

    int dimension() const { return static_cast<int>(functions.size()); }
};

/// Place library shells on the molecule's atoms. Throws if an element is
/// missing from the library.
BasisSet build_basis(const Molecule& molecule, const BasisSetLibrary& library);

}  // namespace gaussint
