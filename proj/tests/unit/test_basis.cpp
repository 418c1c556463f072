#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gaussint/basis.hpp"
#include "gaussint/oracle.hpp"

using namespace gaussint;

namespace {

constexpr const char* kHydrogenSto3g = R"(H 0
S 3 1.00
      3.42525091    0.15432897
      0.62391373    0.53532814
      0.16885540    0.44463454
****
)";

}  // namespace

TEST_CASE("primitive normalization constants") {
    CHECK(primitive_norm(1.0, {0, 0, 0}) == doctest::Approx(0.71270547).epsilon(1e-8));
    CHECK(primitive_norm(1.0, {1, 0, 0}) == doctest::Approx(1.42541094).epsilon(1e-8));
    CHECK(primitive_norm(0.5, {0, 0, 0}) == doctest::Approx(0.42377721).epsilon(1e-8));
    CHECK_THROWS_AS(primitive_norm(0.0, {0, 0, 0}), std::domain_error);
}

TEST_CASE("normalized primitives have unit self-overlap (quadrature)") {
    for (double alpha : {0.1, 1.0, 10.0}) {
        for (int lambda = 0; lambda <= 4; ++lambda) {
            for (const auto& n : cartesian_components(lambda)) {
                const double N = primitive_norm(alpha, n);
                PrimitiveGaussian g{alpha, n, {0.2, -0.4, 0.1}};
                const double so =
                    oracle::quadrature_one_electron(oracle::OneElectronKind::overlap, g, g);
                CHECK(N * N * so == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("contracted norm reduces to the primitive norm") {
    for (double alpha : {0.3, 1.0, 7.5}) {
        for (const auto& n : {AngularMomentumIndex{0, 0, 0}, AngularMomentumIndex{2, 0, 1}}) {
            const double a = contracted_norm({{alpha, 1.0}}, n);
            const double b = primitive_norm(alpha, n);
            CHECK(std::abs(a - b) / b < 1e-14);
        }
    }
    // 0.5 g + 0.5 g = g
    CHECK(contracted_norm({{1.0, 0.5}, {1.0, 0.5}}, {0, 0, 0}) ==
          doctest::Approx(primitive_norm(1.0, {0, 0, 0})).epsilon(1e-14));
}

TEST_CASE("contracted norm errors") {
    CHECK_THROWS_AS(contracted_norm({}, {0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(contracted_norm({{1.0, 0.0}, {2.0, 0.0}}, {0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(contracted_norm({{-1.0, 1.0}}, {0, 0, 0}), std::domain_error);
}

TEST_CASE("STO-3G hydrogen contraction normalizes to unit self-overlap") {
    const auto lib = load_basis(kHydrogenSto3g);
    const auto& tmpl = lib.shells("H").at(0);
    const double N = contracted_norm(tmpl.primitives, {0, 0, 0});
    // quadrature of the contracted self-overlap
    double so = 0.0;
    for (const auto& pi : tmpl.primitives)
        for (const auto& pj : tmpl.primitives) {
            PrimitiveGaussian gi{pi.exponent, {0, 0, 0}, {0, 0, 0}};
            PrimitiveGaussian gj{pj.exponent, {0, 0, 0}, {0, 0, 0}};
            so += pi.coefficient * pj.coefficient *
                  oracle::quadrature_one_electron(oracle::OneElectronKind::overlap, gi, gj);
        }
    CHECK(N * N * so == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("minimal basis file") {
    const auto lib = load_basis("H 0\nS 1 1.00\n1.0 1.0\n****\n");
    REQUIRE(lib.has("H"));
    const auto& shells = lib.shells("h");  // case-insensitive lookup
    REQUIRE(shells.size() == 1);
    CHECK(shells[0].angular_momentum == 0);
    REQUIRE(shells[0].primitives.size() == 1);
    CHECK(shells[0].primitives[0].exponent == 1.0);
    // file coefficient 1.0 over the normalized primitive
    CHECK(shells[0].primitives[0].coefficient ==
          doctest::Approx(primitive_norm(1.0, {0, 0, 0})).epsilon(1e-14));
}

TEST_CASE("STO-3G hydrogen block parses in decreasing-exponent order") {
    const auto lib = load_basis(kHydrogenSto3g);
    const auto& prims = lib.shells("H").at(0).primitives;
    REQUIRE(prims.size() == 3);
    CHECK(prims[0].exponent == doctest::Approx(3.42525091));
    CHECK(prims[1].exponent == doctest::Approx(0.62391373));
    CHECK(prims[2].exponent == doctest::Approx(0.16885540));
    CHECK(prims[0].exponent > prims[1].exponent);
    CHECK(prims[1].exponent > prims[2].exponent);
}

TEST_CASE("SP combined shell yields two templates sharing exponents") {
    const auto lib = load_basis(
        "O 0\nSP 2 1.00\n5.0331513 -0.09996723 0.15591627\n1.1695961 0.39951283 0.60768372\n****\n");
    const auto& shells = lib.shells("O");
    REQUIRE(shells.size() == 2);
    CHECK(shells[0].angular_momentum == 0);
    CHECK(shells[1].angular_momentum == 1);
    REQUIRE(shells[0].primitives.size() == 2);
    REQUIRE(shells[1].primitives.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(shells[0].primitives[i].exponent == shells[1].primitives[i].exponent);
}

TEST_CASE("fortran D exponents and case-insensitive letters") {
    const auto lib = load_basis("He 0\ns 1 1.00\n1.0D+01 1.0\n****\n");
    CHECK(lib.shells("HE").at(0).primitives.at(0).exponent == doctest::Approx(10.0));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(load_basis("H 0\nQ 1 1.00\n1.0 1.0\n****\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_basis("H 0\nS 1 1.00\n-1.0 1.0\n****\n"),
                         doctest::Contains("line 3"), std::runtime_error);
    CHECK_THROWS_AS(load_basis("H 0\nS 1 1.00\n1.0 1.0\n"), std::runtime_error);  // no ****
    CHECK_THROWS_AS(load_basis("H 0\nS 1 1.00\nbogus 1.0\n****\n"), std::runtime_error);
}

TEST_CASE("load/serialize round-trip is idempotent on the parsed form") {
    const char* text =
        "H 0\nS 2 1.00\n3.0 0.5\n0.5 0.6\n****\nO 0\nSP 2 1.00\n5.0 -0.1 0.2\n1.2 0.4 0.6\n****\n";
    const auto lib1 = load_basis(text);
    const auto ser1 = serialize_basis(lib1);
    const auto lib2 = load_basis(ser1);
    const auto ser2 = serialize_basis(lib2);
    CHECK(ser1 == ser2);

    REQUIRE(lib2.shells("O").size() == lib1.shells("O").size());
    for (std::size_t s = 0; s < lib1.shells("O").size(); ++s) {
        const auto& t1 = lib1.shells("O")[s];
        const auto& t2 = lib2.shells("O")[s];
        CHECK(t1.angular_momentum == t2.angular_momentum);
        REQUIRE(t1.primitives.size() == t2.primitives.size());
        for (std::size_t i = 0; i < t1.primitives.size(); ++i) {
            CHECK(t1.primitives[i].exponent == t2.primitives[i].exponent);
            CHECK(t1.primitives[i].coefficient == doctest::Approx(t2.primitives[i].coefficient).epsilon(1e-15));
        }
    }
}

TEST_CASE("molecule invariants") {
    CHECK_THROWS_AS(Molecule(std::vector<Atom>{}), std::domain_error);
    CHECK_THROWS_AS(Molecule({{"H", 0, {0, 0, 0}}}), std::domain_error);
    CHECK_THROWS_AS(Molecule({{"H", 1, {std::nan(""), 0, 0}}}), std::domain_error);
    CHECK(element_charge("o") == 8);
    CHECK(element_charge("Kr") == 36);
    CHECK_THROWS_AS(element_charge("Xx"), std::invalid_argument);
}

TEST_CASE("build_basis placement and dimension") {
    const auto lib = load_basis(kHydrogenSto3g);
    const Molecule h2({{"H", 1, {0, 0, 0}}, {"H", 1, {0, 0, 1.4}}});
    const auto basis = build_basis(h2, lib);
    CHECK(basis.shells.size() == 2);
    CHECK(basis.dimension() == 2);
    CHECK(basis.shell_first_function == std::vector<int>{0, 1});

    // s + d template on one atom: dimension 1 + 6
    BasisSetLibrary lib2;
    lib2.add("He", {0, {{1.0, 1.0}}});
    lib2.add("He", {2, {{0.8, 1.0}}});
    const auto basis2 = build_basis(Molecule({{"He", 2, {0, 0, 0}}}), lib2);
    CHECK(basis2.dimension() == 7);

    CHECK_THROWS_AS(build_basis(Molecule({{"Li", 3, {0, 0, 0}}}), lib), std::invalid_argument);
}

TEST_CASE("shell canonicalization merges duplicate exponents") {
    const ContractedShell s({0, 0, 0}, 0, {{1.0, 0.25}, {2.0, 0.5}, {1.0, 0.25}});
    REQUIRE(s.primitives().size() == 2);
    CHECK(s.primitives()[0].exponent == 2.0);
    CHECK(s.primitives()[1].coefficient == 0.5);
}
