#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/equivariant.hpp"

using namespace sw;

TEST_CASE("permutation specs") {
    CHECK(parse_permutation("flip", 4) == std::vector<int>{3, 2, 1, 0});
    CHECK(parse_permutation("id", 3) == std::vector<int>{0, 1, 2});
    CHECK(parse_permutation("1,0", 2) == std::vector<int>{1, 0});
    CHECK_THROWS(parse_permutation("0,0", 2));
}

TEST_CASE("sl(3|2) with the flip folds to osp(3|2)") {
    Folding F = fold(build_sl(3, 2), "flip");
    CHECK(F.nu.order == 2);
    CHECK(F.type.label == "osp(3|2)");
    CHECK(F.fixed.dim() == 12);
    CHECK(F.dec.dims() == std::vector<int>{12, 12});
    CHECK(F.dec.bracket_compatible);
    CHECK(homomorphism_violations(F.g, F.nu).empty());
    CHECK(check_axioms(F.fixed).ok());
    StructuralReport S = structural_checks(F.g, F.nu, F.fixed, F.dec);
    CHECK(S.ok());
    for (const auto& c : S.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
        CHECK_FALSE(c.skipped);
    }
}

TEST_CASE("osp(2|2) with the flip folds to osp(1|2)") {
    Folding F = fold(build_osp(2, 2), "flip");
    CHECK(F.type.label == "osp(1|2)");
    CHECK(F.fixed.dim() == 5);
    CHECK(F.dec.dims() == std::vector<int>{5, 3});
    CHECK(structural_checks(F.g, F.nu, F.fixed, F.dec).ok());
}

TEST_CASE("identity folds") {
    for (const auto& L : {build_sl(2, 1), build_osp(1, 2), build_osp(3, 2)}) {
        Folding F = fold(L, "id");
        CAPTURE(L.name());
        CHECK(F.nu.order == 1);
        CHECK(F.type.label == L.name());
        CHECK(F.fixed.dim() == L.dim());
        CHECK(F.dec.dims() == std::vector<int>{L.dim()});
    }
    // coordinate names survive, so the fixed base is the standard one
    CHECK(fold(build_osp(3, 2), "id").fixed_rs.base_label == "d1>e1");
}

TEST_CASE("automorphism order and eigenvalues") {
    SuperAlgebra L = build_sl(3, 2);
    RootSystem rs = distinguished_simple_roots(root_decomposition(L, cartan_subalgebra(L)));
    TriangularDecomposition td = triangular_decomposition(L, rs);
    // the flip is not a symmetry of the distinguished diagram of sl(3|2)
    CHECK_FALSE(cartan_compatible(td, {3, 2, 1, 0}, CycScalar(1)));
    Automorphism id = identity_automorphism(L);
    CHECK(id.order == 1);
    CHECK(homomorphism_violations(L, id).empty());
}

TEST_CASE("h_Gamma lies in the fixed points") {
    Folding F = fold(build_sl(3, 2), "flip");
    for (const auto& h : F.h_gamma) CHECK(F.nu.apply(h) == h);
    CHECK(static_cast<int>(F.h_gamma.size()) == F.fixed_rs.rank());
}

TEST_CASE("eigenspace components are eigenvectors") {
    Folding F = fold(build_osp(2, 2), "flip");
    for (int s = 0; s < F.dec.order(); ++s) {
        CycScalar z = CycScalar::zeta(F.dec.conductor, s);
        for (const auto& x : F.dec.components[s]) CHECK(F.nu.apply(x) == scaled(x, z));
    }
}

TEST_CASE("condition C for the fixed subalgebras") {
    for (auto [L, perm] : std::vector<std::pair<SuperAlgebra, std::string>>{{build_sl(3, 2), "flip"}, {build_osp(2, 2), "flip"}}) {
        Folding F = fold(L, perm);
        ConditionC C = check_condition_C(F.fixed, F.fixed_rs);
        CHECK(C.holds);
        CHECK(C.parity == 0);
    }
}
