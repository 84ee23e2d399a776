#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/classical.hpp"

#include <sstream>

using namespace sw;

namespace {

int sl_dim(int m, int n) { return (m + n) * (m + n) - 1; }
int osp_dim(int m, int n) { return m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n; }

}  // namespace

TEST_CASE("dimensions of sl(m|n)") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {3, 1}, {3, 2}, {1, 3}}) {
        SuperAlgebra L = build_sl(m, n);
        CAPTURE(L.name());
        CHECK(L.dim() == sl_dim(m, n));
        CHECK(L.even_dim() == m * m + n * n - 1);
        CHECK(L.odd_dim() == 2 * m * n);
    }
}

TEST_CASE("dimensions of osp(m|2n)") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {4, 1}}) {
        SuperAlgebra L = build_osp(m, 2 * n);
        CAPTURE(L.name());
        CHECK(L.dim() == osp_dim(m, n));
        CHECK(L.odd_dim() == 2 * m * n);
    }
}

TEST_CASE("axioms hold for the constructed algebras") {
    for (const auto& L : {build_sl(2, 1), build_sl(3, 2), build_osp(1, 2), build_osp(2, 2), build_osp(3, 2)}) {
        CAPTURE(L.name());
        AxiomReport r = check_axioms(L);
        CHECK(r.ok());
        CHECK(r.checked_triples > 0);
    }
}

TEST_CASE("a broken bracket is reported") {
    SuperAlgebra L = build_sl(2, 1);
    SuperAlgebra bad = algebra_from_string(algebra_to_string(L));
    // flip the sign of one structure constant
    for (int i = 0; i < bad.dim(); ++i)
        for (int j = i; j < bad.dim(); ++j)
            if (!bad.stored(i, j).empty()) {
                bad.set_bracket(i, j, scaled(bad.stored(i, j), CycScalar(-2)));
                CHECK_FALSE(check_axioms(bad).ok());
                return;
            }
}

TEST_CASE("file round trip is exact") {
    for (const auto& L : {build_sl(3, 2), build_osp(3, 2), build_osp(2, 2, 4)}) {
        std::string s = algebra_to_string(L);
        SuperAlgebra R = algebra_from_string(s);
        CHECK(algebra_to_string(R) == s);
        CHECK(R.dim() == L.dim());
        CHECK(R.conductor() == L.conductor());
    }
}

TEST_CASE("lifting the conductor keeps the brackets") {
    SuperAlgebra L = build_osp(1, 2);
    SuperAlgebra M = lift_conductor(L, 4);
    CHECK(M.conductor() == 4);
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) CHECK(M.bracket_basis(i, j) == L.bracket_basis(i, j));
}

TEST_CASE("Killing form is supersymmetric and invariant") {
    SuperAlgebra L = build_osp(3, 2);
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            Element x = SparseVec::unit(i), y = SparseVec::unit(j);
            CycScalar sign = (L.parity(i) & L.parity(j)) ? CycScalar(-1) : CycScalar(1);
            CHECK(killing_form(L, x, y) == sign * killing_form(L, y, x));
            for (int k = 0; k < L.dim(); k += 3) {
                Element z = SparseVec::unit(k);
                CHECK(killing_form(L, bracket(L, x, y), z) == killing_form(L, x, bracket(L, y, z)));
            }
        }
}

TEST_CASE("supertrace of the identity") {
    // str(1) = m - n on C^{m|n}
    SuperAlgebra L = build_sl(3, 2);
    REQUIRE(L.realization());
    const auto& R = *L.realization();
    CHECK(supertrace(R.row_parity, SparseMatrix::identity(R.size)) == CycScalar(1));
}

TEST_CASE("subalgebra closure") {
    SuperAlgebra L = build_sl(2, 1);
    RootSystem rs = distinguished_simple_roots(root_decomposition(L, cartan_subalgebra(L)));
    TriangularDecomposition td = triangular_decomposition(L, rs);
    // the even simple root generates a copy of sl(2)
    SuperAlgebra S = subalgebra_closure(L, {td.e[0], td.f[0]});
    CHECK(S.dim() == 3);
    CHECK(S.odd_dim() == 0);
    CHECK(check_axioms(S).ok());
    REQUIRE(S.embedding());
    CHECK(S.embedding()->parent_dim == L.dim());
    // all Chevalley generators generate everything
    std::vector<Element> gens = td.e;
    gens.insert(gens.end(), td.f.begin(), td.f.end());
    CHECK(subalgebra_closure(L, gens).dim() == L.dim());
}
