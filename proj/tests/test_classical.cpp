#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/equivariant.hpp"

using namespace sw;

namespace {

RootSystem dist(const SuperAlgebra& L) { return distinguished_simple_roots(root_decomposition(L, cartan_subalgebra(L))); }

std::vector<std::vector<CycScalar>> mat(std::vector<std::vector<Rat>> rows) {
    std::vector<std::vector<CycScalar>> out;
    for (auto& r : rows) {
        out.emplace_back();
        for (auto& x : r) out.back().emplace_back(x);
    }
    return out;
}

std::pair<int, int> root_counts(const RootSystem& rs) {
    int ev = 0, od = 0;
    for (const auto& r : rs.roots) (r.parity ? od : ev)++;
    return {ev, od};
}

}  // namespace

TEST_CASE("root counts") {
    // sl(m|n): m(m-1) + n(n-1) even, 2mn odd
    CHECK(root_counts(dist(build_sl(2, 1))) == std::pair{2, 4});
    CHECK(root_counts(dist(build_sl(3, 2))) == std::pair{8, 12});
    // osp(2k+1|2n): 2k^2 + 2n^2 even, 2n(2k+1) odd
    CHECK(root_counts(dist(build_osp(1, 2))) == std::pair{2, 2});
    CHECK(root_counts(dist(build_osp(3, 2))) == std::pair{4, 6});
    CHECK(root_counts(dist(build_osp(1, 4))) == std::pair{8, 4});
    // osp(2|2n): 2n^2 even, 4n odd
    CHECK(root_counts(dist(build_osp(2, 2))) == std::pair{2, 4});
}

TEST_CASE("root spaces are one dimensional and the Cartan is the zero weight space") {
    for (const auto& L : {build_sl(3, 2), build_osp(3, 2), build_osp(2, 2)}) {
        RootSystem rs = dist(L);
        int total = rs.rank();
        for (const auto& r : rs.roots) {
            CHECK(r.space.size() == 1);
            total += static_cast<int>(r.space.size());
        }
        CHECK(total == L.dim());
    }
}

TEST_CASE("distinguished bases have one odd simple root") {
    for (const auto& L : {build_sl(2, 1), build_sl(3, 2), build_osp(1, 2), build_osp(2, 2), build_osp(3, 2)}) {
        RootSystem rs = dist(L);
        CAPTURE(L.name());
        CHECK(rs.distinguished);
        CHECK(rs.odd_simple_count() == 1);
        CHECK(static_cast<int>(rs.simple.size()) == rs.rank());
    }
}

TEST_CASE("Cartan matrices") {
    CHECK(triangular_decomposition(build_sl(2, 1), dist(build_sl(2, 1))).cartan_matrix == mat({{2, -1}, {-1, 0}}));
    CHECK(triangular_decomposition(build_osp(1, 2), dist(build_osp(1, 2))).cartan_matrix == mat({{2}}));
    CHECK(triangular_decomposition(build_osp(3, 2), dist(build_osp(3, 2))).cartan_matrix ==
          mat({{0, Rat(-1, 2)}, {-2, 2}}));
    CHECK(triangular_decomposition(build_osp(1, 4), dist(build_osp(1, 4))).cartan_matrix == mat({{2, -1}, {-2, 2}}));
    auto sl32 = triangular_decomposition(build_sl(3, 2), dist(build_sl(3, 2))).cartan_matrix;
    CHECK(sl32 == mat({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 0, 1}, {0, 0, -1, 2}}));
}

TEST_CASE("Chevalley relations") {
    SuperAlgebra L = build_osp(3, 2);
    RootSystem rs = dist(L);
    TriangularDecomposition td = triangular_decomposition(L, rs);
    int r = static_cast<int>(td.e.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Element b = bracket(L, td.e[i], td.f[j]);
            if (i == j)
                CHECK(b == td.hc[i]);
            else
                CHECK(b.empty());
            // [h_i, e_j] = a_ij e_j
            CHECK(bracket(L, td.hc[i], td.e[j]) == scaled(td.e[j], td.cartan_matrix[i][j]));
        }
}

TEST_CASE("triangular decomposition covers the algebra") {
    for (const auto& L : {build_sl(3, 2), build_osp(3, 2)}) {
        TriangularDecomposition td = triangular_decomposition(L, dist(L));
        CHECK(td.n_minus.size() + td.h.size() + td.n_plus.size() == static_cast<std::size_t>(L.dim()));
        CHECK(td.n_minus.size() == td.n_plus.size());
    }
}

TEST_CASE("Z gradings") {
    // sl(m|n) is of type I, osp(3|2) of type II
    CHECK(z_grading(build_sl(2, 1), dist(build_sl(2, 1))).type == "I");
    CHECK(z_grading(build_osp(3, 2), dist(build_osp(3, 2))).type == "II");
}

TEST_CASE("condition C on distinguished bases") {
    for (const auto& L : {build_osp(1, 2), build_osp(3, 2), build_osp(1, 4)}) {
        RootSystem rs = dist(L);
        ConditionC C = check_condition_C(L, rs);
        CAPTURE(L.name());
        CHECK(C.holds);
        CHECK(C.parity == 0);
        CHECK(rs.find(C.theta) >= 0);
    }
    // for sl(m|n) the lowest root -(e1 - d_n) is odd
    CHECK_FALSE(check_condition_C(build_sl(2, 1), dist(build_sl(2, 1))).holds);
}

TEST_CASE("identify_type") {
    for (const auto& L : {build_sl(2, 1), build_sl(3, 2), build_osp(1, 2), build_osp(3, 2), build_osp(2, 2)})
        CHECK(identify_type(L).label == L.name());
}

TEST_CASE("coroots") {
    SuperAlgebra L = build_osp(3, 2);
    RootSystem rs = dist(L);
    for (int r : rs.positive()) {
        Element h = coroot(L, rs, r);
        CycScalar v = evaluate(L, rs, rs.roots[r].value, h);
        // normalized to 2 unless the root is isotropic
        if (!v.is_zero()) CHECK(v == CycScalar(2));
    }
}

TEST_CASE("weight strings") { CHECK(weight_string({CycScalar(1), CycScalar(Rat(-1, 2))}) == "(1, -1/2)"); }
