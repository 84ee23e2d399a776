#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/exactcore.hpp"

using namespace sw;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    // Euler phi
    int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int m = 1; m <= kMaxConductor; ++m) CHECK(cyclotomic_degree(m) == phi[m]);
}

TEST_CASE("roots of unity") {
    CycScalar i = CycScalar::zeta(4);
    CHECK(i * i == CycScalar(-1));
    CycScalar w = CycScalar::zeta(3);
    CHECK(w + w * w == CycScalar(-1));
    CHECK(CycScalar::zeta(3, 3) == CycScalar(1));
    CHECK(CycScalar::zeta(12, 6) == CycScalar(-1));
    CycScalar z8 = CycScalar::zeta(8);
    CHECK(z8 * z8 == CycScalar::zeta(8, 2));
    CHECK((z8 * z8).with_conductor(8) == CycScalar::zeta(8, 2));
    CHECK(CycScalar::zeta(2) == CycScalar(-1));
}

TEST_CASE("rational scalars") {
    CycScalar a(Rat(3, 4));
    CHECK(a.conductor() == 0);
    CHECK(a.is_rational());
    CHECK(a.str() == "3/4");
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK(CycScalar::parse("3/4", 0) == a);
}

TEST_CASE("conductor mixing") {
    CycScalar i = CycScalar::zeta(4);
    CycScalar w = CycScalar::zeta(3);
    CHECK_THROWS_AS(i + w, ConductorError);
    CHECK((i + CycScalar(2)).conductor() == 4);
}

TEST_CASE("inverse in Q(zeta_5)") {
    CycScalar z = CycScalar::zeta(5);
    CycScalar x = CycScalar(1) + z * z * CycScalar(Rat(2, 3));
    CHECK((x * x.inverse()).is_one());
    CHECK(CycScalar::parse(x.str(), 5) == x);
}

TEST_CASE("sparse vectors") {
    SparseVec v;
    v.set(3, CycScalar(2));
    v.set(1, CycScalar(-1));
    CHECK(v.e.size() == 2);
    CHECK(v.e[0].first == 1);
    CHECK(v.get(3) == CycScalar(2));
    CHECK(v.get(2).is_zero());
    v.set(3, CycScalar(0));
    CHECK(v.e.size() == 1);
    SparseVec w = SparseVec::unit(1);
    CHECK((v + w).empty());
    CHECK(dot(SparseVec::unit(2, CycScalar(3)), SparseVec::unit(2, CycScalar(5))) == CycScalar(15));
}

TEST_CASE("row reduction") {
    // rows (1 2 3), (2 4 6), (0 1 1): rank 2, kernel spanned by (-1, -1, 1)
    SparseMatrix M(3, 3);
    auto row = [](std::vector<long> x) {
        SparseVec v;
        for (int k = 0; k < 3; ++k) v.set(k, CycScalar(x[k]));
        return v;
    };
    M.row(0) = row({1, 2, 3});
    M.row(1) = row({2, 4, 6});
    M.row(2) = row({0, 1, 1});
    RowReduction R = row_reduce(M);
    CHECK(R.rank == 2);
    REQUIRE(R.kernel.size() == 1);
    CHECK(M.apply(R.kernel[0]).empty());
    CHECK(R.kernel[0] == scaled(row({-1, -1, 1}), R.kernel[0].get(2)));

    std::vector<CycScalar> c;
    CHECK(solve_combination({row({1, 0, 0}), row({1, 1, 0})}, row({3, 2, 0}), 3, c));
    CHECK(c[0] == CycScalar(1));
    CHECK(c[1] == CycScalar(2));
    CHECK_FALSE(solve_combination({row({1, 0, 0})}, row({0, 1, 0}), 3, c));
}

TEST_CASE("echelon") {
    Echelon ech;
    SparseVec a = SparseVec::unit(0) + SparseVec::unit(2);
    SparseVec b = SparseVec::unit(2);
    CHECK(ech.insert(a));
    CHECK(ech.insert(b));
    CHECK_FALSE(ech.insert(a + b));
    CHECK(ech.contains(SparseVec::unit(0)));
    CHECK_FALSE(ech.contains(SparseVec::unit(1)));
    CHECK(ech.size() == 2);
}

TEST_CASE("matrix products") {
    SparseMatrix A = SparseMatrix::identity(3).scaled(CycScalar(2));
    SparseMatrix B(3, 3);
    B.row(0).set(1, CycScalar(1));
    CHECK(A * B == B.scaled(CycScalar(2)));
    CHECK((B * B).row(0).empty());
    CHECK(B.transpose().column(0) == SparseVec::unit(1));
}
