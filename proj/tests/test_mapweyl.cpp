#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/mapweyl.hpp"

#include <memory>

using namespace sw;

namespace {

std::shared_ptr<const Folding> folding(const SuperAlgebra& L, const std::string& perm) {
    return std::make_shared<Folding>(fold(L, perm));
}

Weight lam(const EqMapAlgebra& E, std::vector<Rat> v) { return lambda_from_coroots(E.fold->fixed, E.frs, E.ftd, v); }

WeylModule vbar(const EqMapAlgebra& E, std::vector<Rat> v) {
    return build_Vbar(E.fold->fixed, E.frs, E.ftd, lam(E, std::move(v)));
}

int even_simple_root(const EqMapAlgebra& E) { return even_simple_roots(E.fold->fixed, E.frs).front().root; }

}  // namespace

TEST_CASE("truncated polynomial algebras") {
    for (int N = 1; N <= 5; ++N)
        for (int m : {1, 2, 3}) {
            GammaAlgebra A = build_truncated_algebra(N, m);
            CAPTURE(A.name);
            CHECK(A.dim() == N);
            CHECK(A.check().empty());
            for (int j = 0; j < N; ++j) CHECK(A.grade[j] == j % m);
        }
    GammaAlgebra A = build_truncated_algebra(3, 1);
    SparseVec t = SparseVec::unit(1);
    CHECK(A.power(t, 2) == SparseVec::unit(2));
    CHECK(A.power(t, 3).empty());
    CHECK(A.power(t, 0) == SparseVec::unit(A.unit));
    CHECK(A.labels == std::vector<std::string>{"1", "t", "t^2"});
}

TEST_CASE("map superalgebras satisfy the axioms") {
    for (const auto& L : {build_sl(2, 1), build_osp(1, 2)}) {
        SuperAlgebra M = map_superalgebra(L, build_truncated_algebra(3, 1));
        CHECK(M.dim() == 3 * L.dim());
        CHECK(check_axioms(M).ok());
    }
}

TEST_CASE("exchange property for the trivial group") {
    for (const auto& L : {build_sl(2, 1), build_osp(3, 2)}) {
        auto F = folding(L, "id");
        GammaAlgebra A = build_truncated_algebra(2, 1);
        EqMapAlgebra E = equivariant_map_subalgebra(F, A);
        SuperAlgebra M = map_superalgebra(F->g, A);
        REQUIRE(E.alg.dim() == M.dim());
        CHECK(E.fixed_points_verified);
        // the equivariant basis is x (x) a with x running over weight vectors of g
        auto img = [&](int i) {
            SparseVec v;
            for (const auto& [k, c] : E.info[i].x.e) v.set(k * A.dim() + E.info[i].a, c);
            return v;
        };
        auto lift = [&](const Element& y) {
            SparseVec v;
            for (const auto& [i, c] : y.e) axpy(v, c, img(i));
            return v;
        };
        for (int i = 0; i < E.alg.dim(); ++i)
            for (int j = 0; j < E.alg.dim(); ++j)
                CHECK(lift(E.alg.bracket_basis(i, j)) == bracket(M, img(i), img(j)));
    }
}

TEST_CASE("equivariant map algebra of a flip") {
    auto F = folding(build_osp(2, 2), "flip");
    EqMapAlgebra E = equivariant_map_subalgebra(F, build_truncated_algebra(2, 2));
    // g_0 (x) 1 + g_1 (x) t
    CHECK(E.alg.dim() == 5 + 3);
    CHECK(E.fixed_points_verified);
    CHECK(check_axioms(E.alg).ok());
    CHECK_THROWS(equivariant_map_subalgebra(F, build_truncated_algebra(2, 1)));
}

TEST_CASE("PBW normal ordering") {
    auto F = folding(build_osp(1, 2), "id");
    EqMapAlgebra E = equivariant_map_subalgebra(F, build_truncated_algebra(1, 1));
    HWContext ctx = context_for(E);
    PBWEngine eng(E.alg, ctx.generator_order(), 8);
    // x x = [x, x] / 2 for odd x
    for (int b = 0; b < E.alg.dim(); ++b) {
        if (E.alg.parity(b) == 0) continue;
        int p = eng.position(b);
        EnvElement half = eng.from_element(scaled(E.alg.bracket_basis(b, b), CycScalar(Rat(1, 2))));
        CHECK(eng.normal_form({p, p}) == half);
    }
    // y x = (-1)^{|x||y|} x y + [y, x] when x < y
    for (int p = 0; p < eng.size(); ++p)
        for (int q = p + 1; q < eng.size(); ++q) {
            EnvElement lhs = eng.normal_form({q, p});
            EnvElement rhs{{Monomial{p, q}, (eng.parity_at(p) & eng.parity_at(q)) ? CycScalar(-1) : CycScalar(1)}};
            env_axpy(rhs, CycScalar(1), eng.from_element(E.alg.bracket_basis(eng.basis_index(q), eng.basis_index(p))));
            CHECK(lhs == rhs);
        }
    CHECK_THROWS_AS(eng.normal_form(std::vector<int>(9, 0)), CapExceeded);
}

TEST_CASE("Vbar for osp(1|2): dim 2k + 1 for lambda(h) = 2k") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_osp(1, 2), "id"), build_truncated_algebra(1, 1));
    for (int k = 0; k <= 3; ++k) {
        WeylModule V = vbar(E, {2 * k});
        CHECK(V.dim() == 2 * k + 1);
        CHECK(V.cert.converged);
        CHECK(representation_violations(E.fold->fixed, V.action).empty());
    }
    CHECK_THROWS(vbar(E, {1}));
}

TEST_CASE("Vbar for sl(2|1) is the Kac module, dim 4(a + 1)") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_sl(2, 1), "id"), build_truncated_algebra(1, 1));
    for (int a = 0; a <= 2; ++a)
        for (int b : {-1, 0, 1}) {
            WeylModule V = vbar(E, {a, b});
            CAPTURE(a);
            CAPTURE(b);
            CHECK(V.dim() == 4 * (a + 1));
        }
}

TEST_CASE("Vbar for osp(3|2), regression values") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_osp(3, 2), "id"), build_truncated_algebra(1, 1));
    CHECK(vbar(E, {0, 0}).dim() == 1);
    CHECK(vbar(E, {-1, 0}).dim() == 12);
    CHECK(vbar(E, {-1, 2}).dim() == 12);
    CHECK(vbar(E, {-2, 0}).dim() == 28);
}

TEST_CASE("global Weyl modules over osp(1|2) (x) C[t]/t^2") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_osp(1, 2), "id"), build_truncated_algebra(2, 1));
    WeylModule W0 = build_global_weyl(E, lam(E, {0}), 8);
    CHECK(W0.cert.converged);
    CHECK(W0.dim() == 1);

    WeylModule W = build_global_weyl(E, lam(E, {2}), 8);
    REQUIRE(W.cert.converged);
    CHECK(W.dim() == 6);
    CHECK(W.character() == std::map<std::string, int>{{"(-1)", 2}, {"(0)", 2}, {"(1)", 2}});
    CHECK(representation_violations(E.alg, W.action).empty());
    CHECK(check_power_relations(E, W).empty());
    HighestWeightAlgebra Al = highest_weight_algebra(E, W);
    CHECK(Al.dim() == 2);
    CHECK(Al.commutative);
    CHECK(Al.associative);

    WeylModule W4 = build_global_weyl(E, lam(E, {4}), 8);
    REQUIRE(W4.cert.converged);
    CHECK(W4.dim() == 19);
    CHECK(highest_weight_algebra(E, W4).dim() == 3);
}

TEST_CASE("loop reduction with lambda(h) = 1") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_osp(1, 2), "id"), build_truncated_algebra(2, 1));
    WeylModule W = build_global_weyl(E, lam(E, {2}), 8);
    HighestWeightAlgebra Al = highest_weight_algebra(E, W);
    int root = even_simple_root(E);
    RootTriple T = root_triple(E, root);
    SparseVec one = SparseVec::unit(E.A.unit), t = SparseVec::unit(1);
    SparseVec w = SparseVec::unit(W.highest);
    SparseVec lhs = W.rho(E.element(T.f, t)).apply(w);
    SparseVec rhs = W.rho(E.element(T.f, one)).apply(W.rho(E.element(T.h, t)).apply(w));
    CHECK_FALSE(lhs.empty());
    CHECK(lhs == rhs);
    LoopReduction r = reduce_loop_vector(E, W, Al, root, 1);
    CHECK(r.in_span);
}

TEST_CASE("Garland identity in divided powers") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_sl(2, 1), "id"), build_truncated_algebra(4, 1));
    int root = even_simple_root(E);
    HWContext ctx = context_for(E);
    PBWEngine eng(E.alg, ctx.generator_order(), 8);
    RootTriple T = root_triple(E, root);
    SparseVec one = SparseVec::unit(E.A.unit), t = SparseVec::unit(1);

    GarlandReport g = check_garland(E, 1, one, root);
    CHECK(g.member);
    EnvElement f = eng.from_element(E.element(T.f, one));
    EnvElement e = eng.from_element(E.element(T.e, one));
    EnvElement expect = eng.multiply(EnvElement{{Monomial{}, CycScalar(Rat(1, 2))}}, eng.multiply(f, eng.multiply(f, e)));
    CHECK(g.residual == expect);
    CHECK_FALSE(check_garland(E, 1, one, root, false).member);

    // p_1 = -h (x) t, p_2 = (h (x) t)^2 / 2 - h (x) t^2 / 2
    EnvElement ht = eng.from_element(E.element(T.h, t));
    EnvElement ht2 = eng.from_element(E.element(T.h, E.A.power(t, 2)));
    EnvElement p1;
    env_axpy(p1, CycScalar(-1), ht);
    CHECK(garland_series(E, eng, root, t, 1) == p1);
    EnvElement p2;
    env_axpy(p2, CycScalar(Rat(1, 2)), eng.multiply(ht, ht));
    env_axpy(p2, CycScalar(Rat(-1, 2)), ht2);
    CHECK(garland_series(E, eng, root, t, 2) == p2);
}

TEST_CASE("universal surjections") {
    EqMapAlgebra E = equivariant_map_subalgebra(folding(build_osp(1, 2), "id"), build_truncated_algebra(1, 1));
    WeylModule W = build_global_weyl(E, lam(E, {2}), 8);
    WeylModule V = vbar(E, {2});
    CHECK(W.character() == V.character());
    SurjectionVerdict s = check_universal_surjection(E, W, evaluation_module(E, V));
    CHECK(s.ok());
    CHECK(s.kernel_dim == 0);
}
