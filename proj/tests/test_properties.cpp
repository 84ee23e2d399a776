#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweyl/mapweyl.hpp"

#include <memory>
#include <random>

using namespace sw;

namespace {

constexpr int kTrials = 200;

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Rat(num(rng), den(rng));
}

CycScalar random_cyc(std::mt19937& rng, int m) {
    std::vector<Rat> c;
    for (int k = 0; k < cyclotomic_degree(m); ++k) c.push_back(random_rat(rng));
    return CycScalar::from_coeffs(m, c);
}

Element random_element(std::mt19937& rng, const SuperAlgebra& L, int parity, int terms = 3) {
    std::uniform_int_distribution<int> pick(0, L.dim() - 1);
    Element x;
    for (int k = 0; k < terms; ++k) {
        int i = pick(rng);
        if (L.parity(i) != parity) continue;
        axpy(x, CycScalar(random_rat(rng)), SparseVec::unit(i));
    }
    return x;
}

CycScalar sign(int a, int b) { return (a & b) ? CycScalar(-1) : CycScalar(1); }

}  // namespace

TEST_CASE("field axioms in Q(zeta_m)") {
    std::mt19937 rng(1);
    for (int m : {3, 4, 5, 8, 12}) {
        for (int t = 0; t < kTrials / 5; ++t) {
            CycScalar a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(CycScalar::parse(a.str(), m) == a);
        }
        // zeta^m = 1 and sum of the m-th roots of unity vanishes
        CycScalar z = CycScalar::zeta(m), p(1), s(0);
        for (int k = 0; k < m; ++k) {
            s += p;
            p *= z;
        }
        CHECK(p.is_one());
        CHECK(s.is_zero());
    }
}

TEST_CASE("row reduction: rank plus nullity") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> sz(1, 6), sparse(0, 2);
    for (int t = 0; t < kTrials; ++t) {
        int r = sz(rng), c = sz(rng);
        SparseMatrix M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (sparse(rng) == 0) M.set(i, j, CycScalar(random_rat(rng)));
        RowReduction R = row_reduce(M);
        CHECK(R.rank + static_cast<int>(R.kernel.size()) == c);
        for (const auto& k : R.kernel) CHECK(M.apply(k).empty());
        CHECK(R.rank == rank_of(R.rowspace, c));
    }
}

TEST_CASE("super Jacobi and skew symmetry on random elements") {
    std::mt19937 rng(3);
    auto F = std::make_shared<Folding>(fold(build_osp(2, 2), "flip"));
    EqMapAlgebra E = equivariant_map_subalgebra(F, build_truncated_algebra(3, 2));
    for (const auto& L : {build_sl(3, 2), build_osp(3, 2), E.alg}) {
        std::uniform_int_distribution<int> par(0, 1);
        for (int t = 0; t < kTrials / 4; ++t) {
            int a = par(rng), b = par(rng), c = par(rng);
            Element x = random_element(rng, L, a), y = random_element(rng, L, b), z = random_element(rng, L, c);
            CHECK(bracket(L, x, y) == scaled(bracket(L, y, x), -sign(a, b)));
            Element lhs = bracket(L, x, bracket(L, y, z));
            Element rhs = bracket(L, bracket(L, x, y), z) + scaled(bracket(L, y, bracket(L, x, z)), sign(a, b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("diagram automorphisms are homomorphisms of the given order") {
    std::mt19937 rng(4);
    for (auto [L, perm] : std::vector<std::pair<SuperAlgebra, std::string>>{{build_sl(3, 2), "flip"}, {build_osp(2, 2), "flip"}}) {
        Folding F = fold(L, perm);
        for (int t = 0; t < kTrials / 4; ++t) {
            Element x = random_element(rng, F.g, 0) + random_element(rng, F.g, 1);
            Element y = random_element(rng, F.g, 0) + random_element(rng, F.g, 1);
            CHECK(F.nu.apply(bracket(F.g, x, y)) == bracket(F.g, F.nu.apply(x), F.nu.apply(y)));
            Element p = x;
            for (int k = 0; k < F.nu.order; ++k) p = F.nu.apply(p);
            CHECK(p == x);
        }
    }
}

TEST_CASE("graded algebra products") {
    std::mt19937 rng(5);
    for (int N = 1; N <= 5; ++N) {
        GammaAlgebra A = build_truncated_algebra(N, 2);
        auto rv = [&] {
            SparseVec v;
            for (int j = 0; j < N; ++j) v.set(j, CycScalar(random_rat(rng)));
            return v;
        };
        for (int t = 0; t < 20; ++t) {
            SparseVec a = rv(), b = rv(), c = rv();
            CHECK(A.product(a, b) == A.product(b, a));
            CHECK(A.product(A.product(a, b), c) == A.product(a, A.product(b, c)));
        }
    }
}

TEST_CASE("PBW confluence on random words") {
    std::mt19937 rng(6);
    std::vector<EqMapAlgebra> algs;
    algs.push_back(equivariant_map_subalgebra(std::make_shared<Folding>(fold(build_sl(2, 1), "id")),
                                              build_truncated_algebra(2, 1)));
    algs.push_back(equivariant_map_subalgebra(std::make_shared<Folding>(fold(build_osp(2, 2), "flip")),
                                              build_truncated_algebra(3, 2)));
    for (const auto& E : algs) {
        HWContext ctx = context_for(E);
        PBWEngine eng(E.alg, ctx.generator_order(), 12);
        std::uniform_int_distribution<int> gen(0, eng.size() - 1), len(0, 6);
        for (int t = 0; t < kTrials / 2; ++t) {
            std::vector<int> w(len(rng));
            for (int& x : w) x = gen(rng);
            EnvElement a = eng.normal_form(w);
            CHECK(a == eng.normal_form_by_inversions(w));
            for (const auto& [m, c] : a) CHECK(eng.is_normal(m));
        }
        for (int t = 0; t < kTrials / 4; ++t) {
            auto word = [&] {
                std::vector<int> w(len(rng) / 2 + 1);
                for (int& x : w) x = gen(rng);
                return eng.normal_form(w);
            };
            EnvElement a = word(), b = word(), c = word();
            CHECK(eng.multiply(eng.multiply(a, b), c) == eng.multiply(a, eng.multiply(b, c)));
        }
    }
}

TEST_CASE("modules are representations with symmetric characters") {
    auto F = std::make_shared<Folding>(fold(build_osp(1, 2), "id"));
    EqMapAlgebra E = equivariant_map_subalgebra(F, build_truncated_algebra(2, 1));
    for (int k : {0, 2, 4}) {
        Weight lam = lambda_from_coroots(F->fixed, E.frs, E.ftd, {Rat(k)});
        WeylModule W = build_global_weyl(E, lam, 8);
        REQUIRE(W.cert.converged);
        CHECK(representation_violations(E.alg, W.action).empty());
        // the Weyl group of osp(1|2) acts by mu -> -mu
        auto ch = W.character();
        for (const auto& [mu, d] : ch) {
            CAPTURE(mu);
            std::string neg = mu == "(0)" ? mu : (mu[1] == '-' ? "(" + mu.substr(2) : "(-" + mu.substr(1));
            CHECK((ch.count(neg) ? ch.at(neg) : 0) == d);
        }
        WeylModule V = build_Vbar(F->fixed, E.frs, E.ftd, lam);
        CHECK(representation_violations(F->fixed, V.action).empty());
    }
}

TEST_CASE("functor on the regular module reproduces W") {
    auto F = std::make_shared<Folding>(fold(build_osp(1, 2), "id"));
    EqMapAlgebra E = equivariant_map_subalgebra(F, build_truncated_algebra(2, 1));
    Weight lam = lambda_from_coroots(F->fixed, E.frs, E.ftd, {Rat(4)});
    WeylModule W = build_global_weyl(E, lam, 8);
    HighestWeightAlgebra Al = highest_weight_algebra(E, W);
    std::vector<SparseMatrix> M;
    for (int i = 0; i < Al.dim(); ++i) M.push_back(Al.left_regular(i));
    FunctorResult r = weyl_functor_apply(E, W, Al, M);
    CHECK(r.module.character() == W.character());
    CHECK(r.balanced_ok);
    CHECK(r.right_action_commutes);
    // the trivial module C = A_lambda / augmentation ideal gives a smaller quotient
    std::vector<SparseMatrix> C;
    for (int i = 0; i < Al.dim(); ++i) {
        SparseMatrix c(1, 1);
        if (i == Al.unit) c.set(0, 0, CycScalar(1));
        C.push_back(c);
    }
    FunctorResult q = weyl_functor_apply(E, W, Al, C);
    CHECK(q.module.dim() < W.dim());
    CHECK(q.module.dim() > 0);
    CHECK(representation_violations(E.alg, q.module.action).empty());
}
