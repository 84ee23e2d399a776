// Acceptance run: one PASS/FAIL line per criterion.
#include "superweyl/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace sw;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
    int id;
    std::string name;
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct Instance {
    std::string label;
    std::shared_ptr<const Folding> F;
    std::shared_ptr<EqMapAlgebra> E;
    std::vector<Rat> vals;
    Weight lambda;
    WeylModule W;
    std::shared_ptr<HighestWeightAlgebra> Al;
};

std::map<std::string, std::shared_ptr<const Folding>> fold_cache;
std::map<std::string, std::shared_ptr<EqMapAlgebra>> map_cache;

std::shared_ptr<EqMapAlgebra> eq_map(const std::string& fam, int a, int b, const std::string& perm, int N, int m) {
    std::string key = fam + std::to_string(a) + std::to_string(b) + perm + std::to_string(N) + std::to_string(m);
    auto it = map_cache.find(key);
    if (it != map_cache.end()) return it->second;
    std::string fkey = fam + std::to_string(a) + std::to_string(b) + perm;
    if (!fold_cache.count(fkey))
        fold_cache[fkey] = std::make_shared<Folding>(fold(fam == "sl" ? build_sl(a, b) : build_osp(a, b), perm));
    auto E = std::make_shared<EqMapAlgebra>(equivariant_map_subalgebra(fold_cache[fkey], build_truncated_algebra(N, m)));
    map_cache[key] = E;
    return E;
}

Instance make_instance(const std::string& fam, int a, int b, const std::string& perm, int N, int m,
                       std::vector<Rat> vals) {
    Instance I;
    I.E = eq_map(fam, a, b, perm, N, m);
    I.F = I.E->fold;
    I.vals = vals;
    std::ostringstream os;
    os << I.E->alg.name() << " lambda=";
    for (std::size_t k = 0; k < vals.size(); ++k) os << (k ? "," : "") << vals[k].get_str();
    I.label = os.str();
    I.lambda = lambda_from_coroots(I.F->fixed, I.E->frs, I.E->ftd, vals);
    I.W = build_global_weyl(*I.E, I.lambda, 8);
    if (I.W.cert.converged) I.Al = std::make_shared<HighestWeightAlgebra>(highest_weight_algebra(*I.E, I.W));
    return I;
}

void print(const Line& l, double seconds) {
    std::printf("C%-2d %-34s %s  time=%.2fs %s\n", l.id, l.name.c_str(), l.pass ? "PASS" : "FAIL", seconds,
                l.detail.str().c_str());
    std::fflush(stdout);
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Line&)>& body) {
    Line l{id, name, true, {}};
    auto t0 = Clock::now();
    try {
        body(l);
    } catch (const std::exception& e) {
        l.pass = false;
        l.detail << " [exception: " << e.what() << "]";
    }
    if (!l.pass) ++failures;
    print(l, since(t0));
}

std::vector<Instance> desk;

}  // namespace

int main() {
    criterion(1, "axioms (exact, <60s each)", [](Line& l) {
        std::vector<SuperAlgebra> algs = {build_sl(2, 1), build_sl(3, 2), build_osp(1, 2), build_osp(2, 2), build_osp(3, 2)};
        std::vector<SuperAlgebra> maps;
        for (const auto& g : {build_sl(2, 1), build_osp(1, 2), build_osp(2, 2), build_osp(3, 2)})
            maps.push_back(map_superalgebra(g, build_truncated_algebra(4, 1)));
        maps.push_back(map_superalgebra(build_sl(3, 2), build_truncated_algebra(4, 1)));
        algs.insert(algs.end(), maps.begin(), maps.end());
        double worst = 0;
        for (const auto& L : algs) {
            auto t0 = Clock::now();
            AxiomReport r = check_axioms(L);
            double s = since(t0);
            worst = std::max(worst, s);
            l.require(r.ok(), L.name() + " has " + std::to_string(r.violations.size()) + " violations");
            l.require(s < 60, L.name() + " took too long");
        }
        l.detail << "algebras=" << algs.size() << " violations=0 worst=" << worst << "s";
    });

    criterion(2, "folding table", [](Line& l) {
        auto rows = emit_folding_table();
        for (const auto& r : rows) {
            l.require(r.pass, r.source + " " + r.perm);
            int sum = 0;
            for (int d : r.dims) sum += d;
            l.require(sum == r.g_dim, "eigenspace dimensions of " + r.source);
        }
        l.require(rows.size() >= 2 && rows[0].computed == "osp(3|2)" && rows[0].fixed_dim == 12, "sl(3|2) row");
        l.require(rows.size() >= 2 && rows[1].computed == "osp(1|2)" && rows[1].fixed_dim == 5, "osp(2|2) row");
        for (const auto& r : rows) l.detail << " " << r.source << "->" << r.computed << "(" << r.fixed_dim << ")";
    });

    criterion(3, "structural checks on sl(3|2) flip", [](Line& l) {
        Folding F = fold(build_sl(3, 2), "flip");
        StructuralReport S = structural_checks(F.g, F.nu, F.fixed, F.dec);
        l.require(S.checks.size() == 4, "four checks");
        for (const auto& c : S.checks) {
            l.require(c.pass && !c.skipped, c.name);
            l.detail << " " << c.name << "=" << (c.pass ? "pass" : "fail");
        }
    });

    criterion(4, "condition C", [](Line& l) {
        for (const auto& L : {build_osp(1, 2), build_osp(3, 2)}) {
            RootSystem rs = distinguished_simple_roots(root_decomposition(L, cartan_subalgebra(L)));
            ConditionC C = check_condition_C(L, rs);
            int r = rs.find(C.theta);
            l.require(C.holds, L.name() + " condition C");
            l.require(r >= 0 && rs.roots[r].parity == 0, L.name() + " theta is an even root");
            l.detail << " " << L.name() << ":theta=" << weight_string(C.theta);
        }
    });

    criterion(5, "Garland identity (divided powers)", [](Line& l) {
        auto t0 = Clock::now();
        auto E = eq_map("sl", 2, 1, "id", 4, 1);
        int root = even_simple_roots(E->fold->fixed, E->frs).front().root;
        SparseVec one = SparseVec::unit(E->A.unit), t = SparseVec::unit(1);
        int members = 0;
        for (int r = 1; r <= 3; ++r)
            for (const SparseVec& a : {one, t}) {
                GarlandReport g = check_garland(*E, r, a, root);
                l.require(g.member, "r=" + std::to_string(r));
                members += g.member;
            }
        HWContext ctx = context_for(*E);
        PBWEngine eng(E->alg, ctx.generator_order(), 8);
        RootTriple T = root_triple(*E, root);
        EnvElement f = eng.from_element(E->element(T.f, one)), e = eng.from_element(E->element(T.e, one));
        EnvElement expect = eng.multiply(EnvElement{{Monomial{}, CycScalar(Rat(1, 2))}}, eng.multiply(f, eng.multiply(f, e)));
        GarlandReport g1 = check_garland(*E, 1, one, root);
        l.require(g1.residual == expect, "r=1 residual is f^2 e / 2");
        bool literal = check_garland(*E, 1, one, root, false).member;
        double s = since(t0);
        l.require(s < 120, "runtime");
        l.detail << "members=" << members << "/6 residual=" << g1.residual_text
                 << " without_divided_powers=" << (literal ? "member" : "not-member");
    });

    // desk instances for the Weyl module criteria
    auto t_build = Clock::now();
    for (int k : {0, 2, 4}) desk.push_back(make_instance("osp", 1, 2, "id", 1, 1, {k}));
    for (int k : {0, 2, 4}) desk.push_back(make_instance("osp", 1, 2, "id", 2, 1, {k}));
    for (auto v : std::vector<std::vector<Rat>>{{0, 0}, {-1, 0}, {-2, 0}, {-1, 2}})
        desk.push_back(make_instance("osp", 3, 2, "id", 1, 1, v));
    for (auto v : std::vector<std::vector<Rat>>{{0, 0}, {1, 0}, {2, 1}})
        desk.push_back(make_instance("sl", 2, 1, "id", 1, 1, v));
    for (int k : {0, 2}) desk.push_back(make_instance("osp", 2, 2, "flip", 2, 2, {k}));
    desk.push_back(make_instance("sl", 3, 2, "flip", 2, 2, {0, 0}));
    int converged = 0;
    for (const auto& I : desk) converged += I.W.cert.converged;
    std::printf("    desk instances: %zu built, %d converged, %.2fs\n", desk.size(), converged, since(t_build));
    for (const auto& I : desk)
        if (!I.W.cert.converged) std::printf("    not converged (excluded): %s dim>=%d\n", I.label.c_str(), I.W.dim());

    criterion(6, "power relations in W", [](Line& l) {
        int n = 0;
        for (const auto& I : desk) {
            if (!I.W.cert.converged) continue;
            auto bad = check_power_relations(*I.E, I.W);
            l.require(bad.empty(), I.label);
            ++n;
        }
        l.require(n > 0, "no converged instance");
        l.detail << "instances=" << n;
    });

    criterion(7, "A=C coincidence with Vbar", [](Line& l) {
        int n_osp12 = 0, n_osp32 = 0;
        for (const auto& I : desk) {
            if (I.E->A.dim() != 1 || I.F->nu.order != 1) continue;
            const std::string& g = I.F->g.name();
            if (g != "osp(1|2)" && g != "osp(3|2)") continue;
            WeylModule V = build_Vbar(I.F->fixed, I.E->frs, I.E->ftd, I.lambda);
            bool same = I.W.cert.converged && V.dim() == I.W.dim() && V.character() == I.W.character();
            l.require(same, I.label);
            if (same) (g == "osp(1|2)" ? n_osp12 : n_osp32)++;
            l.detail << " " << I.label << ":" << V.dim();
        }
        l.require(n_osp12 >= 3 && n_osp32 >= 3, "three weights per algebra");
    });

    criterion(8, "highest weight algebra and functor", [](Line& l) {
        int n = 0;
        for (const auto& I : desk) {
            if (!I.W.cert.converged) continue;
            const auto& Al = *I.Al;
            int wl = static_cast<int>(I.W.weight_space(I.W.lambda).size());
            l.require(wl == Al.dim(), I.label + " dim W_lambda");
            std::vector<SparseMatrix> M;
            for (int i = 0; i < Al.dim(); ++i) M.push_back(Al.left_regular(i));
            FunctorResult r = weyl_functor_apply(*I.E, I.W, Al, M);
            l.require(r.module.character() == I.W.character(), I.label + " functor character");
            l.require(r.balanced_ok && r.right_action_commutes, I.label + " balanced tensor product");
            l.detail << " " << Al.dim();
            ++n;
        }
        l.detail << " instances=" << n;
    });

    criterion(9, "finite generation", [](Line& l) {
        for (const auto& I : desk) {
            if (!I.W.cert.converged) continue;
            FiltrationTable ft = filtration_stabilization(*I.E, I.W, *I.Al);
            bool tail = ft.n0 >= 0 && !ft.dims.empty();
            for (std::size_t k = ft.n0 < 0 ? 0 : ft.n0; tail && k < ft.dims.size(); ++k) tail = ft.dims[k] == ft.dims[ft.n0];
            l.require(tail && ft.dims.back() == I.W.dim(), I.label);
            l.detail << " " << ft.n0;
        }
    });

    criterion(10, "spanning reduction", [](Line& l) {
        const Instance* base = nullptr;
        for (const auto& I : desk)
            if (I.F->g.name() == "osp(1|2)" && I.E->A.dim() == 2 && I.vals[0] == 2) base = &I;
        l.require(base && base->W.cert.converged, "osp(1|2) lambda(h_alpha)=1 instance");
        if (!base) return;
        const EqMapAlgebra& E = *base->E;
        int root = even_simple_roots(E.fold->fixed, E.frs).front().root;
        RootTriple T = root_triple(E, root);
        SparseVec one = SparseVec::unit(E.A.unit), t = SparseVec::unit(1), w = SparseVec::unit(base->W.highest);
        SparseVec lhs = base->W.rho(E.element(T.f, t)).apply(w);
        SparseVec rhs = base->W.rho(E.element(T.f, one)).apply(base->W.rho(E.element(T.h, t)).apply(w));
        l.require(!lhs.empty() && lhs == rhs, "(f t)w = (f 1)(h t)w");
        l.require(reduce_loop_vector(E, base->W, *base->Al, root, 1).in_span, "reduction at the base instance");

        std::vector<const Instance*> pool;
        for (const auto& I : desk)
            if (I.W.cert.converged && I.W.dim() > 1) pool.push_back(&I);
        std::mt19937 rng(20240601);
        int ok = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const Instance& I = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            std::vector<int> roots;
            for (int r : I.E->frs.positive())
                if (I.E->frs.roots[r].parity == 0) roots.push_back(r);
            int r = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
            int p = std::uniform_int_distribution<int>(0, I.E->A.dim())(rng);
            LoopReduction red = reduce_loop_vector(*I.E, I.W, *I.Al, r, p);
            l.require(red.in_span, I.label + " " + red.detail);
            ok += red.in_span;
        }
        l.detail << "random_ok=" << ok << "/10";
    });

    criterion(11, "universality", [](Line& l) {
        const Instance* big = nullptr;
        const Instance* scalar = nullptr;
        for (const auto& I : desk) {
            if (I.F->g.name() == "osp(1|2)" && I.E->A.dim() == 2 && I.vals[0] == 4) big = &I;
            if (I.F->g.name() == "osp(1|2)" && I.E->A.dim() == 1 && I.vals[0] == 2) scalar = &I;
        }
        l.require(big && scalar, "instances");
        if (!big || !scalar) return;
        l.require(check_universal_surjection(*big->E, big->W, as_cyclic(big->W)).ok(), "W itself");
        std::mt19937 rng(7);
        for (int q = 0; q < 3; ++q) {
            int sub = 0;
            CyclicModule Q = random_quotient(big->W, rng, &sub);
            SurjectionVerdict v = check_universal_surjection(*big->E, big->W, Q);
            l.require(v.ok() && v.kernel_dim > 0, "quotient " + std::to_string(q));
            l.detail << " quotient_dim=" << Q.dim << "/kernel=" << v.kernel_dim;
        }
        WeylModule V = build_Vbar(scalar->F->fixed, scalar->E->frs, scalar->E->ftd, scalar->lambda);
        SurjectionVerdict v = check_universal_surjection(*scalar->E, scalar->W, evaluation_module(*scalar->E, V));
        l.require(v.ok(), "A=C against Vbar");
        l.detail << " vbar_kernel=" << v.kernel_dim;
    });

    criterion(12, "determinism", [](Line& l) {
        auto run = [] {
            std::ostringstream os;
            os << folding_table_text(emit_folding_table());
            auto E1 = std::make_shared<EqMapAlgebra>(equivariant_map_subalgebra(
                std::make_shared<Folding>(fold(build_osp(1, 2), "id")), build_truncated_algebra(2, 1)));
            os << weyl_report(*E1, {4}, 8, WeylOptions{true, true, true}).text;
            auto E2 = std::make_shared<EqMapAlgebra>(equivariant_map_subalgebra(
                std::make_shared<Folding>(fold(build_osp(3, 2), "id")), build_truncated_algebra(1, 1)));
            os << weyl_report(*E2, {-1, 0}, 8, WeylOptions{true, true, true}).text;
            auto E3 = std::make_shared<EqMapAlgebra>(equivariant_map_subalgebra(
                std::make_shared<Folding>(fold(build_sl(2, 1), "id")), build_truncated_algebra(4, 1)));
            os << garland_report(*E3, 1).text;
            return os.str();
        };
        std::string a = run(), b = run();
        l.require(a == b, "reports differ");
        l.detail << "bytes=" << a.size();
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
