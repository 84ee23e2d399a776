#include "module_engine.hpp"

namespace sw {

RootTriple root_triple(const EqMapAlgebra& E, int root) {
    const SuperAlgebra& fixed = E.fold->fixed;
    const RootSystem& frs = E.frs;
    if (frs.sign.empty() || frs.sign[root] <= 0 || frs.roots[root].parity != 0)
        throw Error("root_triple: needs a positive even root");
    Weight neg = frs.roots[root].value;
    for (auto& x : neg) x = -x;
    int nr = frs.find(neg);
    Element e = frs.roots[root].space.front();
    Element f = frs.roots[nr].space.front();
    Element h = coroot(fixed, frs, root);
    Element ef = bracket(fixed, e, f);
    CycScalar kappa = h.e.front().second / ef.get(h.e.front().first);
    f = scaled(f, kappa);
    if (bracket(fixed, e, f) != h) throw Error("root_triple: [e, f] is not proportional to the coroot");
    const auto& img = fixed.embedding()->images;
    auto up = [&](const Element& x) {
        Element y;
        for (const auto& [i, c] : x.e) axpy(y, c, img[i]);
        return y;
    };
    return {up(e), up(f), up(h)};
}

namespace {

EnvElement one() { return EnvElement{{Monomial{}, CycScalar(1)}}; }

EnvElement power(PBWEngine& eng, const EnvElement& x, int k) {
    EnvElement out = one();
    for (int i = 0; i < k; ++i) out = eng.multiply(x, out);
    return out;
}

CycScalar factorial(int k) {
    Rat f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return CycScalar(f);
}

}  // namespace

EnvElement garland_series(const EqMapAlgebra& E, PBWEngine& eng, int root, const SparseVec& a, int k) {
    RootTriple T = root_triple(E, root);
    std::vector<EnvElement> p{one()};
    for (int j = 1; j <= k; ++j) {
        EnvElement acc;
        for (int i = 1; i <= j; ++i) {
            EnvElement h = eng.from_element(E.element(T.h, E.A.power(a, i)));
            env_axpy(acc, CycScalar(1), eng.multiply(h, p[j - i]));
        }
        EnvElement pj;
        env_axpy(pj, CycScalar(Rat(-1, j)), acc);
        p.push_back(pj);
    }
    return p[k];
}

GarlandReport check_garland(const EqMapAlgebra& E, int r, const SparseVec& a, int root, bool divided_powers) {
    if (r < 0) throw Error("check_garland: r must be nonnegative");
    HWContext ctx = context_for(E);
    PBWEngine eng(E.alg, ctx.generator_order(), std::max(8, 2 * r + 2));
    RootTriple T = root_triple(E, root);
    SparseVec unit = SparseVec::unit(E.A.unit);
    EnvElement ea = eng.from_element(E.element(T.e, a));
    EnvElement f = eng.from_element(E.element(T.f, unit));
    EnvElement lhs = eng.multiply(power(eng, ea, r), power(eng, f, r + 1));
    if (divided_powers) lhs = eng.multiply(EnvElement{{Monomial{}, CycScalar(1) / (factorial(r) * factorial(r + 1))}}, lhs);
    EnvElement sum;
    for (int i = 0; i <= r; ++i) {
        EnvElement fi = eng.from_element(E.element(T.f, E.A.power(a, r - i)));
        env_axpy(sum, CycScalar(1), eng.multiply(fi, garland_series(E, eng, root, a, i)));
    }
    GarlandReport out;
    out.residual = lhs;
    env_axpy(out.residual, (r % 2 == 0) ? CycScalar(-1) : CycScalar(1), sum);
    const Weight& alpha = E.frs.roots[root].value;
    out.member = true;
    for (const auto& [m, c] : out.residual) {
        bool raising = false;
        for (int p : m) {
            int b = eng.basis_index(p);
            if (ctx.kind[b] == GenKind::Raise && ctx.wt[b] == alpha) raising = true;
        }
        if (!raising) out.member = false;
    }
    out.residual_text = env_to_string(out.residual, eng.names());
    return out;
}

}  // namespace sw
