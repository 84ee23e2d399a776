#include "module_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sw {

namespace detail {

std::vector<Rat> simple_coordinates(const RootSystem& rs, const Weight& w) {
    int r = rs.rank();
    std::vector<SparseVec> sv;
    for (int s : rs.simple) {
        SparseVec v;
        for (int k = 0; k < r; ++k) v.set(k, rs.roots[s].value[k]);
        sv.push_back(v);
    }
    SubspaceCoords sc(sv, r);
    SparseVec v;
    for (int k = 0; k < r; ++k) v.set(k, w[k]);
    SparseVec c;
    if (!sc.coords(v, c)) throw Error("weight " + weight_string(w) + " is outside the root lattice span");
    std::vector<Rat> out(sv.size(), Rat(0));
    for (const auto& [k, x] : c.e) {
        if (!x.is_rational()) throw Error("weight has irrational simple coordinates");
        out[k] = x.rational();
    }
    return out;
}

Weight add_weight(const Weight& a, const Weight& b, const CycScalar& s) {
    Weight out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += s * b[k];
    return out;
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](const CycScalar& x) { return x.is_zero(); });
}

ModuleEngine::ModuleEngine(const HWContext& ctx, const Weight& lambda, int cap)
    : ctx_(&ctx), lambda_(lambda), pbw_(*ctx.alg, ctx.generator_order(), cap) {
    hg_value_.resize(pbw_.size());
    for (int p = 0; p < pbw_.size(); ++p) {
        int b = pbw_.basis_index(p);
        if (ctx.kind[b] != GenKind::HG) continue;
        CycScalar v;
        for (const auto& [k, c] : ctx.h_of[b].e) v += c * lambda_[k];
        hg_value_[p] = v;
    }
}

EnvElement ModuleEngine::project(const EnvElement& e) const {
    EnvElement out;
    for (const auto& [m, c] : e) {
        CycScalar coef = c;
        Monomial rest;
        bool dead = false;
        for (int p : m) {
            GenKind k = kind_at(p);
            if (k == GenKind::Raise) {
                dead = true;
                break;
            }
            if (k == GenKind::HG) {
                coef *= hg_value_[p];
            } else {
                rest.push_back(p);
            }
        }
        if (dead || coef.is_zero()) continue;
        env_axpy(out, coef, EnvElement{{rest, CycScalar(1)}});
    }
    return out;
}

EnvElement ModuleEngine::act(int b, const EnvElement& v) {
    return project(pbw_.left_mul(pbw_.position(b), v));
}

EnvElement ModuleEngine::act_word(const Monomial& u, const EnvElement& v) {
    EnvElement out = v;
    for (auto it = u.rbegin(); it != u.rend() && !out.empty(); ++it) out = project(pbw_.left_mul(*it, out));
    return out;
}

Weight ModuleEngine::weight(const Monomial& m) const {
    Weight w = lambda_;
    for (int p : m) w = add_weight(w, ctx_->wt[pbw_.basis_index(p)]);
    return w;
}

Rat ModuleEngine::depth(const Monomial& m) const {
    Rat d = 0;
    for (int p : m) d -= ctx_->height[pbw_.basis_index(p)];
    return d;
}

Monomial ModuleEngine::to_basis(const Monomial& m) const {
    Monomial out;
    for (int p : m) out.push_back(pbw_.basis_index(p));
    return out;
}

Monomial ModuleEngine::to_positions(const Monomial& m) const {
    Monomial out;
    for (int b : m) out.push_back(pbw_.position(b));
    return out;
}

std::vector<int> ModuleEngine::positions(std::function<bool(GenKind)> pred) const {
    std::vector<int> out;
    for (int p = 0; p < pbw_.size(); ++p)
        if (pred(kind_at(p))) out.push_back(p);
    return out;
}

std::vector<Monomial> enumerate_monomials(ModuleEngine& eng, const std::vector<int>& allowed, const Rat& max_depth,
                                          int max_degree) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, Rat)> dfs = [&](std::size_t start, Rat depth) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) >= max_degree) return;
        for (std::size_t i = start; i < allowed.size(); ++i) {
            int p = allowed[i];
            if (!cur.empty() && cur.back() == p && eng.pbw().parity_at(p) == 1) continue;
            Rat d = depth - eng.ctx().height[eng.pbw().basis_index(p)];
            if (d > max_depth) continue;
            cur.push_back(p);
            dfs(i, d);
            cur.pop_back();
        }
    };
    dfs(0, Rat(0));
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

int MonomialTable::add(const Monomial& m, const std::string& key) {
    auto [it, fresh] = id.emplace(m, static_cast<int>(mons.size()));
    if (fresh) {
        mons.push_back(m);
        wkey.push_back(key);
    }
    return it->second;
}

bool MonomialTable::to_vec(const EnvElement& e, SparseVec& out) const {
    out = SparseVec();
    std::vector<std::pair<int, CycScalar>> tmp;
    for (const auto& [m, c] : e) {
        auto it = id.find(m);
        if (it == id.end()) return false;
        tmp.emplace_back(it->second, c);
    }
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, c] : tmp) out.set(i, c);
    return true;
}

EnvElement MonomialTable::to_env(const SparseVec& v) const {
    EnvElement out;
    for (const auto& [i, c] : v.e) out[mons[i]] = c;
    return out;
}

int lowering_for_root(const HWContext& ctx, const Weight& alpha) {
    Weight neg = alpha;
    for (auto& x : neg) x = -x;
    int found = -1;
    for (std::size_t b = 0; b < ctx.kind.size(); ++b)
        if (ctx.kind[b] == GenKind::Lower && ctx.exponent[b] == 0 && ctx.wt[b] == neg) {
            if (found >= 0) throw Error("lowering generator for root " + weight_string(alpha) + " is not unique");
            found = static_cast<int>(b);
        }
    if (found < 0) throw Error("no lowering generator for root " + weight_string(alpha));
    return found;
}

}  // namespace detail

using detail::add_weight;
using detail::simple_coordinates;

// ------------------------------------------------------------ contexts

std::vector<int> HWContext::generator_order() const {
    int n = static_cast<int>(kind.size());
    std::vector<int> lower, hg, hp, raise;
    for (int b = 0; b < n; ++b) {
        switch (kind[b]) {
            case GenKind::Lower: lower.push_back(b); break;
            case GenKind::HG: hg.push_back(b); break;
            case GenKind::HP: hp.push_back(b); break;
            case GenKind::Raise: raise.push_back(b); break;
        }
    }
    auto by_height = [&](int a, int b) {
        if (height[a] != height[b]) return height[a] < height[b];
        if (exponent[a] != exponent[b]) return exponent[a] < exponent[b];
        return a < b;
    };
    std::sort(lower.begin(), lower.end(), by_height);
    std::sort(raise.begin(), raise.end(), by_height);
    std::sort(hp.begin(), hp.end(), [&](int a, int b) {
        if (exponent[a] != exponent[b]) return exponent[a] < exponent[b];
        return a < b;
    });
    std::vector<int> out = lower;
    out.insert(out.end(), hg.begin(), hg.end());
    out.insert(out.end(), hp.begin(), hp.end());
    out.insert(out.end(), raise.begin(), raise.end());
    return out;
}

namespace {

GenKind classify(const std::vector<Rat>& c, Rat& ht) {
    ht = 0;
    bool pos = true, neg = true, zero = true;
    for (const auto& q : c) {
        ht += q;
        if (q < 0) pos = false;
        if (q > 0) neg = false;
        if (q != 0) zero = false;
    }
    if (zero) return GenKind::HG;
    if (!pos && !neg) throw Error("weight is neither positive nor negative");
    return pos ? GenKind::Raise : GenKind::Lower;
}

}  // namespace

HWContext context_for(const EqMapAlgebra& E) {
    HWContext ctx;
    ctx.alg = &E.alg;
    ctx.fixed = &E.fold->fixed;
    ctx.frs = E.frs;
    ctx.ftd = E.ftd;
    SubspaceCoords hc(E.fold->h_gamma, E.fold->g.dim());
    for (const auto& b : E.info) {
        ctx.kind.push_back(b.kind);
        ctx.wt.push_back(b.wt);
        ctx.height.push_back(b.height);
        ctx.exponent.push_back(b.a);
        Element h;
        if (b.kind == GenKind::HG && !hc.coords(b.x, h)) throw Error("Cartan-type generator outside h_Gamma");
        ctx.h_of.push_back(b.kind == GenKind::HG ? h : Element());
    }
    return ctx;
}

HWContext context_for_fixed(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd) {
    HWContext ctx;
    ctx.alg = &fixed;
    ctx.fixed = &fixed;
    ctx.frs = frs;
    ctx.ftd = ftd;
    for (int k = 0; k < fixed.dim(); ++k) {
        Weight w;
        Element x = SparseVec::unit(k);
        if (!is_weight_vector(fixed, frs.cartan, x, &w))
            throw Error("basis element " + fixed.label(k) + " of " + fixed.name() + " is not a weight vector");
        Rat ht;
        GenKind kd = classify(simple_coordinates(frs, w), ht);
        ctx.kind.push_back(kd);
        ctx.wt.push_back(w);
        ctx.height.push_back(ht);
        ctx.exponent.push_back(0);
        ctx.h_of.push_back(kd == GenKind::HG ? cartan_coords(fixed, frs, x) : Element());
    }
    return ctx;
}

std::vector<EvenSimple> even_simple_roots(const SuperAlgebra& fixed, const RootSystem& frs) {
    std::vector<int> p0;
    for (int r : frs.positive())
        if (frs.roots[r].parity == 0) p0.push_back(r);
    std::vector<EvenSimple> out;
    for (int r : p0) {
        bool decomposable = false;
        for (std::size_t i = 0; i < p0.size() && !decomposable; ++i)
            for (std::size_t j = i; j < p0.size() && !decomposable; ++j)
                if (add_weight(frs.roots[p0[i]].value, frs.roots[p0[j]].value) == frs.roots[r].value)
                    decomposable = true;
        if (!decomposable) out.push_back({r, coroot(fixed, frs, r)});
    }
    return out;
}

Weight lambda_from_coroots(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd,
                           const std::vector<Rat>& values) {
    int r = frs.rank();
    if (static_cast<int>(values.size()) != static_cast<int>(ftd.hc.size()))
        throw Error("lambda needs " + std::to_string(ftd.hc.size()) + " values, one per simple coroot");
    std::vector<SparseVec> cols(r);
    for (std::size_t i = 0; i < ftd.hc.size(); ++i)
        for (const auto& [k, c] : cartan_coords(fixed, frs, ftd.hc[i]).e) cols[k].set(static_cast<int>(i), c);
    SparseVec target;
    for (std::size_t i = 0; i < values.size(); ++i) target.set(static_cast<int>(i), CycScalar(values[i]));
    std::vector<CycScalar> c;
    if (!solve_combination(cols, target, static_cast<int>(values.size()), c))
        throw Error("lambda: values on the simple coroots are inconsistent");
    return Weight(c.begin(), c.end());
}

std::vector<long> power_exponents(const SuperAlgebra& fixed, const RootSystem& frs, const Weight& lambda) {
    std::vector<long> out;
    for (const auto& es : even_simple_roots(fixed, frs)) {
        CycScalar v = evaluate(fixed, frs, lambda, es.coroot);
        if (!v.is_rational() || v.rational().get_den() != 1 || v.rational() < 0)
            throw Error("lambda(h_alpha) = " + v.str() + " for even simple root " +
                        weight_string(frs.roots[es.root].value) + " is not a nonnegative integer");
        out.push_back(v.rational().get_num().get_si());
    }
    return out;
}

// ------------------------------------------------------------ oracle

namespace {

std::vector<SparseVec> simple_root_vectors(const RootSystem& frs) {
    std::vector<SparseVec> out;
    for (int s : frs.simple) {
        SparseVec v;
        for (int k = 0; k < frs.rank(); ++k) v.set(k, frs.roots[s].value[k]);
        out.push_back(v);
    }
    return out;
}

}  // namespace

WeightOracle::WeightOracle(const SuperAlgebra& fixed, const RootSystem& frs, Weight lambda)
    : fixed_(&fixed), frs_(&frs), lambda_(std::move(lambda)), simple_(simple_root_vectors(frs), frs.rank()) {
    for (const auto& es : even_simple_roots(fixed, frs)) reflections_.emplace_back(frs.roots[es.root].value, es.coroot);
}

std::vector<Rat> WeightOracle::simple_coords(const Weight& mu) const { return simple_coordinates(*frs_, mu); }

bool WeightOracle::in_cone(const Weight& mu) const {
    std::vector<Rat> c;
    try {
        c = simple_coords(add_weight(lambda_, mu, CycScalar(-1)));
    } catch (const Error&) {
        return false;
    }
    return std::all_of(c.begin(), c.end(), [](const Rat& q) { return q >= 0 && q.get_den() == 1; });
}

Rat WeightOracle::depth(const Weight& mu) const {
    Rat d = 0;
    for (const auto& q : simple_coords(add_weight(lambda_, mu, CycScalar(-1)))) d += q;
    return d;
}

CycScalar WeightOracle::value(const Weight& mu, const Element& h_fixed) const {
    return evaluate(*fixed_, *frs_, mu, h_fixed);
}

bool WeightOracle::admissible(const Weight& mu) {
    std::string key = weight_string(mu);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = true;
    std::set<std::string> seen{key};
    std::deque<Weight> q{mu};
    while (!q.empty() && ok) {
        Weight v = q.front();
        q.pop_front();
        if (!in_cone(v)) {
            ok = false;
            break;
        }
        for (const auto& [root, co] : reflections_) {
            Weight w = add_weight(v, root, -value(v, co));
            if (seen.insert(weight_string(w)).second) q.push_back(w);
        }
        if (seen.size() > 100000) throw Error("W_0 orbit too large");
    }
    memo_[key] = ok;
    return ok;
}

namespace detail {

std::vector<Weight> admissible_weights(WeightOracle& oracle, const SuperAlgebra& fixed, const RootSystem& frs,
                                       Rat* bound) {
    std::vector<EvenSimple> ev = even_simple_roots(fixed, frs);
    Rat dorb = 0;
    {
        std::set<std::string> seen{weight_string(oracle.lambda())};
        std::deque<Weight> q{oracle.lambda()};
        while (!q.empty()) {
            Weight v = q.front();
            q.pop_front();
            dorb = std::max(dorb, oracle.depth(v));
            for (const auto& es : ev) {
                Weight w = add_weight(v, frs.roots[es.root].value, -evaluate(fixed, frs, v, es.coroot));
                if (seen.insert(weight_string(w)).second) q.push_back(w);
            }
        }
    }
    Rat b = 2 * dorb + 2;
    for (int r : frs.positive())
        if (frs.roots[r].parity == 1) b += frs.height(r);
    if (bound) *bound = b;
    std::vector<Weight> simple;
    for (int s : frs.simple) simple.push_back(frs.roots[s].value);
    std::vector<std::pair<Rat, Weight>> found;
    std::set<std::string> seen{weight_string(oracle.lambda())};
    std::deque<Weight> q{oracle.lambda()};
    while (!q.empty()) {
        Weight v = q.front();
        q.pop_front();
        Rat d = oracle.depth(v);
        if (oracle.admissible(v)) found.emplace_back(d, v);
        for (const auto& a : simple) {
            Weight w = add_weight(v, a, CycScalar(-1));
            if (oracle.depth(w) > b) continue;
            if (seen.insert(weight_string(w)).second) q.push_back(w);
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return weight_string(x.second) < weight_string(y.second);
    });
    std::vector<Weight> out;
    for (auto& [d, w] : found) out.push_back(w);
    return out;
}

}  // namespace detail

// ------------------------------------------------------------ modules

std::map<std::string, int> WeylModule::character() const {
    std::map<std::string, int> out;
    for (const auto& w : weights) ++out[weight_string(w)];
    return out;
}

std::vector<int> WeylModule::weight_space(const Weight& mu) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (weights[i] == mu) out.push_back(i);
    return out;
}

SparseMatrix WeylModule::rho(const Element& x) const {
    SparseMatrix out(dim(), dim());
    for (const auto& [i, c] : x.e) out = out + action[i].scaled(c);
    return out;
}

std::vector<std::string> representation_violations(const SuperAlgebra& L, const std::vector<SparseMatrix>& action) {
    std::vector<std::string> bad;
    int n = L.dim();
    if (static_cast<int>(action.size()) != n) return {"action has " + std::to_string(action.size()) + " matrices"};
    int d = n ? action[0].rows() : 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SparseMatrix lhs = action[i] * action[j];
            SparseMatrix other = action[j] * action[i];
            lhs = (L.parity(i) & L.parity(j)) ? lhs + other : lhs - other;
            SparseMatrix rhs(d, d);
            for (const auto& [k, c] : L.bracket_basis(i, j).e) rhs = rhs + action[k].scaled(c);
            if (lhs != rhs) bad.push_back("[" + L.label(i) + "," + L.label(j) + "]");
        }
    return bad;
}

// ------------------------------------------------------------ V-bar

WeylModule build_Vbar(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd,
                      const Weight& lambda) {
    using namespace detail;
    HWContext ctx = context_for_fixed(fixed, frs, ftd);
    std::vector<long> exps = power_exponents(fixed, frs, lambda);
    std::vector<EvenSimple> ev = even_simple_roots(fixed, frs);
    WeightOracle oracle(fixed, frs, lambda);
    Rat bound;
    std::vector<Weight> adm = admissible_weights(oracle, fixed, frs, &bound);
    std::set<std::string> admkeys;
    for (const auto& w : adm) admkeys.insert(weight_string(w));

    Rat maxh = 0;
    for (std::size_t b = 0; b < ctx.kind.size(); ++b)
        if (ctx.kind[b] == GenKind::Lower) maxh = std::max(maxh, Rat(-ctx.height[b]));
    Rat dmax = 0;
    for (const auto& w : adm) dmax = std::max(dmax, oracle.depth(w));
    Rat window = dmax + maxh;
    for (std::size_t i = 0; i < ev.size(); ++i) window = std::max(window, Rat((exps[i] + 1) * frs.height(ev[i].root)));
    int degcap = static_cast<int>(window.get_num().get_si() / std::max<long>(1, window.get_den().get_si())) + 2;

    ModuleEngine eng(ctx, lambda, degcap + 2);
    std::vector<int> lowpos = eng.positions([](GenKind k) { return k == GenKind::Lower; });
    std::vector<Monomial> mons = enumerate_monomials(eng, lowpos, window, degcap);

    MonomialTable tab;
    std::map<std::string, std::vector<Monomial>> by_weight, by_delta;
    Weight zero(lambda.size());
    for (const auto& m : mons) {
        Weight w = eng.weight(m);
        std::string key = weight_string(w);
        tab.add(m, key);
        by_weight[key].push_back(m);
        by_delta[weight_string(add_weight(w, lambda, CycScalar(-1)))].push_back(m);
    }

    // S = U(n^+) R, closed under raising
    std::map<std::string, Echelon> S;
    std::map<std::string, Weight> S_weight;
    std::deque<SparseVec> queue;
    std::vector<Monomial> seeds;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        int f = lowering_for_root(ctx, frs.roots[ev[i].root].value);
        seeds.emplace_back(static_cast<std::size_t>(exps[i] + 1), eng.pbw().position(f));
    }
    auto insert_S = [&](const EnvElement& e) {
        if (e.empty()) return;
        SparseVec v;
        if (!tab.to_vec(e, v)) throw Error("build_Vbar: vector outside the enumeration window");
        const std::string& key = tab.wkey[v.e.front().first];
        SparseVec added;
        if (S[key].insert(v, &added)) {
            S_weight[key] = eng.weight(tab.mons[v.e.front().first]);
            queue.push_back(added);
        }
    };
    for (const auto& s : seeds) insert_S(EnvElement{{s, CycScalar(1)}});
    std::vector<int> raising;
    for (std::size_t b = 0; b < ctx.kind.size(); ++b)
        if (ctx.kind[b] == GenKind::Raise) raising.push_back(static_cast<int>(b));
    while (!queue.empty()) {
        EnvElement e = tab.to_env(queue.front());
        queue.pop_front();
        for (int b : raising) insert_S(eng.act(b, e));
    }

    std::map<std::string, Echelon> K;
    auto K_of = [&](const Weight& mu) -> Echelon& {
        std::string key = weight_string(mu);
        auto it = K.find(key);
        if (it != K.end()) return it->second;
        Echelon E;
        for (const auto& [skey, ech] : S) {
            std::string dkey = weight_string(add_weight(mu, S_weight[skey], CycScalar(-1)));
            auto d = by_delta.find(dkey);
            if (d == by_delta.end()) continue;
            for (const auto& [piv, row] : ech.rows()) {
                EnvElement s = tab.to_env(row);
                for (const auto& u : d->second) {
                    EnvElement v = eng.act_word(u, s);
                    if (v.empty()) continue;
                    SparseVec sv;
                    if (!tab.to_vec(v, sv)) throw Error("build_Vbar: relation outside the enumeration window");
                    E.insert(sv);
                }
            }
        }
        return K.emplace(key, std::move(E)).first->second;
    };

    WeylModule W;
    W.acting = fixed.name();
    W.lambda = lambda;
    for (int k = 0; k < fixed.dim(); ++k) W.generator_names.push_back(fixed.label(k));
    std::map<int, int> basis_of;  // table id -> basis index
    for (const auto& mu : adm) {
        Echelon& E = K_of(mu);
        for (const auto& m : by_weight[weight_string(mu)]) {
            int id = tab.id.at(m);
            if (E.is_pivot(id)) continue;
            basis_of[id] = W.dim();
            W.weights.push_back(mu);
            W.monomials.push_back(eng.to_basis(m));
        }
    }
    W.highest = basis_of.count(tab.id.at(Monomial{})) ? basis_of.at(tab.id.at(Monomial{})) : -1;

    std::vector<Monomial> by_id_mon;
    for (const auto& m : W.monomials) by_id_mon.push_back(eng.to_positions(m));
    bool boundary_ok = true;
    int n = W.dim();
    for (int k = 0; k < fixed.dim(); ++k) {
        SparseMatrix M(n, n);
        for (int j = 0; j < n; ++j) {
            EnvElement v = eng.act(k, EnvElement{{by_id_mon[j], CycScalar(1)}});
            if (v.empty()) continue;
            Weight tw = add_weight(W.weights[j], ctx.wt[k]);
            std::string tkey = weight_string(tw);
            SparseVec sv;
            if (!tab.to_vec(v, sv)) throw Error("build_Vbar: action leaves the enumeration window");
            SparseVec red = K_of(tw).reduce(sv);
            if (!admkeys.count(tkey)) {
                // non-admissible weight: the whole weight space must vanish
                Echelon& E = K_of(tw);
                if (E.size() != by_weight[tkey].size()) boundary_ok = false;
                if (!red.empty()) boundary_ok = false;
                continue;
            }
            for (const auto& [id, c] : red.e) M.set(basis_of.at(id), j, c);
        }
        W.action.push_back(std::move(M));
    }
    bool seeds_zero = true;
    for (const auto& s : seeds) {
        SparseVec sv;
        tab.to_vec(EnvElement{{s, CycScalar(1)}}, sv);
        if (!K_of(eng.weight(s)).reduce(sv).empty()) seeds_zero = false;
    }
    std::vector<std::string> viol = representation_violations(fixed, W.action);
    W.cert.cap = degcap;
    W.cert.method = "weight-space";
    W.cert.converged = true;
    W.cert.closure_verified = viol.empty() && boundary_ok;
    W.cert.relations_verified = seeds_zero;
    for (const auto& v : viol) W.cert.warnings.push_back("bracket relation fails on " + v);
    if (!boundary_ok) W.cert.warnings.push_back("a non-admissible weight space does not vanish");
    return W;
}

}  // namespace sw
