#include "module_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sw {

namespace detail {

SparseVec apply_word(const std::vector<SparseMatrix>& action, const Monomial& word, SparseVec v) {
    for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it) v = action[*it].apply(v);
    return v;
}

}  // namespace detail

using detail::add_weight;
using detail::apply_word;

namespace {

// Column-wise restriction of a weight-preserving matrix to the given indices.
SparseMatrix restrict_to(const SparseMatrix& M, const std::vector<int>& idx) {
    std::map<int, int> where;
    for (std::size_t i = 0; i < idx.size(); ++i) where[idx[i]] = static_cast<int>(i);
    int k = static_cast<int>(idx.size());
    SparseMatrix out(k, k);
    for (int j = 0; j < k; ++j)
        for (const auto& [r, c] : M.column(idx[j]).e) {
            auto it = where.find(r);
            if (it == where.end()) throw Error("restriction: matrix leaves the subspace");
            out.set(it->second, j, c);
        }
    return out;
}

SparseVec flatten(const SparseMatrix& M) {
    SparseVec v;
    for (const auto& [ij, c] : M.entries()) v.set(ij.first * M.cols() + ij.second, c);
    return v;
}

}  // namespace

// ------------------------------------------------------------ global Weyl

WeylModule build_global_weyl(const EqMapAlgebra& E, const Weight& lambda, int cap) {
    using namespace detail;
    if (cap < 2) throw Error("degree cap must be at least 2");
    HWContext ctx = context_for(E);
    const SuperAlgebra& fixed = E.fold->fixed;
    const RootSystem& frs = E.frs;
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

    WeylModule W;
    W.acting = E.alg.name();
    W.lambda = lambda;
    W.cert.cap = cap;
    for (int k = 0; k < E.alg.dim(); ++k) W.generator_names.push_back(E.alg.label(k));

    ModuleEngine eng(ctx, lambda, cap + 1);
    std::vector<int> allowed = eng.positions([](GenKind k) { return k == GenKind::Lower || k == GenKind::HP; });
    std::vector<Monomial> mons = enumerate_monomials(eng, allowed, window, cap);
    MonomialTable tab;
    for (const auto& m : mons) tab.add(m, weight_string(eng.weight(m)));

    std::vector<int> lower, hp, raise, all;
    for (int b = 0; b < E.alg.dim(); ++b) {
        if (ctx.kind[b] == GenKind::Lower) lower.push_back(b);
        if (ctx.kind[b] == GenKind::HP) hp.push_back(b);
        if (ctx.kind[b] == GenKind::Raise) raise.push_back(b);
        if (ctx.kind[b] != GenKind::HG) all.push_back(b);
    }

    std::map<std::string, Echelon> K;
    long dropped = 0;
    std::deque<SparseVec> queue;
    auto insert = [&](const EnvElement& e) {
        if (e.empty()) return;
        SparseVec v;
        if (!tab.to_vec(e, v)) {
            ++dropped;
            return;
        }
        SparseVec added;
        if (K[tab.wkey[v.e.front().first]].insert(v, &added)) queue.push_back(added);
    };
    auto close = [&](const std::vector<int>& gens) {
        while (!queue.empty()) {
            EnvElement e = tab.to_env(queue.front());
            queue.pop_front();
            for (int b : gens) {
                try {
                    insert(eng.act(b, e));
                } catch (const CapExceeded&) {
                    ++dropped;
                }
            }
        }
    };
    auto requeue_all = [&]() {
        for (const auto& [key, ech] : K)
            for (const auto& [piv, row] : ech.rows()) queue.push_back(row);
    };

    std::vector<Monomial> seeds;
    bool seeds_fit = true;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        int f = lowering_for_root(ctx, frs.roots[ev[i].root].value);
        Monomial s(static_cast<std::size_t>(exps[i] + 1), eng.pbw().position(f));
        if (static_cast<int>(s.size()) > cap) {
            seeds_fit = false;
            W.cert.warnings.push_back("power relation for " + weight_string(frs.roots[ev[i].root].value) +
                                      " exceeds the degree cap");
            continue;
        }
        seeds.push_back(s);
        insert(EnvElement{{s, CycScalar(1)}});
    }
    close(raise);
    requeue_all();
    close(hp);
    requeue_all();
    close(lower);

    // submodule check; fall back to closure under everything
    bool staged_ok = true;
    for (const auto& [key, ech] : K) {
        for (const auto& [piv, row] : ech.rows()) {
            EnvElement e = tab.to_env(row);
            for (int b : all) {
                EnvElement u = eng.act(b, e);
                SparseVec v;
                if (u.empty() || !tab.to_vec(u, v)) continue;
                if (!K[tab.wkey[v.e.front().first]].reduce(v).empty()) staged_ok = false;
            }
            if (!staged_ok) break;
        }
        if (!staged_ok) break;
    }
    W.cert.method = "staged closure";
    if (!staged_ok) {
        W.cert.method = "full closure";
        requeue_all();
        close(all);
    }

    // standard monomials
    std::map<int, int> basis_of;
    bool nonadmissible_left = false;
    int maxdeg = 0;
    for (std::size_t id = 0; id < tab.mons.size(); ++id) {
        const std::string& key = tab.wkey[id];
        auto it = K.find(key);
        if (it != K.end() && it->second.is_pivot(static_cast<int>(id))) continue;
        if (!admkeys.count(key)) {
            nonadmissible_left = true;
            continue;
        }
        maxdeg = std::max(maxdeg, static_cast<int>(tab.mons[id].size()));
        basis_of[static_cast<int>(id)] = W.dim();
        W.weights.push_back(eng.weight(tab.mons[id]));
        W.monomials.push_back(eng.to_basis(tab.mons[id]));
    }
    // order basis by weight depth, keeping monomial order inside a weight
    {
        std::vector<int> perm(W.dim());
        for (int i = 0; i < W.dim(); ++i) perm[i] = i;
        std::vector<Rat> dep;
        for (const auto& w : W.weights) dep.push_back(oracle.depth(w));
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            if (dep[a] != dep[b]) return dep[a] < dep[b];
            return weight_string(W.weights[a]) < weight_string(W.weights[b]);
        });
        std::vector<int> inv(W.dim());
        for (int i = 0; i < W.dim(); ++i) inv[perm[i]] = i;
        std::vector<Weight> ws;
        std::vector<Monomial> ms;
        for (int i : perm) {
            ws.push_back(W.weights[i]);
            ms.push_back(W.monomials[i]);
        }
        W.weights = ws;
        W.monomials = ms;
        for (auto& [id, b] : basis_of) b = inv[b];
    }
    W.highest = -1;
    for (int i = 0; i < W.dim(); ++i)
        if (W.monomials[i].empty()) W.highest = i;

    bool incomplete = false;
    long pruned = 0;
    int n = W.dim();
    for (int k = 0; k < E.alg.dim(); ++k) {
        SparseMatrix M(n, n);
        for (int j = 0; j < n; ++j) {
            EnvElement u = eng.act(k, EnvElement{{eng.to_positions(W.monomials[j]), CycScalar(1)}});
            if (u.empty()) continue;
            Weight tw = add_weight(W.weights[j], ctx.wt[k]);
            std::string tkey = weight_string(tw);
            SparseVec v;
            if (!tab.to_vec(u, v)) {
                if (admkeys.count(tkey))
                    incomplete = true;
                else
                    ++pruned;
                continue;
            }
            auto it = K.find(tkey);
            SparseVec red = it == K.end() ? v : it->second.reduce(v);
            for (const auto& [id, c] : red.e) {
                auto b = basis_of.find(id);
                if (b == basis_of.end()) {
                    incomplete = true;
                    continue;
                }
                M.set(b->second, j, c);
            }
        }
        W.action.push_back(std::move(M));
    }

    W.cert.converged = seeds_fit && !incomplete && !nonadmissible_left && maxdeg <= cap - 2 && W.highest >= 0;
    std::vector<std::string> viol = representation_violations(E.alg, W.action);
    W.cert.closure_verified = viol.empty() && !incomplete;
    W.cert.relations_verified = W.highest >= 0 && check_power_relations(E, W).empty();
    for (const auto& v : viol) W.cert.warnings.push_back("bracket relation fails on " + v);
    if (incomplete) W.cert.warnings.push_back("action leaves the truncated span at an admissible weight");
    if (nonadmissible_left) W.cert.warnings.push_back("standard monomials remain at non-admissible weights");
    if (maxdeg > cap - 2) W.cert.warnings.push_back("standard monomials reach degree " + std::to_string(maxdeg));
    if (dropped) W.cert.warnings.push_back(std::to_string(dropped) + " relation vectors exceeded the degree cap");
    if (pruned) W.cert.warnings.push_back(std::to_string(pruned) + " products vanish by W_0-invariance of the character");
    if (!W.cert.converged) W.cert.warnings.push_back("not converged at degree cap " + std::to_string(cap));
    return W;
}

std::vector<std::string> check_power_relations(const EqMapAlgebra& E, const WeylModule& W) {
    const SuperAlgebra& fixed = E.fold->fixed;
    const RootSystem& frs = E.frs;
    const auto& img = fixed.embedding()->images;
    std::vector<std::string> bad;
    if (W.highest < 0) return {"no highest weight vector"};
    for (int r : frs.positive()) {
        if (frs.roots[r].parity != 0) continue;
        CycScalar k = evaluate(fixed, frs, W.lambda, coroot(fixed, frs, r));
        std::string name = weight_string(frs.roots[r].value);
        if (!k.is_rational() || k.rational() < 0 || k.rational().get_den() != 1) {
            bad.push_back(name + ": lambda(h_alpha) = " + k.str());
            continue;
        }
        Weight neg = frs.roots[r].value;
        for (auto& x : neg) x = -x;
        int nr = frs.find(neg);
        Element xf;
        for (const auto& [i, c] : frs.roots[nr].space.front().e) axpy(xf, c, img[i]);
        SparseMatrix rho = W.rho(E.element(xf, SparseVec::unit(E.A.unit)));
        SparseVec v = SparseVec::unit(W.highest);
        long kk = k.rational().get_num().get_si();
        for (long i = 0; i <= kk && !v.empty(); ++i) v = rho.apply(v);
        if (!v.empty()) bad.push_back(name);
    }
    return bad;
}

// ------------------------------------------------------------ A_lambda

SparseMatrix HighestWeightAlgebra::left_regular(int i) const {
    SparseMatrix M(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : table[i][j].e) M.set(k, j, c);
    return M;
}

HighestWeightAlgebra highest_weight_algebra(const EqMapAlgebra& E, const WeylModule& W) {
    if (!W.cert.converged) throw Error("highest_weight_algebra: module is not converged");
    HighestWeightAlgebra Al;
    Al.vec = W.weight_space(W.lambda);
    std::map<int, int> where;
    for (std::size_t i = 0; i < Al.vec.size(); ++i) {
        Al.basis.push_back(W.monomials[Al.vec[i]]);
        where[Al.vec[i]] = static_cast<int>(i);
        if (W.monomials[Al.vec[i]].empty()) Al.unit = static_cast<int>(i);
    }
    int d = Al.dim();
    auto coords = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v.e) {
            auto it = where.find(i);
            if (it == where.end()) throw Error("highest_weight_algebra: vector leaves W_lambda");
            out.set(it->second, c);
        }
        return out;
    };
    Al.table.assign(d, std::vector<SparseVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) Al.table[i][j] = coords(apply_word(W.action, Al.basis[i], SparseVec::unit(Al.vec[j])));
    Al.commutative = true;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (Al.table[i][j] != Al.table[j][i]) Al.commutative = false;
    auto mul = [&](const SparseVec& a, const SparseVec& b) {
        SparseVec out;
        for (const auto& [i, x] : a.e)
            for (const auto& [j, y] : b.e) axpy(out, x * y, Al.table[i][j]);
        return out;
    };
    Al.associative = true;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (mul(Al.table[i][j], SparseVec::unit(k)) != mul(SparseVec::unit(i), Al.table[j][k]))
                    Al.associative = false;
    // algebra generated by the Cartan-type operators on W_lambda
    std::vector<SparseMatrix> gens;
    auto ctx = context_for(E);
    for (int b = 0; b < E.alg.dim(); ++b)
        if (ctx.kind[b] == GenKind::HG || ctx.kind[b] == GenKind::HP) gens.push_back(restrict_to(W.action[b], Al.vec));
    Echelon span;
    std::deque<SparseMatrix> q{SparseMatrix::identity(d)};
    span.insert(flatten(q.front()));
    while (!q.empty()) {
        SparseMatrix M = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            SparseMatrix P = g * M;
            if (span.insert(flatten(P))) q.push_back(P);
        }
    }
    Al.operator_dim = static_cast<int>(span.size());
    // right action (u w) a = u (a w)
    int n = W.dim();
    for (int i = 0; i < d; ++i) {
        SparseMatrix R(n, n);
        SparseVec aw = apply_word(W.action, Al.basis[i], SparseVec::unit(W.highest));
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : apply_word(W.action, W.monomials[j], aw).e) R.set(k, j, c);
        Al.right.push_back(std::move(R));
    }
    return Al;
}

FunctorResult weyl_functor_apply(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al,
                                 const std::vector<SparseMatrix>& M) {
    if (static_cast<int>(W.action.size()) != E.alg.dim()) throw Error("weyl_functor_apply: module is not over this algebra");
    int d = Al.dim();
    if (static_cast<int>(M.size()) != d) throw Error("weyl_functor_apply: need one matrix per basis element of A_lambda");
    int m = d ? M[0].rows() : 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SparseMatrix rhs(m, m);
            for (const auto& [k, c] : Al.table[i][j].e) rhs = rhs + M[k].scaled(c);
            if (M[i] * M[j] != rhs) throw Error("weyl_functor_apply: module fails the multiplication table");
        }
    if (M[Al.unit] != SparseMatrix::identity(m)) throw Error("weyl_functor_apply: unit does not act as identity");
    int n = W.dim();
    int N = n * m;
    Echelon rel;
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < d; ++i)
            for (int p = 0; p < m; ++p) {
                SparseVec v;
                for (const auto& [b, c] : Al.right[i].column(a).e) axpy(v, c, SparseVec::unit(b * m + p));
                for (const auto& [q, c] : M[i].column(p).e) axpy(v, -c, SparseVec::unit(a * m + q));
                rel.insert(v);
            }
    FunctorResult out;
    WeylModule& R = out.module;
    R.acting = W.acting;
    R.lambda = W.lambda;
    R.generator_names = W.generator_names;
    R.cert = W.cert;
    R.cert.method = "tensor quotient";
    std::map<int, int> basis_of;
    for (int idx = 0; idx < N; ++idx) {
        if (rel.is_pivot(idx)) continue;
        basis_of[idx] = R.dim();
        R.weights.push_back(W.weights[idx / m]);
        R.monomials.push_back(W.monomials[idx / m]);
    }
    R.highest = -1;
    for (const auto& [idx, b] : basis_of)
        if (idx / m == W.highest && R.highest < 0) R.highest = b;
    int r = R.dim();
    out.balanced_ok = true;
    for (const auto& A : W.action) {
        SparseMatrix T(r, r);
        for (const auto& [idx, b] : basis_of) {
            SparseVec v;
            for (const auto& [k, c] : A.column(idx / m).e) v.set(k * m + idx % m, c);
            for (const auto& [k, c] : rel.reduce(v).e) T.set(basis_of.at(k), b, c);
        }
        for (const auto& [piv, row] : rel.rows()) {
            SparseVec v;
            for (const auto& [idx, c] : row.e)
                for (const auto& [k, x] : A.column(idx / m).e) axpy(v, c * x, SparseVec::unit(k * m + idx % m));
            if (!rel.reduce(v).empty()) out.balanced_ok = false;
        }
        R.action.push_back(std::move(T));
    }
    out.right_action_commutes = true;
    for (const auto& Rt : Al.right)
        for (const auto& A : W.action)
            if (Rt * A != A * Rt) out.right_action_commutes = false;
    return out;
}

FiltrationTable filtration_stabilization(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al) {
    FiltrationTable T;
    auto ctx = context_for(E);
    Echelon F;
    std::vector<SparseVec> frontier;
    for (int v : Al.vec) {
        SparseVec added;
        if (F.insert(SparseVec::unit(v), &added)) frontier.push_back(added);
    }
    T.dims.push_back(static_cast<int>(F.size()));
    for (int step = 0; step <= W.dim() + 1; ++step) {
        if (T.n0 < 0 && T.dims.back() == W.dim()) T.n0 = static_cast<int>(T.dims.size()) - 1;
        std::vector<SparseVec> next;
        for (const auto& v : frontier)
            for (int b = 0; b < E.alg.dim(); ++b) {
                if (ctx.kind[b] != GenKind::Lower) continue;
                SparseVec added;
                if (F.insert(W.action[b].apply(v), &added)) next.push_back(added);
            }
        T.dims.push_back(static_cast<int>(F.size()));
        if (next.empty()) break;
        frontier = std::move(next);
    }
    if (T.n0 < 0 && T.dims.back() == W.dim()) T.n0 = static_cast<int>(T.dims.size()) - 1;
    T.certified = T.n0 >= 0 && W.cert.converged;
    return T;
}

LoopReduction reduce_loop_vector(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al,
                                 int root, int power) {
    LoopReduction out;
    const SuperAlgebra& fixed = E.fold->fixed;
    const RootSystem& frs = E.frs;
    if (frs.sign[root] <= 0 || frs.roots[root].parity != 0) throw Error("reduce_loop_vector: needs a positive even root");
    CycScalar kv = evaluate(fixed, frs, W.lambda, coroot(fixed, frs, root));
    if (!kv.is_rational() || kv.rational().get_den() != 1 || kv.rational() < 0)
        throw Error("reduce_loop_vector: lambda(h_alpha) is not a nonnegative integer");
    long k = kv.rational().get_num().get_si();
    Weight neg = frs.roots[root].value;
    for (auto& x : neg) x = -x;
    const auto& img = fixed.embedding()->images;
    Element xf;
    for (const auto& [i, c] : frs.roots[frs.find(neg)].space.front().e) axpy(xf, c, img[i]);
    int m = E.A.m;
    auto loop = [&](long l) -> SparseMatrix {
        long e = static_cast<long>(m) * l;
        if (e >= E.A.dim()) return SparseMatrix(W.dim(), W.dim());
        return W.rho(E.element(xf, SparseVec::unit(static_cast<int>(e))));
    };
    SparseVec target = loop(power).apply(SparseVec::unit(W.highest));
    out.zero_vector = target.empty();
    std::vector<SparseVec> cols;
    std::vector<std::pair<long, int>> tag;
    for (long l = 0; l < k; ++l) {
        SparseMatrix X = loop(l);
        for (int b = 0; b < Al.dim(); ++b) {
            cols.push_back(X.apply(SparseVec::unit(Al.vec[b])));
            tag.emplace_back(l, b);
        }
    }
    std::vector<CycScalar> c;
    if (cols.empty()) {
        out.in_span = out.zero_vector;
    } else {
        out.in_span = solve_combination(cols, target, W.dim(), c);
    }
    out.coeff.assign(static_cast<std::size_t>(k), std::vector<CycScalar>(Al.dim(), CycScalar(0)));
    if (out.in_span)
        for (std::size_t i = 0; i < c.size(); ++i) out.coeff[tag[i].first][tag[i].second] = c[i];
    out.detail = "lambda(h_alpha) = " + std::to_string(k) + ", power " + std::to_string(power) +
                 (out.zero_vector ? ", zero vector" : "") + (out.in_span ? ", in span" : ", NOT in span");
    return out;
}

// ------------------------------------------------------------ universality

SurjectionVerdict check_universal_surjection(const EqMapAlgebra& E, const WeylModule& W, const CyclicModule& V) {
    SurjectionVerdict out;
    auto ctx = context_for(E);
    if (static_cast<int>(V.action.size()) != E.alg.dim()) throw Error("cyclic module has the wrong number of matrices");
    out.highest_weight = !V.v.empty();
    for (int b = 0; b < E.alg.dim(); ++b) {
        SparseVec y = V.action[b].apply(V.v);
        if (ctx.kind[b] == GenKind::Raise && !y.empty()) out.highest_weight = false;
        if (ctx.kind[b] == GenKind::HG) {
            CycScalar val;
            for (const auto& [k, c] : ctx.h_of[b].e) val += c * W.lambda[k];
            if (y != scaled(V.v, val)) out.highest_weight = false;
        }
    }
    if (!out.highest_weight) return out;
    std::vector<SparseVec> phi;
    for (const auto& m : W.monomials) phi.push_back(apply_word(V.action, m, V.v));
    out.intertwines = true;
    for (int b = 0; b < E.alg.dim() && out.intertwines; ++b)
        for (int j = 0; j < W.dim(); ++j) {
            SparseVec lhs;
            for (const auto& [k, c] : W.action[b].column(j).e) axpy(lhs, c, phi[k]);
            if (lhs != V.action[b].apply(phi[j])) {
                out.intertwines = false;
                break;
            }
        }
    int rk = rank_of(phi, V.dim);
    out.surjective = rk == V.dim;
    out.kernel_dim = W.dim() - rk;
    return out;
}

CyclicModule as_cyclic(const WeylModule& W) {
    CyclicModule C;
    C.action = W.action;
    C.v = SparseVec::unit(W.highest);
    C.dim = W.dim();
    return C;
}

CyclicModule evaluation_module(const EqMapAlgebra& E, const WeylModule& V) {
    const SuperAlgebra& fixed = E.fold->fixed;
    SubspaceCoords sc(fixed.embedding()->images, E.fold->g.dim());
    CyclicModule C;
    C.dim = V.dim();
    C.v = SparseVec::unit(V.highest);
    for (const auto& b : E.info) {
        SparseMatrix M(C.dim, C.dim);
        if (b.s == 0 && b.a == E.A.unit) {
            SparseVec c;
            if (!sc.coords(b.x, c)) throw Error("evaluation_module: element outside g^Gamma");
            M = V.rho(c);
        }
        C.action.push_back(std::move(M));
    }
    return C;
}

CyclicModule random_quotient(const WeylModule& W, std::mt19937& rng, int* sub_dim) {
    std::vector<std::string> keys;
    for (const auto& [k, d] : W.character())
        if (k != weight_string(W.lambda)) keys.push_back(k);
    if (keys.empty()) throw Error("random_quotient: no weight below lambda");
    for (int attempt = 0; attempt < 50; ++attempt) {
        const std::string& key = keys[std::uniform_int_distribution<int>(0, static_cast<int>(keys.size()) - 1)(rng)];
        SparseVec v;
        for (int i = 0; i < W.dim(); ++i)
            if (weight_string(W.weights[i]) == key) {
                int c = std::uniform_int_distribution<int>(-3, 3)(rng);
                if (c) v.set(i, CycScalar(c));
            }
        if (v.empty()) continue;
        Echelon S;
        std::deque<SparseVec> q;
        SparseVec added;
        S.insert(v, &added);
        q.push_back(added);
        while (!q.empty()) {
            SparseVec u = q.front();
            q.pop_front();
            for (const auto& A : W.action)
                if (S.insert(A.apply(u), &added)) q.push_back(added);
        }
        if (S.contains(SparseVec::unit(W.highest))) continue;
        std::map<int, int> basis_of;
        for (int i = 0; i < W.dim(); ++i)
            if (!S.is_pivot(i)) basis_of[i] = static_cast<int>(basis_of.size());
        CyclicModule C;
        C.dim = static_cast<int>(basis_of.size());
        for (const auto& A : W.action) {
            SparseMatrix M(C.dim, C.dim);
            for (const auto& [i, bi] : basis_of)
                for (const auto& [k, c] : S.reduce(A.column(i)).e) M.set(basis_of.at(k), bi, c);
            C.action.push_back(std::move(M));
        }
        for (const auto& [k, c] : S.reduce(SparseVec::unit(W.highest)).e) C.v.set(basis_of.at(k), c);
        if (sub_dim) *sub_dim = static_cast<int>(S.size());
        return C;
    }
    throw Error("random_quotient: every sampled submodule contains the highest weight vector");
}

}  // namespace sw
