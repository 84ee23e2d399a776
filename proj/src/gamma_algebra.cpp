#include "module_engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace sw {

std::vector<int> GammaAlgebra::component(int s) const {
    std::vector<int> out;
    int t = ((s % m) + m) % m;
    for (int j = 0; j < dim(); ++j)
        if (grade[j] == t) out.push_back(j);
    return out;
}

SparseVec GammaAlgebra::product(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, x] : a.e)
        for (const auto& [j, y] : b.e) axpy(out, x * y, mult[i][j]);
    return out;
}

SparseVec GammaAlgebra::power(const SparseVec& a, int k) const {
    SparseVec out = SparseVec::unit(unit);
    for (int i = 0; i < k; ++i) out = product(out, a);
    return out;
}

std::vector<std::string> GammaAlgebra::check() const {
    std::vector<std::string> bad;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        if (mult[unit][i] != SparseVec::unit(i)) bad.push_back("unit fails on " + labels[i]);
        for (int j = 0; j < n; ++j) {
            if (mult[i][j] != mult[j][i]) bad.push_back("commutativity " + labels[i] + "," + labels[j]);
            for (const auto& [k, c] : mult[i][j].e) {
                (void)c;
                if (grade[k] != (grade[i] + grade[j]) % m) bad.push_back("grading " + labels[i] + "," + labels[j]);
            }
            for (int k = 0; k < n; ++k) {
                SparseVec l = product(mult[i][j], SparseVec::unit(k));
                SparseVec r = product(SparseVec::unit(i), mult[j][k]);
                if (l != r) bad.push_back("associativity " + labels[i] + "," + labels[j] + "," + labels[k]);
            }
        }
    }
    if (grade[unit] != 0) bad.push_back("unit not in A_0");
    return bad;
}

GammaAlgebra build_truncated_algebra(int N, int m) {
    if (N < 1 || N > 6) throw Error("truncated algebra needs 1 <= N <= 6");
    if (m < 1 || m > kMaxConductor) throw ConductorError("unsupported group order " + std::to_string(m));
    GammaAlgebra A;
    A.name = "trunc(" + std::to_string(N) + (m > 1 ? ";" + std::to_string(m) : "") + ")";
    A.m = m;
    A.mult.assign(N, std::vector<SparseVec>(N));
    for (int j = 0; j < N; ++j) {
        A.labels.push_back(j == 0 ? "1" : j == 1 ? "t" : "t^" + std::to_string(j));
        A.grade.push_back(j % m);
        for (int k = 0; k < N; ++k)
            if (j + k < N) A.mult[j][k] = SparseVec::unit(j + k);
    }
    return A;
}

SuperAlgebra map_superalgebra(const SuperAlgebra& L, const GammaAlgebra& A) {
    int dA = A.dim();
    std::vector<BasisElement> basis;
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < dA; ++j) {
            BasisElement b;
            b.parity = L.parity(i);
            b.label = L.label(i) + "." + A.labels[j];
            basis.push_back(b);
        }
    SuperAlgebra M(L.name() + "*" + A.name, L.conductor(), basis);
    for (int i = 0; i < L.dim(); ++i)
        for (int k = i; k < L.dim(); ++k) {
            const SparseVec& z = L.bracket_basis(i, k);
            for (int j = 0; j < dA; ++j)
                for (int l = 0; l < dA; ++l) {
                    int p = i * dA + j, q = k * dA + l;
                    if (p > q) continue;
                    SparseVec v;
                    for (const auto& [c, x] : z.e)
                        for (const auto& [d, y] : A.mult[j][l].e) v.set(c * dA + d, x * y);
                    M.set_bracket(p, q, v);
                }
        }
    return M;
}

const char* kind_name(GenKind k) {
    switch (k) {
        case GenKind::Lower: return "lower";
        case GenKind::HG: return "h";
        case GenKind::HP: return "h'";
        case GenKind::Raise: return "raise";
    }
    return "?";
}

Element EqMapAlgebra::element(const Element& x, const SparseVec& f) const {
    const SuperAlgebra& g = fold->g;
    int m = static_cast<int>(comps.size());
    Element out;
    if (x.empty() || f.empty()) return out;
    for (int s = 0; s < m; ++s) {
        SubspaceCoords sc(comps[s], g.dim());
        SparseVec c;
        if (!sc.coords(x, c)) continue;
        for (const auto& [k, a] : c.e)
            for (const auto& [j, b] : f.e) {
                bool hit = false;
                for (std::size_t p = 0; p < info.size(); ++p)
                    if (info[p].s == s && info[p].a == j && info[p].x == comps[s][k]) {
                        axpy(out, a * b, SparseVec::unit(static_cast<int>(p)));
                        hit = true;
                        break;
                    }
                if (!hit) throw Error("element: coefficient " + A.labels[j] + " not in A_{-s} for s = " + std::to_string(s));
            }
        return out;
    }
    throw Error("element: x is not in a single eigenspace of nu");
}


EqMapAlgebra equivariant_map_subalgebra(std::shared_ptr<const Folding> F, const GammaAlgebra& A) {
    const SuperAlgebra& g = F->g;
    int m = F->nu.order;
    if (A.m != m)
        throw Error("equivariant_map_subalgebra: automorphism order " + std::to_string(m) +
                    " differs from the coefficient action order " + std::to_string(A.m));
    if (F->fixed.dim() == 0) throw Error("equivariant_map_subalgebra: fixed subalgebra is zero");
    EqMapAlgebra E;
    E.fold = F;
    E.A = A;
    E.frs = F->fixed_rs;
    E.ftd = F->fixed_td;
    E.comps = refine_by_weights(g, F->h_gamma, F->dec.components);
    std::vector<BasisElement> basis;
    for (int s = 0; s < m; ++s)
        for (std::size_t k = 0; k < E.comps[s].size(); ++k) {
            const Element& x = E.comps[s][k];
            Weight w;
            if (!is_weight_vector(g, F->h_gamma, x, &w)) throw Error("refined component vector is not a weight vector");
            std::vector<Rat> c = detail::simple_coordinates(E.frs, w);
            bool pos = std::all_of(c.begin(), c.end(), [](const Rat& q) { return q >= 0; });
            bool neg = std::all_of(c.begin(), c.end(), [](const Rat& q) { return q <= 0; });
            bool zero = std::all_of(c.begin(), c.end(), [](const Rat& q) { return q == 0; });
            if (!pos && !neg) throw Error("h_Gamma weight " + weight_string(w) + " is neither positive nor negative");
            Rat ht = 0;
            for (const auto& q : c) ht += q;
            std::string xl = (x.size() == 1 && x.e[0].second.is_one()) ? g.label(x.e[0].first)
                                                                        : "g" + std::to_string(s) + "_" + std::to_string(k);
            for (int j : A.component(m - s)) {
                EqBasis b;
                b.s = s;
                b.x = x;
                b.a = j;
                b.wt = w;
                b.height = ht;
                if (zero)
                    b.kind = (s == 0 && j == A.unit) ? GenKind::HG : GenKind::HP;
                else
                    b.kind = pos ? GenKind::Raise : GenKind::Lower;
                E.info.push_back(b);
                BasisElement be;
                be.parity = g.element_parity(x);
                be.label = xl + "." + A.labels[j];
                basis.push_back(be);
            }
        }
    E.alg = SuperAlgebra("(" + g.name() + "*" + A.name + ")^G", g.conductor(), basis);
    int n = static_cast<int>(E.info.size());
    std::vector<SubspaceCoords> sc;
    for (const auto& c : E.comps) sc.emplace_back(c, g.dim());
    std::map<std::tuple<int, int, int>, int> index;  // (s, k, a) -> basis
    {
        int p = 0;
        for (int s = 0; s < m; ++s)
            for (std::size_t k = 0; k < E.comps[s].size(); ++k)
                for (int j : A.component(m - s)) index[{s, static_cast<int>(k), j}] = p++;
    }
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            const EqBasis& a = E.info[p];
            const EqBasis& b = E.info[q];
            Element z = bracket(g, a.x, b.x);
            SparseVec f = A.mult[a.a][b.a];
            SparseVec v;
            if (!z.empty() && !f.empty()) {
                int s = (a.s + b.s) % m;
                SparseVec c = sc[s].coords(z);
                for (const auto& [k, x] : c.e)
                    for (const auto& [j, y] : f.e) v.set(index.at({s, k, j}), x * y);
            }
            E.alg.set_bracket(p, q, v);
        }
    // fixed points of nu (x) sigma on g (x) A, solved independently
    int dA = A.dim();
    int N = g.dim() * dA;
    SparseMatrix T(N, N);
    for (int i = 0; i < g.dim(); ++i) {
        SparseVec col = F->nu.matrix.column(i);
        for (int j = 0; j < dA; ++j) {
            CycScalar z = m == 1 ? CycScalar(1) : CycScalar::zeta(m, A.grade[j]);
            for (const auto& [k, c] : col.e) T.add(k * dA + j, i * dA + j, c * z);
        }
    }
    RowReduction rr = row_reduce(T - SparseMatrix::identity(N));
    std::vector<SparseVec> img;
    for (const auto& b : E.info) {
        SparseVec v;
        for (const auto& [k, c] : b.x.e) v.set(k * dA + b.a, c);
        img.push_back(v);
    }
    E.fixed_points_verified = span_basis(rr.kernel, N) == span_basis(img, N) && static_cast<int>(rr.kernel.size()) == n;
    return E;
}

}  // namespace sw
