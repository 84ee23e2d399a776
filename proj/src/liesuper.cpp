#include "superweyl/liesuper.hpp"

#include <sstream>

namespace sw {

namespace {

CycScalar swap_sign(int pi, int pj) { return (pi & pj) ? CycScalar(1) : CycScalar(-1); }

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, int conductor, std::vector<BasisElement> basis)
    : name_(std::move(name)), conductor_(conductor), basis_(std::move(basis)) {
    for (int i = 0; i < dim(); ++i) basis_[i].index = i;
    table_.assign(static_cast<std::size_t>(dim()) * dim(), SparseVec());
}

int SuperAlgebra::even_dim() const {
    int n = 0;
    for (const auto& b : basis_) n += b.parity == 0;
    return n;
}

void SuperAlgebra::set_bracket(int i, int j, const SparseVec& v) {
    int n = dim();
    if (i < 0 || j < 0 || i >= n || j >= n) throw Error("bracket index out of range");
    for (const auto& [k, c] : v.e) {
        if (k < 0 || k >= n) throw Error("bracket target out of range");
        (void)c;
    }
    SparseVec w = v;
    if (i > j) {
        w = scaled(v, swap_sign(parity(i), parity(j)));
        std::swap(i, j);
    }
    table_[static_cast<std::size_t>(i) * n + j] = w;
    if (i != j) table_[static_cast<std::size_t>(j) * n + i] = scaled(w, swap_sign(parity(i), parity(j)));
}

const SparseVec& SuperAlgebra::stored(int i, int j) const {
    if (i > j) throw Error("stored brackets have i <= j");
    return bracket_basis(i, j);
}

bool SuperAlgebra::is_homogeneous(const Element& x) const {
    int p = -1;
    for (const auto& [i, c] : x.e) {
        (void)c;
        if (p < 0) p = parity(i);
        if (parity(i) != p) return false;
    }
    return true;
}

int SuperAlgebra::element_parity(const Element& x) const {
    check_element(x);
    if (!is_homogeneous(x)) throw Error("element is not homogeneous; parity-dependent operation refused");
    return x.empty() ? 0 : parity(x.e.front().first);
}

void SuperAlgebra::check_element(const Element& x) const {
    for (const auto& [i, c] : x.e) {
        (void)c;
        if (i < 0 || i >= dim()) throw Error("element uses a basis index foreign to " + name_);
    }
}

Element bracket(const SuperAlgebra& L, const Element& x, const Element& y) {
    L.check_element(x);
    L.check_element(y);
    SparseVec out;
    for (const auto& [i, a] : x.e)
        for (const auto& [j, b] : y.e) axpy(out, a * b, L.bracket_basis(i, j));
    return out;
}

AxiomReport check_axioms(const SuperAlgebra& L) {
    AxiomReport rep;
    int n = L.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            int target = (L.parity(i) + L.parity(j)) % 2;
            for (const auto& [k, c] : L.stored(i, j).e) {
                (void)c;
                if (L.parity(k) != target) {
                    std::ostringstream os;
                    os << "grading: [" << L.label(i) << "," << L.label(j) << "] has component on " << L.label(k);
                    rep.violations.push_back(os.str());
                }
            }
            if (i == j && L.parity(i) == 0 && !L.stored(i, i).empty()) {
                rep.violations.push_back("skew-supersymmetry: [" + L.label(i) + "," + L.label(i) + "] != 0 for even element");
            }
        }
    }
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
            const SparseVec& bc = L.bracket_basis(b, c);
            for (int a = 0; a < n; ++a) {
                SparseVec lhs;
                for (const auto& [k, v] : bc.e) axpy(lhs, v, L.bracket_basis(a, k));
                SparseVec rhs;
                for (const auto& [k, v] : L.bracket_basis(a, b).e) axpy(rhs, v, L.bracket_basis(k, c));
                CycScalar s = (L.parity(a) & L.parity(b)) ? CycScalar(-1) : CycScalar(1);
                for (const auto& [k, v] : L.bracket_basis(a, c).e) axpy(rhs, s * v, L.bracket_basis(b, k));
                ++rep.checked_triples;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "jacobi: (" << L.label(a) << "," << L.label(b) << "," << L.label(c) << ")";
                    rep.violations.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

SparseMatrix ad(const SuperAlgebra& L, const Element& x) {
    L.check_element(x);
    int n = L.dim();
    std::vector<SparseVec> cols(n);
    for (int j = 0; j < n; ++j)
        for (const auto& [i, a] : x.e) axpy(cols[j], a, L.bracket_basis(i, j));
    return SparseMatrix::from_columns(n, cols);
}

CycScalar supertrace(const std::vector<int>& row_parity, const SparseMatrix& M) {
    if (M.rows() != M.cols() || M.rows() != static_cast<int>(row_parity.size()))
        throw Error("supertrace: dimension mismatch");
    CycScalar s;
    for (int i = 0; i < M.rows(); ++i) {
        CycScalar d = M.get(i, i);
        if (row_parity[i])
            s -= d;
        else
            s += d;
    }
    return s;
}

CycScalar supertrace(const SuperAlgebra& L, const SparseMatrix& M) {
    std::vector<int> par(L.dim());
    for (int i = 0; i < L.dim(); ++i) par[i] = L.parity(i);
    return supertrace(par, M);
}

CycScalar killing_form(const SuperAlgebra& L, const Element& x, const Element& y) {
    L.check_element(x);
    L.check_element(y);
    CycScalar s;
    for (int j = 0; j < L.dim(); ++j) {
        SparseVec yb;
        for (const auto& [i, a] : y.e) axpy(yb, a, L.bracket_basis(i, j));
        CycScalar d;
        for (const auto& [i, a] : x.e)
            for (const auto& [k, b] : yb.e) d += a * b * L.bracket_basis(i, k).get(j);
        if (L.parity(j))
            s -= d;
        else
            s += d;
    }
    return s;
}

SparseMatrix realize(const SuperAlgebra& L, const Element& x) {
    if (!L.realization()) throw Error("algebra " + L.name() + " carries no matrix realization");
    const auto& R = *L.realization();
    SparseMatrix out(R.size, R.size);
    for (const auto& [i, a] : x.e) out = out + R.mats[i].scaled(a);
    return out;
}

CycScalar supertrace_form(const SuperAlgebra& L, const Element& x, const Element& y) {
    const auto& R = *L.realization();
    return supertrace(R.row_parity, realize(L, x) * realize(L, y));
}

// ---------------------------------------------------------- SubspaceCoords

SubspaceCoords::SubspaceCoords(const std::vector<SparseVec>& basis, int ambient_dim)
    : n_(ambient_dim), k_(static_cast<int>(basis.size())) {
    std::vector<SparseVec> aug;
    for (int r = 0; r < k_; ++r) {
        SparseVec v = basis[r];
        v.e.push_back({n_ + r, CycScalar(1)});
        aug.push_back(v);
    }
    RowReduction rr = row_reduce(SparseMatrix::from_rows(n_ + k_, aug));
    for (int r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] >= n_) throw Error("subspace basis is linearly dependent");
        SparseVec front, back;
        for (const auto& [j, c] : rr.rowspace[r].e) {
            if (j < n_)
                front.e.push_back({j, c});
            else
                back.e.push_back({j - n_, c});
        }
        pivots_.push_back(rr.pivots[r]);
        rows_.push_back(front);
        combo_.push_back(back);
    }
}

bool SubspaceCoords::coords(const SparseVec& v, SparseVec& out) const {
    SparseVec rest = v;
    out = SparseVec();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        CycScalar c = rest.get(pivots_[r]);
        if (c.is_zero()) continue;
        axpy(rest, -c, rows_[r]);
        axpy(out, c, combo_[r]);
    }
    return rest.empty();
}

SparseVec SubspaceCoords::coords(const SparseVec& v) const {
    SparseVec out;
    if (!coords(v, out)) throw Error("vector outside the subspace");
    return out;
}

// ------------------------------------------------------------- subalgebras

namespace {

std::vector<Element> homogeneous_parts(const SuperAlgebra& L, const Element& x) {
    SparseVec ev, od;
    for (const auto& [i, c] : x.e) (L.parity(i) ? od : ev).e.push_back({i, c});
    std::vector<Element> out;
    if (!ev.empty()) out.push_back(ev);
    if (!od.empty()) out.push_back(od);
    return out;
}

}  // namespace

SuperAlgebra subalgebra_on_basis(const SuperAlgebra& L, const std::vector<Element>& basis,
                                 const std::string& name, const std::vector<std::string>& labels) {
    int k = static_cast<int>(basis.size());
    SubspaceCoords sc(basis, L.dim());
    std::vector<BasisElement> be(k);
    for (int r = 0; r < k; ++r) {
        be[r].parity = L.element_parity(basis[r]);
        if (r < static_cast<int>(labels.size()))
            be[r].label = labels[r];
        else if (basis[r].size() == 1 && basis[r].e[0].second.is_one())
            be[r].label = L.label(basis[r].e[0].first);
        else
            be[r].label = "s" + std::to_string(r);
    }
    SuperAlgebra S(name.empty() ? L.name() + "_sub" : name, L.conductor(), be);
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            SparseVec v = bracket(L, basis[a], basis[b]);
            SparseVec c;
            if (!sc.coords(v, c)) throw Error("subalgebra basis is not bracket closed");
            S.set_bracket(a, b, c);
        }
    }
    if (L.realization()) {
        Realization R = *L.realization();
        std::vector<SparseMatrix> mats;
        for (const auto& v : basis) mats.push_back(realize(L, v));
        R.mats = mats;
        // diagonal names of L do not describe the subalgebra's Cartan
        R.coord.clear();
        S.set_realization(R);
    }
    S.set_embedding({L.name(), L.dim(), basis});
    return S;
}

SuperAlgebra subalgebra_closure(const SuperAlgebra& L, const std::vector<Element>& gens, const std::string& name) {
    std::vector<Element> basis;
    Echelon ech;
    auto add = [&](const Element& v) {
        for (const auto& part : homogeneous_parts(L, v)) {
            if (ech.insert(part)) basis.push_back(part);
        }
    };
    for (const auto& g : gens) {
        L.check_element(g);
        add(g);
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            Element v = bracket(L, basis[b], basis[a]);
            if (!v.empty()) add(v);
        }
    }
    return subalgebra_on_basis(L, basis, name.empty() ? L.name() + "_closure" : name);
}

SuperAlgebra lift_conductor(const SuperAlgebra& L, int m) {
    if (L.conductor() == m) return L;
    SuperAlgebra out(L.name(), m, L.basis());
    auto lift_vec = [&](const SparseVec& v) {
        SparseVec w;
        for (const auto& [i, c] : v.e) w.e.push_back({i, c.conductor() == 0 ? c : c.lift(m)});
        return w;
    };
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i; j < L.dim(); ++j) out.set_bracket(i, j, lift_vec(L.stored(i, j)));
    if (L.realization()) {
        Realization R = *L.realization();
        for (auto& M : R.mats) {
            SparseMatrix N(M.rows(), M.cols());
            for (int r = 0; r < M.rows(); ++r) N.row(r) = lift_vec(M.row(r));
            M = N;
        }
        out.set_realization(R);
    }
    if (L.embedding()) {
        Embedding E = *L.embedding();
        for (auto& v : E.images) v = lift_vec(v);
        out.set_embedding(E);
    }
    return out;
}

}  // namespace sw
