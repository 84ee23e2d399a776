#include "superweyl/classical.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace sw {

namespace {

SparseVec flatten(const SparseMatrix& M) {
    SparseVec v;
    for (int r = 0; r < M.rows(); ++r)
        for (const auto& [c, x] : M.row(r).e) v.e.push_back({r * M.cols() + c, x});
    return v;
}

SparseMatrix unit_matrix(int n, int r, int c, const CycScalar& v = CycScalar(1)) {
    SparseMatrix M(n, n);
    M.set(r, c, v);
    return M;
}

int matrix_parity(const std::vector<int>& rp, const SparseMatrix& M) {
    int p = -1;
    for (int r = 0; r < M.rows(); ++r)
        for (const auto& [c, x] : M.row(r).e) {
            (void)x;
            int q = rp[r] ^ rp[c];
            if (p >= 0 && p != q) throw Error("inhomogeneous supermatrix");
            p = q;
        }
    return p < 0 ? 0 : p;
}

SparseMatrix supercommutator(const SparseMatrix& X, int px, const SparseMatrix& Y, int py) {
    SparseMatrix a = X * Y;
    SparseMatrix b = Y * X;
    return (px & py) ? a + b : a - b;
}

SuperAlgebra from_matrices(const std::string& name, int conductor, const std::vector<int>& rp,
                           const std::vector<SparseMatrix>& mats, const std::vector<std::string>& labels,
                           const std::vector<std::string>& coord) {
    int n = static_cast<int>(rp.size());
    std::vector<BasisElement> basis;
    std::vector<SparseVec> flat;
    std::vector<int> par;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        BasisElement b;
        b.parity = matrix_parity(rp, mats[k]);
        b.label = labels[k];
        basis.push_back(b);
        par.push_back(b.parity);
        flat.push_back(flatten(mats[k]));
    }
    SubspaceCoords sc(flat, n * n);
    SuperAlgebra L(name, conductor, basis);
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i; j < mats.size(); ++j) {
            SparseMatrix Z = supercommutator(mats[i], par[i], mats[j], par[j]);
            L.set_bracket(static_cast<int>(i), static_cast<int>(j), sc.coords(flatten(Z)));
        }
    Realization R;
    R.size = n;
    R.row_parity = rp;
    R.mats = mats;
    R.coord = coord;
    L.set_realization(R);
    return L;
}

SparseVec normalize_first(const SparseVec& v) {
    if (v.empty()) return v;
    return scaled(v, v.e.front().second.inverse());
}

std::string pos_label(int r, int c) { return std::to_string(r + 1) + std::to_string(c + 1); }

}  // namespace

SuperAlgebra build_sl(int m, int n, int conductor) {
    if (m < 1 || n < 1) throw UnsupportedFamily("sl(m|n) needs m, n >= 1");
    if (m == n) throw UnsupportedFamily("sl(n|n) is not simple; psl(n|n) is out of scope");
    if (m + n > 8) throw UnsupportedFamily("sl(m|n) limited to m + n <= 8");
    int N = m + n;
    std::vector<int> rp(N);
    std::vector<std::string> coord;
    for (int a = 0; a < N; ++a) {
        rp[a] = a >= m;
        coord.push_back(a < m ? "e" + std::to_string(a + 1) : "d" + std::to_string(a - m + 1));
    }
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    for (int k = 0; k + 1 < N; ++k) {
        SparseMatrix H(N, N);
        H.set(k, k, 1);
        H.set(k + 1, k + 1, rp[k] == rp[k + 1] ? CycScalar(-1) : CycScalar(1));
        mats.push_back(H);
        labels.push_back("h" + std::to_string(k + 1));
    }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (a != b) {
                mats.push_back(unit_matrix(N, a, b));
                labels.push_back("E" + pos_label(a, b));
            }
    return from_matrices("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", conductor, rp, mats, labels, coord);
}

SuperAlgebra build_osp(int m, int two_n, int conductor) {
    if (two_n % 2 != 0) throw UnsupportedFamily("osp(m|2n) needs an even 2n");
    if (m < 1 || two_n < 2) throw UnsupportedFamily("osp(m|2n) needs m >= 1 and 2n >= 2");
    if (m > 5 || two_n > 4) throw UnsupportedFamily("osp(m|2n) limited to m <= 5, 2n <= 4");
    int n = two_n / 2;
    int N = m + two_n;
    std::vector<int> rp(N);
    for (int a = 0; a < N; ++a) rp[a] = a >= m;
    // B(e_i, e_{m-1-i}) = 1 on the even space; Omega(f_i, f_{2n-1-i}) = +-1 on the odd space
    SparseMatrix B(N, N);
    for (int i = 0; i < m; ++i) B.set(i, m - 1 - i, 1);
    for (int i = 0; i < two_n; ++i) B.set(m + i, m + two_n - 1 - i, i < n ? CycScalar(1) : CycScalar(-1));
    std::vector<std::string> coord(N);
    int k = m / 2;
    for (int i = 0; i < m; ++i) {
        if (i < k)
            coord[i] = "e" + std::to_string(i + 1);
        else if (m - 1 - i < k)
            coord[i] = "-e" + std::to_string(m - i);
        else
            coord[i] = "0";
    }
    for (int i = 0; i < two_n; ++i) coord[m + i] = i < n ? "d" + std::to_string(i + 1) : "-d" + std::to_string(two_n - i);

    std::vector<SparseVec> kernel_all;
    for (int px = 0; px < 2; ++px) {
        // unknowns: entries (r, c) with rp[r] ^ rp[c] == px
        std::vector<std::pair<int, int>> cols;
        std::map<std::pair<int, int>, int> colid;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                if ((rp[r] ^ rp[c]) == px) {
                    colid[{r, c}] = static_cast<int>(cols.size());
                    cols.push_back({r, c});
                }
        std::vector<SparseVec> rows;
        for (int u = 0; u < N; ++u)
            for (int v = 0; v < N; ++v) {
                // B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0
                SparseVec eq;
                CycScalar sgn = (px & rp[u]) ? CycScalar(-1) : CycScalar(1);
                for (int kk = 0; kk < N; ++kk) {
                    CycScalar bkv = B.get(kk, v);
                    if (!bkv.is_zero() && colid.count({kk, u})) eq.set(colid[{kk, u}], eq.get(colid[{kk, u}]) + bkv);
                    CycScalar buk = B.get(u, kk);
                    if (!buk.is_zero() && colid.count({kk, v}))
                        eq.set(colid[{kk, v}], eq.get(colid[{kk, v}]) + sgn * buk);
                }
                if (!eq.empty()) rows.push_back(eq);
            }
        RowReduction rr = row_reduce(SparseMatrix::from_rows(static_cast<int>(cols.size()), rows));
        for (const auto& kv : rr.kernel) {
            SparseVec flat;
            for (const auto& [j, x] : kv.e) flat.set(cols[j].first * N + cols[j].second, x);
            kernel_all.push_back(normalize_first(flat));
        }
    }
    auto to_matrix = [&](const SparseVec& flat) {
        SparseMatrix M(N, N);
        for (const auto& [idx, x] : flat.e) M.set(idx / N, idx % N, x);
        return M;
    };
    auto is_diag = [&](const SparseVec& flat) {
        for (const auto& [idx, x] : flat.e) {
            (void)x;
            if (idx / N != idx % N) return false;
        }
        return true;
    };
    std::vector<SparseVec> diag, off;
    for (const auto& v : kernel_all) (is_diag(v) ? diag : off).push_back(v);
    auto first_entry = [](const SparseVec& v) { return v.e.front().first; };
    std::sort(diag.begin(), diag.end(), [&](const SparseVec& a, const SparseVec& b) { return first_entry(a) < first_entry(b); });
    std::sort(off.begin(), off.end(), [&](const SparseVec& a, const SparseVec& b) { return first_entry(a) < first_entry(b); });
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    for (const auto& v : diag) {
        int a = first_entry(v) / N;
        mats.push_back(to_matrix(v));
        labels.push_back("h_" + coord[a]);
    }
    for (const auto& v : off) {
        int e = first_entry(v);
        mats.push_back(to_matrix(v));
        labels.push_back("X" + pos_label(e / N, e % N));
    }
    return from_matrices("osp(" + std::to_string(m) + "|" + std::to_string(two_n) + ")", conductor, rp, mats, labels,
                         coord);
}

std::vector<Element> cartan_subalgebra(const SuperAlgebra& L) {
    if (!L.realization()) throw Error("cartan_subalgebra: " + L.name() + " has no matrix realization");
    const auto& R = *L.realization();
    int N = R.size;
    std::map<int, SparseVec> cond;  // off-diagonal entry -> coefficients over the basis
    for (int i = 0; i < L.dim(); ++i)
        for (int r = 0; r < N; ++r)
            for (const auto& [c, x] : R.mats[i].row(r).e)
                if (r != c) cond[r * N + c].set(i, x);
    std::vector<SparseVec> rows;
    for (auto& [k, v] : cond) rows.push_back(v);
    RowReduction rr = row_reduce(SparseMatrix::from_rows(L.dim(), rows));
    std::vector<Element> out;
    for (const auto& v : rr.kernel) {
        // only even elements are diagonal; odd basis elements never are
        out.push_back(normalize_first(v));
    }
    return out;
}

// ---------------------------------------------------------------- roots

int RootSystem::find(const Weight& w) const {
    for (std::size_t r = 0; r < roots.size(); ++r)
        if (roots[r].value == w) return static_cast<int>(r);
    return -1;
}

Rat RootSystem::height(int r) const {
    Rat h = 0;
    for (const auto& c : coeff[r]) h += c;
    return h;
}

std::vector<int> RootSystem::positive() const {
    std::vector<int> out;
    for (std::size_t r = 0; r < roots.size(); ++r)
        if (sign[r] > 0) out.push_back(static_cast<int>(r));
    return out;
}

std::vector<int> RootSystem::negative() const {
    std::vector<int> out;
    for (std::size_t r = 0; r < roots.size(); ++r)
        if (sign[r] < 0) out.push_back(static_cast<int>(r));
    return out;
}

int RootSystem::odd_simple_count() const {
    int c = 0;
    for (int s : simple) c += roots[s].parity;
    return c;
}

std::string weight_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ", ";
        s += w[k].str();
    }
    return s + ")";
}

namespace {

bool weight_less(const Weight& a, const Weight& b) {
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (canonical_less(a[k], b[k])) return true;
        if (canonical_less(b[k], a[k])) return false;
    }
    return a.size() < b.size();
}

}  // namespace

bool is_weight_vector(const SuperAlgebra& L, const std::vector<Element>& hs, const Element& v, Weight* w) {
    if (v.empty()) return false;
    Weight out;
    int lead = v.e.front().first;
    for (const auto& h : hs) {
        Element hv = bracket(L, h, v);
        CycScalar c = hv.get(lead) / v.e.front().second;
        if (hv != scaled(v, c)) return false;
        out.push_back(c);
    }
    if (w) *w = out;
    return true;
}

std::vector<WeightSpace> weight_decomposition(const SuperAlgebra& L, const std::vector<Element>& hs,
                                              const std::vector<Element>& space) {
    int n = L.dim();
    int r = static_cast<int>(hs.size());
    std::vector<SparseMatrix> adh;
    std::vector<std::vector<CycScalar>> cand(r);
    if (!L.realization()) throw Error("weight_decomposition: eigenvalue candidates need a matrix realization");
    for (int k = 0; k < r; ++k) {
        adh.push_back(ad(L, hs[k]));
        std::vector<CycScalar> c{CycScalar(0)};
        SparseMatrix M = realize(L, hs[k]);
        for (int a = 0; a < M.rows(); ++a)
            for (int b = 0; b < M.rows(); ++b) c.push_back(M.get(a, a) - M.get(b, b));
        std::sort(c.begin(), c.end(), canonical_less);
        c.erase(std::unique(c.begin(), c.end()), c.end());
        cand[k] = c;
    }
    std::vector<WeightSpace> spaces;
    for (int p = 0; p < 2; ++p) {
        WeightSpace s;
        s.parity = p;
        for (const auto& v : space)
            if (L.element_parity(v) == p) s.vecs.push_back(v);
        if (!s.vecs.empty()) spaces.push_back(s);
    }
    for (int k = 0; k < r; ++k) {
        std::vector<WeightSpace> next;
        for (const auto& s : spaces) {
            std::vector<SparseVec> img;
            for (const auto& v : s.vecs) img.push_back(adh[k].apply(v));
            std::size_t found = 0;
            for (const auto& c : cand[k]) {
                std::vector<SparseVec> cols;
                for (std::size_t j = 0; j < s.vecs.size(); ++j) {
                    SparseVec col = img[j];
                    axpy(col, -c, s.vecs[j]);
                    cols.push_back(col);
                }
                RowReduction rr = row_reduce(SparseMatrix::from_columns(n, cols));
                if (rr.kernel.empty()) continue;
                WeightSpace t;
                t.w = s.w;
                t.w.push_back(c);
                t.parity = s.parity;
                std::vector<SparseVec> vs;
                for (const auto& y : rr.kernel) {
                    SparseVec v;
                    for (const auto& [j, a] : y.e) axpy(v, a, s.vecs[j]);
                    vs.push_back(v);
                }
                t.vecs = span_basis(vs, n);
                found += t.vecs.size();
                next.push_back(t);
            }
            if (found != s.vecs.size())
                throw Error("weight_decomposition: ad action is not semisimple on " + L.name());
        }
        spaces = next;
    }
    std::sort(spaces.begin(), spaces.end(), [](const WeightSpace& a, const WeightSpace& b) {
        if (a.w != b.w) return weight_less(a.w, b.w);
        return a.parity < b.parity;
    });
    return spaces;
}

RootSystem root_decomposition(const SuperAlgebra& L, const std::vector<Element>& h) {
    RootSystem rs;
    rs.cartan = h;
    if (L.realization()) rs.coord = L.realization()->coord;
    std::vector<Element> all;
    for (int i = 0; i < L.dim(); ++i) all.push_back(SparseVec::unit(i));
    int zero_dim = 0;
    for (const auto& s : weight_decomposition(L, h, all)) {
        bool zero = std::all_of(s.w.begin(), s.w.end(), [](const CycScalar& x) { return x.is_zero(); });
        if (zero) {
            zero_dim += static_cast<int>(s.vecs.size());
            continue;
        }
        Root root;
        root.value = s.w;
        root.parity = s.parity;
        root.space = s.vecs;
        SparseMatrix M = realize(L, s.vecs.front());
        for (int a = 0; a < M.rows() && root.row < 0; ++a)
            if (!M.row(a).empty()) {
                root.row = a;
                root.col = M.row(a).e.front().first;
            }
        rs.roots.push_back(root);
    }
    if (zero_dim != rs.rank()) throw Error("root_decomposition: zero weight space differs from the Cartan");
    return rs;
}

namespace {

Weight add_weights(const Weight& a, const Weight& b) {
    Weight w(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) w[k] = a[k] + b[k];
    return w;
}

bool apply_functional_keyed(RootSystem& rs, const std::vector<Rat>& phi, const std::vector<long>& lead,
                            const std::string& label) {
    std::size_t R = rs.roots.size();
    for (const auto& x : phi)
        if (x == 0) return false;
    std::map<std::string, int> index;
    for (std::size_t r = 0; r < R; ++r) index[weight_string(rs.roots[r].value)] = static_cast<int>(r);
    std::vector<int> pos;
    for (std::size_t r = 0; r < R; ++r)
        if (phi[r] > 0) pos.push_back(static_cast<int>(r));
    std::set<int> decomposable;
    for (int a : pos)
        for (int b : pos) {
            auto it = index.find(weight_string(add_weights(rs.roots[a].value, rs.roots[b].value)));
            if (it != index.end() && phi[it->second] > 0) decomposable.insert(it->second);
        }
    std::vector<int> simple;
    for (int a : pos)
        if (!decomposable.count(a)) simple.push_back(a);
    if (static_cast<int>(simple.size()) != rs.rank()) return false;
    std::sort(simple.begin(), simple.end(), [&](int a, int b) {
        if (lead[a] != lead[b]) return lead[a] < lead[b];
        if (phi[a] != phi[b]) return phi[a] < phi[b];
        return a < b;
    });
    int r = rs.rank();
    std::vector<SparseVec> sv;
    for (int s : simple) {
        SparseVec v;
        for (int k = 0; k < r; ++k) v.set(k, rs.roots[s].value[k]);
        sv.push_back(v);
    }
    SubspaceCoords sc;
    try {
        sc = SubspaceCoords(sv, r);
    } catch (const Error&) {
        return false;
    }
    std::vector<std::vector<Rat>> coeff(R);
    for (std::size_t a = 0; a < R; ++a) {
        SparseVec v;
        for (int k = 0; k < r; ++k) v.set(k, rs.roots[a].value[k]);
        SparseVec c;
        if (!sc.coords(v, c)) return false;
        coeff[a].assign(r, Rat(0));
        for (const auto& [k, x] : c.e) {
            if (!x.is_rational()) return false;
            const Rat& q = x.rational();
            if (q.get_den() != 1) return false;
            if ((phi[a] > 0 && q < 0) || (phi[a] < 0 && q > 0)) return false;
            coeff[a][k] = q;
        }
    }
    rs.simple = simple;
    rs.sign.assign(R, 0);
    for (std::size_t a = 0; a < R; ++a) rs.sign[a] = phi[a] > 0 ? 1 : -1;
    rs.coeff = coeff;
    rs.base_label = label;
    rs.distinguished = rs.odd_simple_count() == 1;
    return true;
}

}  // namespace

bool apply_functional(RootSystem& rs, const std::vector<Rat>& phi, const std::string& label) {
    return apply_functional_keyed(rs, phi, std::vector<long>(rs.roots.size(), 0), label);
}

std::vector<std::vector<std::string>> standard_orderings(const RootSystem& rs) {
    std::vector<std::string> es, ds;
    for (const auto& c : rs.coord) {
        if (c == "0" || c[0] == '-') continue;
        (c[0] == 'e' ? es : ds).push_back(c);
    }
    auto bynum = [](const std::string& a, const std::string& b) { return std::stoi(a.substr(1)) < std::stoi(b.substr(1)); };
    std::sort(es.begin(), es.end(), bynum);
    es.erase(std::unique(es.begin(), es.end()), es.end());
    std::sort(ds.begin(), ds.end(), bynum);
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == es.size() && j == ds.size()) {
            out.push_back(cur);
            return;
        }
        if (i < es.size()) {
            cur.push_back(es[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < ds.size()) {
            cur.push_back(ds[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

bool apply_ordering(RootSystem& rs, const std::vector<std::string>& ordering) {
    if (rs.coord.empty()) throw Error("apply_ordering: no diagonal coordinate names recorded");
    int K = static_cast<int>(ordering.size());
    std::map<std::string, int> rank;
    for (int i = 0; i < K; ++i) rank[ordering[i]] = i;
    auto w = [&](int pos) -> Rat {
        const std::string& c = rs.coord[pos];
        if (c == "0") return 0;
        bool neg = c[0] == '-';
        std::string base = neg ? c.substr(1) : c;
        auto it = rank.find(base);
        if (it == rank.end()) throw Error("ordering misses coordinate " + base);
        Rat v = Rat(mpz_class(1) << (K - it->second));
        return neg ? Rat(-v) : v;
    };
    auto rk = [&](int pos) -> long {
        const std::string& c = rs.coord[pos];
        if (c == "0") return K;
        return rank[c[0] == '-' ? c.substr(1) : c];
    };
    std::vector<Rat> phi;
    std::vector<long> lead;
    for (const auto& root : rs.roots) {
        if (root.row < 0) throw Error("apply_ordering: root without realization entry");
        phi.push_back(w(root.row) - w(root.col));
        lead.push_back(std::min(rk(root.row), rk(root.col)));
    }
    std::string label;
    for (int i = 0; i < K; ++i) label += (i ? ">" : "") + ordering[i];
    return apply_functional_keyed(rs, phi, lead, label);
}

bool apply_generic_base(RootSystem& rs, bool want_distinguished) {
    int r = rs.rank();
    for (int B = 1; B <= 6; ++B) {
        std::vector<int> c(r, -B);
        for (;;) {
            int mx = 0;
            for (int x : c) mx = std::max(mx, std::abs(x));
            if (mx == B) {
                std::vector<Rat> phi;
                for (const auto& root : rs.roots) {
                    Rat s = 0;
                    for (int k = 0; k < r; ++k) s += c[k] * root.value[k].rational();
                    phi.push_back(s);
                }
                std::string label = "phi(";
                for (int k = 0; k < r; ++k) label += (k ? "," : "") + std::to_string(c[k]);
                label += ")";
                RootSystem trial = rs;
                if (apply_functional(trial, phi, label) && (!want_distinguished || trial.odd_simple_count() == 1)) {
                    rs = trial;
                    return true;
                }
            }
            int k = r - 1;
            while (k >= 0 && c[k] == B) c[k--] = -B;
            if (k < 0) break;
            ++c[k];
        }
    }
    return false;
}

RootSystem distinguished_simple_roots(const RootSystem& rs) {
    RootSystem out = rs;
    if (!rs.coord.empty() && !rs.roots.empty() && rs.roots.front().row >= 0) {
        for (const auto& ord : standard_orderings(rs)) {
            RootSystem t = rs;
            if (apply_ordering(t, ord) && t.odd_simple_count() == 1) return t;
        }
    }
    if (apply_generic_base(out, true)) return out;
    throw Error("distinguished_simple_roots: no base with a unique odd simple root found");
}

// ------------------------------------------------------- Chevalley data

CycScalar invariant_form(const SuperAlgebra& L, const Element& x, const Element& y) {
    if (L.realization()) return supertrace_form(L, x, y);
    return killing_form(L, x, y);
}

SparseVec cartan_coords(const SuperAlgebra& L, const RootSystem& rs, const Element& h) {
    SubspaceCoords sc(rs.cartan, L.dim());
    return sc.coords(h);
}

CycScalar evaluate(const SuperAlgebra& L, const RootSystem& rs, const Weight& w, const Element& h) {
    CycScalar s;
    for (const auto& [k, c] : cartan_coords(L, rs, h).e) s += c * w[k];
    return s;
}

Element form_dual(const SuperAlgebra& L, const RootSystem& rs, const Weight& alpha) {
    int r = rs.rank();
    std::vector<SparseVec> cols(r);
    for (int l = 0; l < r; ++l)
        for (int k = 0; k < r; ++k) cols[l].set(k, invariant_form(L, rs.cartan[k], rs.cartan[l]));
    SparseVec target;
    for (int k = 0; k < r; ++k) target.set(k, alpha[k]);
    std::vector<CycScalar> c;
    if (!solve_combination(cols, target, r, c)) throw Error("form_dual: invariant form degenerate on the Cartan");
    Element t;
    for (int l = 0; l < r; ++l) axpy(t, c[l], rs.cartan[l]);
    return t;
}

namespace {

// Scalar kappa with kappa * u == h, if it exists.
bool proportional(const SparseVec& u, const SparseVec& h, CycScalar& kappa) {
    if (u.empty() || h.empty()) return false;
    kappa = h.e.front().second / u.get(h.e.front().first);
    return scaled(u, kappa) == h;
}

}  // namespace

Element coroot(const SuperAlgebra& L, const RootSystem& rs, int root) {
    Weight neg = rs.roots[root].value;
    for (auto& x : neg) x = -x;
    int nr = rs.find(neg);
    if (nr < 0) throw Error("coroot: negative root missing");
    Element u = bracket(L, rs.roots[root].space.front(), rs.roots[nr].space.front());
    CycScalar a = evaluate(L, rs, rs.roots[root].value, u);
    if (!a.is_zero()) return scaled(u, CycScalar(2) / a);
    Element t = form_dual(L, rs, rs.roots[root].value);
    CycScalar kappa;
    if (!proportional(u, t, kappa)) throw Error("coroot: [e,f] not proportional to the form dual");
    return t;
}

TriangularDecomposition triangular_decomposition(const SuperAlgebra& L, const RootSystem& rs) {
    if (rs.simple.empty()) throw Error("triangular_decomposition: root system has no base");
    TriangularDecomposition td;
    td.h = rs.cartan;
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
        auto& dst = rs.sign[r] > 0 ? td.n_plus : td.n_minus;
        for (const auto& v : rs.roots[r].space) dst.push_back(v);
    }
    bool have_form = true;
    td.normalization = L.realization() ? "supertrace form" : "killing form";
    for (int s : rs.simple) {
        const Root& a = rs.roots[s];
        if (a.space.size() != 1) throw Error("triangular_decomposition: simple root space not one-dimensional");
        Weight neg = a.value;
        for (auto& x : neg) x = -x;
        int nr = rs.find(neg);
        if (nr < 0) throw Error("triangular_decomposition: -alpha is not a root");
        Element e = a.space.front();
        Element f0 = rs.roots[nr].space.front();
        Element u = bracket(L, e, f0);
        if (u.empty()) throw Error("triangular_decomposition: [e_i, f_i] vanishes");
        Element hi;
        if (have_form) {
            try {
                Element t = form_dual(L, rs, a.value);
                CycScalar at = evaluate(L, rs, a.value, t);
                hi = at.is_zero() ? t : scaled(t, CycScalar(2) / at);
            } catch (const Error&) {
                have_form = false;
                td.normalization = "raw bracket";
            }
        }
        if (!have_form) {
            CycScalar au = evaluate(L, rs, a.value, u);
            hi = au.is_zero() ? u : scaled(u, CycScalar(2) / au);
        }
        CycScalar kappa;
        if (!proportional(u, hi, kappa)) throw Error("triangular_decomposition: [e_i, f_i] not along h_i");
        td.e.push_back(e);
        td.f.push_back(scaled(f0, kappa));
        td.hc.push_back(hi);
        td.simple_parity.push_back(a.parity);
    }
    std::size_t r = rs.simple.size();
    td.cartan_matrix.assign(r, std::vector<CycScalar>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            td.cartan_matrix[i][j] = evaluate(L, rs, rs.roots[rs.simple[j]].value, td.hc[i]);
    return td;
}

ZGrading z_grading(const SuperAlgebra& L, const RootSystem& rs) {
    (void)L;
    ZGrading z;
    int odd = -1, count = 0;
    for (std::size_t k = 0; k < rs.simple.size(); ++k)
        if (rs.roots[rs.simple[k]].parity) {
            odd = static_cast<int>(k);
            ++count;
        }
    z.type = "unclassified";
    if (count != 1) return z;
    z.odd_simple = odd;
    z.components[0] = rs.cartan;
    int maxabs = 0;
    bool shape = true;
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
        int g = static_cast<int>(rs.coeff[r][odd].get_num().get_si());
        for (const auto& v : rs.roots[r].space) z.components[g].push_back(v);
        maxabs = std::max(maxabs, std::abs(g));
        if ((std::abs(g) % 2) != rs.roots[r].parity) shape = false;
    }
    for (const auto& [g, vs] : z.components) z.dims[g] = static_cast<int>(vs.size());
    if (shape && maxabs == 1) z.type = "I";
    if (shape && maxabs == 2) z.type = "II";
    z.shape_ok = shape && (maxabs == 1 || maxabs == 2);
    return z;
}

}  // namespace sw
