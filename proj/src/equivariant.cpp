#include "superweyl/equivariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sw {

bool cartan_compatible(const TriangularDecomposition& td, const std::vector<int>& perm, const CycScalar& scale) {
    std::size_t r = td.cartan_matrix.size();
    if (perm.size() != r) return false;
    for (std::size_t i = 0; i < r; ++i) {
        if (td.simple_parity[i] != td.simple_parity[perm[i]]) return false;
        for (std::size_t j = 0; j < r; ++j)
            if (td.cartan_matrix[i][j] != scale * td.cartan_matrix[perm[i]][perm[j]]) return false;
    }
    return true;
}

std::optional<CycScalar> forced_scale(const TriangularDecomposition& td, const std::vector<int>& perm) {
    std::size_t r = td.cartan_matrix.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const CycScalar& b = td.cartan_matrix[perm[i]][perm[j]];
            if (!b.is_zero()) return td.cartan_matrix[i][j] / b;
        }
    return std::nullopt;
}

namespace {

bool is_permutation(const std::vector<int>& p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i)) return false;
    return true;
}

// Pair (x, y) stored as one vector: x on indices n..2n-1, y on 0..n-1.
SparseVec pack(const SparseVec& x, const SparseVec& y, int n) {
    SparseVec z = y;
    for (const auto& [i, c] : x.e) z.e.push_back({i + n, c});
    return z;
}

SparseVec low_part(const SparseVec& z, int n) {
    SparseVec y;
    for (const auto& [i, c] : z.e)
        if (i < n) y.e.push_back({i, c});
    return y;
}

int find_order(const SparseMatrix& M, int limit) {
    SparseMatrix I = SparseMatrix::identity(M.rows());
    SparseMatrix P = M;
    for (int k = 1; k <= limit; ++k) {
        if (P == I) return k;
        P = P * M;
    }
    return -1;
}

}  // namespace

Automorphism diagram_automorphism(const SuperAlgebra& L, const TriangularDecomposition& td,
                                  const std::vector<int>& perm, const CycScalar& scale) {
    std::size_t r = td.e.size();
    if (perm.size() != r || !is_permutation(perm)) throw Error("diagram_automorphism: not a permutation of the simple roots");
    if (!cartan_compatible(td, perm, scale))
        throw Error("diagram_automorphism: Cartan matrix is not compatible with the permutation and scale " + scale.str());
    int n = L.dim();
    Echelon ech;
    std::vector<std::pair<Element, Element>> found;
    int span = 0;
    auto add = [&](const Element& x, const Element& y) {
        SparseVec z = pack(x, y, n);
        SparseVec added;
        if (!ech.insert(z, &added)) return;
        if (added.lead() < n) throw Error("diagram_automorphism: generator images are inconsistent (extension does not exist)");
        ++span;
        found.push_back({x, y});
    };
    std::vector<std::pair<Element, Element>> gens;
    for (std::size_t i = 0; i < r; ++i) {
        gens.push_back({td.e[i], scaled(td.e[perm[i]], scale)});
        gens.push_back({td.f[i], td.f[perm[i]]});
    }
    for (std::size_t i = 0; i < r; ++i) add(td.hc[i], scaled(td.hc[perm[i]], scale));
    for (const auto& [x, y] : gens) add(x, y);
    for (std::size_t k = 0; k < found.size() && span < n; ++k)
        for (const auto& [gx, gy] : gens) {
            Element x = bracket(L, gx, found[k].first);
            if (x.empty()) continue;
            add(x, bracket(L, gy, found[k].second));
        }
    if (span < n) throw Error("diagram_automorphism: Chevalley generators do not generate " + L.name());
    std::vector<SparseVec> cols(n);
    for (int k = 0; k < n; ++k) {
        SparseVec rem = ech.reduce(pack(SparseVec::unit(k), SparseVec(), n));
        if (rem.lead() >= n) throw Error("diagram_automorphism: reduction left a generator component");
        cols[k] = scaled(low_part(rem, n), CycScalar(-1));
    }
    Automorphism nu;
    nu.matrix = SparseMatrix::from_columns(n, cols);
    nu.perm = perm;
    nu.scale = scale;
    auto bad = homomorphism_violations(L, nu);
    if (!bad.empty()) throw Error("diagram_automorphism: extension is not a homomorphism at " + bad.front());
    for (int k = 0; k < n; ++k)
        for (const auto& [i, c] : cols[k].e) {
            (void)c;
            if (L.parity(i) != L.parity(k)) throw Error("diagram_automorphism: image does not preserve parity");
        }
    nu.order = find_order(nu.matrix, kMaxConductor);
    if (nu.order < 0) throw Error("diagram_automorphism: order exceeds the supported conductor range");
    nu.conductor = nu.order;
    return nu;
}

Automorphism identity_automorphism(const SuperAlgebra& L) {
    Automorphism nu;
    nu.matrix = SparseMatrix::identity(L.dim());
    nu.order = 1;
    nu.conductor = 1;
    return nu;
}

std::vector<std::string> homomorphism_violations(const SuperAlgebra& L, const Automorphism& nu) {
    std::vector<std::string> out;
    int n = L.dim();
    std::vector<Element> img(n);
    for (int k = 0; k < n; ++k) img[k] = nu.matrix.column(k);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (nu.apply(L.bracket_basis(i, j)) != bracket(L, img[i], img[j]))
                out.push_back("(" + L.label(i) + "," + L.label(j) + ")");
    return out;
}

std::vector<int> GradedDecomposition::dims() const {
    std::vector<int> d;
    for (const auto& c : components) d.push_back(static_cast<int>(c.size()));
    return d;
}

GradedDecomposition eigenspace_decomposition(const SuperAlgebra& L, const Automorphism& nu) {
    int n = L.dim();
    int m = nu.order;
    GradedDecomposition dec;
    dec.conductor = m;
    int total = 0;
    for (int s = 0; s < m; ++s) {
        CycScalar z = m == 1 ? CycScalar(1) : CycScalar::zeta(m, s);
        SparseMatrix M = nu.matrix - SparseMatrix::identity(n).scaled(z);
        RowReduction rr = row_reduce(M);
        for (const auto& v : rr.kernel)
            if (!L.is_homogeneous(v)) throw Error("eigenspace_decomposition: inhomogeneous eigenvector");
        dec.components.push_back(rr.kernel);
        total += static_cast<int>(rr.kernel.size());
    }
    if (total != n)
        throw Error("eigenspace_decomposition: eigenspace dimensions sum to " + std::to_string(total) + ", not " +
                    std::to_string(n));
    std::vector<SubspaceCoords> sc;
    for (const auto& c : dec.components) sc.emplace_back(c, n);
    dec.bracket_compatible = true;
    for (int s = 0; s < m && dec.bracket_compatible; ++s)
        for (int t = s; t < m && dec.bracket_compatible; ++t)
            for (const auto& x : dec.components[s])
                for (const auto& y : dec.components[t]) {
                    SparseVec c;
                    if (!sc[(s + t) % m].coords(bracket(L, x, y), c)) {
                        dec.bracket_compatible = false;
                        break;
                    }
                }
    return dec;
}

SuperAlgebra fixed_subalgebra(const SuperAlgebra& L, const Automorphism& nu, const GradedDecomposition& dec) {
    const auto& g0 = dec.components.at(0);
    std::string name = nu.order == 1 ? L.name() : L.name() + "^G";
    if (nu.order == 1) return subalgebra_on_basis(L, g0, name);
    return subalgebra_closure(L, g0, name);
}

SuperAlgebra fixed_subalgebra(const SuperAlgebra& L, const Automorphism& nu) {
    return fixed_subalgebra(L, nu, eigenspace_decomposition(L, nu));
}

// ------------------------------------------------------------ identify

namespace {

struct CartanData {
    std::vector<std::vector<Rat>> a;
    std::vector<int> parity;
    int dim = 0;
    int even = 0;
};

std::vector<std::vector<Rat>> normalize_rows(std::vector<std::vector<Rat>> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat s = 0;
        if (a[i][i] != 0)
            s = Rat(2) / a[i][i];
        else
            for (const auto& x : a[i])
                if (x != 0) {
                    s = Rat(1) / x;
                    break;
                }
        if (s != 0)
            for (auto& x : a[i]) x *= s;
    }
    return a;
}

CartanData cartan_data(const SuperAlgebra& S) {
    CartanData d;
    d.dim = S.dim();
    d.even = S.even_dim();
    auto h = cartan_subalgebra(S);
    RootSystem rs = distinguished_simple_roots(root_decomposition(S, h));
    TriangularDecomposition td = triangular_decomposition(S, rs);
    std::size_t r = td.cartan_matrix.size();
    d.a.assign(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (!td.cartan_matrix[i][j].is_rational()) throw Error("identify_type: irrational Cartan entry");
            d.a[i][j] = td.cartan_matrix[i][j].rational();
        }
    d.parity = td.simple_parity;
    return d;
}

bool same_up_to_permutation(const CartanData& x, const CartanData& y) {
    if (x.dim != y.dim || x.even != y.even || x.a.size() != y.a.size()) return false;
    std::size_t r = x.a.size();
    auto nx = normalize_rows(x.a);
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) ok = x.parity[i] == y.parity[p[i]];
        if (!ok) continue;
        std::vector<std::vector<Rat>> b(r, std::vector<Rat>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) b[i][j] = y.a[p[i]][p[j]];
        if (normalize_rows(b) == nx) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

struct Candidate {
    std::string label;
    int dim;
    int family;  // 0 sl, 1 osp
    int a, b;
};

std::vector<Candidate> candidates() {
    std::vector<Candidate> out;
    for (int N = 2; N <= 8; ++N)
        for (int m = N - 1; m >= 1; --m) {
            int n = N - m;
            if (m == n) continue;
            out.push_back({"sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", N * N - 1, 0, m, n});
        }
    for (int two_n = 2; two_n <= 4; two_n += 2)
        for (int m = 1; m <= 5; ++m) {
            int n = two_n / 2;
            out.push_back({"osp(" + std::to_string(m) + "|" + std::to_string(two_n) + ")",
                           m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n, 1, m, two_n});
        }
    return out;
}

}  // namespace

TypeMatch identify_type(const SuperAlgebra& S) {
    TypeMatch tm;
    if (S.dim() == 0) return tm;
    CartanData d;
    try {
        d = cartan_data(S);
    } catch (const Error&) {
        return tm;
    }
    tm.cartan = normalize_rows(d.a);
    tm.parity = d.parity;
    static std::map<std::string, CartanData> cache;
    for (const auto& c : candidates()) {
        if (c.dim != S.dim()) continue;
        auto it = cache.find(c.label);
        if (it == cache.end()) {
            SuperAlgebra L = c.family == 0 ? build_sl(c.a, c.b) : build_osp(c.a, c.b);
            it = cache.emplace(c.label, cartan_data(L)).first;
        }
        if (same_up_to_permutation(d, it->second)) tm.matches.push_back(c.label);
    }
    if (!tm.matches.empty()) {
        tm.label = tm.matches.front();
        for (const auto& l : tm.matches)
            if (l == S.name()) tm.label = l;
    }
    return tm;
}

// ------------------------------------------------------- structural checks

bool StructuralReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.skipped; });
}

std::vector<Element> fixed_cartan_in_parent(const SuperAlgebra& fixed) {
    if (!fixed.embedding()) throw Error("fixed subalgebra carries no embedding");
    const auto& img = fixed.embedding()->images;
    std::vector<Element> out;
    for (const auto& h : cartan_subalgebra(fixed)) {
        Element x;
        for (const auto& [k, c] : h.e) axpy(x, c, img[k]);
        out.push_back(x);
    }
    return out;
}

namespace {

std::vector<Element> all_units(int n) {
    std::vector<Element> v;
    for (int i = 0; i < n; ++i) v.push_back(SparseVec::unit(i));
    return v;
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b, int n) {
    return span_basis(a, n) == span_basis(b, n);
}

std::vector<std::vector<CycScalar>> form_block(const SuperAlgebra& L, const std::vector<Element>& x,
                                               const std::vector<Element>& y) {
    std::vector<std::vector<CycScalar>> b(x.size(), std::vector<CycScalar>(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) b[i][j] = killing_form(L, x[i], y[j]);
    return b;
}

}  // namespace

StructuralReport structural_checks(const SuperAlgebra& L, const Automorphism& nu, const SuperAlgebra& fixed,
                                   const GradedDecomposition& dec) {
    StructuralReport rep;
    int n = L.dim();
    const char* names[] = {"gamma-stable root spaces", "self-normalizing g^0", "pairing blocks", "g^0 is the Cartan"};
    if (fixed.dim() == 0) {
        for (const char* nm : names) rep.checks.push_back({nm, false, true, "fixed subalgebra is zero; skipped"});
        return rep;
    }
    std::vector<Element> hg = fixed_cartan_in_parent(fixed);
    auto spaces = weight_decomposition(L, hg, all_units(n));
    std::vector<Element> g0;
    {
        CheckResult c{names[0], true, false, ""};
        int count = 0;
        for (const auto& s : spaces) {
            bool zero = std::all_of(s.w.begin(), s.w.end(), [](const CycScalar& x) { return x.is_zero(); });
            if (zero)
                for (const auto& v : s.vecs) g0.push_back(v);
            SubspaceCoords sc(s.vecs, n);
            for (const auto& v : s.vecs) {
                SparseVec tmp;
                if (!sc.coords(nu.apply(v), tmp)) {
                    c.pass = false;
                    c.detail = "weight " + weight_string(s.w) + " not stable";
                }
            }
            ++count;
        }
        if (c.pass) c.detail = std::to_string(count) + " weight spaces stable";
        rep.checks.push_back(c);
    }
    g0 = span_basis(g0, n);
    {
        CheckResult c{names[1], false, false, ""};
        Echelon e0;
        for (const auto& v : g0) e0.insert(v);
        int k = static_cast<int>(g0.size());
        std::vector<SparseVec> cols(n);
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < k; ++t) {
                SparseVec r = e0.reduce(bracket(L, SparseVec::unit(j), g0[t]));
                for (const auto& [i, x] : r.e) cols[j].e.push_back({t * n + i, x});
            }
        RowReduction rr = row_reduce(SparseMatrix::from_columns(std::max(1, k * n), cols));
        int ndim = static_cast<int>(rr.kernel.size());
        c.pass = ndim == k;
        c.detail = "dim g^0 = " + std::to_string(k) + ", dim normalizer = " + std::to_string(ndim);
        rep.checks.push_back(c);
    }
    {
        CheckResult c{names[2], true, false, ""};
        int m = dec.order();
        std::ostringstream os;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                auto b = form_block(L, dec.components[i], dec.components[j]);
                bool zero = true;
                std::vector<SparseVec> rows;
                for (const auto& row : b) {
                    SparseVec v;
                    for (std::size_t q = 0; q < row.size(); ++q)
                        if (!row[q].is_zero()) {
                            v.e.push_back({static_cast<int>(q), row[q]});
                            zero = false;
                        }
                    rows.push_back(v);
                }
                if ((i + j) % m != 0) {
                    if (!zero) c.pass = false;
                    os << "(" << i << "|" << j << ")=" << (zero ? "0" : "nonzero") << " ";
                } else {
                    int rk = rank_of(rows, static_cast<int>(dec.components[j].size()));
                    bool full = rk == static_cast<int>(dec.components[i].size()) &&
                                rk == static_cast<int>(dec.components[j].size());
                    if (!full) c.pass = false;
                    os << "(" << i << "|" << j << ") rank " << rk << " ";
                }
            }
        c.detail = os.str();
        if (!c.detail.empty()) c.detail.pop_back();
        rep.checks.push_back(c);
    }
    {
        CheckResult c{names[3], false, false, ""};
        auto h = cartan_subalgebra(L);
        c.pass = same_span(g0, h, n);
        c.detail = "dim g^0 = " + std::to_string(g0.size()) + ", dim h = " + std::to_string(h.size());
        rep.checks.push_back(c);
    }
    return rep;
}

// ------------------------------------------------------------ condition C

ConditionC check_condition_C(const SuperAlgebra& S, const RootSystem& rs) {
    ConditionC out;
    if (rs.simple.empty()) throw Error("check_condition_C: root system has no base");
    std::vector<Element> fs;
    for (int s : rs.simple) {
        Weight neg = rs.roots[s].value;
        for (auto& x : neg) x = -x;
        int nr = rs.find(neg);
        if (nr < 0) throw Error("check_condition_C: negative simple root missing");
        for (const auto& v : rs.roots[nr].space) fs.push_back(v);
    }
    std::vector<int> killed;
    for (int r : rs.negative()) {
        bool all = true;
        for (const auto& v : rs.roots[r].space)
            for (const auto& f : fs)
                if (!bracket(S, f, v).empty()) all = false;
        if (all) killed.push_back(r);
    }
    if (killed.empty()) throw Error("check_condition_C: no lowest root found");
    std::sort(killed.begin(), killed.end(), [&](int a, int b) { return rs.height(a) < rs.height(b); });
    if (killed.size() > 1 && rs.height(killed[0]) == rs.height(killed[1]))
        out.note = "lowest root not unique";
    out.lowest = killed.front();
    out.lowest_root = rs.roots[out.lowest].value;
    out.theta = out.lowest_root;
    for (auto& x : out.theta) x = -x;
    out.parity = rs.roots[out.lowest].parity;
    out.holds = out.parity == 0 && out.note.empty();
    return out;
}

std::vector<std::vector<Element>> refine_by_weights(const SuperAlgebra& L, const std::vector<Element>& hs,
                                                    const std::vector<std::vector<Element>>& comps) {
    std::vector<std::vector<Element>> out;
    for (const auto& c : comps) {
        bool stable = std::all_of(c.begin(), c.end(), [&](const Element& v) { return is_weight_vector(L, hs, v); });
        if (stable) {
            out.push_back(c);
            continue;
        }
        std::vector<Element> r;
        for (const auto& s : weight_decomposition(L, hs, c))
            for (const auto& v : s.vecs) r.push_back(v);
        out.push_back(r);
    }
    return out;
}

std::vector<int> parse_permutation(const std::string& spec, int rank) {
    std::vector<int> p(rank);
    if (spec == "id" || spec == "identity") {
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    if (spec == "flip") {
        for (int i = 0; i < rank; ++i) p[i] = rank - 1 - i;
        return p;
    }
    p.clear();
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    if (static_cast<int>(p.size()) != rank || !is_permutation(p))
        throw Error("permutation '" + spec + "' is not a permutation of " + std::to_string(rank) + " nodes");
    return p;
}

SuperAlgebra weight_basis_subalgebra(const SuperAlgebra& g, const SuperAlgebra& fixed) {
    const auto& img = fixed.embedding()->images;
    auto to_parent = [&](const Element& v) {
        Element x;
        for (const auto& [k, c] : v.e) axpy(x, c, img[k]);
        return x;
    };
    auto h = cartan_subalgebra(fixed);
    RootSystem rs = root_decomposition(fixed, h);
    std::vector<Element> basis;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < h.size(); ++k) {
        basis.push_back(to_parent(h[k]));
        labels.push_back("H" + std::to_string(k + 1));
    }
    for (const auto& r : rs.roots)
        for (const auto& v : r.space) {
            basis.push_back(to_parent(v));
            labels.push_back("X" + std::to_string(labels.size() - h.size() + 1));
        }
    return subalgebra_on_basis(g, basis, fixed.name(), labels);
}

Folding fold(const SuperAlgebra& L0, const std::string& perm_spec, std::optional<CycScalar> scale) {
    auto h = cartan_subalgebra(L0);
    RootSystem base = root_decomposition(L0, h);
    std::vector<int> perm = parse_permutation(perm_spec, base.rank());
    bool identity = std::is_sorted(perm.begin(), perm.end());
    std::vector<RootSystem> trials;
    if (identity) {
        trials.push_back(distinguished_simple_roots(base));
    } else {
        for (const auto& ord : standard_orderings(base)) {
            RootSystem t = base;
            if (apply_ordering(t, ord)) trials.push_back(t);
        }
        RootSystem t = base;
        if (trials.empty() && apply_generic_base(t, false)) trials.push_back(t);
    }
    for (const auto& rs : trials) {
        TriangularDecomposition td = triangular_decomposition(L0, rs);
        std::optional<CycScalar> lam = scale ? scale : forced_scale(td, perm);
        if (!lam) lam = CycScalar(1);
        if (!cartan_compatible(td, perm, *lam)) continue;
        Folding F;
        F.rs = rs;
        F.td = td;
        F.nu = identity && lam->is_one() ? identity_automorphism(L0) : diagram_automorphism(L0, td, perm, *lam);
        F.nu.perm = perm;
        F.nu.scale = *lam;
        F.g = F.nu.order > 2 ? lift_conductor(L0, F.nu.order) : L0;
        F.dec = eigenspace_decomposition(F.g, F.nu);
        F.fixed = fixed_subalgebra(F.g, F.nu, F.dec);
        if (F.nu.order == 1 && F.g.realization() && F.fixed.realization()) {
            // same basis as g, so the diagonal names still apply
            bool units = true;
            for (int k = 0; k < F.fixed.dim(); ++k)
                if (F.dec.components[0][k] != SparseVec::unit(k)) units = false;
            if (units) {
                Realization R = *F.fixed.realization();
                R.coord = F.g.realization()->coord;
                F.fixed.set_realization(R);
            }
        }
        if (F.nu.order > 1 && F.fixed.dim() > 0) F.fixed = weight_basis_subalgebra(F.g, F.fixed);
        F.type = identify_type(F.fixed);
        if (F.fixed.dim() > 0) {
            F.h_gamma = fixed_cartan_in_parent(F.fixed);
            F.fixed_rs = distinguished_simple_roots(root_decomposition(F.fixed, cartan_subalgebra(F.fixed)));
            F.fixed_td = triangular_decomposition(F.fixed, F.fixed_rs);
        }
        return F;
    }
    throw Error("fold: no standard base of " + L0.name() + " admits the permutation '" + perm_spec + "'");
}

}  // namespace sw
