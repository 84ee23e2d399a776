#include "superweyl/exactcore.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <ostream>
#include <sstream>

namespace sw {

namespace {

using Poly = std::vector<long>;

Poly poly_div_exact(const Poly& num, const Poly& den) {
    Poly r = num;
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(r.size()) - 1;
    Poly q(nn - dn + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
        long c = r[k + dn] / den[dn];
        q[k] = c;
        for (int j = 0; j <= dn; ++j) r[k + j] -= c * den[j];
    }
    return q;
}

const std::array<Poly, kMaxConductor + 1>& phi_table() {
    static std::array<Poly, kMaxConductor + 1> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int m = 1; m <= kMaxConductor; ++m) {
            Poly p(m + 1, 0);
            p[0] = -1;
            p[m] = 1;
            for (int d = 1; d < m; ++d)
                if (m % d == 0) p = poly_div_exact(p, table[d]);
            table[m] = p;
        }
    });
    return table;
}

void check_conductor(int m) {
    if (m < 1 || m > kMaxConductor)
        throw ConductorError("unsupported conductor " + std::to_string(m));
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int m) {
    check_conductor(m);
    return phi_table()[m];
}

int cyclotomic_degree(int m) {
    if (m == 0) return 1;
    check_conductor(m);
    return static_cast<int>(phi_table()[m].size()) - 1;
}

CycScalar::CycScalar(const Rat& q, int m) : m_(m), c_(cyclotomic_degree(m)) {
    c_[0] = q;
    c_[0].canonicalize();
}

CycScalar CycScalar::from_coeffs(int m, const std::vector<Rat>& coeffs) {
    CycScalar r(Rat(0), m);
    const auto& phi = phi_table()[m];
    int d = r.degree();
    std::vector<Rat> w = coeffs;
    for (auto& x : w) x.canonicalize();
    // reduce modulo the monic Phi_m
    for (int k = static_cast<int>(w.size()) - 1; k >= d; --k) {
        if (w[k] == 0) continue;
        Rat c = w[k];
        for (int j = 0; j <= d; ++j) w[k - d + j] -= c * phi[j];
    }
    for (int k = 0; k < d && k < static_cast<int>(w.size()); ++k) r.c_[k] = w[k];
    return r;
}

CycScalar CycScalar::zeta(int m, long power) {
    check_conductor(m);
    long p = ((power % m) + m) % m;
    std::vector<Rat> w(p + 1, Rat(0));
    w[p] = 1;
    return from_coeffs(m, w);
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

const Rat& CycScalar::rational() const {
    if (!is_rational()) throw Error("scalar " + str() + " is not rational");
    return c_[0];
}

CycScalar CycScalar::with_conductor(int m) const {
    if (m_ == m) return *this;
    if (m_ != 0) throw ConductorError("conductor mismatch: " + std::to_string(m_) + " vs " + std::to_string(m));
    return CycScalar(c_[0], m);
}

CycScalar CycScalar::lift(int k) const {
    if (m_ == 0 || m_ == k) return with_conductor(k);
    if (k % m_ != 0) throw ConductorError("cannot lift conductor " + std::to_string(m_) + " to " + std::to_string(k));
    int step = k / m_;
    std::vector<Rat> w(static_cast<std::size_t>(step) * (degree() - 1) + 1, Rat(0));
    for (int j = 0; j < degree(); ++j) w[static_cast<std::size_t>(j) * step] = c_[j];
    return from_coeffs(k, w);
}

int CycScalar::unify(const CycScalar& o) const {
    if (m_ == o.m_) return m_;
    if (m_ == 0) return o.m_;
    if (o.m_ == 0) return m_;
    throw ConductorError("conductor mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

void CycScalar::retag(int m) {
    if (m == m_) return;
    // only a plain rational is ever retagged
    Rat q = c_[0];
    c_.assign(cyclotomic_degree(m), Rat(0));
    c_[0] = q;
    m_ = m;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    int m = unify(o);
    retag(m);
    if (o.m_ == m) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    } else {
        c_[0] += o.c_[0];
    }
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    int m = unify(o);
    retag(m);
    if (o.m_ == m) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    } else {
        c_[0] -= o.c_[0];
    }
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    int m = unify(o);
    if (o.is_rational()) {
        retag(m);
        const Rat& q = o.c_[0];
        for (auto& x : c_) x *= q;
        return *this;
    }
    if (is_rational()) {
        Rat q = c_[0];
        *this = o;
        for (auto& x : c_) x *= q;
        return *this;
    }
    int d = degree();
    std::vector<Rat> w(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) w[i + j] += c_[i] * o.c_[j];
    }
    *this = from_coeffs(m, w);
    return *this;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw Error("inversion of zero");
    if (is_rational()) {
        CycScalar r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Solve (a * x) = 1 through the multiplication-by-a matrix.
    int d = degree();
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d + 1, Rat(0)));
    for (int j = 0; j < d; ++j) {
        CycScalar col = *this * zeta(m_, j);
        for (int i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    a[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rat inv = 1 / a[col][col];
        for (int j = col; j <= d; ++j) a[col][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j <= d; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> x(d);
    for (int i = 0; i < d; ++i) x[i] = a[i][d];
    return from_coeffs(m_, x);
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.m_ != b.m_ && a.m_ != 0 && b.m_ != 0)
        throw ConductorError("conductor mismatch in comparison");
    if (a.c_.size() != b.c_.size()) {
        return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
    }
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

bool canonical_less(const CycScalar& a, const CycScalar& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k) {
        Rat x = k < a.c_.size() ? a.c_[k] : Rat(0);
        Rat y = k < b.c_.size() ? b.c_[k] : Rat(0);
        if (x != y) return x < y;
    }
    return false;
}

std::string CycScalar::str() const {
    std::string out;
    for (int k = 0; k < degree(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += c_[k].get_str();
        if (k == 1) out += "*z";
        if (k > 1) out += "*z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

CycScalar CycScalar::parse(const std::string& s, int m) {
    std::vector<Rat> w;
    std::size_t pos = 0;
    auto trim = [](std::string t) {
        std::size_t a = t.find_first_not_of(' ');
        std::size_t b = t.find_last_not_of(' ');
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    while (pos <= s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (term.empty()) throw Error("malformed scalar '" + s + "'");
        int power = 0;
        std::size_t star = term.find("*z");
        std::string num = term;
        if (star != std::string::npos) {
            num = term.substr(0, star);
            std::string rest = term.substr(star + 2);
            power = rest.empty() ? 1 : std::stoi(rest.substr(1));
        }
        Rat q;
        if (q.set_str(num, 10) != 0) throw Error("malformed scalar '" + s + "'");
        q.canonicalize();
        if (static_cast<int>(w.size()) <= power) w.resize(power + 1, Rat(0));
        w[power] += q;
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    if (m == 0) {
        if (w.size() > 1) throw Error("plain rational carries powers of z: '" + s + "'");
        return CycScalar(w[0]);
    }
    check_conductor(m);
    return from_coeffs(m, w);
}

std::ostream& operator<<(std::ostream& os, const CycScalar& a) { return os << a.str(); }

// ---------------------------------------------------------------- SparseVec

CycScalar SparseVec::get(int i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
    if (it != e.end() && it->first == i) return it->second;
    return CycScalar();
}

void SparseVec::set(int i, const CycScalar& v) {
    auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
    if (it != e.end() && it->first == i) {
        if (v.is_zero())
            e.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        e.insert(it, {i, v});
    }
}

int SparseVec::conductor() const {
    int m = 0;
    for (const auto& [i, v] : e) {
        if (v.conductor() == 0) continue;
        if (m != 0 && v.conductor() != m) throw ConductorError("mixed conductors in vector");
        m = v.conductor();
    }
    return m;
}

SparseVec SparseVec::unit(int i, const CycScalar& v) {
    SparseVec r;
    if (!v.is_zero()) r.e.push_back({i, v});
    return r;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.e.size() != b.e.size()) return false;
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k].first != b.e[k].first || a.e[k].second != b.e[k].second) return false;
    return true;
}

void axpy(SparseVec& y, const CycScalar& a, const SparseVec& x) {
    if (a.is_zero() || x.e.empty()) return;
    std::vector<std::pair<int, CycScalar>> out;
    out.reserve(y.e.size() + x.e.size());
    auto i = y.e.begin();
    auto j = x.e.begin();
    while (i != y.e.end() || j != x.e.end()) {
        if (j == x.e.end() || (i != y.e.end() && i->first < j->first)) {
            out.push_back(std::move(*i));
            ++i;
        } else if (i == y.e.end() || j->first < i->first) {
            out.push_back({j->first, a * j->second});
            ++j;
        } else {
            CycScalar s = i->second + a * j->second;
            if (!s.is_zero()) out.push_back({i->first, std::move(s)});
            ++i;
            ++j;
        }
    }
    y.e = std::move(out);
}

SparseVec scaled(const SparseVec& x, const CycScalar& a) {
    SparseVec r;
    if (a.is_zero()) return r;
    r.e.reserve(x.e.size());
    for (const auto& [i, v] : x.e) r.e.push_back({i, v * a});
    return r;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, CycScalar(1), b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, CycScalar(-1), b);
    return r;
}

CycScalar dot(const SparseVec& a, const SparseVec& b) {
    CycScalar s;
    auto i = a.e.begin();
    auto j = b.e.begin();
    while (i != a.e.end() && j != b.e.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            s += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return s;
}

std::string to_string(const SparseVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.e.size(); ++k) {
        if (k) os << ", ";
        os << "(" << v.e[k].first << ", " << v.e[k].second.str() << ")";
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.r_[i] = SparseVec::unit(i);
    return m;
}

SparseMatrix SparseMatrix::from_rows(int cols, std::vector<SparseVec> rows) {
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    m.r_ = std::move(rows);
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<SparseVec>& cols) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, v] : cols[j].e) m.r_[i].e.push_back({j, v});
    return m;
}

void SparseMatrix::set(int i, int j, const CycScalar& v) { r_[i].set(j, v); }

void SparseMatrix::add(int i, int j, const CycScalar& v) { r_[i].set(j, r_[i].get(j) + v); }

SparseVec SparseMatrix::column(int j) const {
    SparseVec c;
    for (int i = 0; i < rows_; ++i) {
        CycScalar v = r_[i].get(j);
        if (!v.is_zero()) c.e.push_back({i, v});
    }
    return c;
}

std::map<std::pair<int, int>, CycScalar> SparseMatrix::entries() const {
    std::map<std::pair<int, int>, CycScalar> out;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i].e) out[{i, j}] = v;
    return out;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : r_) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

int SparseMatrix::conductor() const {
    int m = 0;
    for (const auto& r : r_) {
        int c = r.conductor();
        if (c == 0) continue;
        if (m != 0 && m != c) throw ConductorError("mixed conductors in matrix");
        m = c;
    }
    return m;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int i = 0; i < rows_; ++i) {
        CycScalar s = dot(r_[i], v);
        if (!s.is_zero()) out.e.push_back({i, s});
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i].e) t.r_[j].e.push_back({i, v});
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch in product");
    SparseMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [k, v] : r_[i].e) axpy(p.r_[i], v, o.r_[k]);
    return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch in sum");
    SparseMatrix p = *this;
    for (int i = 0; i < rows_; ++i) axpy(p.r_[i], CycScalar(1), o.r_[i]);
    return p;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch in difference");
    SparseMatrix p = *this;
    for (int i = 0; i < rows_; ++i) axpy(p.r_[i], CycScalar(-1), o.r_[i]);
    return p;
}

SparseMatrix SparseMatrix::scaled(const CycScalar& a) const {
    SparseMatrix p(rows_, cols_);
    for (int i = 0; i < rows_; ++i) p.r_[i] = sw::scaled(r_[i], a);
    return p;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
}

// -------------------------------------------------------------- row_reduce

RowReduction row_reduce(const SparseMatrix& m) {
    m.conductor();
    std::vector<SparseVec> rows;
    std::vector<int> order;
    for (int i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
        order.push_back(i);
    }
    RowReduction out;
    std::vector<bool> used(rows.size(), false);
    for (;;) {
        // leftmost column carrying a nonzero among unused rows, then smallest row index
        int best = -1;
        int best_col = m.cols();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            int c = rows[r].e.front().first;
            if (c < best_col) {
                best_col = c;
                best = static_cast<int>(r);
            }
        }
        if (best < 0) break;
        used[best] = true;
        SparseVec piv = scaled(rows[best], rows[best].e.front().second.inverse());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == best) continue;
            CycScalar f = rows[r].get(best_col);
            if (!f.is_zero()) axpy(rows[r], -f, piv);
        }
        for (auto& prev : out.rowspace) {
            CycScalar f = prev.get(best_col);
            if (!f.is_zero()) axpy(prev, -f, piv);
        }
        out.rowspace.push_back(piv);
        out.pivots.push_back(best_col);
        rows[best] = SparseVec();
    }
    // keep rows sorted by pivot column
    std::vector<std::size_t> idx(out.pivots.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return out.pivots[a] < out.pivots[b]; });
    RowReduction sorted;
    for (auto k : idx) {
        sorted.rowspace.push_back(out.rowspace[k]);
        sorted.pivots.push_back(out.pivots[k]);
    }
    sorted.rank = static_cast<int>(sorted.pivots.size());
    std::vector<int> pivot_row(m.cols(), -1);
    for (int k = 0; k < sorted.rank; ++k) pivot_row[sorted.pivots[k]] = k;
    for (int j = 0; j < m.cols(); ++j) {
        if (pivot_row[j] >= 0) continue;
        SparseVec v = SparseVec::unit(j);
        for (int k = 0; k < sorted.rank; ++k) {
            CycScalar c = sorted.rowspace[k].get(j);
            if (!c.is_zero()) v.set(sorted.pivots[k], -c);
        }
        sorted.kernel.push_back(v);
    }
    return sorted;
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vs, int dim) {
    return row_reduce(SparseMatrix::from_rows(dim, vs)).rowspace;
}

int rank_of(const std::vector<SparseVec>& vs, int dim) {
    Echelon e;
    for (const auto& v : vs) e.insert(v);
    (void)dim;
    return static_cast<int>(e.size());
}

bool solve_combination(const std::vector<SparseVec>& cols, const SparseVec& target, int dim,
                       std::vector<CycScalar>& out) {
    // Augmented system: unknowns are column coefficients, last column is the target.
    int n = static_cast<int>(cols.size());
    SparseMatrix a(dim, n + 1);
    for (int j = 0; j < n; ++j)
        for (const auto& [i, v] : cols[j].e) a.row(i).e.push_back({j, v});
    for (const auto& [i, v] : target.e) a.row(i).e.push_back({n, v});
    RowReduction rr = row_reduce(a);
    out.assign(n, CycScalar());
    for (int k = 0; k < rr.rank; ++k) {
        if (rr.pivots[k] == n) return false;
        out[rr.pivots[k]] = rr.rowspace[k].get(n);
    }
    return true;
}

// ----------------------------------------------------------------- Echelon

SparseVec Echelon::reduce_lead(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.lead());
        if (it == rows_.end()) break;
        CycScalar c = v.e.back().second;
        axpy(v, -c, it->second);
    }
    return v;
}

bool Echelon::insert(SparseVec v, SparseVec* added) {
    v = reduce_lead(std::move(v));
    if (v.empty()) return false;
    CycScalar inv = v.e.back().second.inverse();
    if (!inv.is_one()) v = scaled(v, inv);
    if (added) *added = v;
    int p = v.lead();
    rows_.emplace(p, std::move(v));
    return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
    // sweep from the top index downward; eliminating index i only touches smaller ones
    std::size_t k = v.e.size();
    while (k > 0) {
        --k;
        int idx = v.e[k].first;
        auto it = rows_.find(idx);
        if (it == rows_.end()) continue;
        CycScalar c = v.e[k].second;
        axpy(v, -c, it->second);
        // entries at positions >= k with index > idx are untouched; relocate k
        auto pos = std::lower_bound(v.e.begin(), v.e.end(), idx, [](const auto& p, int q) { return p.first < q; });
        k = static_cast<std::size_t>(pos - v.e.begin());
    }
    return v;
}

}  // namespace sw
