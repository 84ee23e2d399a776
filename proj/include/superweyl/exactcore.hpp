#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sw {

using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConductorError : public Error {
public:
    using Error::Error;
};

constexpr int kMaxConductor = 12;

// Coefficients of Phi_m, constant term first.
std::vector<long> cyclotomic_polynomial(int m);
int cyclotomic_degree(int m);

// Element of Q(zeta_m) stored as a residue modulo Phi_m.
// Conductor 0 marks a plain rational that has not been tied to a field yet;
// it combines with any conductor. Two different nonzero conductors never mix.
class CycScalar {
public:
    CycScalar() : m_(0), c_(1) {}
    CycScalar(long v) : m_(0), c_(1) { c_[0] = v; }
    CycScalar(const Rat& q, int m = 0);
    static CycScalar from_coeffs(int m, const std::vector<Rat>& coeffs);
    static CycScalar zeta(int m, long power = 1);

    int conductor() const { return m_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rat& rational() const;

    CycScalar with_conductor(int m) const;
    CycScalar lift(int k) const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }
    CycScalar operator-() const;
    CycScalar inverse() const;

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // Total order on coefficient vectors; only used for deterministic sorting.
    friend bool canonical_less(const CycScalar& a, const CycScalar& b);

    std::string str() const;
    static CycScalar parse(const std::string& s, int m);

private:
    int unify(const CycScalar& o) const;
    void retag(int m);

    int m_;
    boost::container::small_vector<Rat, 1> c_;
};

bool canonical_less(const CycScalar& a, const CycScalar& b);
std::ostream& operator<<(std::ostream& os, const CycScalar& a);

// Sparse vector: strictly increasing indices, no stored zeros.
struct SparseVec {
    std::vector<std::pair<int, CycScalar>> e;

    bool empty() const { return e.empty(); }
    std::size_t size() const { return e.size(); }
    CycScalar get(int i) const;
    void set(int i, const CycScalar& v);
    int lead() const { return e.empty() ? -1 : e.back().first; }
    int conductor() const;

    static SparseVec unit(int i, const CycScalar& v = CycScalar(1));
    friend bool operator==(const SparseVec& a, const SparseVec& b);
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
};

// y += a * x
void axpy(SparseVec& y, const CycScalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const CycScalar& a);
SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
CycScalar dot(const SparseVec& a, const SparseVec& b);
std::string to_string(const SparseVec& v);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows) {}
    static SparseMatrix identity(int n);
    static SparseMatrix from_rows(int cols, std::vector<SparseVec> rows);
    static SparseMatrix from_columns(int rows, const std::vector<SparseVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycScalar get(int i, int j) const { return r_[i].get(j); }
    void set(int i, int j, const CycScalar& v);
    void add(int i, int j, const CycScalar& v);
    const SparseVec& row(int i) const { return r_[i]; }
    SparseVec& row(int i) { return r_[i]; }
    SparseVec column(int j) const;
    std::map<std::pair<int, int>, CycScalar> entries() const;
    std::size_t nnz() const;
    bool is_zero() const;
    int conductor() const;

    SparseVec apply(const SparseVec& v) const;
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const CycScalar& a) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> r_;
};

struct RowReduction {
    int rank = 0;
    std::vector<SparseVec> rowspace;  // reduced echelon rows, pivot entry 1
    std::vector<int> pivots;          // pivot column of each row
    std::vector<SparseVec> kernel;    // one vector per free column
};

RowReduction row_reduce(const SparseMatrix& m);

// Basis of the span of the given vectors (reduced echelon form).
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vs, int dim);
int rank_of(const std::vector<SparseVec>& vs, int dim);
// Solve sum_k c_k cols[k] = target. Empty optional when inconsistent.
bool solve_combination(const std::vector<SparseVec>& cols, const SparseVec& target, int dim,
                       std::vector<CycScalar>& out);

// Incremental echelon basis; every stored row has pivot = its largest index,
// normalized to 1. Used by the saturation and closure loops.
class Echelon {
public:
    // Returns true when v was independent and got added.
    bool insert(SparseVec v, SparseVec* added = nullptr);
    // Eliminates every pivot index from v.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool is_pivot(int i) const { return rows_.count(i) > 0; }
    std::size_t size() const { return rows_.size(); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    SparseVec reduce_lead(SparseVec v) const;
    std::map<int, SparseVec> rows_;
};

}  // namespace sw
