#pragma once

#include "superweyl/exactcore.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sw {

using Element = SparseVec;

struct BasisElement {
    int index = 0;
    int parity = 0;  // 0 even, 1 odd
    std::string label;
};

// Each basis element as a square supermatrix. coord names the diagonal
// positions ("e1", "-e1", "d2", "0", ...) when the constructor knows them.
struct Realization {
    int size = 0;
    std::vector<int> row_parity;
    std::vector<SparseMatrix> mats;
    std::vector<std::string> coord;
};

struct Embedding {
    std::string parent;
    int parent_dim = 0;
    std::vector<SparseVec> images;  // basis element k -> parent coordinates
};

class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(std::string name, int conductor, std::vector<BasisElement> basis);

    // Stores the bracket of basis elements i and j; pairs with i > j are
    // converted to the stored orientation.
    void set_bracket(int i, int j, const SparseVec& v);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int conductor() const { return conductor_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int parity(int i) const { return basis_[i].parity; }
    const std::string& label(int i) const { return basis_[i].label; }
    int even_dim() const;
    int odd_dim() const { return dim() - even_dim(); }

    // [b_i, b_j] for any order of i, j.
    const SparseVec& bracket_basis(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }
    // Stored orientation only (i <= j), as written to files.
    const SparseVec& stored(int i, int j) const;

    const std::optional<Realization>& realization() const { return real_; }
    void set_realization(Realization r) { real_ = std::move(r); }
    const std::optional<Embedding>& embedding() const { return emb_; }
    void set_embedding(Embedding e) { emb_ = std::move(e); }

    // Parity of a homogeneous element; throws on mixed parity.
    int element_parity(const Element& x) const;
    bool is_homogeneous(const Element& x) const;
    void check_element(const Element& x) const;

private:
    std::string name_;
    int conductor_ = 1;
    std::vector<BasisElement> basis_;
    std::vector<SparseVec> table_;
    std::optional<Realization> real_;
    std::optional<Embedding> emb_;
};

Element bracket(const SuperAlgebra& L, const Element& x, const Element& y);

struct AxiomReport {
    std::vector<std::string> violations;
    long checked_triples = 0;
    bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(const SuperAlgebra& L);

SparseMatrix ad(const SuperAlgebra& L, const Element& x);
CycScalar supertrace(const SuperAlgebra& L, const SparseMatrix& M);
// Supertrace of a matrix acting on a graded space with the given row parities.
CycScalar supertrace(const std::vector<int>& row_parity, const SparseMatrix& M);
CycScalar killing_form(const SuperAlgebra& L, const Element& x, const Element& y);
// str(xy) in the stored matrix realization.
CycScalar supertrace_form(const SuperAlgebra& L, const Element& x, const Element& y);
SparseMatrix realize(const SuperAlgebra& L, const Element& x);

// Coordinates of vectors in the span of a fixed independent family.
class SubspaceCoords {
public:
    SubspaceCoords() = default;
    SubspaceCoords(const std::vector<SparseVec>& basis, int ambient_dim);
    bool coords(const SparseVec& v, SparseVec& out) const;
    SparseVec coords(const SparseVec& v) const;
    int dim() const { return k_; }

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> pivots_;
    std::vector<SparseVec> rows_;  // on the ambient coordinates
    std::vector<SparseVec> combo_; // matching combination of the basis
};

// Smallest bracket-closed homogeneous subspace containing gens. The result
// records its inclusion in L through embedding().
SuperAlgebra subalgebra_closure(const SuperAlgebra& L, const std::vector<Element>& gens,
                                const std::string& name = "");
// Subalgebra on a basis that is already bracket closed and homogeneous.
SuperAlgebra subalgebra_on_basis(const SuperAlgebra& L, const std::vector<Element>& basis,
                                 const std::string& name, const std::vector<std::string>& labels = {});

void write_algebra(std::ostream& os, const SuperAlgebra& L);
SuperAlgebra read_algebra(std::istream& is);
std::string algebra_to_string(const SuperAlgebra& L);
SuperAlgebra algebra_from_string(const std::string& s);

// Moves every structure constant into Q(zeta_m) for a multiple m of the
// current conductor.
SuperAlgebra lift_conductor(const SuperAlgebra& L, int m);

}  // namespace sw
