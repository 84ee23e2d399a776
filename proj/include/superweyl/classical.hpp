#pragma once

#include "superweyl/liesuper.hpp"

#include <map>
#include <string>
#include <vector>

namespace sw {

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

SuperAlgebra build_sl(int m, int n, int conductor = 1);
SuperAlgebra build_osp(int m, int two_n, int conductor = 1);

// Basis of the diagonal part of the matrix realization, in L coordinates.
std::vector<Element> cartan_subalgebra(const SuperAlgebra& L);

using Weight = std::vector<CycScalar>;  // values on the Cartan basis

struct Root {
    Weight value;
    int parity = 0;
    std::vector<Element> space;
    int row = -1, col = -1;  // first realization entry of the root vector, if any
};

struct RootSystem {
    std::vector<Element> cartan;
    std::vector<Root> roots;
    std::vector<std::string> coord;  // realization diagonal names, may be empty
    // filled once a base is chosen
    std::vector<int> simple;            // indices into roots, in base order
    std::vector<int> sign;              // +1 / -1 per root
    std::vector<std::vector<Rat>> coeff; // simple-root coordinates per root
    std::string base_label;
    bool distinguished = false;

    int rank() const { return static_cast<int>(cartan.size()); }
    bool has_base() const { return !simple.empty() || roots.empty(); }
    int find(const Weight& w) const;
    Rat height(int r) const;
    std::vector<int> positive() const;
    std::vector<int> negative() const;
    int odd_simple_count() const;
};

struct WeightSpace {
    Weight w;
    int parity = 0;
    std::vector<Element> vecs;
};

// Joint ad-eigenspaces of hs inside span(space), split by parity and sorted by weight.
std::vector<WeightSpace> weight_decomposition(const SuperAlgebra& L, const std::vector<Element>& hs,
                                              const std::vector<Element>& space);
bool is_weight_vector(const SuperAlgebra& L, const std::vector<Element>& hs, const Element& v, Weight* w = nullptr);

RootSystem root_decomposition(const SuperAlgebra& L, const std::vector<Element>& h);

// Positive system {alpha : phi(alpha) > 0}; returns false if phi is singular
// or the indecomposable roots do not form a base.
bool apply_functional(RootSystem& rs, const std::vector<Rat>& phi_per_root, const std::string& label);
// Coordinate orderings, e.g. {"d1","e1"}; requires coord names.
std::vector<std::vector<std::string>> standard_orderings(const RootSystem& rs);
bool apply_ordering(RootSystem& rs, const std::vector<std::string>& ordering);
// Generic search by integer functionals on the Cartan basis.
bool apply_generic_base(RootSystem& rs, bool want_distinguished);

RootSystem distinguished_simple_roots(const RootSystem& rs);

struct TriangularDecomposition {
    std::vector<Element> n_minus, h, n_plus;
    std::vector<Element> e, f, hc;  // Chevalley generators per simple root
    std::vector<std::vector<CycScalar>> cartan_matrix;  // a_ij = alpha_j(h_i)
    std::vector<int> simple_parity;
    std::string normalization;
};

TriangularDecomposition triangular_decomposition(const SuperAlgebra& L, const RootSystem& rs);

// Invariant form used to normalize coroots: str(xy) when a realization is
// stored, otherwise the Killing form.
CycScalar invariant_form(const SuperAlgebra& L, const Element& x, const Element& y);
// h in the Cartan with alpha(h') = (h, h') for all h'.
Element form_dual(const SuperAlgebra& L, const RootSystem& rs, const Weight& alpha);
// Coroot h_alpha in [g_alpha, g_-alpha], normalized alpha(h_alpha) = 2 when possible.
Element coroot(const SuperAlgebra& L, const RootSystem& rs, int root);
// Evaluate a weight on an element of the Cartan.
CycScalar evaluate(const SuperAlgebra& L, const RootSystem& rs, const Weight& w, const Element& h);
// Coordinates of a Cartan element in the Cartan basis.
SparseVec cartan_coords(const SuperAlgebra& L, const RootSystem& rs, const Element& h);

struct ZGrading {
    std::map<int, std::vector<Element>> components;
    std::map<int, int> dims;
    std::string type;  // "I", "II" or "unclassified"
    bool shape_ok = false;
    int odd_simple = -1;
};

ZGrading z_grading(const SuperAlgebra& L, const RootSystem& rs);

std::string weight_string(const Weight& w);

}  // namespace sw
