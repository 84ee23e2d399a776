#pragma once

#include "superweyl/classical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

struct Automorphism {
    SparseMatrix matrix;  // column k = image of basis element k
    int order = 1;
    int conductor = 1;
    std::vector<int> perm;
    CycScalar scale{1};

    Element apply(const Element& x) const { return matrix.apply(x); }
};

// a_ij == scale * a_{perm(i) perm(j)} for all i, j.
bool cartan_compatible(const TriangularDecomposition& td, const std::vector<int>& perm, const CycScalar& scale);
// Scale forced by the Cartan matrix, if any pair of entries determines one.
std::optional<CycScalar> forced_scale(const TriangularDecomposition& td, const std::vector<int>& perm);

// Extends e_i -> scale e_perm(i), f_i -> f_perm(i) to an automorphism of L.
Automorphism diagram_automorphism(const SuperAlgebra& L, const TriangularDecomposition& td,
                                  const std::vector<int>& perm, const CycScalar& scale);
Automorphism identity_automorphism(const SuperAlgebra& L);
// Violations of nu[x,y] == [nu x, nu y] on basis pairs.
std::vector<std::string> homomorphism_violations(const SuperAlgebra& L, const Automorphism& nu);

struct GradedDecomposition {
    int conductor = 1;
    std::vector<std::vector<Element>> components;  // zeta^s eigenspaces, s = 0..m-1
    bool bracket_compatible = false;

    int order() const { return static_cast<int>(components.size()); }
    std::vector<int> dims() const;
};

GradedDecomposition eigenspace_decomposition(const SuperAlgebra& L, const Automorphism& nu);
SuperAlgebra fixed_subalgebra(const SuperAlgebra& L, const Automorphism& nu, const GradedDecomposition& dec);
SuperAlgebra fixed_subalgebra(const SuperAlgebra& L, const Automorphism& nu);

struct TypeMatch {
    std::string label = "unknown";
    std::vector<std::string> matches;
    std::vector<std::vector<Rat>> cartan;  // normalized distinguished Cartan matrix
    std::vector<int> parity;
};

TypeMatch identify_type(const SuperAlgebra& S);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct StructuralReport {
    std::vector<CheckResult> checks;
    bool ok() const;
};

// h_Gamma in the coordinates of L, from the embedding of the fixed subalgebra.
std::vector<Element> fixed_cartan_in_parent(const SuperAlgebra& fixed);

StructuralReport structural_checks(const SuperAlgebra& L, const Automorphism& nu, const SuperAlgebra& fixed,
                                   const GradedDecomposition& dec);

struct ConditionC {
    bool holds = false;
    int lowest = -1;       // index into rs.roots
    Weight lowest_root;
    Weight theta;          // negative of the lowest root
    int parity = 0;
    std::string note;
};

// Lowest root for the base recorded in rs; C holds iff it is even.
ConditionC check_condition_C(const SuperAlgebra& S, const RootSystem& rs);

// Splits each component into h-weight spaces, keeping the given vectors
// whenever they are already weight vectors.
std::vector<std::vector<Element>> refine_by_weights(const SuperAlgebra& L, const std::vector<Element>& hs,
                                                    const std::vector<std::vector<Element>>& comps);

// "flip", "id" or a comma separated list of node images.
std::vector<int> parse_permutation(const std::string& spec, int rank);

struct Folding {
    SuperAlgebra g;
    RootSystem rs;
    TriangularDecomposition td;
    Automorphism nu;
    GradedDecomposition dec;
    SuperAlgebra fixed;
    TypeMatch type;
    std::vector<Element> h_gamma;  // in g coordinates
    RootSystem fixed_rs;           // distinguished base of the fixed subalgebra
    TriangularDecomposition fixed_td;
};

// Re-bases a fixed subalgebra on its Cartan followed by root vectors.
SuperAlgebra weight_basis_subalgebra(const SuperAlgebra& g, const SuperAlgebra& fixed);

// Searches the standard bases of L for one where perm is a diagram symmetry
// (scale forced by the Cartan matrix unless given), then folds.
Folding fold(const SuperAlgebra& L, const std::string& perm_spec, std::optional<CycScalar> scale = std::nullopt);

}  // namespace sw
