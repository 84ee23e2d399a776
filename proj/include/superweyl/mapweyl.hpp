#pragma once

#include "superweyl/equivariant.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace sw {

// ------------------------------------------------------------ coefficients

// Finite-dimensional commutative unital algebra with a Z_m grading.
struct GammaAlgebra {
    std::string name;
    int m = 1;
    std::vector<std::string> labels;
    std::vector<int> grade;                       // basis element -> s with sigma = zeta^s
    std::vector<std::vector<SparseVec>> mult;     // mult[i][j] = b_i b_j
    int unit = 0;

    int dim() const { return static_cast<int>(labels.size()); }
    std::vector<int> component(int s) const;
    SparseVec product(const SparseVec& a, const SparseVec& b) const;
    SparseVec power(const SparseVec& a, int k) const;
    // Violations of commutativity, associativity, unit and grading.
    std::vector<std::string> check() const;
};

// C[t]/(t^N) with sigma(t) = zeta_m t.
GammaAlgebra build_truncated_algebra(int N, int m);

// g (x) A on the basis x_i (x) a_j, index i * dim A + j.
SuperAlgebra map_superalgebra(const SuperAlgebra& L, const GammaAlgebra& A);

enum class GenKind { Lower, HG, HP, Raise };
const char* kind_name(GenKind k);

struct EqBasis {
    int s = 0;           // component of g
    Element x;           // in g coordinates
    int a = 0;           // basis element of A, lies in A_{-s}
    Weight wt;           // h_Gamma weight
    GenKind kind = GenKind::Lower;
    Rat height = 0;
};

struct EqMapAlgebra {
    SuperAlgebra alg;
    std::vector<EqBasis> info;
    std::shared_ptr<const Folding> fold;
    GammaAlgebra A;
    RootSystem frs;                     // distinguished base of the fixed subalgebra
    TriangularDecomposition ftd;
    std::vector<std::vector<Element>> comps;  // refined eigenspace bases
    bool fixed_points_verified = false;

    // x in g_s, f in A_{-s}; returns coordinates on alg.
    Element element(const Element& x, const SparseVec& f) const;
};

// Basis: for each s, each x in the refined g_s, each f in A_{-s}.
EqMapAlgebra equivariant_map_subalgebra(std::shared_ptr<const Folding> F, const GammaAlgebra& A);

// --------------------------------------------------------------- PBW

using Monomial = std::vector<int>;  // nondecreasing generator positions
using EnvElement = std::map<Monomial, CycScalar>;

class CapExceeded : public Error {
public:
    using Error::Error;
};

std::string env_to_string(const EnvElement& e, const std::vector<std::string>& names);
void env_axpy(EnvElement& y, const CycScalar& a, const EnvElement& x);

// Normal ordering in U(L) for a fixed total order of the basis of L.
class PBWEngine {
public:
    PBWEngine(const SuperAlgebra& L, std::vector<int> order, int cap);

    int size() const { return static_cast<int>(order_.size()); }
    int position(int basis_index) const { return pos_[basis_index]; }
    int basis_index(int position) const { return order_[position]; }
    int parity_at(int position) const { return L_->parity(order_[position]); }
    bool is_normal(const Monomial& m) const;
    int cap() const { return cap_; }

    // x_p * m, normal ordered; memoized.
    const EnvElement& left_mul(int p, const Monomial& m);
    EnvElement left_mul(int p, const EnvElement& e);
    EnvElement multiply(const EnvElement& a, const EnvElement& b);
    // Element of L as a degree-one EnvElement.
    EnvElement from_element(const Element& x) const;
    // Word of positions, multiplied left to right into normal form.
    EnvElement normal_form(const std::vector<int>& word);
    // Independent strategy: repeatedly rewrite the leftmost disorder.
    EnvElement normal_form_by_inversions(const std::vector<int>& word) const;
    std::vector<std::string> names() const;

private:
    const SuperAlgebra* L_;
    std::vector<int> order_, pos_;
    int cap_;
    std::map<std::pair<int, Monomial>, EnvElement> memo_;
};

// ---------------------------------------------------- highest weight data

// Generators of an acting algebra with weights and kinds.
struct HWContext {
    const SuperAlgebra* alg = nullptr;
    std::vector<GenKind> kind;
    std::vector<Weight> wt;
    std::vector<Rat> height;
    std::vector<int> exponent;
    std::vector<Element> h_of;  // HG elements as fixed-Cartan coordinates
    // base data of g^Gamma
    const SuperAlgebra* fixed = nullptr;
    RootSystem frs;
    TriangularDecomposition ftd;

    std::vector<int> generator_order() const;
};

HWContext context_for(const EqMapAlgebra& E);
HWContext context_for_fixed(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd);

struct EvenSimple {
    int root;        // index into frs.roots
    Element coroot;  // fixed coordinates
};

// Simple roots of the even part of g^Gamma with their coroots.
std::vector<EvenSimple> even_simple_roots(const SuperAlgebra& fixed, const RootSystem& frs);
// Lambda as values on the fixed Cartan basis from values on the distinguished simple coroots.
Weight lambda_from_coroots(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd,
                           const std::vector<Rat>& values);
// lambda(h_alpha) for each even simple root, checked to be nonnegative integers.
std::vector<long> power_exponents(const SuperAlgebra& fixed, const RootSystem& frs, const Weight& lambda);

// Admissibility: every W_0 image of mu lies in lambda - Q^+.
class WeightOracle {
public:
    WeightOracle(const SuperAlgebra& fixed, const RootSystem& frs, Weight lambda);
    bool in_cone(const Weight& mu) const;  // lambda - mu in Q^+
    bool admissible(const Weight& mu);
    std::vector<Rat> simple_coords(const Weight& mu) const;
    Rat depth(const Weight& mu) const;  // height of lambda - mu
    const Weight& lambda() const { return lambda_; }
    CycScalar value(const Weight& mu, const Element& h_fixed) const;

private:
    const SuperAlgebra* fixed_;
    const RootSystem* frs_;
    Weight lambda_;
    SubspaceCoords simple_;
    std::vector<std::pair<Weight, Element>> reflections_;  // root, coroot
    std::map<std::string, bool> memo_;
};

struct Certificate {
    int cap = 0;
    bool converged = false;
    bool closure_verified = false;
    bool relations_verified = false;
    std::string method;
    std::vector<std::string> warnings;
};

struct WeylModule {
    std::string acting;               // name of the acting algebra
    Weight lambda;
    std::vector<Weight> weights;      // per basis vector
    std::vector<Monomial> monomials;  // standard monomial per basis vector, as basis indices
    std::vector<SparseMatrix> action; // per basis element of the acting algebra
    std::vector<std::string> generator_names;
    int highest = 0;
    Certificate cert;

    int dim() const { return static_cast<int>(weights.size()); }
    std::map<std::string, int> character() const;
    std::vector<int> weight_space(const Weight& mu) const;
    SparseMatrix rho(const Element& x) const;  // action of an element of the acting algebra
};

// Exhaustive check of [rho x, rho y] = rho [x, y].
std::vector<std::string> representation_violations(const SuperAlgebra& L, const std::vector<SparseMatrix>& action);

WeylModule build_Vbar(const SuperAlgebra& fixed, const RootSystem& frs, const TriangularDecomposition& ftd,
                      const Weight& lambda);
WeylModule build_global_weyl(const EqMapAlgebra& E, const Weight& lambda, int cap);

// (x_alpha^-)^{lambda(h_alpha)+1} w == 0 for every positive even root; returns failing roots.
std::vector<std::string> check_power_relations(const EqMapAlgebra& E, const WeylModule& W);

struct HighestWeightAlgebra {
    std::vector<Monomial> basis;       // monomials in H' applied to w
    std::vector<int> vec;              // matching basis vectors of W
    std::vector<std::vector<SparseVec>> table;  // table[i][j] = b_i b_j
    int unit = 0;
    int operator_dim = 0;              // dim of the algebra generated by rho(h (x) A)|W_lambda
    bool commutative = false, associative = false;
    std::vector<SparseMatrix> right;   // right action on W per basis element

    int dim() const { return static_cast<int>(basis.size()); }
    SparseMatrix left_regular(int i) const;
};

HighestWeightAlgebra highest_weight_algebra(const EqMapAlgebra& E, const WeylModule& W);

struct FunctorResult {
    WeylModule module;
    bool balanced_ok = false;
    bool right_action_commutes = false;
};

// W (x)_{A_lambda} M for a left A_lambda-module M given by matrices per basis element.
FunctorResult weyl_functor_apply(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al,
                                 const std::vector<SparseMatrix>& M);

struct FiltrationTable {
    std::vector<int> dims;
    int n0 = -1;
    bool certified = false;
};

FiltrationTable filtration_stabilization(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al);

struct LoopReduction {
    bool in_span = false;
    bool zero_vector = false;
    std::vector<std::vector<CycScalar>> coeff;  // coeff[l][k]: A_lambda basis element k at exponent l
    std::string detail;
};

// (x_alpha^- (x) a^power) w in span{(x_alpha^- (x) a^l) w A_lambda : l < lambda(h_alpha)}, a = t^m.
LoopReduction reduce_loop_vector(const EqMapAlgebra& E, const WeylModule& W, const HighestWeightAlgebra& Al,
                                 int root, int power);

// A cyclic candidate module over the acting algebra of W with generator v.
struct CyclicModule {
    std::vector<SparseMatrix> action;
    SparseVec v;
    int dim = 0;
};

struct SurjectionVerdict {
    bool highest_weight = false;
    bool intertwines = false;
    bool surjective = false;
    int kernel_dim = 0;
    bool ok() const { return highest_weight && intertwines && surjective; }
};

SurjectionVerdict check_universal_surjection(const EqMapAlgebra& E, const WeylModule& W, const CyclicModule& V);
CyclicModule as_cyclic(const WeylModule& W);
// A g^Gamma-module pulled back along evaluation at t = 0, with generator its highest vector.
CyclicModule evaluation_module(const EqMapAlgebra& E, const WeylModule& V);
// Quotient of W by the submodule generated by a random vector of a lower weight space.
CyclicModule random_quotient(const WeylModule& W, std::mt19937& rng, int* sub_dim = nullptr);

// ------------------------------------------------------------ Garland

// Coefficient of u^k in exp(-sum_i (h_alpha (x) a^i) u^i / i).
EnvElement garland_series(const EqMapAlgebra& E, PBWEngine& eng, int root, const SparseVec& a, int k);

struct GarlandReport {
    bool member = false;
    EnvElement residual;
    std::string residual_text;
};

GarlandReport check_garland(const EqMapAlgebra& E, int r, const SparseVec& a, int root, bool divided_powers = true);

// Chevalley triple (e, f, h) of an even positive root of g^Gamma, in g coordinates.
struct RootTriple {
    Element e, f, h;
};
RootTriple root_triple(const EqMapAlgebra& E, int root);

}  // namespace sw
