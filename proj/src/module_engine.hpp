#pragma once

#include "superweyl/mapweyl.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sw::detail {

std::vector<Rat> simple_coordinates(const RootSystem& rs, const Weight& w);
Weight add_weight(const Weight& a, const Weight& b, const CycScalar& s = CycScalar(1));
bool is_zero_weight(const Weight& w);

// The induced module F = U(L) (x)_{U(HG + Raise)} C_lambda on normal monomials
// in the lowering and HP generators.
class ModuleEngine {
public:
    ModuleEngine(const HWContext& ctx, const Weight& lambda, int cap);

    PBWEngine& pbw() { return pbw_; }
    const HWContext& ctx() const { return *ctx_; }
    GenKind kind_at(int pos) const { return ctx_->kind[pbw_.basis_index(pos)]; }
    const Weight& lambda() const { return lambda_; }

    // Drops terms with raising factors and evaluates HG factors at lambda.
    EnvElement project(const EnvElement& e) const;
    // Basis element b of the acting algebra applied to a module vector.
    EnvElement act(int b, const EnvElement& v);
    // u applied to v, u a monomial of positions.
    EnvElement act_word(const Monomial& u, const EnvElement& v);
    Weight weight(const Monomial& m) const;
    Rat depth(const Monomial& m) const;
    std::vector<int> positions(std::function<bool(GenKind)> pred) const;
    Monomial to_basis(const Monomial& m) const;
    Monomial to_positions(const Monomial& m) const;

private:
    const HWContext* ctx_;
    Weight lambda_;
    PBWEngine pbw_;
    std::vector<CycScalar> hg_value_;  // per position
};

// Normal monomials over the given positions with depth <= max_depth and degree <= max_degree.
std::vector<Monomial> enumerate_monomials(ModuleEngine& eng, const std::vector<int>& allowed, const Rat& max_depth,
                                          int max_degree);

// Admissible weights reachable from lambda by subtracting simple roots, with
// the depth bound used for the search.
std::vector<Weight> admissible_weights(WeightOracle& oracle, const SuperAlgebra& fixed, const RootSystem& frs,
                                       Rat* bound);

// Finite collection of module vectors indexed by monomials, with per-weight
// echelon forms. Monomials keep the order in which they are registered.
struct MonomialTable {
    std::map<Monomial, int> id;
    std::vector<Monomial> mons;
    std::vector<std::string> wkey;
    int add(const Monomial& m, const std::string& key);
    // False if some monomial is not registered.
    bool to_vec(const EnvElement& e, SparseVec& out) const;
    EnvElement to_env(const SparseVec& v) const;
};

// Applies the factors of a word of basis indices right to left.
SparseVec apply_word(const std::vector<SparseMatrix>& action, const Monomial& word, SparseVec v);

// Lowering generator with weight -alpha, exponent zero and kind Lower.
int lowering_for_root(const HWContext& ctx, const Weight& alpha);

}  // namespace sw::detail
