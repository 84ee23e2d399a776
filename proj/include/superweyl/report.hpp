#pragma once

#include "superweyl/mapweyl.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sw {

// Exit codes of the command line tool.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

struct JobConfig {
    std::string command;
    std::string input;   // algebra file, or a family spec such as "sl:3:2"
    std::string output;  // optional output path
    std::string family;  // build-algebra: "sl" or "osp"
    int m = 0, n = 0;
    std::string perm = "id";
    int N = 1;           // A = trunc(N)
    int gamma = 0;       // 0: order of the automorphism
    std::vector<long> lambda;
    int cap = 8;
    int r = 1;
    bool character = false;
    bool filtration = false;
    bool hw_algebra = false;
};

// Cap from SUPERWEYL_CAP, or 8.
int default_cap();

// Reads an algebra file, or builds one from "sl:M:N" / "osp:M:2N".
SuperAlgebra load_algebra(const std::string& input);

std::string roots_text(const SuperAlgebra& L, const RootSystem& rs);
std::string roots_text(const SuperAlgebra& L);
std::string axioms_text(const SuperAlgebra& L, const AxiomReport& r);
std::string fold_text(const Folding& F, const StructuralReport& checks);
std::string map_text(const EqMapAlgebra& E);

struct WeylOptions {
    bool character = true;
    bool filtration = false;
    bool hw_algebra = false;
};

struct WeylRun {
    std::string text;
    bool converged = false;
};

WeylRun weyl_report(const EqMapAlgebra& E, const std::vector<long>& lambda, int cap, const WeylOptions& opt);

struct GarlandRun {
    std::string text;
    bool all_members = false;
};

// Every positive even root of g^Gamma and every basis element of A_0.
GarlandRun garland_report(const EqMapAlgebra& E, int r);

struct FoldingRow {
    std::string source;
    std::string perm;
    std::string expected;
    std::string computed;
    int expected_dim = 0;
    int fixed_dim = 0;
    std::vector<int> dims;
    int g_dim = 0;
    bool pass = false;
};

std::vector<FoldingRow> emit_folding_table();
std::string folding_table_text(const std::vector<FoldingRow>& rows);

// Runs one subcommand; returns the exit code.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sw
