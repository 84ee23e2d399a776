#include "superweyl/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace sw {

int default_cap() {
    if (const char* s = std::getenv("SUPERWEYL_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
        throw Error(std::string("SUPERWEYL_CAP is not a positive integer: ") + s);
    }
    return 8;
}

SuperAlgebra load_algebra(const std::string& input) {
    std::ifstream in(input);
    if (in) return read_algebra(in);
    auto c1 = input.find(':');
    auto c2 = input.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw Error("cannot open algebra file " + input);
    std::string fam = input.substr(0, c1);
    int a = std::stoi(input.substr(c1 + 1, c2 - c1 - 1));
    int b = std::stoi(input.substr(c2 + 1));
    if (fam == "sl") return build_sl(a, b);
    if (fam == "osp") return build_osp(a, b);
    throw Error("unknown family " + fam);
}

namespace {

const char* yes(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string rat_list(const std::vector<Rat>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    return os.str();
}

std::string element_text(const SuperAlgebra& L, const Element& x) {
    if (x.e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.e) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c.str() << ")*";
        os << L.label(i);
    }
    return os.str();
}

std::string monomial_text(const SuperAlgebra& L, const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << L.label(m[i]);
    return os.str();
}

RootSystem base_for(const SuperAlgebra& L) { return distinguished_simple_roots(root_decomposition(L, cartan_subalgebra(L))); }

EqMapAlgebra map_for(const JobConfig& cfg, std::shared_ptr<Folding>& F) {
    F = std::make_shared<Folding>(fold(load_algebra(cfg.input), cfg.perm));
    int m = cfg.gamma > 0 ? cfg.gamma : F->nu.order;
    return equivariant_map_subalgebra(F, build_truncated_algebra(cfg.N, m));
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace

std::string roots_text(const SuperAlgebra& L, const RootSystem& rs) {
    std::ostringstream os;
    os << "algebra " << L.name() << "\n";
    os << "rank " << rs.rank() << "\n";
    os << "base " << rs.base_label << (rs.distinguished ? " distinguished" : "") << "\n";
    for (std::size_t k = 0; k < rs.simple.size(); ++k) {
        int r = rs.simple[k];
        os << "simple " << k << " " << weight_string(rs.roots[r].value) << " parity " << rs.roots[r].parity << "\n";
    }
    for (int r : rs.positive())
        os << "positive " << weight_string(rs.roots[r].value) << " parity " << rs.roots[r].parity << " height "
           << rs.height(r).get_str() << " coeff " << rat_list(rs.coeff[r]) << "\n";
    TriangularDecomposition td = triangular_decomposition(L, rs);
    for (std::size_t i = 0; i < td.cartan_matrix.size(); ++i) {
        os << "cartan_row " << i;
        for (const auto& x : td.cartan_matrix[i]) os << " " << x.str();
        os << "\n";
    }
    return os.str();
}

std::string roots_text(const SuperAlgebra& L) { return roots_text(L, base_for(L)); }

std::string axioms_text(const SuperAlgebra& L, const AxiomReport& r) {
    std::ostringstream os;
    os << "algebra " << L.name() << "\n";
    os << "dim " << L.dim() << " even " << L.even_dim() << " odd " << L.odd_dim() << "\n";
    os << "checked_triples " << r.checked_triples << "\n";
    os << "violations " << r.violations.size() << "\n";
    for (const auto& v : r.violations) os << "violation " << v << "\n";
    os << "axioms " << (r.ok() ? "ok" : "FAILED") << "\n";
    return os.str();
}

std::string fold_text(const Folding& F, const StructuralReport& checks) {
    std::ostringstream os;
    os << "algebra " << F.g.name() << "\n";
    os << "base " << F.rs.base_label << "\n";
    os << "perm " << join(F.nu.perm) << "\n";
    os << "scale " << F.nu.scale.str() << "\n";
    os << "order " << F.nu.order << "\n";
    os << "grading_dims " << join(F.dec.dims()) << "\n";
    os << "bracket_compatible " << yes(F.dec.bracket_compatible) << "\n";
    os << "fixed_dim " << F.fixed.dim() << "\n";
    os << "fixed_type " << F.type.label << "\n";
    for (const auto& m : F.type.matches) os << "fixed_match " << m << "\n";
    os << "fixed_base " << F.fixed_rs.base_label << "\n";
    for (const auto& c : checks.checks)
        os << "check " << c.name << " " << (c.skipped ? "skipped" : c.pass ? "pass" : "FAIL")
           << (c.detail.empty() ? "" : " " + c.detail) << "\n";
    ConditionC C = check_condition_C(F.fixed, F.fixed_rs);
    os << "condition_C " << yes(C.holds) << " theta " << weight_string(C.theta) << " parity " << C.parity << "\n";
    return os.str();
}

std::string map_text(const EqMapAlgebra& E) {
    std::ostringstream os;
    os << "algebra " << E.alg.name() << "\n";
    os << "dim " << E.alg.dim() << " even " << E.alg.even_dim() << " odd " << E.alg.odd_dim() << "\n";
    os << "coefficients " << E.A.name << " grading " << E.A.m << "\n";
    os << "fixed_points_verified " << yes(E.fixed_points_verified) << "\n";
    for (int i = 0; i < E.alg.dim(); ++i) {
        const EqBasis& b = E.info[i];
        os << "basis " << i << " " << E.alg.label(i) << " parity " << E.alg.parity(i) << " s " << b.s << " kind "
           << kind_name(b.kind) << " weight " << weight_string(b.wt) << "\n";
    }
    return os.str();
}

WeylRun weyl_report(const EqMapAlgebra& E, const std::vector<long>& lambda, int cap, const WeylOptions& opt) {
    const SuperAlgebra& fixed = E.fold->fixed;
    std::vector<Rat> vals;
    for (long x : lambda) vals.emplace_back(x);
    if (vals.size() != E.ftd.hc.size())
        throw Error("lambda needs " + std::to_string(E.ftd.hc.size()) + " values, one per simple coroot");
    Weight lam = lambda_from_coroots(fixed, E.frs, E.ftd, vals);
    std::vector<long> ex = power_exponents(fixed, E.frs, lam);

    WeylModule W = build_global_weyl(E, lam, cap);
    std::ostringstream os;
    os << "acting " << W.acting << "\n";
    os << "fixed " << E.fold->type.label << " base " << E.frs.base_label << "\n";
    os << "lambda " << rat_list(vals) << "\n";
    os << "lambda_cartan " << weight_string(lam) << "\n";
    os << "power_exponents";
    for (long k : ex) os << " " << k;
    os << "\n";
    os << "cap " << W.cert.cap << "\n";
    os << "dim " << W.dim() << "\n";
    os << "converged " << yes(W.cert.converged) << "\n";
    os << "closure_verified " << yes(W.cert.closure_verified) << "\n";
    os << "relations_verified " << yes(W.cert.relations_verified) << "\n";
    os << "method " << W.cert.method << "\n";
    for (const auto& w : W.cert.warnings) os << "warning " << w << "\n";
    if (opt.character) {
        for (const auto& [k, v] : W.character()) os << "character " << k << " " << v << "\n";
    }
    WeylRun run;
    run.converged = W.cert.converged;
    if (W.cert.converged) {
        auto bad = check_power_relations(E, W);
        os << "power_relations " << (bad.empty() ? "ok" : "FAILED") << "\n";
        for (const auto& b : bad) os << "power_relation_failure " << b << "\n";
        if (opt.hw_algebra || opt.filtration) {
            HighestWeightAlgebra Al = highest_weight_algebra(E, W);
            if (opt.hw_algebra) {
                os << "hw_algebra_dim " << Al.dim() << "\n";
                os << "hw_weight_space_dim " << W.weight_space(W.lambda).size() << "\n";
                os << "hw_operator_dim " << Al.operator_dim << "\n";
                os << "hw_commutative " << yes(Al.commutative) << "\n";
                os << "hw_associative " << yes(Al.associative) << "\n";
                for (int i = 0; i < Al.dim(); ++i)
                    os << "hw_basis " << i << " " << monomial_text(E.alg, Al.basis[i]) << "\n";
                for (int i = 0; i < Al.dim(); ++i)
                    for (int j = 0; j < Al.dim(); ++j) os << "hw_product " << i << " " << j << " " << to_string(Al.table[i][j]) << "\n";
            }
            if (opt.filtration) {
                FiltrationTable ft = filtration_stabilization(E, W, Al);
                os << "filtration " << join(ft.dims) << "\n";
                os << "filtration_n0 " << ft.n0 << "\n";
                os << "filtration_certified " << yes(ft.certified) << "\n";
            }
        }
    }
    run.text = os.str();
    return run;
}

GarlandRun garland_report(const EqMapAlgebra& E, int r) {
    std::ostringstream os;
    GarlandRun run;
    run.all_members = true;
    os << "algebra " << E.alg.name() << "\n";
    os << "r " << r << "\n";
    std::vector<int> a0 = E.A.component(0);
    for (int root : E.frs.positive()) {
        if (E.frs.roots[root].parity != 0) continue;
        RootTriple T = root_triple(E, root);
        os << "root " << weight_string(E.frs.roots[root].value) << " e " << element_text(E.fold->g, T.e) << " f "
           << element_text(E.fold->g, T.f) << " h " << element_text(E.fold->g, T.h) << "\n";
        for (int j : a0) {
            GarlandReport g = check_garland(E, r, SparseVec::unit(j), root);
            run.all_members = run.all_members && g.member;
            os << "garland a=" << E.A.labels[j] << " member " << yes(g.member) << "\n";
            os << "residual " << g.residual_text << "\n";
        }
    }
    run.text = os.str();
    return run;
}

std::vector<FoldingRow> emit_folding_table() {
    struct Spec {
        std::string fam;
        int a, b;
        std::string perm, expected;
        int dim;
    };
    const std::vector<Spec> specs = {
        {"sl", 3, 2, "flip", "osp(3|2)", 12},
        {"osp", 2, 2, "flip", "osp(1|2)", 5},
        {"sl", 2, 1, "id", "sl(2|1)", 8},
        {"osp", 3, 2, "id", "osp(3|2)", 12},
    };
    std::vector<FoldingRow> rows;
    for (const auto& s : specs) {
        SuperAlgebra L = s.fam == "sl" ? build_sl(s.a, s.b) : build_osp(s.a, s.b);
        Folding F = fold(L, s.perm);
        FoldingRow row;
        row.source = L.name();
        row.perm = s.perm;
        row.expected = s.expected;
        row.expected_dim = s.dim;
        row.computed = F.type.label;
        row.fixed_dim = F.fixed.dim();
        row.dims = F.dec.dims();
        row.g_dim = L.dim();
        int sum = 0;
        for (int d : row.dims) sum += d;
        bool named = row.computed == s.expected;
        for (const auto& m : F.type.matches) named = named || m == s.expected;
        row.pass = named && row.fixed_dim == s.dim && sum == row.g_dim;
        rows.push_back(row);
    }
    return rows;
}

std::string folding_table_text(const std::vector<FoldingRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows)
        os << "row " << r.source << " perm " << r.perm << " computed " << r.computed << " expected " << r.expected
           << " fixed_dim " << r.fixed_dim << " expected_dim " << r.expected_dim << " grading_dims " << join(r.dims)
           << " dim " << r.g_dim << " " << (r.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string& c = cfg.command;
        if (c == "build-algebra") {
            SuperAlgebra L;
            if (cfg.family == "sl")
                L = build_sl(cfg.m, cfg.n);
            else if (cfg.family == "osp")
                L = build_osp(cfg.m, cfg.n);
            else
                throw Error("unknown family " + cfg.family);
            std::string text = algebra_to_string(L);
            if (cfg.output.empty()) {
                out << text;
            } else {
                write_file(cfg.output, text);
                write_file(cfg.output + ".roots", roots_text(L));
                out << "wrote " << cfg.output << " dim " << L.dim() << "\n";
            }
            return kExitOk;
        }
        if (c == "check") {
            SuperAlgebra L = load_algebra(cfg.input);
            AxiomReport r = check_axioms(L);
            out << axioms_text(L, r);
            std::string s = algebra_to_string(L);
            bool round = algebra_to_string(algebra_from_string(s)) == s;
            out << "roundtrip " << (round ? "ok" : "FAILED") << "\n";
            return r.ok() && round ? kExitOk : kExitError;
        }
        if (c == "roots") {
            out << roots_text(load_algebra(cfg.input));
            return kExitOk;
        }
        if (c == "fold") {
            Folding F = fold(load_algebra(cfg.input), cfg.perm);
            StructuralReport S = structural_checks(F.g, F.nu, F.fixed, F.dec);
            out << fold_text(F, S);
            if (!cfg.output.empty()) write_file(cfg.output, algebra_to_string(F.fixed));
            return S.ok() ? kExitOk : kExitError;
        }
        if (c == "map") {
            std::shared_ptr<Folding> F;
            EqMapAlgebra E = map_for(cfg, F);
            out << map_text(E);
            AxiomReport r = check_axioms(E.alg);
            out << "axioms " << (r.ok() ? "ok" : "FAILED") << " violations " << r.violations.size() << "\n";
            if (!cfg.output.empty()) write_file(cfg.output, algebra_to_string(E.alg));
            return r.ok() && E.fixed_points_verified ? kExitOk : kExitError;
        }
        if (c == "weyl") {
            std::shared_ptr<Folding> F;
            EqMapAlgebra E = map_for(cfg, F);
            WeylOptions opt;
            opt.character = cfg.character || (!cfg.filtration && !cfg.hw_algebra);
            opt.filtration = cfg.filtration;
            opt.hw_algebra = cfg.hw_algebra;
            WeylRun run = weyl_report(E, cfg.lambda, cfg.cap, opt);
            out << run.text;
            return run.converged ? kExitOk : kExitNotConverged;
        }
        if (c == "verify-garland") {
            std::shared_ptr<Folding> F;
            EqMapAlgebra E = map_for(cfg, F);
            GarlandRun run = garland_report(E, cfg.r);
            out << run.text;
            return run.all_members ? kExitOk : kExitError;
        }
        if (c == "folding-table") {
            auto rows = emit_folding_table();
            out << folding_table_text(rows);
            for (const auto& r : rows)
                if (!r.pass) return kExitError;
            return kExitOk;
        }
        throw Error("unknown command " + c);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace sw
