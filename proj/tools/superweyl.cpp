#include "superweyl/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<long> parse_lambda(const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw CLI::ValidationError("--lambda", "not an integer: " + tok);
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

int parse_trunc(const std::string& s) {
    if (s.rfind("trunc:", 0) != 0) throw CLI::ValidationError("--A", "expected trunc:N");
    return std::stoi(s.substr(6));
}

}  // namespace

int main(int argc, char** argv) {
    sw::JobConfig cfg;
    try {
        cfg.cap = sw::default_cap();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sw::kExitError;
    }

    CLI::App app{"Lie superalgebras, foldings, equivariant map superalgebras and Weyl modules"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build-algebra", "build sl M N or osp M 2N");
    build->add_option("family", cfg.family, "sl or osp")->required()->check(CLI::IsMember({"sl", "osp"}));
    build->add_option("M", cfg.m)->required();
    build->add_option("N", cfg.n)->required();
    build->add_option("-o,--output", cfg.output, "algebra file; a .roots sidecar is written next to it");

    auto* check = app.add_subcommand("check", "verify the superalgebra axioms of an algebra file");
    auto* roots = app.add_subcommand("roots", "roots and distinguished base");
    auto* fold = app.add_subcommand("fold", "fold by a diagram automorphism");
    auto* map = app.add_subcommand("map", "equivariant map superalgebra");
    auto* weyl = app.add_subcommand("weyl", "global Weyl module");
    auto* garland = app.add_subcommand("verify-garland", "Garland identity in the enveloping algebra");
    auto* table = app.add_subcommand("folding-table", "fixed subalgebras of the in-scope foldings");
    (void)table;

    std::string A = "trunc:1";
    std::string lambda;
    for (auto* sub : {check, roots, fold, map, weyl, garland})
        sub->add_option("algebra", cfg.input, "algebra file or sl:M:N / osp:M:2N")->required();
    for (auto* sub : {fold, map, weyl, garland})
        sub->add_option("--perm", cfg.perm, "flip, id or comma separated node images");
    for (auto* sub : {fold, map})
        sub->add_option("-o,--output", cfg.output);
    for (auto* sub : {map, weyl, garland}) {
        sub->add_option("--A", A, "coefficient algebra trunc:N");
        sub->add_option("--gamma", cfg.gamma, "order of the grading on A (default: order of the automorphism)");
    }
    weyl->add_option("--lambda", lambda, "values on the simple coroots, comma separated")->required();
    weyl->add_option("--cap", cfg.cap, "enveloping degree cap")->check(CLI::PositiveNumber);
    weyl->add_flag("--character", cfg.character);
    weyl->add_flag("--filtration", cfg.filtration);
    weyl->add_flag("--hw-algebra", cfg.hw_algebra);
    garland->add_option("--r", cfg.r)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
        cfg.N = parse_trunc(A);
        if (!lambda.empty()) cfg.lambda = parse_lambda(lambda);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? sw::kExitOk : sw::kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sw::kExitError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return sw::run_job(cfg, std::cout, std::cerr);
}
