#include "superweyl/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace sw;

namespace {

std::shared_ptr<EqMapAlgebra> map_algebra(const std::string& algebra, const std::string& perm, int N, int gamma) {
    auto F = std::make_shared<Folding>(fold(load_algebra(algebra), perm));
    int m = gamma > 0 ? gamma : F->nu.order;
    return std::make_shared<EqMapAlgebra>(equivariant_map_subalgebra(F, build_truncated_algebra(N, m)));
}

py::tuple run(const std::vector<std::string>& args) {
    if (args.empty()) throw Error("run: missing command");
    JobConfig cfg;
    cfg.cap = default_cap();
    cfg.command = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        const std::string& a = rest[i];
        auto value = [&]() -> std::string {
            if (i + 1 >= rest.size()) throw Error("missing value for " + a);
            return rest[++i];
        };
        if (a == "--perm") cfg.perm = value();
        else if (a == "--A") cfg.N = std::stoi(value().substr(6));
        else if (a == "--gamma") cfg.gamma = std::stoi(value());
        else if (a == "--cap") cfg.cap = std::stoi(value());
        else if (a == "--r") cfg.r = std::stoi(value());
        else if (a == "--character") cfg.character = true;
        else if (a == "--filtration") cfg.filtration = true;
        else if (a == "--hw-algebra") cfg.hw_algebra = true;
        else if (a == "--lambda") {
            std::stringstream ss(value());
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.lambda.push_back(std::stol(tok));
        } else if (cfg.command == "build-algebra" && cfg.family.empty()) cfg.family = a;
        else if (cfg.command == "build-algebra" && cfg.m == 0) cfg.m = std::stoi(a);
        else if (cfg.command == "build-algebra") cfg.n = std::stoi(a);
        else cfg.input = a;
    }
    std::ostringstream out, err;
    int code = run_job(cfg, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the superweyl library";

    py::register_exception<Error>(m, "SuperWeylError");

    m.def("run", &run, py::arg("args"),
          "Run a command line job in process; returns (exit_code, stdout, stderr).");

    m.def(
        "check_algebra",
        [](const std::string& algebra) {
            SuperAlgebra L = load_algebra(algebra);
            AxiomReport r = check_axioms(L);
            py::dict d;
            d["name"] = L.name();
            d["dim"] = L.dim();
            d["even_dim"] = L.even_dim();
            d["violations"] = r.violations;
            return d;
        },
        py::arg("algebra"));

    m.def(
        "fold_summary",
        [](const std::string& algebra, const std::string& perm) {
            Folding F = fold(load_algebra(algebra), perm);
            py::dict d;
            d["fixed_type"] = F.type.label;
            d["fixed_dim"] = F.fixed.dim();
            d["grading_dims"] = F.dec.dims();
            d["order"] = F.nu.order;
            return d;
        },
        py::arg("algebra"), py::arg("perm") = "id");

    m.def("folding_table", [] {
        py::list out;
        for (const auto& r : emit_folding_table()) {
            py::dict d;
            d["source"] = r.source;
            d["perm"] = r.perm;
            d["computed"] = r.computed;
            d["expected"] = r.expected;
            d["fixed_dim"] = r.fixed_dim;
            d["grading_dims"] = r.dims;
            d["pass"] = r.pass;
            out.append(d);
        }
        return out;
    });

    m.def(
        "weyl",
        [](const std::string& algebra, const std::vector<long>& lam, const std::string& perm, int N, int gamma, int cap) {
            auto E = map_algebra(algebra, perm, N, gamma);
            const SuperAlgebra& fixed = E->fold->fixed;
            std::vector<Rat> vals(lam.begin(), lam.end());
            Weight w = lambda_from_coroots(fixed, E->frs, E->ftd, vals);
            WeylModule W = build_global_weyl(*E, w, cap);
            py::dict d;
            d["acting"] = W.acting;
            d["dim"] = W.dim();
            d["converged"] = W.cert.converged;
            d["character"] = W.character();
            d["warnings"] = W.cert.warnings;
            if (W.cert.converged) d["hw_algebra_dim"] = highest_weight_algebra(*E, W).dim();
            return d;
        },
        py::arg("algebra"), py::arg("lam"), py::arg("perm") = "id", py::arg("N") = 1, py::arg("gamma") = 0,
        py::arg("cap") = 8);

    m.def(
        "garland",
        [](const std::string& algebra, int r, const std::string& perm, int N) {
            auto E = map_algebra(algebra, perm, N, 0);
            GarlandRun g = garland_report(*E, r);
            return py::make_tuple(g.all_members, g.text);
        },
        py::arg("algebra"), py::arg("r"), py::arg("perm") = "id", py::arg("N") = 4);
}
