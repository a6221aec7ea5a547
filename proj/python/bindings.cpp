#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairsec/dickman.hpp"
#include "pairsec/pairing_cost.hpp"
#include "pairsec/report.hpp"
#include "pairsec/security.hpp"

namespace py = pybind11;
using namespace pairsec;

namespace {

SecurityOptions make_options(const std::string& model, long samples, uint64_t seed,
                             bool strict) {
    SecurityOptions o;
    o.model = ModelParams::by_name(model);
    o.grid.samples = samples;
    o.seed = seed;
    o.strict_setup = strict;
    return o;
}

py::dict point_dict(const CostPoint& c) {
    py::dict d;
    d["A"] = c.A;
    d["log2_B"] = c.log2B;
    d["log2_N1"] = c.log2_n1;
    d["log2_N2"] = c.log2_n2;
    d["log2_rho1"] = c.log2_rho1;
    d["log2_rho2"] = c.log2_rho2;
    d["log2_space"] = c.log2_space;
    d["log2_relations"] = c.log2_relations;
    d["log2_factor_base"] = c.log2_factor_base;
    d["log2_sieve"] = c.log2_sieve;
    d["log2_linalg"] = c.log2_linalg;
    d["log2_total"] = c.log2_total;
    d["feasible"] = c.feasible;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pairsec, m) {
    m.doc() = "field- and curve-side security estimates for pairing-friendly curves";

    m.def("list_curves", [] {
        std::vector<std::string> out;
        for (const auto& c : Registry::builtin().curves()) out.push_back(c.name);
        return out;
    });

    m.def("list_families", [] {
        std::vector<std::string> out;
        for (const auto& f : Registry::builtin().families()) out.push_back(f.name);
        return out;
    });

    m.def(
        "estimate",
        [](const std::string& curve, const std::string& model, long samples,
           uint64_t seed, bool strict) {
            auto prof = profile(Registry::builtin().curve(curve),
                                make_options(model, samples, seed, strict));
            py::dict d;
            d["curve"] = prof.curve.name;
            d["family"] = prof.curve.family;
            d["p_bits"] = prof.curve.p_bits;
            d["r_bits"] = prof.curve.r_bits;
            d["field_bits"] = prof.field_bits;
            d["curve_bits"] = prof.curve_bits;
            d["security_bits"] = prof.security_bits;
            d["h_irreducible_mod_p"] = prof.h_irreducible_mod_p;
            d["extrapolated_recipe"] = prof.extrapolated_recipe;
            d["field"] = point_dict(prof.field);
            return d;
        },
        py::arg("curve"), py::arg("model") = "BD", py::arg("samples") = 25600,
        py::arg("seed") = 1, py::arg("strict") = false);

    m.def(
        "min_p_for_level",
        [](const std::string& family, double level, const std::string& model,
           long samples, uint64_t seed) -> py::object {
            auto p = min_p_for_level(family, level, make_options(model, samples, seed, false));
            return p ? py::cast(*p) : py::none();
        },
        py::arg("family"), py::arg("level"), py::arg("model") = "BD",
        py::arg("samples") = 640, py::arg("seed") = 1);

    m.def("log2_rho", [](double u) { return log2_rho(u); }, py::arg("u"));

    m.def("curve_side_bits_from_r_bits", &curve_side_bits_from_r_bits, py::arg("r_bits"));

    m.def(
        "pairing_cost",
        [](const std::string& family, int p_bits) { return pairing_cost(family, p_bits); },
        py::arg("family"), py::arg("p_bits"));

    m.def(
        "asymptotic_bits",
        [](double log2_q, double c, double epsilon) {
            return asymptotic_bits(log2_q, c, epsilon);
        },
        py::arg("log2_q"), py::arg("c"), py::arg("epsilon") = 0.0);

    m.def("asymptotic_variants", [] {
        py::list out;
        for (const auto& v : asymptotic_variants()) {
            py::dict d;
            d["name"] = v.name;
            d["c"] = v.c;
            d["epsilon"] = v.epsilon ? py::object(py::cast(*v.epsilon)) : py::none();
            d["note"] = v.note;
            out.append(d);
        }
        return out;
    });

    m.attr("schema_version") = kSchemaVersion;
}
