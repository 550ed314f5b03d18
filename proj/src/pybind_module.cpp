#include "mincone/acceptance.hpp"
#include "mincone/classify.hpp"
#include "mincone/cones.hpp"
#include "mincone/diffgeom.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mincone;

namespace {

CliffordSystem build_system(int q, int k_plus, int k_minus) {
    if (k_plus == 1 && k_minus == 0) return irreducible_system(q);
    return direct_sum(q, k_plus, k_minus);
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict d;
    d["eigenfunction"] = rep.is_eigenfunction;
    d["weight"] = format_poly(rep.weight);
    d["radial"] = rep.is_radial;
    d["radial_constant"] = rep.radial_constant
        ? py::object(py::str(rep.radial_constant->to_string())) : py::object(py::none());
    d["tau"] = rep.tau ? py::object(py::str(rep.tau->to_string())) : py::object(py::none());
    d["harmonic"] = rep.is_harmonic;
    d["witness"] = rep.witness.empty() ? py::object(py::none()) : py::object(py::str(rep.witness));
    return d;
}

} // namespace

PYBIND11_MODULE(_mincone, m) {
    m.doc() = "Exact symbolic workbench for algebraic minimal cones";

    m.def("verify", [](const std::string& poly) {
        return report_dict(verify_eigenfunction(parse_poly(poly, -1)));
    }, py::arg("polynomial"), "Verify the eigenfunction property of a polynomial in the text grammar.");

    m.def("clifford_cubic", [](int q, int k_plus, int k_minus) {
        return format_poly(clifford_cubic(build_system(q, k_plus, k_minus)).polynomial);
    }, py::arg("q"), py::arg("k_plus") = 1, py::arg("k_minus") = 0);

    m.def("quadric_cone", [](int p, int q) {
        return format_poly(quadric_cone(p, q).polynomial);
    }, py::arg("p"), py::arg("q"));

    m.def("determinant_cone", [](int m_) {
        return format_poly(determinant_cone(m_).polynomial);
    }, py::arg("m"));

    m.def("det_weight_formula", [](int m_) {
        return format_poly(det_weight_formula(m_));
    }, py::arg("m"));

    m.def("cartan_cubic", [](int d) {
        return format_poly(cartan_cubic(d).polynomial);
    }, py::arg("d"));

    m.def("hsiang_cubic", [] { return format_poly(hsiang_cubic().polynomial); });
    m.def("reducible_example", [] { return format_poly(reducible_example().polynomial); });

    m.def("fkm_quartic", [](int q, int k_plus, int k_minus) {
        return format_poly(fkm_quartic(build_system(q, k_plus, k_minus)).polynomial);
    }, py::arg("q"), py::arg("k_plus") = 1, py::arg("k_minus") = 0);

    m.def("irreducibility_certificate", [](int q, int k_plus, int k_minus) {
        auto cert = irreducibility_certificate(build_system(q, k_plus, k_minus));
        py::dict d;
        d["pass"] = cert.pass;
        d["discriminant"] = format_poly(cert.discriminant);
        d["diagnostic"] = cert.diagnostic;
        return d;
    }, py::arg("q"), py::arg("k_plus") = 1, py::arg("k_minus") = 0);

    m.def("hurwitz_radon", &hurwitz_radon, py::arg("m"));
    m.def("delta", &delta, py::arg("q"));
    m.def("is_realizable", &is_realizable, py::arg("n"));
    m.def("admissible_pairs", &admissible_pairs, py::arg("n"));
    m.def("realizability_scan", &realizability_scan, py::arg("n_min"), py::arg("n_max"));

    m.def("congruence_class_count", [](long n) {
        auto rep = congruence_class_count(n);
        py::list classes;
        for (const auto& c : rep.class_list)
            classes.append(py::make_tuple(c.q, c.m, c.k_plus, c.k_minus));
        py::dict d;
        d["n"] = rep.n;
        d["realizable"] = rep.realizable;
        d["class_count"] = rep.class_count;
        d["pairs"] = rep.admissible_pairs;
        d["classes"] = classes;
        return d;
    }, py::arg("n"));

    m.def("system_text", [](int q, int k_plus, int k_minus) {
        return format_system(build_system(q, k_plus, k_minus));
    }, py::arg("q"), py::arg("k_plus") = 1, py::arg("k_minus") = 0);

    m.def("system_invariants", [](const std::string& text) {
        std::istringstream in(text);
        auto s = parse_system(in);
        auto check = verify_system(s);
        auto inv = system_invariants(s);
        py::dict d;
        d["q"] = inv.q;
        d["m"] = inv.m;
        d["valid"] = check.pass;
        d["omega_trace_abs"] = inv.omega_trace_abs
            ? py::object(py::str(inv.omega_trace_abs->to_string())) : py::object(py::none());
        return d;
    }, py::arg("text"));

    m.def("selftest", [](double budget_seconds) {
        auto results = run_acceptance(budget_seconds);
        py::list out;
        for (const auto& r : results) {
            py::dict d;
            d["criterion"] = r.id;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("budget_seconds") = 600.0);
}
