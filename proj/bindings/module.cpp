#include "padspec/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

using namespace padspec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact subsidiary radii and Berkovich spectra of p-adic differential operators.";

    m.def(
        "run_job",
        [](const std::string& job, bool pretty) {
            int code = 0;
            std::string out = run_job_string(job, pretty, code);
            return py::make_tuple(out, code);
        },
        py::arg("job"), py::arg("pretty") = false,
        "Run one JSON job document; returns (output_json, exit_code).");

    m.def(
        "omega_exponent",
        [](long long p) { return rat_to_string(omega(Int(p)).exponent()); },
        py::arg("p"), "Exponent q of omega = p^{-q} = |p|^{1/(p-1)}.");

    m.def(
        "delta",
        [](long long p, const std::string& scalar) {
            int code = 0;
            json job;
            job["p"] = p;
            job["command"] = "delta";
            job["payload"] = {{"a", scalar}};
            std::string out = run_job_string(job.dump(), false, code);
            if (code != 0) throw std::runtime_error(out);
            return json::parse(out).at("delta").get<std::string>();
        },
        py::arg("p"), py::arg("a"), "Distance from a scalar to the closure of Z, as 'p^(-q)' or '0'.");

    m.def(
        "rank_one_radius",
        [](long long p, const std::string& a, const std::string& rho) {
            Scalar s = parse_scalar(json(a), Int(p));
            auto r = rat_from_string(rho);
            if (!r) throw std::invalid_argument("malformed rho");
            return rank_one_radius(s, *r).to_string();
        },
        py::arg("p"), py::arg("a"), py::arg("rho"),
        "Radius of convergence of (H(x_{0,r}), S d/dS - a) at r = p^{-rho}.");

    m.attr("__version__") = "0.1.0";
}
