#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>

#include "lcdc/census.hpp"

namespace py = pybind11;

namespace {

lcdc::PrimePower parse_q(std::int64_t q) {
    if (q < 2) throw lcdc::ValidationError("q must be at least 2");
    std::int64_t p = q;
    for (std::int64_t c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    int e = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw lcdc::ValidationError("q must be a prime power, got " + std::to_string(q));
    return lcdc::make_prime_power(p, e);
}

lcdc::CensusRequest make_request(std::int64_t q, int t, std::int64_t n, const std::string& form) {
    if (t < 1) throw lcdc::ValidationError("t must be positive");
    if (n < 1) throw lcdc::ValidationError("n must be positive");
    const auto delta = lcdc::parse_form(form);
    if (!delta) throw lcdc::ValidationError("unknown form: " + form);
    return {parse_q(q), t, n, *delta};
}

// Route exact values through their decimal form so Python gets a true int.
py::object to_py_int(const lcdc::BigInt& v) {
    return py::module_::import("builtins").attr("int")(lcdc::to_decimal(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact census of complementary-dual cyclic additive codes";

    py::register_exception<lcdc::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<lcdc::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<lcdc::WorkBoundExceeded>(m, "WorkBoundExceeded", PyExc_RuntimeError);

    m.def(
        "gauss_binom",
        [](int a, int b, std::int64_t q) { return to_py_int(lcdc::gauss_binom(a, b, q)); },
        py::arg("a"), py::arg("b"), py::arg("q"),
        "Number of b-dimensional subspaces of an a-dimensional space over GF(q).");

    m.def(
        "total_count",
        [](std::int64_t q, int t, std::int64_t n, const std::string& form) {
            const lcdc::CensusRequest req = make_request(q, t, n, form);
            return to_py_int(lcdc::total_count(req.q, req.t, req.n, req.delta));
        },
        py::arg("q"), py::arg("t"), py::arg("n"), py::arg("form"),
        "Closed-form number of complementary-dual cyclic codes of length n.");

    m.def(
        "enumerate_lcd_count",
        [](std::int64_t q, int t, std::int64_t n, const std::string& form,
           std::int64_t work_bound) {
            return to_py_int(lcdc::enumerate_lcd_count(make_request(q, t, n, form), work_bound));
        },
        py::arg("q"), py::arg("t"), py::arg("n"), py::arg("form"),
        py::arg("work_bound") = 10'000'000,
        "Same count by exhaustive enumeration; raises WorkBoundExceeded when "
        "the subspace-choice estimate passes work_bound.");

    m.def(
        "census",
        [](std::int64_t q, int t, std::int64_t n, const std::string& form) {
            const lcdc::CountReport rep = lcdc::census(make_request(q, t, n, form));
            py::dict out;
            out["q"] = q;
            out["t"] = t;
            out["n"] = n;
            out["form"] = lcdc::form_name(rep.request.delta);
            out["s"] = rep.table.reps.size();
            py::dict cls;
            cls["I"] = rep.cls.special;
            cls["F"] = rep.cls.fixed;
            cls["M"] = rep.cls.paired;
            out["classification"] = cls;
            out["r_factor"] = to_py_int(rep.r.total);
            out["r_exponent"] = rep.r_exponent;
            py::list factors;
            for (const auto& f : rep.factors) {
                py::dict entry;
                entry["index"] = f.index;
                entry["kind"] = f.is_pair ? "pair" : "unitary";
                entry["d"] = f.d;
                entry["value"] = to_py_int(f.breakdown.total);
                factors.append(entry);
            }
            out["factors"] = factors;
            out["total"] = to_py_int(rep.total);
            return out;
        },
        py::arg("q"), py::arg("t"), py::arg("n"), py::arg("form"),
        "Full census report: coset classification and per-factor counts.");
}
