// pybind11 bindings for the main operations of the toolkit.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "anzb/bounds.hpp"
#include "anzb/claims.hpp"
#include "anzb/digamma.hpp"
#include "anzb/explicit_formula.hpp"
#include "anzb/extremal.hpp"
#include "anzb/mangoldt.hpp"
#include "anzb/zeros.hpp"
#include "anzb/zeta.hpp"

namespace py = pybind11;
using namespace anzb;

namespace {

BoundId bound_id_from_name(const std::string& name) {
    for (int i = 0; i < 9; ++i) {
        auto id = static_cast<BoundId>(i);
        if (name == bound_name(id)) return id;
    }
    throw DomainError("unknown bound name: " + name);
}

ExtremalParams params(double delta, const std::string& sign) {
    if (sign != "plus" && sign != "minus")
        throw DomainError("sign must be 'plus' or 'minus'");
    return {delta, sign == "plus" ? Sign::plus : Sign::minus};
}

py::dict report_dict(const ClaimReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["description"] = r.description;
    d["verdict"] = verdict_name(r.verdict);
    d["computed_lo"] = r.computed.lo_d();
    d["computed_hi"] = r.computed.hi_d();
    d["asserted"] = r.asserted;
    d["margin"] = r.margin;
    d["precision_bits"] = static_cast<long>(r.precision_bits);
    return d;
}

}  // namespace

PYBIND11_MODULE(_anzb, m) {
    m.doc() = "certified evaluation toolkit for explicit 1-line zeta bounds";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<DataError>(m, "DataError");
    py::register_exception<NoCrossing>(m, "NoCrossing");

    m.def(
        "eval_bound",
        [](const std::string& name, double t) { return eval_bound(bound_id_from_name(name), t); },
        py::arg("name"), py::arg("t"),
        "closed-form bound value at height t (DomainError for t <= e)");
    m.def(
        "bound_threshold",
        [](const std::string& name) { return bound_threshold(bound_id_from_name(name)); },
        py::arg("name"));
    m.def(
        "crossover",
        [](const std::string& a, const std::string& b, double t_lo, double t_hi, double tol) {
            return crossover(bound_id_from_name(a), bound_id_from_name(b), t_lo, t_hi, tol);
        },
        py::arg("a"), py::arg("b"), py::arg("t_lo"), py::arg("t_hi"), py::arg("tol") = 1e-9);

    m.def(
        "run_claims",
        [](const std::string& filter, long precision, long max_precision, int64_t sieve_limit) {
            ClaimOptions opts;
            opts.precision = precision;
            opts.max_precision = max_precision;
            opts.sieve_limit = sieve_limit;
            py::list out;
            for (const auto& r : run_all(filter, opts)) out.append(report_dict(r));
            return out;
        },
        py::arg("filter") = "", py::arg("precision") = 128, py::arg("max_precision") = 1024,
        py::arg("sieve_limit") = 10000000,
        "run catalogued certified checks; returns one dict per claim");

    m.def(
        "zeta_1line",
        [](double t) {
            auto z = zeta_1line(t);
            return py::make_tuple(z.value, z.err);
        },
        py::arg("t"), "zeta(1+it) as (complex value, absolute error radius)");
    m.def(
        "zeta_logderiv_1line",
        [](double t) {
            auto z = zeta_logderiv_1line(t);
            return py::make_tuple(z.value, z.err);
        },
        py::arg("t"), "zeta'/zeta(1+it) as (complex value, absolute error radius)");
    m.def(
        "re_digamma",
        [](std::complex<double> z) {
            auto e = re_digamma(z);
            return py::make_tuple(e.value, e.err);
        },
        py::arg("z"), "Re Gamma'/Gamma(z) as (value, error radius)");

    m.def("h_poisson", py::overload_cast<double>(&h_poisson), py::arg("x"),
          "(1/2)/(1/4 + x^2)");
    m.def(
        "h_extremal",
        [](double delta, const std::string& sign, double x) {
            return h_extremal(params(delta, sign), x);
        },
        py::arg("delta"), py::arg("sign"), py::arg("x"),
        "extremal majorant ('plus') / minorant ('minus') at x");
    m.def(
        "ft_extremal",
        [](double delta, const std::string& sign, double xi) {
            return ft_extremal(params(delta, sign), xi);
        },
        py::arg("delta"), py::arg("sign"), py::arg("xi"));

    m.def(
        "psi",
        [](double x, int64_t limit) { return MangoldtTable::build(limit).psi(x); },
        py::arg("x"), py::arg("limit") = 1000000, "Chebyshev psi(x) from a fresh sieve");

    py::class_<ZeroTable>(m, "ZeroTable")
        .def_static("load_file", &ZeroTable::load_file, py::arg("path"),
                    py::arg("accuracy") = 2e-9)
        .def_property_readonly("count", &ZeroTable::count)
        .def_property_readonly("max_height", &ZeroTable::max_height)
        .def_property_readonly("ordinates", &ZeroTable::ordinates);

    m.def(
        "zero_sum_poisson",
        [](double t, const ZeroTable& table) {
            auto e = zero_sum(poisson_sum_fn(), t, table);
            return py::make_tuple(e.value, e.err);
        },
        py::arg("t"), py::arg("table"),
        "sum of the Poisson kernel over zero ordinates, with tail budget");
    m.def(
        "gw_reconcile",
        [](double delta, const std::string& sign, double t, const ZeroTable& table,
           int64_t sieve_limit, double quad_tol) {
            MangoldtTable primes = MangoldtTable::build(sieve_limit);
            GwResult r = gw_reconcile(params(delta, sign), t, table, primes, quad_tol);
            py::dict d;
            d["zero_side"] = r.cmp.lhs.value;
            d["zero_side_err"] = r.cmp.lhs.err;
            d["arch_prime_side"] = r.cmp.rhs.value;
            d["arch_prime_side_err"] = r.cmp.rhs.err;
            d["budget"] = r.cmp.budget();
            d["consistent"] = r.cmp.verdict == CompVerdict::consistent && r.arch_consistent;
            return d;
        },
        py::arg("delta"), py::arg("sign"), py::arg("t"), py::arg("table"),
        py::arg("sieve_limit") = 100000, py::arg("quad_tol") = 1e-8,
        "both sides of the explicit formula for the extremal test function");

    m.def(
        "bounds_csv",
        [](std::vector<double> ts, bool with_empirical) {
            SweepConfig cfg;
            cfg.with_empirical = with_empirical;
            std::ostringstream out;
            write_csv(out, empirical_sweep(std::move(ts), cfg));
            return out.str();
        },
        py::arg("ts"), py::arg("with_empirical") = false,
        "CSV sweep of the bounds at the given heights");
}
