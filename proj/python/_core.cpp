#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "ulrich/beilinson.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/hom_ext.hpp"
#include "ulrich/io.hpp"
#include "ulrich/rel_diff.hpp"
#include "ulrich/verify.hpp"

namespace py = pybind11;
using namespace ulrich;

namespace {

py::object interval_obj(const Interval& iv)
{
    if (iv.is_exact())
        return py::int_(iv.lo);
    return py::make_tuple(iv.lo, iv.hi >= kUnbounded ? py::object(py::none()) : py::object(py::int_(iv.hi)));
}

py::list table_obj(const CohomTable& t)
{
    py::list out;
    for (const auto& iv : t.h)
        out.append(interval_obj(iv));
    return out;
}

Atom atom_of(const ScrollData& s, int p, Int h, Int f)
{
    auto a = make_atom(s, p, {h, f});
    if (!a)
        throw InvalidInput("p outside 0..n gives the zero sheaf");
    return *a;
}

py::dict type_dict(const TypeInfo& info)
{
    py::dict d;
    d["type"] = info.type.a;
    d["rank"] = info.rank;
    d["c1"] = py::make_tuple(info.c1.h, info.c1.f);
    d["h0"] = info.h0;
    d["slope"] = slope_string(info.slope);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cohomology, Beilinson tables and Ulrich types on rational normal scrolls.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<Indeterminate>(m, "Indeterminate", base.ptr());
    py::register_exception<NotUlrich>(m, "NotUlrich", base.ptr());

    py::class_<ScrollData>(m, "Scroll")
        .def(py::init([](std::vector<Int> degrees) { return ScrollData::make(std::move(degrees)); }))
        .def_property_readonly("degrees", [](const ScrollData& s) { return s.degrees(); })
        .def_property_readonly("n", &ScrollData::n)
        .def_property_readonly("c", &ScrollData::c)
        .def_property_readonly("is_segre", &ScrollData::is_segre)
        .def("__repr__", [](const ScrollData& s) {
            std::string out = "Scroll(";
            for (std::size_t i = 0; i < s.degrees().size(); ++i)
                out += (i ? "," : "") + std::to_string(s.degrees()[i]);
            return out + ")";
        });

    m.def("from_pair", [](Int u, Int v) {
        Divisor d = from_pair(u, v);
        return py::make_tuple(d.h, d.f);
    });
    m.def("line_cohomology", [](const ScrollData& s, Int h, Int f) { return table_obj(line_cohomology(s, {h, f})); },
          py::arg("scroll"), py::arg("h"), py::arg("f"));
    m.def("omega_cohomology",
          [](const ScrollData& s, int p, Int h, Int f) { return table_obj(omega_cohomology(s, p, {h, f})); },
          py::arg("scroll"), py::arg("p"), py::arg("h"), py::arg("f"));
    m.def("pn_omega_cohomology", [](int n, int p, Int k) { return table_obj(pn_omega_cohomology(n, p, k)); });
    m.def(
        "hom_bounds",
        [](const ScrollData& s, int p, Int h, Int f, int q, Int h2, Int f2) {
            ExtTable e = hom_upper_bound(s, atom_of(s, p, h, f), atom_of(s, q, h2, f2));
            py::list out;
            for (int k = 0; k <= e.last(); ++k) {
                Interval iv = e.at(k);
                out.append(py::make_tuple(iv.lo, iv.hi >= kUnbounded ? py::object(py::none()) : py::object(py::int_(iv.hi))));
            }
            return out;
        },
        "[(lo, hi)] for Ext^k(Omega^p(hH+fF), Omega^q(h2 H+f2 F)), k = 0..n+1");
    m.def("segre_ext1", &segre_ext1);
    m.def("describe_type", [](const ScrollData& s, std::vector<Int> a) { return type_dict(describe_type(s, {a})); });
    m.def("classify_type", [](const ScrollData& s, std::vector<Int> a) {
        return classify(s, block_sum(s, {std::move(a)})).a;
    });
    m.def("enumerate_types", [](const ScrollData& s, Int rank) {
        py::list out;
        for (const auto& t : enumerate_types_by_rank(s, rank))
            out.append(type_dict(t));
        return out;
    });
    m.def("beilinson_table", [](const ScrollData& s, std::vector<Int> a) {
        return beilinson_table(s, block_sum(s, {std::move(a)}).twisted({-1, 0})).entries;
    });
    m.def("verify", [](const ScrollData& s, const std::string& suite) {
        SuiteReport r;
        if (suite == "duality")
            r = duality_suite(s);
        else if (suite == "blocks")
            r = blocks_suite(s);
        else if (suite == "homvanish")
            r = homvanish_suite(s);
        else if (suite == "chi-oracle")
            r = chi_oracle_suite(s);
        else
            throw InvalidInput("unknown suite '" + suite + "'");
        return py::make_tuple(r.pass(), r.checks, r.failures);
    });
    m.def("veronese_table", [](int dim, int p, Int k) { return veronese_table(dim, p, k).entries; });
    m.def("run_cli", [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = cli::parse_and_dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
