// Python bindings for the core operations. Arbitrary-precision values cross
// the boundary as native Python ints.

#include "extq/cohomology.hpp"
#include "extq/ktheory.hpp"
#include "extq/labels.hpp"
#include "extq/quotient.hpp"
#include "extq/version.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <string>

namespace py = pybind11;
using namespace extq;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Int>& xs) {
    py::list out;
    for (const Int& x : xs)
        out.append(to_py(x));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants of cyclic quotients of the projective torus";
    m.attr("__version__") = kVersion;

    py::register_exception<BoundExceeded>(m, "BoundExceeded");

    m.def("gcd", &extq::gcd, py::arg("a"), py::arg("b"));
    m.def("totient", &totient, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));
    m.def("odd_divisors", &odd_divisors, py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "binomial", [](std::uint64_t n, std::uint64_t j) { return to_py(binomial(n, j)); },
        py::arg("n"), py::arg("j"));

    py::class_<RationalAngle>(m, "RationalAngle",
                              "Element of Q/Z as a reduced fraction in [0, 1)")
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
        .def_static("parse", &RationalAngle::parse, py::arg("text"))
        .def_property_readonly("num", [](const RationalAngle& a) { return to_py(a.num()); })
        .def_property_readonly("den", [](const RationalAngle& a) { return to_py(a.den()); })
        .def_property_readonly("order", [](const RationalAngle& a) { return to_py(a.order()); })
        .def("is_zero", &RationalAngle::is_zero)
        .def("scaled", [](const RationalAngle& a, long long m) { return a.scaled(m); },
             py::arg("m"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const RationalAngle& a) { return py::hash(py::str(a.str())); })
        .def("__str__", &RationalAngle::str)
        .def("__repr__",
             [](const RationalAngle& a) { return "RationalAngle(" + a.str() + ")"; });

    py::class_<Isotropy>(m, "Isotropy")
        .def_readonly("order", &Isotropy::order)
        .def_readonly("generator", &Isotropy::generator)
        .def("__repr__", [](const Isotropy& iso) {
            return "Isotropy(order=" + std::to_string(iso.order) +
                   ", generator=" + std::to_string(iso.generator) + ")";
        });

    py::class_<ProjectivePoint>(m, "ProjectivePoint",
                                "Point of the projective torus in normalized coordinates")
        .def(py::init([](const std::string& spec) { return parse_point(spec); }),
             py::arg("spec"))
        .def_static("normalize", &ProjectivePoint::normalize, py::arg("raw"))
        .def_property_readonly("n", &ProjectivePoint::n)
        .def_property_readonly("angles", &ProjectivePoint::angles)
        .def("shifted", &ProjectivePoint::shifted, py::arg("k"))
        .def("membership", &ProjectivePoint::membership, py::arg("k"))
        .def("isotropy", &ProjectivePoint::isotropy)
        .def("canonical", &ProjectivePoint::canonical)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const ProjectivePoint& p) { return py::hash(py::str(p.str())); })
        .def("__str__", &ProjectivePoint::str)
        .def("__repr__",
             [](const ProjectivePoint& p) { return "ProjectivePoint('" + p.str() + "')"; });

    py::class_<ShiftElement>(m, "ShiftElement", "The element gamma^k of Z/nZ")
        .def(py::init<unsigned, unsigned>(), py::arg("n"), py::arg("k"))
        .def_readonly("n", &ShiftElement::n)
        .def_readonly("k", &ShiftElement::k)
        .def("compose", &ShiftElement::compose, py::arg("other"))
        .def(py::self == py::self)
        .def("__repr__", [](const ShiftElement& e) {
            return "ShiftElement(n=" + std::to_string(e.n) + ", k=" + std::to_string(e.k) + ")";
        });

    m.def("act", &act, py::arg("e"), py::arg("p"));

    py::class_<ExtQuotPoint>(m, "ExtQuotPoint",
                             "Point of the extended quotient: (point, fixing shift)")
        .def(py::init<ProjectivePoint, unsigned>(), py::arg("point"), py::arg("k"))
        .def(py::init<ProjectivePoint, ShiftElement>(), py::arg("point"), py::arg("element"))
        .def_readonly("point", &ExtQuotPoint::point)
        .def_readonly("element", &ExtQuotPoint::element)
        .def_property_readonly("k", &ExtQuotPoint::k);

    py::class_<Component>(m, "Component")
        .def(py::init([](unsigned n, unsigned k, const RationalAngle& omega) {
                 return Component{n, k, omega};
             }),
             py::arg("n"), py::arg("k"), py::arg("omega"))
        .def_readonly("n", &Component::n)
        .def_readonly("k", &Component::k)
        .def_readonly("omega", &Component::omega)
        .def_property_readonly("d", &Component::d)
        .def_property_readonly("g", &Component::g)
        .def_property_readonly("dim", &Component::dim)
        .def("is_point", &Component::is_point)
        .def("omega_label", &Component::omega_label)
        .def(py::self == py::self)
        .def("__repr__", [](const Component& c) {
            return "Component(n=" + std::to_string(c.n) + ", k=" + std::to_string(c.k) +
                   ", omega=" + c.omega_label() + ")";
        });

    py::class_<FixedSetDescriptor>(m, "FixedSetDescriptor")
        .def_readonly("n", &FixedSetDescriptor::n)
        .def_readonly("k", &FixedSetDescriptor::k)
        .def_readonly("omega", &FixedSetDescriptor::omega)
        .def_readonly("free_indices", &FixedSetDescriptor::free_indices)
        .def_readonly("rep", &FixedSetDescriptor::rep)
        .def_readonly("power", &FixedSetDescriptor::power)
        .def("instantiate", &FixedSetDescriptor::instantiate, py::arg("free_angles"))
        .def("translate_from_untwisted", &FixedSetDescriptor::translate_from_untwisted,
             py::arg("p"));

    m.def("parse_point", &parse_point, py::arg("spec"));
    m.def("rational_lattice", &rational_lattice, py::arg("n"), py::arg("M"));
    m.def("project", &project, py::arg("x"));
    m.def("fibre_cardinality", &fibre_cardinality, py::arg("p"));
    m.def("enumerate_components", &enumerate_components, py::arg("n"));
    m.def("isolated_point_count", &isolated_point_count, py::arg("n"));
    m.def("fixed_set_descriptor", &fixed_set_descriptor, py::arg("n"), py::arg("k"),
          py::arg("omega"));

    m.def(
        "character_row",
        [](unsigned n, unsigned r) { return to_py(character_row(n, r).values); }, py::arg("n"),
        py::arg("r"));
    m.def(
        "graded_invariants", [](unsigned n) { return to_py(graded_invariants(n).dims); },
        py::arg("n"));
    m.def(
        "graded_invariants_oracle",
        [](unsigned n, unsigned bound) { return to_py(graded_invariants_oracle(n, bound).dims); },
        py::arg("n"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "betti_table", [](unsigned n) { return to_py(betti_table(n).betti); }, py::arg("n"));
    m.def(
        "total_dim", [](unsigned n) { return to_py(total_dim(n)); }, py::arg("n"));
    m.def(
        "total_dim_half", [](unsigned n) { return to_py(total_dim_half(n)); }, py::arg("n"));
    m.def(
        "reduced_invariants", [](unsigned g) { return to_py(reduced_invariants(g)); },
        py::arg("g"));
    m.def(
        "component_betti", [](const Component& c) { return to_py(component_betti(c)); },
        py::arg("c"));

    py::class_<ComponentContribution>(m, "ComponentContribution")
        .def_readonly("component", &ComponentContribution::component)
        .def_property_readonly("h_ev",
                               [](const ComponentContribution& c) { return to_py(c.h_ev); })
        .def_property_readonly("h_odd",
                               [](const ComponentContribution& c) { return to_py(c.h_odd); });

    py::class_<KRanks>(m, "KRanks")
        .def_readonly("n", &KRanks::n)
        .def_property_readonly("k0", [](const KRanks& r) { return to_py(r.k0); })
        .def_property_readonly("k1", [](const KRanks& r) { return to_py(r.k1); })
        .def_readonly("breakdown", &KRanks::breakdown)
        .def("__repr__", [](const KRanks& r) {
            return "KRanks(n=" + std::to_string(r.n) + ", k0=" + r.k0.str() +
                   ", k1=" + r.k1.str() + ")";
        });

    m.def(
        "component_contribution",
        [](const Component& c) {
            auto [ev, odd] = component_contribution(c);
            return py::make_tuple(to_py(ev), to_py(odd));
        },
        py::arg("c"));
    m.def("ktheory_ranks", &ktheory_ranks, py::arg("n"));
    m.def("prime_case_report", &prime_case_report, py::arg("ell"));

    py::class_<LocalFieldData>(m, "LocalFieldData")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("p"), py::arg("q"))
        .def_readonly("p", &LocalFieldData::p)
        .def_readonly("q", &LocalFieldData::q);

    py::class_<BernsteinPoint>(m, "BernsteinPoint")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("N"), py::arg("n"))
        .def_readonly("N", &BernsteinPoint::N)
        .def_readonly("m", &BernsteinPoint::m)
        .def_readonly("n", &BernsteinPoint::n);

    m.def(
        "admissible_n",
        [](std::uint64_t N, std::uint64_t p, std::uint64_t q) {
            return admissible_n(N, LocalFieldData(p, q));
        },
        py::arg("N"), py::arg("p"), py::arg("q"));

    py::class_<ReprLabel>(m, "ReprLabel")
        .def_readonly("orbit_rep", &ReprLabel::orbit_rep)
        .def_readonly("r", &ReprLabel::r)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const ReprLabel& l) {
            return "ReprLabel('" + l.orbit_rep.str() + "', r=" + std::to_string(l.r) + ")";
        });

    m.def("mu_label", &mu_label, py::arg("x"));
    m.def(
        "inf_ch", [](const ReprLabel& label) { return inf_ch(label); }, py::arg("label"));

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("n", &CheckReport::n)
        .def_readonly("M", &CheckReport::M)
        .def_readonly("lattice_size", &CheckReport::lattice_size)
        .def_readonly("orbit_count", &CheckReport::orbit_count)
        .def_readonly("label_count", &CheckReport::label_count)
        .def_readonly("pass_", &CheckReport::pass)
        .def_readonly("witness", &CheckReport::witness)
        .def("__bool__", [](const CheckReport& r) { return r.pass; })
        .def("__repr__", [](const CheckReport& r) {
            return "CheckReport(n=" + std::to_string(r.n) + ", M=" + std::to_string(r.M) +
                   ", pass=" + (r.pass ? "True" : "False") + ")";
        });

    m.def("check_square", &check_square, py::arg("n"), py::arg("M"));
    m.def("elliptic_fixed_points", &elliptic_fixed_points, py::arg("ell"));
}
