#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "signedperm/bruhat.hpp"
#include "signedperm/cli.hpp"
#include "signedperm/diagram.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"
#include "signedperm/permutation.hpp"
#include "signedperm/triple.hpp"
#include "signedperm/verify.hpp"

namespace py = pybind11;
using namespace signedperm;

namespace {

SignedPermutation to_signed(const std::vector<int>& window) { return SignedPermutation(window); }

std::vector<int> window_of(const SignedPermutation& w) { return {w.window().begin(), w.window().end()}; }

BoardKind kind_of(const std::string& name) { return parse_board_kind(name); }

} // namespace

PYBIND11_MODULE(_signedperm, m) {
    m.doc() = "Signed permutations: Bruhat order, diagrams and essential sets";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidTriple>(m, "InvalidTriple", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<NoSupremum>(m, "NoSupremum", PyExc_RuntimeError);

    py::class_<SignedPermutation>(m, "SignedPermutation")
        .def(py::init(&to_signed), py::arg("window"))
        .def_static("parse", &parse_signed, py::arg("text"))
        .def_static("identity", &SignedPermutation::identity, py::arg("n"))
        .def_static("longest", &SignedPermutation::longest, py::arg("n"))
        .def_property_readonly("window", &window_of)
        .def_property_readonly("n", &SignedPermutation::size)
        .def("length", &SignedPermutation::length)
        .def("inverse", &SignedPermutation::inverse)
        .def("padded", &SignedPermutation::padded, py::arg("n"))
        .def("is_bigrassmannian", [](const SignedPermutation& w) { return is_bigrassmannian(w); })
        .def("descents", [](const SignedPermutation& w) { return descents(w); })
        .def("__call__", [](const SignedPermutation& w, int i) { return w(i); })
        .def("__mul__", [](const SignedPermutation& a, const SignedPermutation& b) { return compose(a, b); })
        .def("__le__", [](const SignedPermutation& a, const SignedPermutation& b) { return leq_B(a, b); })
        .def("__eq__", [](const SignedPermutation& a, const SignedPermutation& b) { return a == b; })
        .def("__hash__", [](const SignedPermutation& w) { return py::hash(py::tuple(py::cast(window_of(w)))); })
        .def("__str__", [](const SignedPermutation& w) { return w.str(); })
        .def("__repr__", [](const SignedPermutation& w) { return "SignedPermutation('" + w.str() + "')"; });

    py::enum_<Flavor>(m, "Flavor")
        .value("A_CENTERED", Flavor::ACentered)
        .value("A_SMALL", Flavor::ASmall)
        .value("B", Flavor::B);

    py::class_<BasicTriple>(m, "BasicTriple")
        .def(py::init([](int k, int p, int q, Flavor f) { return BasicTriple{k, p, q, f}; }), py::arg("k"), py::arg("p"),
             py::arg("q"), py::arg("flavor") = Flavor::B)
        .def_readonly("k", &BasicTriple::k)
        .def_readonly("p", &BasicTriple::p)
        .def_readonly("q", &BasicTriple::q)
        .def_readonly("flavor", &BasicTriple::flavor)
        .def("valid", &BasicTriple::valid)
        .def("as_tuple", [](const BasicTriple& t) { return py::make_tuple(t.k, t.p, t.q); })
        .def("__eq__", [](const BasicTriple& a, const BasicTriple& b) { return a == b; })
        .def("__hash__", [](const BasicTriple& t) { return py::hash(py::make_tuple(t.k, t.p, t.q, int(t.flavor))); })
        .def("__repr__", [](const BasicTriple& t) { return "BasicTriple" + t.str(); });

    m.def("rank", &rank_B, py::arg("w"), py::arg("p"), py::arg("q"));
    m.def("leq", &leq_B, py::arg("w1"), py::arg("w2"));
    m.def("enumerate_W", [](int n) { return enumerate_W(n); }, py::arg("n"));
    m.def("basic_signed", &basic_signed, py::arg("triple"));
    m.def("basic_inverse", &basic_inverse, py::arg("triple"));
    m.def("n_min", &n_min, py::arg("triple"));
    m.def("enumerate_basic", &enumerate_basic, py::arg("n"));
    m.def("count_basic", &count_basic, py::arg("n"));
    m.def("essential_set", [](const SignedPermutation& w, const std::string& kind) { return essential_set(w, kind_of(kind)); },
          py::arg("w"), py::arg("kind") = "b");
    m.def("maximal_basic_below", py::overload_cast<const SignedPermutation&>(&maximal_basic_below), py::arg("w"));
    m.def("supremum", [](const std::vector<SignedPermutation>& elems, int n) { return supremum(elems, n).value; },
          py::arg("elements"), py::arg("n"));
    m.def("minimal_not_below", py::overload_cast<const SignedPermutation&>(&minimal_not_below), py::arg("w"));
    m.def("dissecting_u", &dissecting_u, py::arg("triple"), py::arg("n"));
    m.def(
        "render",
        [](const SignedPermutation& w, const std::string& kind, const std::string& format) {
            const BoardKind k = kind_of(kind);
            const RenderFormat f = parse_render_format(format);
            return k == BoardKind::A ? render(Board(iota(w)), f) : render(Board(w, k), f);
        },
        py::arg("w"), py::arg("kind") = "b", py::arg("format") = "ascii");

    m.def("suite_names", &suite_names);
    m.def(
        "verify",
        [](const std::string& suite, int n, int samples, std::uint64_t seed, std::uint32_t modulus) {
            VerifyOptions o;
            o.n = n;
            o.samples = samples;
            o.seed = seed;
            o.modulus = modulus;
            py::list out;
            for (const auto& r : run_suite(suite, o)) {
                py::dict d;
                d["name"] = r.name;
                d["ok"] = r.ok();
                d["checks"] = r.checks;
                d["failures"] = r.failures;
                d["messages"] = r.messages;
                d["findings"] = r.findings;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("n") = 4, py::arg("samples") = 20, py::arg("seed") = 0, py::arg("modulus") = 10007);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
