#include "liecohom/catalog.hpp"
#include "liecohom/claims.hpp"
#include "liecohom/factorization.hpp"
#include "liecohom/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace liecohom;

namespace {

// Rationals cross the boundary as fractions.Fraction; int, str and Fraction
// are accepted on the way in.
py::object to_py(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.str());
}

Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::list to_py(const Vector& v) {
    py::list out;
    for (const auto& q : v) out.append(to_py(q));
    return out;
}

Vector vector_from_py(const py::iterable& xs) {
    Vector v;
    for (auto h : xs) v.push_back(from_py(h));
    return v;
}

py::dict result_dict(const CohomologyResult& r) {
    py::list reps;
    for (const auto& v : r.representatives) reps.append(to_py(v));
    return py::dict("degree"_a = r.degree, "dim_cochain"_a = r.dim_cochain, "dim_cocycles"_a = r.dim_cocycles,
                    "dim_coboundaries"_a = r.dim_coboundaries, "dim_cohomology"_a = r.dim_cohomology,
                    "representatives"_a = reps);
}

py::object violation(const LieAlgebra& g) {
    const auto bad = validate(g);
    if (!bad) return py::none();
    return py::make_tuple(g.labels()[bad->i], g.labels()[bad->j], g.labels()[bad->k], to_py(bad->residual));
}

}  // namespace

PYBIND11_MODULE(_liecohom, m) {
    m.doc() = "Exact Chevalley-Eilenberg cohomology of finite-dimensional Lie algebras over Q.";

    static py::exception<NotALieAlgebra> not_lie(m, "NotALieAlgebra", PyExc_ValueError);
    static py::exception<NotACocycle> not_cocycle(m, "NotACocycle", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NotALieAlgebra& e) {
            py::set_error(not_lie, e.what());
        } catch (const NotACocycle& e) {
            py::set_error(not_cocycle, e.what());
        }
    });

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def_property_readonly("labels", &LieAlgebra::labels)
        .def("bracket", [](const LieAlgebra& g, const py::iterable& u, const py::iterable& v) {
            return to_py(g.bracket(vector_from_py(u), vector_from_py(v)));
        }, "u"_a, "v"_a)
        .def("validate", &violation, "None when Jacobi holds, else (i, j, k, residual) by label.")
        .def("center_dim", [](const LieAlgebra& g) { return center(g).dim(); })
        .def("derivation_dim", [](const LieAlgebra& g) { return derivation_space(g).dim(); })
        .def("inner_derivation_dim", [](const LieAlgebra& g) { return inner_derivations(g).dim(); })
        .def("same_structure", &LieAlgebra::same_structure)
        .def("__repr__", [](const LieAlgebra& g) {
            return "<LieAlgebra " + g.name() + " dim=" + std::to_string(g.dim()) + ">";
        });

    py::class_<Representation>(m, "Representation")
        .def_property_readonly("algebra", &Representation::algebra)
        .def_property_readonly("module_dim", &Representation::module_dim)
        .def("is_valid", [](const Representation& r) { return !validate_rep(r).has_value(); });

    m.def("trivial_rep", &trivial_rep, "g"_a, "dim"_a = 1);
    m.def("adjoint_rep", &adjoint_rep, "g"_a);

    m.def("sl2", &catalog::sl2);
    m.def("heisenberg", &catalog::heisenberg, "n"_a);
    m.def("schrodinger", &catalog::schrodinger, "n"_a);
    m.def("schrodinger_mod_center", &catalog::schrodinger_mod_center, "n"_a);
    m.def("abelian", &catalog::abelian, "k"_a);
    m.def("resolve", &catalog::resolve, "spec"_a);

    m.def("parse_algebra", &parse_algebra, "text"_a);
    m.def("serialize", &serialize, "g"_a);

    m.def("cochain_dim", &cochain_dim, "rho"_a, "n"_a);
    m.def("cohomology", [](const Representation& rho, std::size_t n, bool reps) {
        py::gil_scoped_release release;
        auto r = cohomology(rho, n, reps);
        py::gil_scoped_acquire acquire;
        return result_dict(r);
    }, "rho"_a, "n"_a, "representatives"_a = false);
    m.def("is_cocycle", [](const Representation& rho, std::size_t n, const py::iterable& phi) {
        return is_cocycle(rho, n, vector_from_py(phi));
    }, "rho"_a, "n"_a, "phi"_a);
    m.def("is_coboundary", [](const Representation& rho, std::size_t n, const py::iterable& phi) {
        return is_coboundary(rho, n, vector_from_py(phi));
    }, "rho"_a, "n"_a, "phi"_a);

    py::class_<InvariantSetup>(m, "InvariantSetup")
        .def(py::init<Representation, std::vector<std::size_t>, std::vector<std::size_t>>(), "module"_a, "levi"_a,
             "radical"_a)
        .def_property_readonly("levi", &InvariantSetup::levi)
        .def_property_readonly("radical", &InvariantSetup::radical);

    m.def("invariant_cohomology", [](const InvariantSetup& setup, std::size_t n, bool reps) {
        return result_dict(invariant_cohomology(setup, n, reps));
    }, "setup"_a, "n"_a, "representatives"_a = false);
    m.def("hs_crosscheck", [](const InvariantSetup& setup, std::size_t p) {
        const auto r = hs_crosscheck(setup, p);
        return py::dict("direct"_a = r.direct, "factorized"_a = r.factorized, "agree"_a = r.agree);
    }, "setup"_a, "p"_a);

    m.def("central_extension", [](const LieAlgebra& g, const py::iterable& cocycle, std::size_t k) {
        return central_extension(g, vector_from_py(cocycle), k);
    }, "g"_a, "cocycle"_a, "k"_a = 1);

    m.def("verify_paper", [](std::size_t n_max) {
        std::vector<claims::Row> rows;
        {
            py::gil_scoped_release release;
            rows = claims::verify_paper(n_max);
        }
        py::list out;
        for (const auto& r : rows) {
            out.append(py::dict("claim"_a = r.claim, "expected"_a = r.expected, "computed"_a = r.computed,
                                "oracle"_a = r.oracle, "status"_a = claims::to_string(r.status),
                                "oracle_agrees"_a = r.oracle_agrees, "note"_a = r.note));
        }
        return out;
    }, "n_max"_a = 4);
}
