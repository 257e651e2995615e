#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valgebra/composition.hpp"
#include "valgebra/conditional.hpp"
#include "valgebra/laws.hpp"
#include "valgebra/model_io.hpp"
#include "valgebra/pipeline.hpp"

namespace py = pybind11;
using namespace valgebra;

namespace {

// pybind11 holders do not take shared_ptr<const T>; wrap the handle.
struct ContextHandle {
    ContextPtr ptr;
};

SquareMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            fail(ErrorKind::invalid_value, "concentration must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

LawReport run_suite(const std::string& instance, const std::string& suite, std::uint64_t seed,
                    int cases) {
    InstanceKind kind;
    if (instance == "potentials" || instance == "potential") kind = InstanceKind::potential;
    else if (instance == "gaussian") kind = InstanceKind::gaussian;
    else if (instance == "belief") kind = InstanceKind::belief;
    else fail(ErrorKind::parse_error, "unknown instance '" + instance + "'");
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.tol = instance_tolerance(kind);
    if (suite == "axioms") return check_axioms(kind, cfg);
    if (suite == "separative") return check_separative(kind, cfg);
    if (suite == "conditionals") return check_conditional_laws(kind, cfg);
    if (suite == "composition-modular") return check_composition_laws_modular(kind, cfg);
    if (suite == "composition-distributive")
        return check_composition_laws_distributive(kind, cfg);
    if (suite == "regularity-witness") return belief_regularity_witness();
    fail(ErrorKind::parse_error, "unknown suite '" + suite + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Separative valuation algebra kernel: combination, projection, "
              "quotients, conditionals and the compositional operator for "
              "probability potentials, Gaussian potentials and belief functions.";

    py::register_exception<Error>(m, "AlgebraError");

    py::class_<ContextHandle>(m, "LatticeContext")
        .def("domain",
             [](const ContextHandle& ctx, const std::string& text) {
                 return parse_domain_text(text, ctx.ptr);
             })
        .def_property_readonly("is_modular",
                               [](const ContextHandle& c) { return c.ptr->is_modular; })
        .def_property_readonly("is_distributive",
                               [](const ContextHandle& c) { return c.ptr->is_distributive; });

    py::class_<Domain>(m, "Domain")
        .def("__repr__", &Domain::to_text)
        .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; })
        .def("cell_count", &Domain::cell_count);

    m.def("subset_context",
          [](std::vector<std::string> names, std::vector<int> cards) {
              return ContextHandle{make_subset_context(std::move(names), std::move(cards))};
          },
          py::arg("names"), py::arg("cardinalities"));
    m.def("partition_context", [](std::vector<int> atoms) {
        return ContextHandle{make_partition_context(std::move(atoms))};
    }, py::arg("atoms"));

    m.def("join", &join);
    m.def("meet", &meet);
    m.def("leq", &leq);

    py::class_<Valuation>(m, "Valuation")
        .def_property_readonly("kind",
                               [](const Valuation& v) { return std::string(to_string(v.kind())); })
        .def_property_readonly("label", [](const Valuation& v) { return v.label(); })
        .def("render", [](const Valuation& v) { return render_valuation(v, true); })
        .def("__repr__", [](const Valuation& v) { return describe(v); });

    m.def("potential", [](const Domain& scope, std::vector<double> values) {
        return Valuation(PotentialTable(scope, std::move(values)));
    });
    m.def("gaussian", [](const Domain& scope, std::vector<double> mean,
                         const std::vector<std::vector<double>>& concentration) {
        return Valuation(GaussianPotential(scope, std::move(mean),
                                           matrix_from_rows(concentration)));
    });
    m.def("mass", [](const Domain& frame,
                     const std::vector<std::pair<std::vector<int>, double>>& focal) {
        std::map<std::uint32_t, double> masses;
        for (const auto& [cells, value] : focal) {
            std::uint32_t mask = 0;
            for (int c : cells) mask |= std::uint32_t(1) << c;
            masses[mask] += value;
        }
        return Valuation(MassFunction(frame, std::move(masses)));
    });
    m.def("unit", &unit_valuation);
    m.def("combine", [](const Valuation& a, const Valuation& b) { return combine(a, b); });
    m.def("project",
          [](const Valuation& v, const Domain& x) { return project(v, x); });
    m.def("approx_equal", &approx_equal, py::arg("a"), py::arg("b"),
          py::arg("tol") = kDefaultTol);
    m.def("dominates", &dominates);

    py::class_<Quotient>(m, "Quotient")
        .def(py::init<Valuation, Valuation>())
        .def_property_readonly("num", &Quotient::num)
        .def_property_readonly("den", &Quotient::den)
        .def("render", [](const Quotient& q) { return render_quotient(q, true); });
    m.def("embed", &embed);
    m.def("multiply", [](const Quotient& a, const Quotient& b) { return multiply(a, b); });
    m.def("invert", [](const Quotient& q) { return invert(q); });
    m.def("quotient_equal", &quotient_equal, py::arg("a"), py::arg("b"),
          py::arg("tol") = kDefaultTol);
    m.def("project_quotient", [](const Quotient& q, const Domain& x) { return project(q, x); });
    m.def("reduce", [](const Quotient& q) { return reduce(q); });
    m.def("try_reduce", [](const Quotient& q) -> std::optional<Valuation> {
        return try_reduce(q);
    });

    m.def("conditional", [](const Valuation& phi, const Domain& x, const Domain& y) {
        return conditional(phi, x, y).body;
    });

    py::class_<DensityElement>(m, "DensityElement")
        .def_property_readonly("is_member", &DensityElement::is_member)
        .def_property_readonly("label", &DensityElement::label)
        .def("value", &DensityElement::value)
        .def("render", [](const DensityElement& e) { return render_element(e, true); });
    m.def("member", &DensityElement::member);
    m.def("compose", [](const Valuation& a, const Valuation& b) {
        return compose(DensityElement::member(a), DensityElement::member(b));
    });
    m.def("compose_elements",
          [](const DensityElement& a, const DensityElement& b) { return compose(a, b); });
    m.def("project_element", &project_element);
    m.def("density_equal", &density_equal, py::arg("a"), py::arg("b"),
          py::arg("tol") = kDefaultTol);

    m.def("run_suite",
          [](const std::string& instance, const std::string& suite, std::uint64_t seed,
             int cases) {
              auto report = run_suite(instance, suite, seed, cases);
              return py::make_tuple(report.all_pass(), report.to_text());
          },
          py::arg("instance"), py::arg("suite"), py::arg("seed") = 1, py::arg("cases") = 200);

    m.def("eval_model", [](const std::string& path, const std::string& expression) {
        ModelFile model = load_model(path);
        return eval_pipeline(model, expression);
    });
}
