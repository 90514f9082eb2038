#include "hyperdiff/calculus.hpp"
#include "hyperdiff/cli.hpp"
#include "hyperdiff/error.hpp"
#include "hyperdiff/homology.hpp"
#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hyperdiff;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(r));
}

Rational from_py(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::list to_py(const DenseMatrix& m) {
  py::list rows;
  for (const auto& row : m) {
    py::list out;
    for (const auto& x : row) out.append(to_py(x));
    rows.append(out);
  }
  return rows;
}

PathVector path_from_py(const py::dict& terms) {
  PathVector out;
  for (const auto& [key, value] : terms) {
    out.add_term(ElementaryPath(key.cast<std::vector<VertexIndex>>()), from_py(value));
  }
  return out;
}

py::dict path_to_py(const PathVector& xi) {
  py::dict out;
  for (const auto& [path, c] : xi.terms()) {
    py::tuple key(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) key[i] = path[i];
    out[key] = to_py(c);
  }
  return out;
}

py::list edges_to_py(const Hypergraph& h) {
  py::list out;
  for (const auto& e : h.edges()) out.append(hyperedge_labels(e, h.vertex_set()));
  return out;
}

py::dict homology_to_py(const HomologyResult& r) {
  py::dict out;
  out["degree"] = r.degree;
  out["chain_dimension"] = r.chain_dimension;
  out["boundary_rank"] = r.boundary_rank;
  out["dimension"] = r.dimension;
  py::list reps;
  for (const auto& z : r.representatives) reps.append(path_to_py(z));
  out["representatives"] = reps;
  return out;
}

py::dict induced_to_py(const InducedMap& map) {
  py::dict out;
  out["source_degree"] = map.source.degree;
  out["target_degree"] = map.target.degree;
  out["source_dimension"] = map.source.dimension;
  out["target_dimension"] = map.target.dimension;
  out["matrix"] = to_py(map.matrix);
  out["rank"] = map.rank;
  return out;
}

template <Variance V>
void bind_form(py::module_& m, const char* name) {
  using Form = ExteriorForm<V>;
  py::class_<Form>(m, name)
      .def(py::init<int>(), py::arg("grade") = 0)
      .def_static("scalar", [](const py::handle& c) { return Form::scalar(from_py(c)); })
      .def_static("generator", [](VertexIndex v, const py::handle& c) { return Form::generator(v, from_py(c)); },
                  py::arg("vertex"), py::arg("coeff") = 1)
      .def_static("weighted",
                  [](const py::sequence& weights) {
                    std::vector<Rational> w;
                    for (const auto& x : weights) w.push_back(from_py(x));
                    return Form::weighted(w);
                  })
      .def_property_readonly("grade", &Form::grade)
      .def("add_monomial",
           [](Form& f, const std::vector<VertexIndex>& vertices, const py::handle& c) {
             f.add_monomial(std::span<const VertexIndex>(vertices), from_py(c));
           })
      .def_property_readonly("terms",
                             [](const Form& f) {
                               py::dict out;
                               for (const auto& [mono, c] : f.terms()) out[py::tuple(py::cast(mono))] = to_py(c);
                               return out;
                             })
      .def("is_zero", &Form::is_zero)
      .def("__eq__", [](const Form& a, const Form& b) { return a == b; })
      .def("__add__", [](const Form& a, const Form& b) { return a + b; })
      .def("wedge", [](const Form& a, const Form& b) { return wedge(a, b); });
}

}  // namespace

PYBIND11_MODULE(_hyperdiff, m) {
  // The module attribute keeps the type alive.
  static PyObject* error_type = py::exception<Error>(m, "HyperdiffError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::handle type(error_type);
      py::object exc = type(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<VertexSet>(m, "VertexSet")
      .def(py::init([](std::vector<std::string> labels) { return VertexSet(std::move(labels)); }))
      .def_static("numbered", [](std::size_t n) { return VertexSet::numbered(n); })
      .def_property_readonly("labels", &VertexSet::labels)
      .def("index_of", &VertexSet::index_of)
      .def("__len__", &VertexSet::size);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](const VertexSet& vs, const std::vector<std::vector<std::string>>& edges) {
             return make_hypergraph(vs, edges);
           }),
           py::arg("vertex_set"), py::arg("edges"))
      .def_property_readonly("vertex_set", &Hypergraph::vertex_set)
      .def_property_readonly("edges", &edges_to_py)
      .def_property_readonly("counts_by_dimension", &Hypergraph::counts_by_dimension)
      .def_property_readonly("top_dimension", &Hypergraph::top_dimension)
      .def("is_simplicial", [](const Hypergraph& h) { return is_simplicial(h); })
      .def("is_cosimplicial", [](const Hypergraph& h) { return is_cosimplicial(h); })
      .def("__len__", &Hypergraph::size)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; });

  m.def("complete", &complete);
  m.def("complete_uniform", &complete_uniform);
  m.def("complement", &complement, py::arg("h2"), py::arg("h1"));
  m.def("simplicial_closure", &simplicial_closure);
  m.def("cosimplicial_closure", &cosimplicial_closure);

  bind_form<Variance::Diff>(m, "DiffForm");
  bind_form<Variance::Codiff>(m, "CodiffForm");
  m.def("adjoint", py::overload_cast<const DiffForm&>(&adjoint));
  m.def("adjoint", py::overload_cast<const CodiffForm&>(&adjoint));

  m.def("apply_diff", [](const DiffForm& a, const py::dict& xi) { return path_to_py(apply_diff(a, path_from_py(xi))); });
  m.def("apply_codiff",
        [](const CodiffForm& w, const py::dict& xi) { return path_to_py(apply_codiff(w, path_from_py(xi))); });
  m.def("project_sorted", [](const py::dict& xi) { return path_to_py(project_sorted(path_from_py(xi))); });

  m.def("degree_decompose", [](int d, int t) {
    const auto idx = degree_decompose(d, t);
    return py::make_tuple(idx.lambda, idx.q);
  });
  m.def("boundary_matrix",
        [](const Hypergraph& K, const DiffForm& a, int d) { return to_py(boundary_matrix(K, a, d).to_dense()); });
  m.def("coboundary_matrix", [](const Hypergraph& L, const CodiffForm& w, int d) {
    return to_py(coboundary_matrix(L, w, d).to_dense());
  });
  m.def("betti", [](const Hypergraph& K, const DiffForm& a, int d) { return homology_to_py(betti_at_degree(K, a, d)); });
  m.def("cobetti",
        [](const Hypergraph& L, const CodiffForm& w, int d) { return homology_to_py(cobetti_at_degree(L, w, d)); });
  m.def("induced_map", [](const Hypergraph& K, const DiffForm& a, const DiffForm& b, int mm, int n) {
    return induced_to_py(induced_map(K, a, b, mm, n));
  }, py::arg("complex"), py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("n") = 0);
  m.def("induced_comap", [](const Hypergraph& L, const CodiffForm& w, const CodiffForm& mu, int mm, int n) {
    return induced_to_py(induced_comap(L, w, mu, mm, n));
  }, py::arg("complex"), py::arg("omega"), py::arg("mu"), py::arg("m"), py::arg("n") = 0);

  m.def("load_complex", [](const std::string& path) {
    return io::parse_complex(io::read_json_file(path)).hypergraph;
  });
  m.def("load_operator", [](const std::string& path, const VertexSet& vs) -> py::object {
    const auto op = io::parse_operator(io::read_json_file(path), vs);
    if (op.diff) return py::cast(*op.diff);
    return py::cast(*op.codiff);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
