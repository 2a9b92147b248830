#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchiso/classify.hpp"
#include "switchiso/error.hpp"
#include "switchiso/graph.hpp"
#include "switchiso/signature.hpp"

namespace py = pybind11;
using namespace switchiso;

namespace {

// Python-side handle; the library shares graphs through GraphPtr.
struct PyGraph {
  GraphPtr ptr;
};

using PairList = std::vector<std::pair<int, int>>;

std::vector<Edge> to_edges(const PairList& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

PairList to_pairs(std::span<const Edge> edges) {
  PairList out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::exception<Error>* error_type = nullptr;

PyGraph wrap(Graph g) { return {std::make_shared<const Graph>(std::move(g))}; }

std::map<int, std::int64_t> spectrum_dict(const CycleSpectrum& s) {
  return {s.counts.begin(), s.counts.end()};
}

py::dict report_dict(const ClassReport& r) {
  py::dict d;
  d["canonical"] = r.canonical.to_string();
  d["class_size"] = r.class_size;
  d["spectrum"] = spectrum_dict(r.spectrum);
  d["frustration"] = r.frustration;
  d["min_rep"] = r.min_rep.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed graphs up to switching isomorphism";

  // Leaked on purpose: the type must outlive interpreter teardown.
  error_type = new py::exception<Error>(m, "SwitchIsoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error_type->ptr());
      py::object exc = type(e.what());
      exc.attr("code") = std::string(error_code_name(e.code()));
      PyErr_SetObject(error_type->ptr(), exc.ptr());
    }
  });

  py::class_<PyGraph>(m, "Graph")
      .def(py::init([](int n, const PairList& edges) {
             return wrap(build_graph(n, to_edges(edges)));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static(
          "builtin",
          [](const std::string& name, std::optional<int> param) {
            return wrap(builtin_graph(name, param));
          },
          py::arg("name"), py::arg("param") = py::none())
      .def_static("from_spec", [](const std::string& spec) {
        return wrap(builtin_graph_from_spec(spec));
      })
      .def_static("parse", [](const std::string& text) {
        return wrap(parse_graph_text(text));
      })
      .def_property_readonly("n", [](const PyGraph& g) { return g.ptr->num_vertices(); })
      .def_property_readonly("m", [](const PyGraph& g) { return g.ptr->num_edges(); })
      .def_property_readonly("c", [](const PyGraph& g) { return g.ptr->num_components(); })
      .def_property_readonly("edges", [](const PyGraph& g) { return to_pairs(g.ptr->edges()); })
      .def("edge_index", [](const PyGraph& g, int u, int v) { return g.ptr->edge_index(u, v); })
      .def("is_complete", [](const PyGraph& g) { return g.ptr->is_complete(); })
      .def("to_text", [](const PyGraph& g) { return format_graph_text(*g.ptr); })
      .def("__eq__", [](const PyGraph& a, const PyGraph& b) { return *a.ptr == *b.ptr; })
      .def("__repr__", [](const PyGraph& g) {
        return "Graph(n=" + std::to_string(g.ptr->num_vertices()) +
               ", m=" + std::to_string(g.ptr->num_edges()) + ")";
      });

  py::class_<Cycle>(m, "Cycle")
      .def_readonly("vertices", &Cycle::vertices)
      .def_readonly("edge_indices", &Cycle::edge_indices)
      .def("__len__", &Cycle::length)
      .def("__eq__", [](const Cycle& a, const Cycle& b) { return a == b; })
      .def("__hash__", [](const Cycle& c) {
        return py::hash(py::tuple(py::cast(c.vertices)));
      });

  m.def("enumerate_cycles", [](const PyGraph& g, int max_len) {
    return enumerate_cycles(*g.ptr, max_len);
  });
  m.def("automorphism_group", [](const PyGraph& g) {
    const PermutationGroup group = automorphism_group(*g.ptr);
    std::vector<std::vector<int>> out;
    for (const Automorphism& a : group.elements()) {
      out.push_back(a.vertex_image);
    }
    return out;
  });
  m.def("spanning_forest", [](const PyGraph& g) { return spanning_forest(*g.ptr); });

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const PyGraph& g, const std::string& text) {
             return parse_signature(g.ptr, text);
           }),
           py::arg("graph"), py::arg("edges") = "")
      .def(py::init([](const PyGraph& g, const PairList& pairs) {
        return parse_signature(g.ptr, to_edges(pairs));
      }))
      .def_property_readonly("graph", [](const Signature& s) { return PyGraph{s.graph_ptr()}; })
      .def_property_readonly("negative_edges", [](const Signature& s) {
        return to_pairs(s.negative_edges());
      })
      .def("__len__", &Signature::size)
      .def("__str__", &Signature::to_string)
      .def("__repr__", [](const Signature& s) {
        return "Signature(\"" + s.to_string() + "\")";
      })
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__hash__", [](const Signature& s) { return s.bits().hash(); });

  m.def("switch_at", [](const Signature& s, const std::vector<int>& vertices) {
    return switch_at(s, vertices);
  });
  m.def("cut_space_rank", [](const PyGraph& g) { return cut_space_basis(g.ptr).rank(); });
  m.def("coset_reduce", [](const Signature& s) {
    return coset_reduce(s, cut_space_basis(s.graph_ptr()));
  });
  m.def("is_switching_equivalent",
        [](const Signature& a, const Signature& b) { return is_switching_equivalent(a, b); });
  m.def("switching_witness",
        [](const Signature& a, const Signature& b) { return switching_witness(a, b); });
  m.def("cycle_sign", &cycle_sign);
  m.def("is_balanced", [](const Signature& s) { return is_balanced(s); });
  m.def(
      "negative_cycle_spectrum",
      [](const Signature& s, std::optional<int> max_len) {
        return spectrum_dict(negative_cycle_spectrum(
            s, max_len.value_or(default_max_cycle_length(s.graph()))));
      },
      py::arg("sig"), py::arg("max_len") = py::none());
  m.def("unbalanced_cycle_set", &unbalanced_cycle_set);
  m.def("apply_automorphism", [](const Signature& s, const std::vector<int>& perm) {
    return apply_automorphism(s, perm);
  });
  m.def("frustration_index", [](const Signature& s) {
    FrustrationResult r = frustration_index(s);
    return std::make_pair(r.size, std::move(r.min_rep));
  });
  m.def("automorphic_type_count", [](const PyGraph& g, int size, int max_deg) {
    return automorphic_type_count(*g.ptr, size, max_deg);
  });
  m.def("check_min_degree_bound", [](const PyGraph& g) { return check_min_degree_bound(*g.ptr); });
  m.def("named_k6_representatives", []() {
    std::map<std::string, Signature> out;
    for (auto& [label, sig] : named_k6_representatives()) out.emplace(label, sig);
    return out;
  });

  m.def(
      "enumerate_isomorphism_classes",
      [](const PyGraph& g, int max_cycle_len, int workers) {
        std::vector<ClassReport> reports;
        {
          py::gil_scoped_release release;
          reports = enumerate_isomorphism_classes(g.ptr, max_cycle_len, workers);
        }
        py::list out;
        for (const ClassReport& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("graph"), py::arg("max_cycle_len") = 0, py::arg("workers") = 1);

  py::class_<Classifier>(m, "Classifier")
      .def(py::init([](const PyGraph& g) { return Classifier(g.ptr); }))
      .def_property_readonly("group_order", [](const Classifier& c) { return c.group().order(); })
      .def("canonical_form", &Classifier::canonical_form)
      .def("is_switching_isomorphic",
           [](const Classifier& c, const Signature& a, const Signature& b)
               -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
             auto w = c.is_switching_isomorphic(a, b);
             if (!w) return std::nullopt;
             return std::make_pair(w->perm, w->switch_set);
           })
      .def("enumerate_switching_classes", &Classifier::enumerate_switching_classes)
      .def(
          "enumerate_isomorphism_classes",
          [](const Classifier& c, int max_cycle_len, int workers) {
            std::vector<ClassReport> reports;
            {
              py::gil_scoped_release release;
              reports = c.enumerate_isomorphism_classes(max_cycle_len, workers);
            }
            py::list out;
            for (const ClassReport& r : reports) out.append(report_dict(r));
            return out;
          },
          py::arg("max_cycle_len") = 0, py::arg("workers") = 1)
      .def("automorphic_type_count", &Classifier::automorphic_type_count)
      .def(
          "spectrum",
          [](const Classifier& c, const Signature& s, int max_len) {
            return spectrum_dict(c.spectrum(s, max_len));
          },
          py::arg("sig"), py::arg("max_len") = 0);
}
