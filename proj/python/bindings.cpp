#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutpoly/workbench.hpp"

namespace py = pybind11;
using namespace cutpoly;

namespace {

// Results cross the boundary as plain dicts, via the same JSON the CLI emits.
py::object to_py(const json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

json from_py(const py::object& obj) {
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Cut side(const Graph& g, const std::vector<int>& vertices) {
    return Cut::from_vertices(vertices, g.vertex_count());
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::int64_t> weights) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges)
        list.push_back({u, v});
    return Graph::from_edges(n, std::move(list), std::move(weights));
}

} // namespace

PYBIND11_MODULE(_cutpoly, m) {
    m.doc() = "Cut polytope skeletons of small graphs";

    static py::exception<Error> error(m, "CutpolyError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(std::string(to_string(e.code())), e.what(), e.line());
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("weights") = std::vector<std::int64_t>{})
        .def_static("parse", [](const std::string& text) { return parse_graph(text); })
        .def_static("read", &read_graph_file)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : g.edges())
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def_property_readonly("weights",
                               [](const Graph& g) { return std::vector<std::int64_t>(g.weights().begin(), g.weights().end()); })
        .def("format", &format_graph)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<SkeletonGraph>(m, "Skeleton")
        .def_readonly("n", &SkeletonGraph::n)
        .def_property_readonly("node_count", &SkeletonGraph::node_count)
        .def_property_readonly("edge_count", &SkeletonGraph::edge_count)
        .def_property_readonly("cuts",
                               [](const SkeletonGraph& s) {
                                   std::vector<std::vector<int>> out;
                                   for (const Cut& c : s.cuts)
                                       out.push_back(c.vertex_list());
                                   return out;
                               })
        .def_readonly("adjacency", &SkeletonGraph::adjacency)
        .def("has_edge", &SkeletonGraph::has_edge)
        .def("to_dict", [](const SkeletonGraph& s) { return to_py(to_json(s)); })
        .def_static("from_dict", [](const py::object& d) { return skeleton_from_json(from_py(d)); });

    m.def("generate",
          [](const std::string& family, int n, std::vector<int> parts, std::uint64_t seed, int density) {
              const auto f = parse_family(family);
              if (!f)
                  throw Error(ErrorCode::BadSpec, "unknown family: " + family);
              return generate({*f, n, std::move(parts), seed, density});
          },
          py::arg("family"), py::arg("n") = 0, py::arg("parts") = std::vector<int>{}, py::arg("seed") = 0,
          py::arg("density") = 30);

    m.def("classify", [](const Graph& g) { return to_py(to_json(classify(g))); });
    m.def("cut_set", [](const Graph& g, const std::vector<int>& x) { return cut_set(g, side(g, x)).to_vector(); });
    m.def("components",
          [](const Graph& g, const std::vector<int>& x) {
              std::vector<std::vector<int>> out;
              for (VertexSet part : split_components(g, side(g, x).members())) {
                  std::vector<int> vs;
                  for (int v = 0; v < g.vertex_count(); ++v)
                      if ((part >> v) & 1U)
                          vs.push_back(v);
                  out.push_back(std::move(vs));
              }
              return out;
          });
    m.def("is_adjacent",
          [](const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
              return is_adjacent(g, side(g, x), side(g, y));
          });
    m.def("certify",
          [](const Graph& g, const std::vector<int>& x, const std::vector<int>& y, int verify_cap) {
              return to_py(to_json(certify_adjacent(g, side(g, x), side(g, y), verify_cap)));
          },
          py::arg("g"), py::arg("x"), py::arg("y"), py::arg("verify_cap") = default_certificate_cap);
    m.def("witness",
          [](const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
              return to_py(to_json(witness_nonadjacent(g, side(g, x), side(g, y))));
          });

    m.def("skeleton",
          [](const Graph& g, int cap, unsigned workers) {
              py::gil_scoped_release release;
              return build_skeleton(g, {cap, workers});
          },
          py::arg("g"), py::arg("cap") = 16, py::arg("workers") = 1);
    m.def("diameter", [](const SkeletonGraph& s, unsigned workers) { return diameter(s, workers); },
          py::arg("s"), py::arg("workers") = 1);
    m.def("clique_number",
          [](const SkeletonGraph& s, std::uint64_t budget) {
              CliqueResult r;
              {
                  py::gil_scoped_release release;
                  r = clique_number(s, budget);
              }
              py::dict d;
              d["size"] = r.size;
              d["exact"] = r.exact;
              d["witness"] = r.witness;
              d["expansions"] = r.expansions;
              return d;
          },
          py::arg("s"), py::arg("budget") = default_clique_budget);
    m.def("metrics",
          [](const SkeletonGraph& s, std::uint64_t budget, unsigned workers) {
              return to_py(to_json(compute_metrics(s, budget, workers)));
          },
          py::arg("s"), py::arg("budget") = default_clique_budget, py::arg("workers") = 1);

    m.def("color",
          [](const Graph& g, const std::string& scheme, int cap) {
              if (scheme != "brm" && scheme != "brm-star")
                  throw Error(ErrorCode::BadSpec, "scheme must be brm or brm-star");
              const SkeletonGraph s = build_skeleton(g, {cap, 1});
              const Coloring col = scheme == "brm" ? brm_coloring(g, s) : brm_star_coloring(g, s);
              json doc = to_json(col);
              doc["scheme"] = scheme;
              doc["proper"] = verify_coloring(s, col).proper;
              return to_py(doc);
          },
          py::arg("g"), py::arg("scheme") = "brm", py::arg("cap") = 16);
    m.def("brm", [](int k) {
        const BinaryMatrix b = brm(k);
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < b.rows(); ++r)
            rows.push_back(b.row_bits(r));
        return rows;
    });
    m.def("brm_star", [](int k) {
        const BinaryMatrix b = brm_star(k);
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < b.rows(); ++r)
            rows.push_back(b.row_bits(r));
        return rows;
    });
    m.def("clique_construct", [](const Graph& g) {
        const GraphClass cls = classify(g);
        if (!cls.cycle && !cls.complete_multipartite())
            throw Error(ErrorCode::WrongClass, "clique constructions need a cycle or a complete multipartite graph");
        return to_py(to_json(cls.cycle ? hamming_ball_clique(g) : symmetric_cut_clique(g)));
    });
    m.def("bounds", [](const Graph& g) { return to_py(to_json(bounds_for(g))); });
    m.def("maxcut",
          [](const Graph& g, int cap) {
              const MaxCutResult r = maxcut_bruteforce(g, cap);
              py::dict d;
              d["cut"] = r.cut.vertex_list();
              d["weight"] = r.weight;
              return d;
          },
          py::arg("g"), py::arg("cap") = default_maxcut_cap);

    m.def("report",
          [](const Graph& g, int cap, bool exact, unsigned workers, std::uint64_t budget, int verify_cap) {
              Report r;
              {
                  py::gil_scoped_release release;
                  r = report(g, {cap, exact, workers, budget, verify_cap});
              }
              return to_py(r.document);
          },
          py::arg("g"), py::arg("cap") = 16, py::arg("exact") = true, py::arg("workers") = 1,
          py::arg("budget") = default_clique_budget, py::arg("verify_cap") = default_certificate_cap);
}
