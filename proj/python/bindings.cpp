#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphiq/experiments.hpp"
#include "graphiq/graphs.hpp"

namespace py = pybind11;
using namespace graphiq;

namespace {

PointCloud make_cloud(const std::vector<std::pair<double, double>>& points,
                      const std::string& label) {
    PointCloud cloud;
    cloud.label = label_from_string(label);
    for (const auto& [x, y] : points) cloud.points.push_back({x, y});
    return cloud;
}

std::vector<std::pair<double, double>> cloud_points(const PointCloud& cloud) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : cloud.points) out.emplace_back(p.x, p.y);
    return out;
}

TrainingSet make_training_set(const AdjacencyVector& sad, const AdjacencyVector& happy) {
    TrainingSet train;
    train.members = {{sad, -1}, {happy, +1}};
    return train;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph-based facial expression classification on a simulated quantum circuit";

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init(&make_cloud), py::arg("points"), py::arg("label"))
        .def_property_readonly("points", &cloud_points)
        .def_property_readonly("label",
                               [](const PointCloud& c) { return to_string(c.label); })
        .def("__len__", [](const PointCloud& c) { return c.points.size(); });

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def_property_readonly("n", &WeightedGraph::size)
        .def("weight", &WeightedGraph::at, py::arg("i"), py::arg("j"))
        .def("edges", &WeightedGraph::edges)
        .def("to_json", &graph_to_json);

    py::class_<AdjacencyVector>(m, "AdjacencyVector")
        .def(py::init([](int n, const std::vector<double>& entries) {
                 return AdjacencyVector{n, entries};
             }),
             py::arg("n"), py::arg("entries"))
        .def_readonly("n", &AdjacencyVector::n)
        .def_readonly("entries", &AdjacencyVector::entries);

    py::class_<AmplitudeVector>(m, "AmplitudeVector")
        .def_readonly("qubit_count", &AmplitudeVector::qubit_count)
        .def_readonly("gamma", &AmplitudeVector::gamma)
        .def_readonly("amplitudes", &AmplitudeVector::amplitudes);

    py::class_<CircuitFragment>(m, "CircuitFragment")
        .def_readonly("qubit_count", &CircuitFragment::qubit_count)
        .def("__len__", [](const CircuitFragment& f) { return f.gates.size(); })
        .def("to_text", [](const CircuitFragment& f) { return gates_to_text(f.gates); });

    m.def("synthesize_face",
          [](const std::string& kind, double noise, std::uint64_t seed) {
              Rng rng(seed);
              return synthesize_face(label_from_string(kind), noise, rng);
          },
          py::arg("kind"), py::arg("noise") = 0.0, py::arg("seed") = kDefaultSeed);
    m.def("extract_mouth", &extract_mouth, py::arg("face"));
    m.def("sample_vertex_indices",
          [](int total, int n, std::uint64_t seed) {
              Rng rng(seed);
              return sample_vertex_indices(total, n, rng);
          },
          py::arg("total"), py::arg("n"), py::arg("seed") = kDefaultSeed);
    m.def("select_vertices",
          py::overload_cast<const PointCloud&, const std::vector<int>&>(&select_vertices),
          py::arg("mouth"), py::arg("indices"));
    m.def("load_landmarks",
          [](const std::string& path) { return load_landmarks(path); }, py::arg("path"));
    m.def("save_landmarks",
          [](const std::string& path, const std::vector<PointCloud>& faces) {
              save_landmarks(path, faces);
          },
          py::arg("path"), py::arg("faces"));

    m.def("complete_graph", &complete_graph, py::arg("cloud"));
    m.def("delaunay_graph", &delaunay_graph, py::arg("cloud"));
    m.def("edge_index", &edge_index, py::arg("i"), py::arg("j"), py::arg("n"));
    m.def("adjacency_vector", &adjacency_vector, py::arg("graph"));

    m.def("encode", py::overload_cast<const AdjacencyVector&>(&encode), py::arg("vector"));
    m.def("synthesize_state_prep", &synthesize_state_prep, py::arg("target"));

    m.def("frobenius_distance", &frobenius_distance, py::arg("g1"), py::arg("g2"));
    m.def("exact_class_probability",
          [](const AdjacencyVector& test, const AdjacencyVector& sad,
             const AdjacencyVector& happy) {
              return exact_class_probability(encode(test), make_training_set(sad, happy));
          },
          py::arg("test"), py::arg("sad"), py::arg("happy"));
    m.def("classify_single_face",
          [](const AdjacencyVector& test, const AdjacencyVector& sad,
             const AdjacencyVector& happy, const std::string& backend, long shots,
             std::uint64_t seed) {
              Rng rng(seed);
              return to_string(classify_wrt_single_face(test, sad, happy,
                                                        backend_from_string(backend), shots, rng));
          },
          py::arg("test"), py::arg("sad"), py::arg("happy"), py::arg("backend") = "classical",
          py::arg("shots") = 1024, py::arg("seed") = kDefaultSeed);

    m.def("run_experiment",
          [](const std::vector<PointCloud>& faces, const std::vector<int>& n_values,
             int subsets_per_n, int test_faces, int training_pairs, long shots,
             const std::vector<std::string>& strategies, const std::vector<std::string>& backends,
             std::uint64_t seed, int threads) {
              ExperimentConfig config;
              config.n_values = n_values;
              config.subsets_per_n = subsets_per_n;
              config.test_faces = test_faces;
              config.training_pairs = training_pairs;
              config.shots = shots;
              config.strategies.clear();
              for (const auto& s : strategies)
                  config.strategies.push_back(strategy_from_string(s));
              config.backends.clear();
              for (const auto& b : backends) config.backends.push_back(backend_from_string(b));
              config.seed = seed;
              config.threads = threads;
              const ExperimentReport report = run_experiment(config, faces);
              py::list rows;
              for (const auto& r : report.rows) {
                  py::dict row;
                  row["n"] = r.n;
                  row["strategy"] = to_string(r.strategy);
                  row["backend"] = to_string(r.backend);
                  row["single_mean"] = r.single_mean;
                  row["single_min"] = r.single_min;
                  row["single_max"] = r.single_max;
                  row["whole_mean"] = r.whole_mean;
                  row["whole_min"] = r.whole_min;
                  row["whole_max"] = r.whole_max;
                  row["unknown_rate"] = r.unknown_rate;
                  row["item_count"] = r.item_count;
                  rows.append(row);
              }
              return rows;
          },
          py::arg("faces"), py::arg("n_values") = std::vector<int>{4, 6, 8, 10, 12, 14, 16, 18, 20},
          py::arg("subsets_per_n") = 20, py::arg("test_faces") = 10, py::arg("training_pairs") = 25,
          py::arg("shots") = 1024,
          py::arg("strategies") = std::vector<std::string>{"complete", "meshed"},
          py::arg("backends") = std::vector<std::string>{"classical", "quantum-exact"},
          py::arg("seed") = kDefaultSeed, py::arg("threads") = 0);

    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<EncodingError>(m, "EncodingError", PyExc_ValueError);
    py::register_exception<PostSelectionError>(m, "PostSelectionError", PyExc_RuntimeError);
}
