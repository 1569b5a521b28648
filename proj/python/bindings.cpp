// Python bindings. Graphs cross the boundary as (n, edge list) and instances
// as the text format, so the module stays thin.

#include "iki/color_coding.hpp"
#include "iki/colorful_dp.hpp"
#include "iki/errors.hpp"
#include "iki/generators.hpp"
#include "iki/hardness.hpp"
#include "iki/io.hpp"
#include "iki/oracle.hpp"
#include "iki/recognition.hpp"
#include "iki/rng.hpp"
#include "iki/tree_decomposition.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace iki;

namespace {

Graph make_graph(int n, const std::vector<Edge>& edges)
{
    return Graph(n, edges);
}

WeightedInstance parse_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

std::optional<std::vector<Vertex>> order_of(const std::optional<EliminationOrdering>& ord)
{
    if (!ord) {
        return std::nullopt;
    }
    return ord->order;
}

std::string instance_text(const WeightedInstance& inst)
{
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

py::dict solution_dict(const Solution& sol)
{
    py::dict d;
    d["weight"] = sol.weight;
    d["vertices"] = sol.vertices;
    if (sol.color_assignment) {
        d["colors"] = *sol.color_assignment;
    }
    return d;
}

NormalizedTreeDecomposition chordal_decomposition(const Graph& g)
{
    const auto peo = is_chordal(g);
    if (!peo) {
        throw ArgumentError("graph is not chordal");
    }
    return normalize_binary(clique_tree_from_peo(g, *peo));
}

WeightedInstance with_chordal_fallback(WeightedInstance inst)
{
    if (inst.has_decomposition()) {
        return inst;
    }
    if (!is_chordal(inst.graph)) {
        throw ArgumentError("instance is not chordal and carries no cluster/chordal witness");
    }
    std::vector<int> singletons(static_cast<std::size_t>(inst.num_vertices()));
    for (std::size_t v = 0; v < singletons.size(); ++v) {
        singletons[v] = static_cast<int>(v);
    }
    inst.clusters = std::move(singletons);
    inst.edge_partition = EdgePartition{{}, inst.graph.edges()};
    return inst;
}

ColoringFamilySpec make_spec(const std::string& mode, double epsilon, std::uint64_t seed, int jobs)
{
    ColoringFamilySpec spec;
    if (mode == "randomized") {
        spec.mode = ColoringMode::Randomized;
    } else if (mode != "exhaustive") {
        throw ArgumentError("mode must be 'exhaustive' or 'randomized'");
    }
    spec.epsilon = epsilon;
    spec.seed = seed;
    spec.jobs = jobs;
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Independent set and colorable subgraph algorithms on cluster/chordal overlays";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<WitnessError>(m, "WitnessError", PyExc_ValueError);

    m.def(
        "is_chordal",
        [](int n, const std::vector<Edge>& edges) { return order_of(is_chordal(make_graph(n, edges))); },
        py::arg("n"), py::arg("edges"), "Perfect elimination ordering, or None");
    m.def(
        "is_cluster", [](int n, const std::vector<Edge>& edges) { return is_cluster(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));
    m.def(
        "is_k_mino",
        [](int n, const std::vector<Edge>& edges, int k) { return is_k_mino(make_graph(n, edges), k); },
        py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def(
        "two_simplicial_ordering",
        [](int n, const std::vector<Edge>& edges) { return order_of(two_simplicial_ordering(make_graph(n, edges))); },
        py::arg("n"), py::arg("edges"));
    m.def(
        "hamiltonian_cubic_triangle_free",
        [](int n, const std::vector<Edge>& edges) { return hamiltonicity_via_decomposition(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "colorful_is",
        [](int n, const std::vector<Edge>& edges, std::vector<Weight> weights, std::vector<int> colors) {
            WeightedInstance inst(make_graph(n, edges), std::move(weights));
            inst.colors = std::move(colors);
            return solution_dict(max_weight_colorful_is(inst, chordal_decomposition(inst.graph), 1));
        },
        py::arg("n"), py::arg("edges"), py::arg("weights"), py::arg("colors"),
        "Max-weight colorful independent set of a chordal graph");
    m.def(
        "mwis_chordal",
        [](int n, const std::vector<Edge>& edges, std::vector<Weight> weights) {
            WeightedInstance inst(make_graph(n, edges), std::move(weights));
            return solution_dict(max_weight_is_chordal(inst, chordal_decomposition(inst.graph)));
        },
        py::arg("n"), py::arg("edges"), py::arg("weights"));
    m.def(
        "mwccs",
        [](const std::string& instance, int c, int ell, const std::string& mode, double epsilon, std::uint64_t seed,
           int jobs) {
            const auto inst = with_chordal_fallback(parse_text(instance));
            return solution_dict(mwccs_cluster_chordal(inst, c, ell, make_spec(mode, epsilon, seed, jobs)));
        },
        py::arg("instance"), py::arg("c"), py::arg("ell"), py::arg("mode") = "exhaustive",
        py::arg("epsilon") = 0.01, py::arg("seed") = 0, py::arg("jobs") = 1,
        "Max-weight c-colorable subgraph with at most ell vertices of an instance given as text");
    m.def(
        "brute_mwccs",
        [](const std::string& instance, int c, int ell) {
            return solution_dict(brute_mwccs(parse_text(instance), c, ell));
        },
        py::arg("instance"), py::arg("c"), py::arg("ell"));

    m.def(
        "random_overlay",
        [](int n, int max_cluster, int max_clique, Weight max_weight, std::uint64_t seed) {
            const auto inst = overlay_cluster_chordal(random_cluster(n, max_cluster, mix_seed(seed, 1)),
                                                      random_chordal(n, max_clique, mix_seed(seed, 2)));
            return instance_text(random_weights(inst, max_weight, mix_seed(seed, 3)));
        },
        py::arg("n"), py::arg("max_cluster"), py::arg("max_clique"), py::arg("max_weight"), py::arg("seed"),
        "Seeded cluster/chordal overlay in the text format");
    m.def(
        "random_chordal",
        [](int n, int max_clique, std::uint64_t seed) { return random_chordal(n, max_clique, seed).edges(); },
        py::arg("n"), py::arg("max_clique"), py::arg("seed"));

    m.def(
        "construction",
        [](int n, const std::vector<Edge>& edges, const std::vector<std::vector<Vertex>>& classes) {
            MulticoloredCliqueInstance mcc{make_graph(n, edges), classes};
            const auto c = construct_mis_instance(mcc);
            py::dict d;
            d["n"] = c.graph.num_vertices();
            d["edges"] = c.graph.edges();
            d["ell"] = c.ell;
            d["cliques"] = c.cliques;
            std::vector<std::string> names;
            for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
                names.push_back(c.index.name_of(v).to_string());
            }
            d["names"] = names;
            return d;
        },
        py::arg("n"), py::arg("edges"), py::arg("classes"),
        "Reduce a multicolored clique instance to an independent set instance");
    m.def(
        "brute_mwis",
        [](int n, const std::vector<Edge>& edges, std::vector<Weight> weights) {
            return solution_dict(brute_mwis(WeightedInstance(make_graph(n, edges), std::move(weights))));
        },
        py::arg("n"), py::arg("edges"), py::arg("weights"));
}
