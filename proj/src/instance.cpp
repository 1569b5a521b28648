#include "iki/instance.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace iki {

WeightedInstance::WeightedInstance(Graph g)
    : graph(std::move(g)), weights(static_cast<std::size_t>(graph.num_vertices()), 1)
{
}

WeightedInstance::WeightedInstance(Graph g, std::vector<Weight> w) : graph(std::move(g)), weights(std::move(w))
{
    if (weights.size() != static_cast<std::size_t>(graph.num_vertices())) {
        throw ArgumentError("weight vector length does not match vertex count");
    }
}

Weight checked_add(Weight a, Weight b)
{
    if (a > std::numeric_limits<Weight>::max() - b) {
        throw ArgumentError("weight overflow");
    }
    return a + b;
}

Weight weight_of(std::span<const Weight> weights, const VertexSet& s)
{
    Weight total = 0;
    s.for_each([&](Vertex v) { total = checked_add(total, weights[static_cast<std::size_t>(v)]); });
    return total;
}

Weight weight_of(std::span<const Weight> weights, std::span<const Vertex> s)
{
    Weight total = 0;
    for (Vertex v : s) {
        total = checked_add(total, weights[static_cast<std::size_t>(v)]);
    }
    return total;
}

SubInstance restrict_instance(const WeightedInstance& inst, const VertexSet& s)
{
    InducedSubgraph sub = induced_subgraph(inst.graph, s);
    SubInstance out;
    out.to_original = std::move(sub.to_original);
    std::vector<int> to_new(static_cast<std::size_t>(inst.num_vertices()), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        to_new[static_cast<std::size_t>(out.to_original[i])] = static_cast<int>(i);
    }
    std::vector<Weight> w;
    w.reserve(out.to_original.size());
    for (Vertex v : out.to_original) {
        w.push_back(inst.weights[static_cast<std::size_t>(v)]);
    }
    out.instance = WeightedInstance(std::move(sub.graph), std::move(w));
    auto restrict_labels = [&](const std::vector<int>& labels) {
        std::vector<int> r;
        r.reserve(out.to_original.size());
        for (Vertex v : out.to_original) {
            r.push_back(labels[static_cast<std::size_t>(v)]);
        }
        return r;
    };
    if (inst.colors) {
        out.instance.colors = restrict_labels(*inst.colors);
    }
    if (inst.clusters) {
        out.instance.clusters = restrict_labels(*inst.clusters);
    }
    if (inst.edge_partition) {
        EdgePartition part;
        auto restrict_edges = [&](const std::vector<Edge>& edges, std::vector<Edge>& into) {
            for (const auto& [u, v] : edges) {
                const int a = to_new[static_cast<std::size_t>(u)];
                const int b = to_new[static_cast<std::size_t>(v)];
                if (a >= 0 && b >= 0) {
                    into.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
            std::sort(into.begin(), into.end());
        };
        restrict_edges(inst.edge_partition->cluster_edges, part.cluster_edges);
        restrict_edges(inst.edge_partition->chordal_edges, part.chordal_edges);
        out.instance.edge_partition = std::move(part);
    }
    return out;
}

bool better_solution(const Solution& a, const Solution& b)
{
    if (a.weight != b.weight) {
        return a.weight > b.weight;
    }
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end());
}

void check_solution(const WeightedInstance& inst, const Solution& sol, const SolutionRequirements& req)
{
    const int n = inst.num_vertices();
    for (std::size_t i = 0; i < sol.vertices.size(); ++i) {
        const Vertex v = sol.vertices[i];
        if (v < 0 || v >= n) {
            throw InternalError("solution vertex out of range");
        }
        if (i > 0 && sol.vertices[i - 1] >= v) {
            throw InternalError("solution vertices not strictly sorted");
        }
    }
    if (weight_of(inst.weights, sol.vertices) != sol.weight) {
        throw InternalError("solution weight does not match its vertex set");
    }
    if (req.max_size && sol.vertices.size() > *req.max_size) {
        throw InternalError("solution exceeds its size bound");
    }
    const VertexSet set(static_cast<std::size_t>(n), sol.vertices);
    if (req.independent && !is_independent(inst.graph, set)) {
        throw InternalError("solution is not independent");
    }
    if (req.colorful) {
        if (!inst.colors) {
            throw InternalError("colorful requirement on an uncolored instance");
        }
        std::vector<int> seen;
        for (Vertex v : sol.vertices) {
            seen.push_back((*inst.colors)[static_cast<std::size_t>(v)]);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            throw InternalError("solution is not colorful");
        }
    }
    if (req.num_colors) {
        if (!sol.color_assignment || sol.color_assignment->size() != sol.vertices.size()) {
            throw InternalError("solution lacks a color assignment");
        }
        const auto& col = *sol.color_assignment;
        for (std::size_t i = 0; i < sol.vertices.size(); ++i) {
            if (col[i] < 1 || col[i] > *req.num_colors) {
                throw InternalError("solution color out of range");
            }
            for (std::size_t j = i + 1; j < sol.vertices.size(); ++j) {
                if (col[i] == col[j] && inst.graph.has_edge(sol.vertices[i], sol.vertices[j])) {
                    throw InternalError("solution coloring is not proper");
                }
            }
        }
    }
}

void check_partition_consistency(const WeightedInstance& inst)
{
    const int n = inst.num_vertices();
    if (!inst.clusters || !inst.edge_partition) {
        throw ArgumentError("instance carries no cluster/chordal decomposition");
    }
    const auto& cl = *inst.clusters;
    if (cl.size() != static_cast<std::size_t>(n)) {
        throw ArgumentError("cluster label vector length does not match vertex count");
    }
    Graph seen(n);
    auto take = [&](const Edge& e, bool cluster_side) {
        const auto [u, v] = e;
        if (u < 0 || v < 0 || u >= n || v >= n || !inst.graph.has_edge(u, v)) {
            throw ArgumentError("partition edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                "} is not an edge of the graph");
        }
        if (!seen.add_edge(u, v)) {
            throw ArgumentError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                "} appears twice in the partition");
        }
        if (cluster_side && cl[static_cast<std::size_t>(u)] != cl[static_cast<std::size_t>(v)]) {
            throw ArgumentError("cluster edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                "} joins different clusters");
        }
    };
    for (const auto& e : inst.edge_partition->cluster_edges) {
        take(e, true);
    }
    for (const auto& e : inst.edge_partition->chordal_edges) {
        take(e, false);
    }
    if (seen.num_edges() != inst.graph.num_edges()) {
        throw ArgumentError("edge partition does not cover every edge");
    }
    std::map<int, std::vector<Vertex>> members;
    for (Vertex v = 0; v < n; ++v) {
        members[cl[static_cast<std::size_t>(v)]].push_back(v);
    }
    for (const auto& [label, vs] : members) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!inst.graph.has_edge(vs[i], vs[j])) {
                    throw ArgumentError("cluster " + std::to_string(label) + " is not a clique: vertices " +
                                        std::to_string(vs[i] + 1) + " and " + std::to_string(vs[j] + 1) +
                                        " are nonadjacent");
                }
            }
        }
    }
}

Graph chordal_part(const WeightedInstance& inst)
{
    if (!inst.edge_partition) {
        throw ArgumentError("instance carries no edge partition");
    }
    return Graph(inst.num_vertices(), inst.edge_partition->chordal_edges);
}

} // namespace iki
