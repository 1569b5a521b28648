#pragma once

#include "iki/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace iki {

using Weight = std::uint64_t;

/// Witness that E = E_cluster ∪ E_chordal with (V, E_cluster) a cluster
/// graph and (V, E_chordal) chordal.
///
/// Canonical form: the two edge lists are disjoint and sorted; an edge
/// lying in both parts is stored on the chordal side. The cluster graph
/// itself is given by the instance's cluster labels, so every pair inside
/// a cluster must be an edge of the graph (tagged either way).
struct EdgePartition {
    std::vector<Edge> cluster_edges;
    std::vector<Edge> chordal_edges;

    friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

struct WeightedInstance {
    Graph graph;
    std::vector<Weight> weights;
    /// Per-vertex color in {1..c}.
    std::optional<std::vector<int>> colors;
    /// Per-vertex cluster id (any non-negative integers).
    std::optional<std::vector<int>> clusters;
    std::optional<EdgePartition> edge_partition;

    WeightedInstance() = default;
    /// Unit weights, no annotations.
    explicit WeightedInstance(Graph g);
    WeightedInstance(Graph g, std::vector<Weight> w);

    int num_vertices() const noexcept { return graph.num_vertices(); }
    bool has_decomposition() const noexcept { return clusters.has_value() && edge_partition.has_value(); }

    friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;
};

/// w(S) with overflow checking.
Weight weight_of(std::span<const Weight> weights, const VertexSet& s);
Weight weight_of(std::span<const Weight> weights, std::span<const Vertex> s);
Weight checked_add(Weight a, Weight b);

/// Restriction of an instance (weights, colors, clusters, edge partition)
/// to G[s]; `to_original` maps new ids back.
struct SubInstance {
    WeightedInstance instance;
    std::vector<Vertex> to_original;
};
SubInstance restrict_instance(const WeightedInstance& inst, const VertexSet& s);

struct Solution {
    /// Sorted vertex ids.
    std::vector<Vertex> vertices;
    /// color_assignment[i] is the color of vertices[i], in {1..c}.
    std::optional<std::vector<int>> color_assignment;
    Weight weight = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Strict "better" order shared by all solvers: higher weight first, then
/// the lexicographically smaller sorted vertex list.
bool better_solution(const Solution& a, const Solution& b);

struct SolutionRequirements {
    bool independent = false;
    /// Pairwise distinct instance colors.
    bool colorful = false;
    /// Require a proper coloring with at most this many colors.
    std::optional<int> num_colors;
    std::optional<std::size_t> max_size;
};

/// Throws InternalError if `sol` violates the requirements or its weight
/// does not equal w(vertices).
void check_solution(const WeightedInstance& inst, const Solution& sol, const SolutionRequirements& req);

/// Validates the decomposition witness: every cluster-tagged edge joins
/// two vertices of one cluster, every same-cluster pair is an edge, both
/// lists together are exactly E. Chordality of the chordal side is
/// checked by the recognition module. Throws ArgumentError.
void check_partition_consistency(const WeightedInstance& inst);

/// The graph (V, E_chordal) of an instance carrying a decomposition.
Graph chordal_part(const WeightedInstance& inst);

} // namespace iki
