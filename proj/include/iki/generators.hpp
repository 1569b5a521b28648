#pragma once

#include "iki/hardness.hpp"
#include "iki/instance.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace iki {

/// Random partial k-tree: each new vertex attaches to a random sub-clique
/// (of size < max_clique) of an existing bag. Vertex ids are shuffled
/// afterwards so the construction order is not the identity.
Graph random_chordal(int n, int max_clique, std::uint64_t seed);

struct ClusterGraph {
    Graph graph;
    std::vector<int> clusters;
};

/// Disjoint cliques of random sizes in [1, max_cluster] over shuffled ids.
ClusterGraph random_cluster(int n, int max_cluster, std::uint64_t seed);

/// Union of the two parts with the decomposition witness attached in
/// canonical form (edges in both parts are stored on the chordal side).
WeightedInstance overlay_cluster_chordal(const ClusterGraph& cluster_part, const Graph& chordal_part);

/// Classes are consecutive id ranges. Cross edges appear independently
/// with probability p; `plant` forces one random transversal complete.
MulticoloredCliqueInstance random_multicolored_clique(int k, std::span<const int> class_sizes, double p, bool plant,
                                                      std::uint64_t seed);

/// Replaces the weights by i.i.d. uniform integers in [0, max_w].
WeightedInstance random_weights(WeightedInstance inst, Weight max_w, std::uint64_t seed);

/// i.i.d. uniform colors in [1, c].
std::vector<int> random_colors(int n, int c, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

} // namespace iki
