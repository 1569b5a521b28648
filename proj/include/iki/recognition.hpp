#pragma once

#include "iki/graph.hpp"
#include "iki/instance.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace iki {

/// A vertex ordering v_1, ..., v_n; `order[i]` is v_{i+1}. For elimination
/// orderings the leftmost vertex is eliminated first and "right
/// neighbors" are the neighbors occurring later.
struct EliminationOrdering {
    std::vector<Vertex> order;

    friend bool operator==(const EliminationOrdering&, const EliminationOrdering&) = default;
};

/// Throws ArgumentError unless `ord` is a permutation of {0..n-1}.
/// Returns position-of-vertex.
std::vector<int> positions_of(const EliminationOrdering& ord, int n);

/// Visit order of maximum cardinality search (ties: lowest id). If the
/// graph is chordal, the reverse is a perfect elimination ordering.
EliminationOrdering maximum_cardinality_search(const Graph& g);

/// True iff every vertex's later neighbors form a clique.
bool verify_peo(const Graph& g, const EliminationOrdering& ord);

/// Perfect elimination ordering, or nullopt if `g` has a chordless cycle.
std::optional<EliminationOrdering> is_chordal(const Graph& g);

/// Some induced cycle of length >= 4, in cyclic order, or nullopt.
std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g);

bool is_cluster(const Graph& g);

/// Some induced path a-b-c (center b), or nullopt if `g` is a cluster graph.
std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g);

bool is_k_mino(const Graph& g, int k);

struct StarWitness {
    Vertex center = -1;
    std::vector<Vertex> leaves;
};

/// nullopt if `g` has no induced K_{1,k}; otherwise a center with k
/// pairwise nonadjacent neighbors.
std::optional<StarWitness> is_k1k_free(const Graph& g, int k);

/// True iff G[s] can be partitioned into at most `k` cliques. k <= 2 is
/// decided by bipartiteness of the complement; larger k by backtracking
/// coloring of the complement.
bool clique_coverable(const Graph& g, const VertexSet& s, int k);

/// Ordering in which each vertex's closed right-neighborhood is covered by
/// at most two cliques; greedy peeling, lowest qualifying id first.
std::optional<EliminationOrdering> two_simplicial_ordering(const Graph& g);

bool verify_k_simplicial(const Graph& g, const EliminationOrdering& ord, int k);

bool verify_inductive_k_independent(const Graph& g, const EliminationOrdering& ord, int k);

/// Greedy peeling: repeatedly removes the lowest-id vertex whose closed
/// neighborhood in the remaining graph has independence number <= k.
std::optional<EliminationOrdering> find_inductive_k_independent_ordering(const Graph& g, int k);

struct ClusterChordalDecomposition {
    std::vector<Edge> cluster_edges;
    std::vector<Edge> chordal_edges;
    /// Perfect elimination ordering of (V, chordal_edges).
    EliminationOrdering peo;
    /// Cluster id per vertex.
    std::vector<int> clusters;
};

inline constexpr std::size_t kDefaultDecompositionEdgeCap = 24;

/// Exhaustive search for a cluster⋈chordal decomposition. Clusters are
/// enumerated as partitions of V into cliques of `g`; for each, the
/// remaining edges must be completed to a chordal graph by some subset of
/// the intra-cluster edges. Throws SizeCapError when |E| > edge_cap.
std::optional<ClusterChordalDecomposition> brute_force_cluster_chordal(
    const Graph& g, std::size_t edge_cap = kDefaultDecompositionEdgeCap);

/// Attaches a decomposition witness to an instance (cluster labels + edge
/// partition in canonical form).
void attach_decomposition(WeightedInstance& inst, const ClusterChordalDecomposition& dec);

/// Decides Hamiltonicity of a cubic triangle-free graph by deleting each
/// edge at vertex 0 in turn and testing the remainder for a
/// cluster⋈chordal decomposition.
bool hamiltonicity_via_decomposition(const Graph& g);

bool is_cubic(const Graph& g);
bool is_triangle_free(const Graph& g);

} // namespace iki
