#pragma once

#include "iki/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace iki {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over the dense ids {0, ..., n-1}.
///
/// Adjacency is kept both as sorted neighbor lists (iteration) and as
/// bitsets (set algebra). Edges are only added during construction; all
/// algorithms take `const Graph&`.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return m_; }

    /// Adds {u,v}. Returns false if the edge already exists; throws
    /// ArgumentError on a self-loop or an out-of-range endpoint.
    bool add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_bits_[static_cast<std::size_t>(u)].contains(v); }
    int degree(Vertex v) const noexcept { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    const VertexSet& neighbor_set(Vertex v) const noexcept { return adj_bits_[static_cast<std::size_t>(v)]; }

    /// All edges as (u,v) with u < v, sorted.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }
    VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexSet> adj_bits_;
};

struct InducedSubgraph {
    Graph graph;
    /// new id -> original id (increasing).
    std::vector<Vertex> to_original;
};

VertexSet neighborhood(const Graph& g, Vertex v, bool closed);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);

/// Some independent subset of `s` with exactly `size` vertices, if any.
/// Branching search that only ever extends by vertices nonadjacent to the
/// partial set.
std::optional<std::vector<Vertex>> find_independent_subset(const Graph& g, const VertexSet& s, std::size_t size);

/// True iff every independent subset of G[s] has at most `k` vertices.
bool independence_bounded(const Graph& g, const VertexSet& s, int k);

/// Independence number of G[s].
int independence_number(const Graph& g, const VertexSet& s);

/// Proper coloring with colors in {1..c} (indexed by vertex), or nullopt.
/// Backtracking over vertices in non-increasing degree order.
std::optional<std::vector<int>> is_c_colorable(const Graph& g, int c);

struct CliqueEnumeration {
    std::vector<VertexSet> cliques;
    /// More than `cap` maximal cliques contain the vertex; `cliques` then
    /// holds the first cap+1 found.
    bool cap_exceeded = false;
};

/// Maximal cliques of `g` containing `v`, by pivoted Bron-Kerbosch over
/// N[v]. Stops as soon as cap+1 cliques have been found.
CliqueEnumeration maximal_cliques_containing(const Graph& g, Vertex v, std::size_t cap);

Graph complement(const Graph& g);

/// Connected component label per vertex (labels 0..count-1 in order of
/// smallest member).
std::vector<int> connected_components(const Graph& g);

} // namespace iki
