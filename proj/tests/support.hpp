#pragma once

// Small fixed graphs and deliberately naive reference checks for tests.
// Nothing here calls the solver or recognizer being tested.

#include "iki/generators.hpp"
#include "iki/graph.hpp"
#include "iki/instance.hpp"
#include "iki/recognition.hpp"
#include "iki/rng.hpp"
#include "iki/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace iki::test {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// K_{1,k}: center 0, leaves 1..k.
inline Graph star(int k)
{
    Graph g(k + 1);
    for (int v = 1; v <= k; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

/// K_{a,b}: sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// 3-dimensional cube Q3.
inline Graph cube()
{
    Graph g(8);
    for (int u = 0; u < 8; ++u) {
        for (int b = 0; b < 3; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// Members of a bitmask over at most 32 vertices.
inline std::vector<Vertex> bits(std::uint32_t mask)
{
    std::vector<Vertex> out;
    for (int v = 0; v < 32; ++v) {
        if ((mask >> v) & 1U) {
            out.push_back(v);
        }
    }
    return out;
}

inline bool naive_independent(const Graph& g, const std::vector<Vertex>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.has_edge(s[a], s[b])) {
                return false;
            }
        }
    }
    return true;
}

/// Maximum independent set size by trying every subset.
inline int naive_alpha(const Graph& g)
{
    int best = 0;
    const int n = g.num_vertices();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        const auto s = bits(m);
        if (static_cast<int>(s.size()) > best && naive_independent(g, s)) {
            best = static_cast<int>(s.size());
        }
    }
    return best;
}

/// True iff the vertices, in cyclic order, form an induced cycle.
inline bool naive_induced_cycle(const Graph& g, const std::vector<Vertex>& cyc)
{
    const std::size_t k = cyc.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if (g.has_edge(cyc[a], cyc[b]) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

/// True iff some induced cycle of length >= 4 exists: every vertex subset
/// of size >= 4 is tested for being an induced cycle (connected, all
/// degrees exactly 2 inside the subset).
inline bool naive_has_long_induced_cycle(const Graph& g)
{
    const int n = g.num_vertices();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        const auto s = bits(m);
        if (s.size() < 4) {
            continue;
        }
        bool all_two = true;
        for (Vertex v : s) {
            int d = 0;
            for (Vertex u : s) {
                d += g.has_edge(u, v) ? 1 : 0;
            }
            all_two = all_two && d == 2;
        }
        if (!all_two) {
            continue;
        }
        // Degree-2 subgraph is a union of cycles; require connectivity.
        std::vector<Vertex> stack{s[0]};
        std::uint32_t seen = 1U << s[0];
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : s) {
                if (g.has_edge(u, v) && !((seen >> u) & 1U)) {
                    seen |= 1U << u;
                    stack.push_back(u);
                }
            }
        }
        if (seen == m) {
            return true;
        }
    }
    return false;
}

/// Proper c-colorability by trying all c^n assignments.
inline bool naive_colorable(const Graph& g, int c)
{
    const int n = g.num_vertices();
    if (n == 0) {
        return true;
    }
    if (c == 0) {
        return false;
    }
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges()) {
            ok = ok && col[static_cast<std::size_t>(u)] != col[static_cast<std::size_t>(v)];
        }
        if (ok) {
            return true;
        }
        std::size_t i = 0;
        while (i < col.size() && ++col[i] == c) {
            col[i++] = 0;
        }
        if (i == col.size()) {
            return false;
        }
    }
}

/// Best weight of a subset passing `keep`, over all 2^n subsets.
template <class Keep>
Weight naive_best_weight(const WeightedInstance& inst, Keep&& keep)
{
    Weight best = 0;
    const int n = inst.num_vertices();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        const auto s = bits(m);
        Weight w = 0;
        for (Vertex v : s) {
            w += inst.weights[static_cast<std::size_t>(v)];
        }
        if (w > best && keep(s)) {
            best = w;
        }
    }
    return best;
}

inline bool proper_coloring(const Graph& g, const std::vector<int>& col, int c)
{
    for (int x : col) {
        if (x < 1 || x > c) {
            return false;
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
            return false;
        }
    }
    return true;
}

/// A graph with a hand-built decomposition whose bags have independence
/// number exactly 2: a clique tree of a random chordal graph whose edges
/// are thinned afterwards. Thinning keeps every edge inside some bag.
struct Alpha2Sample {
    Graph graph;
    TreeDecomposition td;
};

inline Alpha2Sample alpha2_sample(int n, std::uint64_t seed)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t s = mix_seed(seed, attempt);
        const Graph h = random_chordal(n, 4, s);
        const TreeDecomposition td = clique_tree_from_peo(h, *is_chordal(h));
        Rng rng(s);
        Graph g(n);
        for (const auto& [u, v] : h.edges()) {
            if (rng.chance(0.75)) {
                g.add_edge(u, v);
            }
        }
        if (bag_alpha(g, td) == 2) {
            return {g, td};
        }
    }
}

/// Weighted cluster-chordal instance with its decomposition attached.
inline WeightedInstance random_overlay(int n, int max_cluster, int max_clique, Weight max_w, std::uint64_t seed)
{
    const auto clusters = random_cluster(n, max_cluster, mix_seed(seed, 1));
    const Graph chordal = random_chordal(n, max_clique, mix_seed(seed, 2));
    return random_weights(overlay_cluster_chordal(clusters, chordal), max_w, mix_seed(seed, 3));
}

} // namespace iki::test
