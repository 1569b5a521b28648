#include "iki/recognition.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace iki {

std::vector<int> positions_of(const EliminationOrdering& ord, int n)
{
    if (ord.order.size() != static_cast<std::size_t>(n)) {
        throw ArgumentError("ordering length " + std::to_string(ord.order.size()) + " does not match vertex count " +
                            std::to_string(n));
    }
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        const Vertex v = ord.order[i];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
            throw ArgumentError("ordering is not a permutation");
        }
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return pos;
}

EliminationOrdering maximum_cardinality_search(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    EliminationOrdering visit;
    visit.order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
                best = v;
            }
        }
        numbered[static_cast<std::size_t>(best)] = true;
        visit.order.push_back(best);
        for (Vertex u : g.neighbors(best)) {
            ++weight[static_cast<std::size_t>(u)];
        }
    }
    return visit;
}

bool verify_peo(const Graph& g, const EliminationOrdering& ord)
{
    const int n = g.num_vertices();
    const auto pos = positions_of(ord, n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet later = g.empty_set();
        for (Vertex u : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) {
                later.insert(u);
            }
        }
        if (!is_clique(g, later)) {
            return false;
        }
    }
    return true;
}

std::optional<EliminationOrdering> is_chordal(const Graph& g)
{
    EliminationOrdering peo = maximum_cardinality_search(g);
    std::reverse(peo.order.begin(), peo.order.end());
    if (verify_peo(g, peo)) {
        return peo;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g)
{
    // Any chordless cycle of length >= 4 passes through some v with two
    // nonadjacent cycle-neighbors a, b, and the rest of the cycle avoids
    // N[v]. A shortest a-b path in G - (N[v] \ {a,b}) closes such a cycle.
    const int n = g.num_vertices();
    std::vector<int> prev(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t ia = 0; ia < nb.size(); ++ia) {
            for (std::size_t ib = ia + 1; ib < nb.size(); ++ib) {
                const Vertex a = nb[ia];
                const Vertex b = nb[ib];
                if (g.has_edge(a, b)) {
                    continue;
                }
                VertexSet blocked = g.neighbor_set(v);
                blocked.insert(v);
                blocked.erase(b);
                std::fill(prev.begin(), prev.end(), -2);
                prev[static_cast<std::size_t>(a)] = -1;
                std::deque<Vertex> queue{a};
                while (!queue.empty() && prev[static_cast<std::size_t>(b)] == -2) {
                    const Vertex x = queue.front();
                    queue.pop_front();
                    for (Vertex y : g.neighbors(x)) {
                        if (prev[static_cast<std::size_t>(y)] == -2 && !blocked.contains(y)) {
                            prev[static_cast<std::size_t>(y)] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if (prev[static_cast<std::size_t>(b)] == -2) {
                    continue;
                }
                std::vector<Vertex> cycle{v};
                std::vector<Vertex> path;
                for (Vertex x = b; x != -1; x = prev[static_cast<std::size_t>(x)]) {
                    path.push_back(x);
                }
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g)
{
    for (Vertex b = 0; b < g.num_vertices(); ++b) {
        for (Vertex a : g.neighbors(b)) {
            VertexSet rest = g.neighbor_set(b) - g.neighbor_set(a);
            rest.erase(a);
            if (const Vertex c = rest.first(); c != -1) {
                return std::array<Vertex, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

bool is_cluster(const Graph& g)
{
    return !find_induced_p3(g).has_value();
}

bool is_k_mino(const Graph& g, int k)
{
    if (k < 1) {
        throw ArgumentError("k-mino requires k >= 1");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (maximal_cliques_containing(g, v, static_cast<std::size_t>(k)).cap_exceeded) {
            return false;
        }
    }
    return true;
}

std::optional<StarWitness> is_k1k_free(const Graph& g, int k)
{
    if (k < 1) {
        throw ArgumentError("K_{1,k}-freeness requires k >= 1");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (auto leaves = find_independent_subset(g, g.neighbor_set(v), static_cast<std::size_t>(k))) {
            return StarWitness{v, std::move(*leaves)};
        }
    }
    return std::nullopt;
}

namespace {

// Complement of G[s] is bipartite.
bool complement_bipartite(const Graph& g, const VertexSet& s)
{
    std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<Vertex> stack;
    for (Vertex root = s.first(); root != -1; root = s.next(root)) {
        if (side[static_cast<std::size_t>(root)] != -1) {
            continue;
        }
        side[static_cast<std::size_t>(root)] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            VertexSet non_nb = s - g.neighbor_set(x);
            non_nb.erase(x);
            for (Vertex y = non_nb.first(); y != -1; y = non_nb.next(y)) {
                int& sy = side[static_cast<std::size_t>(y)];
                if (sy == -1) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    stack.push_back(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

bool clique_coverable(const Graph& g, const VertexSet& s, int k)
{
    if (k < 0) {
        throw ArgumentError("clique cover size must be non-negative");
    }
    if (s.empty()) {
        return true;
    }
    if (k == 0) {
        return false;
    }
    if (k == 1) {
        return is_clique(g, s);
    }
    if (k == 2) {
        return complement_bipartite(g, s);
    }
    return is_c_colorable(complement(induced_subgraph(g, s).graph), k).has_value();
}

namespace {

template <class Qualifies>
std::optional<EliminationOrdering> greedy_peel(const Graph& g, Qualifies&& qualifies)
{
    VertexSet remaining = g.all_vertices();
    EliminationOrdering ord;
    ord.order.reserve(static_cast<std::size_t>(g.num_vertices()));
    while (!remaining.empty()) {
        Vertex chosen = -1;
        for (Vertex v = remaining.first(); v != -1; v = remaining.next(v)) {
            VertexSet closed = g.neighbor_set(v) & remaining;
            closed.insert(v);
            if (qualifies(closed)) {
                chosen = v;
                break;
            }
        }
        if (chosen == -1) {
            return std::nullopt;
        }
        ord.order.push_back(chosen);
        remaining.erase(chosen);
    }
    return ord;
}

template <class Qualifies>
bool verify_right_neighborhoods(const Graph& g, const EliminationOrdering& ord, Qualifies&& qualifies)
{
    const auto pos = positions_of(ord, g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        VertexSet closed = g.empty_set();
        closed.insert(v);
        for (Vertex u : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) {
                closed.insert(u);
            }
        }
        if (!qualifies(closed)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<EliminationOrdering> two_simplicial_ordering(const Graph& g)
{
    return greedy_peel(g, [&](const VertexSet& closed) { return clique_coverable(g, closed, 2); });
}

bool verify_k_simplicial(const Graph& g, const EliminationOrdering& ord, int k)
{
    if (k < 1) {
        throw ArgumentError("k-simplicial requires k >= 1");
    }
    return verify_right_neighborhoods(g, ord, [&](const VertexSet& closed) { return clique_coverable(g, closed, k); });
}

bool verify_inductive_k_independent(const Graph& g, const EliminationOrdering& ord, int k)
{
    if (k < 1) {
        throw ArgumentError("inductive k-independence requires k >= 1");
    }
    return verify_right_neighborhoods(g, ord,
                                      [&](const VertexSet& closed) { return independence_bounded(g, closed, k); });
}

std::optional<EliminationOrdering> find_inductive_k_independent_ordering(const Graph& g, int k)
{
    if (k < 1) {
        throw ArgumentError("inductive k-independence requires k >= 1");
    }
    return greedy_peel(g, [&](const VertexSet& closed) { return independence_bounded(g, closed, k); });
}

namespace {

struct DecompositionSearch {
    const Graph& g;
    std::vector<int> cluster;
    std::vector<std::vector<Vertex>> members;
    std::optional<ClusterChordalDecomposition> found;

    // For a fixed clustering: the forced chordal edges are E minus the
    // intra-cluster pairs; any subset of the intra-cluster edges may be
    // added on top (an edge may lie in both parts).
    bool try_clustering()
    {
        const int n = g.num_vertices();
        std::vector<Edge> forced;
        std::vector<Edge> optional;
        for (const auto& e : g.edges()) {
            (cluster[static_cast<std::size_t>(e.first)] == cluster[static_cast<std::size_t>(e.second)] ? optional
                                                                                                       : forced)
                .push_back(e);
        }
        // Candidate order: none, all, then the remaining subsets.
        const std::size_t count = std::size_t{1} << optional.size();
        for (std::size_t step = 0; step < count; ++step) {
            const std::size_t mask = step == 0 ? 0 : step == 1 ? count - 1 : step - 1;
            std::vector<Edge> chordal = forced;
            std::vector<Edge> cluster_only;
            for (std::size_t i = 0; i < optional.size(); ++i) {
                ((mask >> i) & 1U ? chordal : cluster_only).push_back(optional[i]);
            }
            Graph h(n, chordal);
            if (auto peo = is_chordal(h)) {
                std::sort(chordal.begin(), chordal.end());
                found = ClusterChordalDecomposition{std::move(cluster_only), std::move(chordal), std::move(*peo),
                                                    cluster};
                return true;
            }
        }
        return false;
    }

    bool assign(Vertex v)
    {
        if (v == g.num_vertices()) {
            return try_clustering();
        }
        // Fresh singleton first, so chordal graphs get E_cluster = ∅.
        cluster[static_cast<std::size_t>(v)] = static_cast<int>(members.size());
        members.push_back({v});
        if (assign(v + 1)) {
            return true;
        }
        members.pop_back();
        for (std::size_t c = 0; c < members.size(); ++c) {
            bool fits = true;
            for (Vertex u : members[c]) {
                if (!g.has_edge(u, v)) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            cluster[static_cast<std::size_t>(v)] = static_cast<int>(c);
            members[c].push_back(v);
            if (assign(v + 1)) {
                return true;
            }
            members[c].pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<ClusterChordalDecomposition> brute_force_cluster_chordal(const Graph& g, std::size_t edge_cap)
{
    if (g.num_edges() > edge_cap) {
        throw SizeCapError("cluster⋈chordal brute force refuses " + std::to_string(g.num_edges()) +
                           " edges (cap " + std::to_string(edge_cap) + ")");
    }
    DecompositionSearch search{g, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), -1), {}, {}};
    search.assign(0);
    return std::move(search.found);
}

void attach_decomposition(WeightedInstance& inst, const ClusterChordalDecomposition& dec)
{
    inst.clusters = dec.clusters;
    inst.edge_partition = EdgePartition{dec.cluster_edges, dec.chordal_edges};
    std::sort(inst.edge_partition->cluster_edges.begin(), inst.edge_partition->cluster_edges.end());
    std::sort(inst.edge_partition->chordal_edges.begin(), inst.edge_partition->chordal_edges.end());
}

bool is_cubic(const Graph& g)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 3) {
            return false;
        }
    }
    return true;
}

bool is_triangle_free(const Graph& g)
{
    for (const auto& [u, v] : g.edges()) {
        if (g.neighbor_set(u).intersects(g.neighbor_set(v))) {
            return false;
        }
    }
    return true;
}

bool hamiltonicity_via_decomposition(const Graph& g)
{
    if (g.num_vertices() == 0 || !is_cubic(g)) {
        throw ArgumentError("Hamiltonicity check requires a cubic graph");
    }
    if (!is_triangle_free(g)) {
        throw ArgumentError("Hamiltonicity check requires a triangle-free graph");
    }
    const Vertex v = 0;
    const auto all = g.edges();
    for (Vertex w : g.neighbors(v)) {
        std::vector<Edge> rest;
        for (const auto& e : all) {
            if (e != Edge{std::min(v, w), std::max(v, w)}) {
                rest.push_back(e);
            }
        }
        if (brute_force_cluster_chordal(Graph(g.num_vertices(), rest), rest.size())) {
            return true;
        }
    }
    return false;
}

} // namespace iki
