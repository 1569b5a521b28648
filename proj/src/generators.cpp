#include "iki/generators.hpp"

#include "iki/errors.hpp"
#include "iki/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace iki {

namespace {

std::vector<Vertex> shuffled_ids(int n, Rng& rng)
{
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::swap(ids[i - 1], ids[rng.below(i)]);
    }
    return ids;
}

void require_non_negative(int n)
{
    if (n < 0) {
        throw ArgumentError("vertex count must be non-negative");
    }
}

} // namespace

Graph random_chordal(int n, int max_clique, std::uint64_t seed)
{
    require_non_negative(n);
    if (max_clique < 1) {
        throw ArgumentError("max_clique must be at least 1");
    }
    Rng rng(seed);
    std::vector<std::vector<Vertex>> bags{{}};
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        const auto& base = bags[rng.below(bags.size())];
        std::vector<Vertex> pool = base;
        const auto limit = std::min(pool.size(), static_cast<std::size_t>(max_clique - 1));
        const auto take = static_cast<std::size_t>(rng.below(limit + 1));
        for (std::size_t i = 0; i < take; ++i) {
            std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        }
        pool.resize(take);
        for (Vertex u : pool) {
            edges.emplace_back(u, v);
        }
        pool.push_back(v);
        bags.push_back(std::move(pool));
    }
    const auto ids = shuffled_ids(n, rng);
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.add_edge(ids[static_cast<std::size_t>(u)], ids[static_cast<std::size_t>(v)]);
    }
    return g;
}

ClusterGraph random_cluster(int n, int max_cluster, std::uint64_t seed)
{
    require_non_negative(n);
    if (max_cluster < 1) {
        throw ArgumentError("max_cluster must be at least 1");
    }
    Rng rng(seed);
    const auto ids = shuffled_ids(n, rng);
    ClusterGraph out{Graph(n), std::vector<int>(static_cast<std::size_t>(n), 0)};
    int label = 0;
    for (std::size_t start = 0; start < ids.size(); ++label) {
        const auto size = std::min<std::size_t>(1 + rng.below(static_cast<std::uint64_t>(max_cluster)),
                                                ids.size() - start);
        for (std::size_t a = start; a < start + size; ++a) {
            out.clusters[static_cast<std::size_t>(ids[a])] = label;
            for (std::size_t b = start; b < a; ++b) {
                out.graph.add_edge(ids[a], ids[b]);
            }
        }
        start += size;
    }
    return out;
}

WeightedInstance overlay_cluster_chordal(const ClusterGraph& cluster_part, const Graph& chordal_part)
{
    const int n = chordal_part.num_vertices();
    if (cluster_part.graph.num_vertices() != n || cluster_part.clusters.size() != static_cast<std::size_t>(n)) {
        throw ArgumentError("overlay parts must have the same vertex count");
    }
    Graph g(n);
    EdgePartition part;
    part.chordal_edges = chordal_part.edges();
    for (const auto& [u, v] : part.chordal_edges) {
        g.add_edge(u, v);
    }
    for (const auto& e : cluster_part.graph.edges()) {
        if (g.add_edge(e.first, e.second)) {
            part.cluster_edges.push_back(e);
        }
    }
    WeightedInstance inst(std::move(g));
    inst.clusters = cluster_part.clusters;
    inst.edge_partition = std::move(part);
    check_partition_consistency(inst);
    return inst;
}

MulticoloredCliqueInstance random_multicolored_clique(int k, std::span<const int> class_sizes, double p, bool plant,
                                                      std::uint64_t seed)
{
    if (k < 1 || class_sizes.size() != static_cast<std::size_t>(k)) {
        throw ArgumentError("need k >= 1 and one size per class");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("edge probability must lie in [0,1]");
    }
    MulticoloredCliqueInstance mcc;
    int n = 0;
    for (int s : class_sizes) {
        if (s < 0 || (plant && s == 0)) {
            throw ArgumentError("class sizes must be non-negative (positive when planting)");
        }
        std::vector<Vertex> cls(static_cast<std::size_t>(s));
        std::iota(cls.begin(), cls.end(), n);
        n += s;
        mcc.classes.push_back(std::move(cls));
    }
    Rng rng(seed);
    mcc.graph = Graph(n);
    for (std::size_t i = 0; i < mcc.classes.size(); ++i) {
        for (std::size_t j = i + 1; j < mcc.classes.size(); ++j) {
            for (Vertex a : mcc.classes[i]) {
                for (Vertex b : mcc.classes[j]) {
                    if (rng.chance(p)) {
                        mcc.graph.add_edge(a, b);
                    }
                }
            }
        }
    }
    if (plant) {
        std::vector<Vertex> pick;
        for (const auto& cls : mcc.classes) {
            pick.push_back(cls[rng.below(cls.size())]);
        }
        for (std::size_t a = 0; a < pick.size(); ++a) {
            for (std::size_t b = a + 1; b < pick.size(); ++b) {
                mcc.graph.add_edge(pick[a], pick[b]);
            }
        }
    }
    return mcc;
}

WeightedInstance random_weights(WeightedInstance inst, Weight max_w, std::uint64_t seed)
{
    Rng rng(seed);
    for (auto& w : inst.weights) {
        w = max_w == std::numeric_limits<Weight>::max() ? rng.next() : rng.below(max_w + 1);
    }
    return inst;
}

std::vector<int> random_colors(int n, int c, std::uint64_t seed)
{
    require_non_negative(n);
    if (c < 1) {
        throw ArgumentError("number of colors must be at least 1");
    }
    Rng rng(seed);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (auto& x : out) {
        x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
    }
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    require_non_negative(n);
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(p)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

} // namespace iki
