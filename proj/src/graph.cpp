#include "iki/graph.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace iki {

Graph::Graph(int n) : n_(n)
{
    if (n < 0) {
        throw ArgumentError("negative vertex count");
    }
    adj_.resize(static_cast<std::size_t>(n));
    adj_bits_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto& [u, v] : edges) {
        if (!add_edge(u, v)) {
            throw ArgumentError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw ArgumentError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw ArgumentError("self-loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        return false;
    }
    auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    adj_bits_[static_cast<std::size_t>(u)].insert(v);
    adj_bits_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

VertexSet neighborhood(const Graph& g, Vertex v, bool closed)
{
    g.check_vertex(v);
    VertexSet s = g.neighbor_set(v);
    if (closed) {
        s.insert(v);
    }
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != static_cast<std::size_t>(g.num_vertices())) {
        throw ArgumentError("vertex set universe does not match graph");
    }
    InducedSubgraph out;
    out.to_original = s.to_vector();
    std::vector<int> to_new(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        to_new[static_cast<std::size_t>(out.to_original[i])] = static_cast<int>(i);
    }
    out.graph = Graph(static_cast<int>(out.to_original.size()));
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        for (Vertex u : g.neighbors(out.to_original[i])) {
            const int j = to_new[static_cast<std::size_t>(u)];
            if (j > static_cast<int>(i)) {
                out.graph.add_edge(static_cast<Vertex>(i), j);
            }
        }
    }
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbor_set(v).intersects(s)) {
            ok = false;
        }
    });
    return ok;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (!ok) {
            return;
        }
        VertexSet rest = s;
        rest.erase(v);
        ok = rest.is_subset_of(g.neighbor_set(v));
    });
    return ok;
}

namespace {

bool extend_independent(const Graph& g, VertexSet candidates, std::size_t needed, std::vector<Vertex>& chosen)
{
    if (needed == 0) {
        return true;
    }
    if (candidates.size() < needed) {
        return false;
    }
    for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
        VertexSet rest = candidates;
        rest -= g.neighbor_set(v);
        // Only later vertices: each subset is visited once.
        for (Vertex u = rest.first(); u != -1 && u <= v; u = rest.next(u)) {
            rest.erase(u);
        }
        chosen.push_back(v);
        if (extend_independent(g, rest, needed - 1, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Vertex>> find_independent_subset(const Graph& g, const VertexSet& s, std::size_t size)
{
    std::vector<Vertex> chosen;
    if (extend_independent(g, s, size, chosen)) {
        return chosen;
    }
    return std::nullopt;
}

bool independence_bounded(const Graph& g, const VertexSet& s, int k)
{
    if (k < 0) {
        throw ArgumentError("independence bound must be non-negative");
    }
    return !find_independent_subset(g, s, static_cast<std::size_t>(k) + 1).has_value();
}

int independence_number(const Graph& g, const VertexSet& s)
{
    int k = 0;
    while (find_independent_subset(g, s, static_cast<std::size_t>(k) + 1)) {
        ++k;
    }
    return k;
}

namespace {

bool color_from(const Graph& g, const std::vector<Vertex>& order, std::size_t pos, int c, std::vector<int>& color)
{
    if (pos == order.size()) {
        return true;
    }
    const Vertex v = order[pos];
    // Symmetry breaking: never open more than one fresh color.
    int max_used = 0;
    for (std::size_t i = 0; i < pos; ++i) {
        max_used = std::max(max_used, color[static_cast<std::size_t>(order[i])]);
    }
    const int limit = std::min(c, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
        bool clash = false;
        for (Vertex u : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(u)] == col) {
                clash = true;
                break;
            }
        }
        if (clash) {
            continue;
        }
        color[static_cast<std::size_t>(v)] = col;
        if (color_from(g, order, pos + 1, c, color)) {
            return true;
        }
        color[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> is_c_colorable(const Graph& g, int c)
{
    if (c < 0) {
        throw ArgumentError("number of colors must be non-negative");
    }
    const int n = g.num_vertices();
    if (n == 0) {
        return std::vector<int>{};
    }
    if (c == 0) {
        return std::nullopt;
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    if (color_from(g, order, 0, c, color)) {
        return color;
    }
    return std::nullopt;
}

namespace {

// Tomita-style pivoting. Returns false once the cap is exceeded.
bool bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::size_t cap, std::vector<VertexSet>& out)
{
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return out.size() <= cap;
    }
    Vertex pivot = -1;
    std::size_t best = 0;
    auto consider = [&](Vertex u) {
        const std::size_t cover = (p & g.neighbor_set(u)).size();
        if (pivot == -1 || cover > best) {
            pivot = u;
            best = cover;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    VertexSet branch = p - g.neighbor_set(pivot);
    for (Vertex v = branch.first(); v != -1; v = branch.next(v)) {
        r.insert(v);
        const bool keep_going = bron_kerbosch(g, r, p & g.neighbor_set(v), x & g.neighbor_set(v), cap, out);
        r.erase(v);
        if (!keep_going) {
            return false;
        }
        p.erase(v);
        x.insert(v);
    }
    return true;
}

} // namespace

CliqueEnumeration maximal_cliques_containing(const Graph& g, Vertex v, std::size_t cap)
{
    g.check_vertex(v);
    CliqueEnumeration result;
    VertexSet r = g.empty_set();
    r.insert(v);
    result.cap_exceeded = !bron_kerbosch(g, r, g.neighbor_set(v), g.empty_set(), cap, result.cliques);
    return result;
}

Graph complement(const Graph& g)
{
    const int n = g.num_vertices();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

std::vector<int> connected_components(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

} // namespace iki
