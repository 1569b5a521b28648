#include "iki/oracle.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace iki {

namespace {

void require_at_most(int n, int cap, const char* what)
{
    if (n > cap) {
        throw SizeCapError(std::string(what) + " oracle accepts at most " + std::to_string(cap) + " vertices");
    }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

std::vector<Vertex> members(std::uint64_t mask)
{
    std::vector<Vertex> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
        if ((mask & 1U) != 0) {
            out.push_back(v);
        }
    }
    return out;
}

// Visits every independent set (as a bitmask) with at most `limit` vertices.
// `allowed(v, chosen)` may veto extra vertices.
template <class Allowed, class Visit>
void for_each_independent(const std::vector<std::uint64_t>& adj, std::size_t limit, Allowed&& allowed, Visit&& visit)
{
    const int n = static_cast<int>(adj.size());
    auto rec = [&](auto&& self, int i, std::uint64_t chosen, std::size_t size) -> void {
        if (i == n) {
            visit(chosen);
            return;
        }
        self(self, i + 1, chosen, size);
        if (size < limit && (adj[static_cast<std::size_t>(i)] & chosen) == 0 && allowed(i, chosen)) {
            self(self, i + 1, chosen | (std::uint64_t{1} << i), size + 1);
        }
    };
    rec(rec, 0, 0, 0);
}

void offer(Solution& best, const WeightedInstance& inst, std::uint64_t mask)
{
    Solution cand;
    cand.vertices = members(mask);
    cand.weight = weight_of(inst.weights, cand.vertices);
    if (cand.weight >= best.weight && better_solution(cand, best)) {
        best = std::move(cand);
    }
}

} // namespace

Solution brute_mwis(const WeightedInstance& inst, std::optional<int> ell)
{
    const int n = inst.num_vertices();
    require_at_most(n, kBruteMwisCap, "MWIS");
    const std::size_t limit = ell ? static_cast<std::size_t>(std::max(*ell, 0)) : static_cast<std::size_t>(n);
    Solution best;
    for_each_independent(
        adjacency_masks(inst.graph), limit, [](int, std::uint64_t) { return true; },
        [&](std::uint64_t mask) { offer(best, inst, mask); });
    return best;
}

Solution brute_colorful_is(const WeightedInstance& inst)
{
    const int n = inst.num_vertices();
    require_at_most(n, kBruteColorfulCap, "colorful IS");
    if (!inst.colors || inst.colors->size() != static_cast<std::size_t>(n)) {
        throw ArgumentError("colorful IS oracle needs one color per vertex");
    }
    const auto& col = *inst.colors;
    auto distinct = [&](int v, std::uint64_t chosen) {
        for (Vertex u : members(chosen)) {
            if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
        return true;
    };
    Solution best;
    for_each_independent(adjacency_masks(inst.graph), static_cast<std::size_t>(n), distinct,
                         [&](std::uint64_t mask) { offer(best, inst, mask); });
    return best;
}

Solution brute_mwccs(const WeightedInstance& inst, int c, std::optional<int> ell)
{
    const int n = inst.num_vertices();
    require_at_most(n, kBruteMwccsCap, "MWcCS");
    if (c < 0) {
        throw ArgumentError("number of colors must be non-negative");
    }
    const int limit = ell ? std::max(*ell, 0) : n;
    Solution best;
    best.color_assignment = std::vector<int>{};
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > limit) {
            continue;
        }
        Solution cand;
        cand.vertices = members(mask);
        cand.weight = weight_of(inst.weights, cand.vertices);
        if (cand.weight < best.weight || !better_solution(cand, best)) {
            continue;
        }
        const VertexSet s(static_cast<std::size_t>(n), cand.vertices);
        const auto coloring = is_c_colorable(induced_subgraph(inst.graph, s).graph, c);
        if (!coloring) {
            continue;
        }
        cand.color_assignment = *coloring;
        best = std::move(cand);
    }
    return best;
}

bool brute_multicolored_clique(const MulticoloredCliqueInstance& mcc)
{
    validate_mcc(mcc);
    std::uint64_t product = 1;
    for (const auto& cls : mcc.classes) {
        product *= std::max<std::uint64_t>(cls.size(), 1);
        if (product > kBruteMccCap) {
            throw SizeCapError("multicolored clique oracle accepts at most 10^6 transversals");
        }
    }
    const auto k = mcc.classes.size();
    std::vector<Vertex> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) {
            return true;
        }
        for (Vertex v : mcc.classes[i]) {
            const bool fits =
                std::all_of(chosen.begin(), chosen.end(), [&](Vertex u) { return mcc.graph.has_edge(u, v); });
            if (fits) {
                chosen.push_back(v);
                if (self(self, i + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    return rec(rec, 0);
}

bool brute_hamiltonian_cycle(const Graph& g)
{
    const int n = g.num_vertices();
    require_at_most(n, kBruteHamiltonianCap, "Hamiltonian cycle");
    if (n < 3) {
        return false;
    }
    // reach[mask] = endpoints v such that a path from 0 through exactly
    // `mask` ends in v.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        const std::uint32_t ends = reach[mask];
        if (ends == 0) {
            continue;
        }
        for (int v = 0; v < n; ++v) {
            if ((ends >> v & 1U) == 0) {
                continue;
            }
            for (Vertex u : g.neighbors(v)) {
                if ((mask >> u & 1U) == 0) {
                    reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
                }
            }
        }
    }
    for (Vertex v : g.neighbors(0)) {
        if ((reach[full] >> v & 1U) != 0) {
            return true;
        }
    }
    return false;
}

} // namespace iki
