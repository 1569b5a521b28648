#include "iki/colorful_dp.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>

namespace iki {

namespace {

constexpr Weight kInfeasible = std::numeric_limits<Weight>::max();

thread_local DpStats g_stats;

struct BagTable {
    std::vector<std::vector<Vertex>> selections;
    std::vector<std::uint32_t> masks;
    std::vector<Weight> weights;
    // Indexed [selection * num_masks + C]. Freed once the parent is done.
    std::vector<Weight> value;
    // Single child: child selection index. Join: the color set D.
    std::vector<std::int32_t> back;
};

class ColorfulDp {
public:
    ColorfulDp(const WeightedInstance& inst, const NormalizedTreeDecomposition& td, int alpha, bool use_colors)
        : inst_(inst), td_(td), alpha_(alpha), use_colors_(use_colors)
    {
        const int n = inst.num_vertices();
        if (alpha < 0) {
            throw ArgumentError("alpha must be non-negative");
        }
        if (inst.weights.size() != static_cast<std::size_t>(n)) {
            throw ArgumentError("weight vector length does not match vertex count");
        }
        if (weight_of(inst.weights, inst.graph.all_vertices()) == kInfeasible) {
            throw ArgumentError("total weight collides with the infeasible sentinel");
        }
        if (!verify_tree_decomposition(inst.graph, td.decomposition())) {
            throw ArgumentError("tree decomposition is not valid for the graph");
        }
        color_bit_.assign(static_cast<std::size_t>(n), 0);
        if (use_colors) {
            if (!inst.colors || inst.colors->size() != static_cast<std::size_t>(n)) {
                throw ArgumentError("colorful DP needs one color per vertex");
            }
            std::vector<int> used(*inst.colors);
            for (int c : used) {
                if (c < 1) {
                    throw ArgumentError("vertex color " + std::to_string(c) + " is out of range");
                }
            }
            std::sort(used.begin(), used.end());
            used.erase(std::unique(used.begin(), used.end()), used.end());
            if (used.size() > static_cast<std::size_t>(kMaxDpColors)) {
                throw SizeCapError("colorful DP supports at most " + std::to_string(kMaxDpColors) + " colors");
            }
            num_colors_ = static_cast<int>(used.size());
            for (std::size_t v = 0; v < color_bit_.size(); ++v) {
                const auto rank = std::lower_bound(used.begin(), used.end(), (*inst.colors)[v]) - used.begin();
                color_bit_[v] = std::uint32_t{1} << rank;
            }
        }
        num_masks_ = std::size_t{1} << num_colors_;
        tables_.resize(td.decomposition().num_bags());
    }

    void run()
    {
        g_stats = DpStats{};
        const auto& kids = td_.children();
        for (int b : td_.postorder()) {
            const auto ub = static_cast<std::size_t>(b);
            build_selections(b);
            if (kids[ub].empty()) {
                leaf(b);
            } else if (kids[ub].size() == 1) {
                single(b, kids[ub][0]);
            } else {
                join(b, kids[ub][0], kids[ub][1]);
            }
            g_stats.entries += tables_[ub].value.size();
            for (int k : kids[ub]) {
                auto& child = tables_[static_cast<std::size_t>(k)].value;
                child.clear();
                child.shrink_to_fit();
            }
        }
    }

    std::vector<Solution> profile() const
    {
        const auto& root = tables_[static_cast<std::size_t>(td_.decomposition().root)];
        // best_exact[k]: best entry whose color set has exactly k colors.
        std::vector<std::pair<std::size_t, std::size_t>> best(static_cast<std::size_t>(num_colors_) + 1,
                                                              {num_masks_, 0});
        auto value_at = [&](std::pair<std::size_t, std::size_t> key) {
            return key.first == num_masks_ ? kInfeasible : root.value[key.second * num_masks_ + key.first];
        };
        auto improves = [&](Weight v, std::pair<std::size_t, std::size_t> incumbent) {
            const Weight w = value_at(incumbent);
            return v != kInfeasible && (w == kInfeasible || v > w);
        };
        for (std::size_t c = 0; c < num_masks_; ++c) {
            const auto k = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(c)));
            for (std::size_t s = 0; s < root.selections.size(); ++s) {
                if (improves(root.value[s * num_masks_ + c], best[k])) {
                    best[k] = {c, s};
                }
            }
        }
        for (std::size_t k = 1; k < best.size(); ++k) {
            if (improves(value_at(best[k - 1]), best[k])) {
                best[k] = best[k - 1];
            }
        }
        std::vector<Solution> out;
        out.reserve(best.size());
        for (std::size_t k = 0; k < best.size(); ++k) {
            if (k > 0 && best[k] == best[k - 1]) {
                out.push_back(out.back());
                continue;
            }
            // The empty selection with C = {} is always feasible.
            out.push_back(reconstruct(best[k].first, best[k].second, value_at(best[k])));
        }
        return out;
    }

private:
    const BagTable& table(int b) const { return tables_[static_cast<std::size_t>(b)]; }

    void build_selections(int b)
    {
        const auto& bag = td_.decomposition().bags[static_cast<std::size_t>(b)];
        const auto bag_set = VertexSet(static_cast<std::size_t>(inst_.num_vertices()), bag);
        const bool bounded = alpha_ == 1 ? is_clique(inst_.graph, bag_set)
                                         : independence_bounded(inst_.graph, bag_set, alpha_);
        if (!bounded) {
            throw AlphaViolation("bag " + std::to_string(b + 1) + " has more than " + std::to_string(alpha_) +
                                 " pairwise nonadjacent vertices");
        }
        auto& t = tables_[static_cast<std::size_t>(b)];
        std::vector<Vertex> current;
        auto dfs = [&](auto&& self, std::size_t from, std::uint32_t mask, Weight w) -> void {
            t.selections.push_back(current);
            t.masks.push_back(mask);
            t.weights.push_back(w);
            if (current.size() == static_cast<std::size_t>(alpha_)) {
                return;
            }
            for (std::size_t i = from; i < bag.size(); ++i) {
                const Vertex v = bag[i];
                const std::uint32_t bit = color_bit_[static_cast<std::size_t>(v)];
                if ((mask & bit) != 0) {
                    continue;
                }
                const bool free = std::none_of(current.begin(), current.end(),
                                               [&](Vertex u) { return inst_.graph.has_edge(u, v); });
                if (!free) {
                    continue;
                }
                current.push_back(v);
                self(self, i + 1, mask | bit, w + inst_.weights[static_cast<std::size_t>(v)]);
                current.pop_back();
            }
        };
        dfs(dfs, 0, 0, 0);
        t.value.assign(t.selections.size() * num_masks_, kInfeasible);
        t.back.assign(t.selections.size() * num_masks_, -1);
    }

    void leaf(int b)
    {
        auto& t = tables_[static_cast<std::size_t>(b)];
        for (std::size_t s = 0; s < t.selections.size(); ++s) {
            for (std::size_t c = 0; c < num_masks_; ++c) {
                if ((c & t.masks[s]) == t.masks[s]) {
                    t.value[s * num_masks_ + c] = t.weights[s];
                }
            }
        }
    }

    // Vertices of `sel` outside the child bag, with their color mask and weight.
    struct Split {
        std::vector<Vertex> shared;
        std::uint32_t new_mask = 0;
        Weight new_weight = 0;
    };

    Split split(const std::vector<Vertex>& sel, const std::vector<Vertex>& child_bag) const
    {
        Split out;
        for (Vertex v : sel) {
            if (std::binary_search(child_bag.begin(), child_bag.end(), v)) {
                out.shared.push_back(v);
            } else {
                out.new_mask |= color_bit_[static_cast<std::size_t>(v)];
                out.new_weight += inst_.weights[static_cast<std::size_t>(v)];
            }
        }
        return out;
    }

    void single(int b, int y)
    {
        auto& t = tables_[static_cast<std::size_t>(b)];
        const auto& ct = table(y);
        const auto& bag = td_.decomposition().bags[static_cast<std::size_t>(b)];
        // Group child selections by their trace on the parent bag and keep,
        // per color set, the best value and the child selection giving it.
        std::map<std::vector<Vertex>, std::size_t> group_of;
        std::vector<Weight> gval;
        std::vector<std::int32_t> garg;
        for (std::size_t j = 0; j < ct.selections.size(); ++j) {
            std::vector<Vertex> key;
            std::set_intersection(ct.selections[j].begin(), ct.selections[j].end(), bag.begin(), bag.end(),
                                  std::back_inserter(key));
            auto [it, fresh] = group_of.emplace(std::move(key), group_of.size());
            if (fresh) {
                gval.resize(gval.size() + num_masks_, kInfeasible);
                garg.resize(garg.size() + num_masks_, -1);
            }
            const std::size_t base = it->second * num_masks_;
            for (std::size_t c = 0; c < num_masks_; ++c) {
                const Weight v = ct.value[j * num_masks_ + c];
                if (v != kInfeasible && (gval[base + c] == kInfeasible || v > gval[base + c])) {
                    gval[base + c] = v;
                    garg[base + c] = static_cast<std::int32_t>(j);
                }
            }
        }
        const auto& child_bag = td_.decomposition().bags[static_cast<std::size_t>(y)];
        for (std::size_t s = 0; s < t.selections.size(); ++s) {
            const Split sp = split(t.selections[s], child_bag);
            const auto it = group_of.find(sp.shared);
            if (it == group_of.end()) {
                continue;
            }
            const std::size_t base = it->second * num_masks_;
            for (std::size_t c = 0; c < num_masks_; ++c) {
                if ((c & sp.new_mask) != sp.new_mask) {
                    continue;
                }
                const std::size_t cc = c & ~static_cast<std::size_t>(sp.new_mask);
                if (gval[base + cc] == kInfeasible) {
                    continue;
                }
                t.value[s * num_masks_ + c] = gval[base + cc] + sp.new_weight;
                t.back[s * num_masks_ + c] = garg[base + cc];
            }
        }
    }

    void join(int b, int y, int z)
    {
        auto& t = tables_[static_cast<std::size_t>(b)];
        const auto& ty = table(y);
        const auto& tz = table(z);
        for (std::size_t s = 0; s < t.selections.size(); ++s) {
            const std::size_t ms = t.masks[s];
            const Weight ws = t.weights[s];
            for (std::size_t c = 0; c < num_masks_; ++c) {
                if ((c & ms) != ms) {
                    continue;
                }
                const std::size_t rest = c & ~ms;
                Weight best = kInfeasible;
                std::int32_t arg = -1;
                // D runs over all subsets of C \ col(S), starting at C \ col(S).
                for (std::size_t d = rest;; d = (d - 1) & rest) {
                    const std::size_t cy = ms | d;
                    const std::size_t cz = c & ~d;
                    assert((cy & cz) == ms && (cy | cz) == c);
                    ++g_stats.join_triples;
                    const Weight a = ty.value[s * num_masks_ + cy];
                    const Weight bz = tz.value[s * num_masks_ + cz];
                    if (a != kInfeasible && bz != kInfeasible) {
                        const Weight v = a - ws + bz;
                        if (best == kInfeasible || v > best) {
                            best = v;
                            arg = static_cast<std::int32_t>(d);
                        }
                    }
                    if (d == 0) {
                        break;
                    }
                }
                t.value[s * num_masks_ + c] = best;
                t.back[s * num_masks_ + c] = arg;
            }
        }
    }

    Solution reconstruct(std::size_t color_set, std::size_t sel, Weight expected) const
    {
        const auto& kids = td_.children();
        VertexSet chosen = inst_.graph.empty_set();
        struct Frame {
            int bag;
            std::size_t c;
            std::size_t s;
        };
        std::vector<Frame> stack{{td_.decomposition().root, color_set, sel}};
        while (!stack.empty()) {
            const Frame f = stack.back();
            stack.pop_back();
            const auto& t = table(f.bag);
            for (Vertex v : t.selections[f.s]) {
                chosen.insert(v);
            }
            const auto& ch = kids[static_cast<std::size_t>(f.bag)];
            const std::int32_t bp = t.back[f.s * num_masks_ + f.c];
            if (ch.size() == 1) {
                const auto& child_bag = td_.decomposition().bags[static_cast<std::size_t>(ch[0])];
                const Split sp = split(t.selections[f.s], child_bag);
                stack.push_back({ch[0], f.c & ~static_cast<std::size_t>(sp.new_mask), static_cast<std::size_t>(bp)});
            } else if (ch.size() == 2) {
                const auto d = static_cast<std::size_t>(bp);
                stack.push_back({ch[0], t.masks[f.s] | d, f.s});
                stack.push_back({ch[1], f.c & ~d, f.s});
            }
        }
        Solution sol;
        sol.vertices = chosen.to_vector();
        sol.weight = weight_of(inst_.weights, sol.vertices);
        if (sol.weight != expected) {
            throw InternalError("DP witness weight differs from its table value");
        }
        SolutionRequirements req;
        req.independent = true;
        req.colorful = use_colors_;
        if (use_colors_) {
            req.max_size = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(color_set)));
        }
        check_solution(inst_, sol, req);
        return sol;
    }

    const WeightedInstance& inst_;
    const NormalizedTreeDecomposition& td_;
    int alpha_;
    bool use_colors_;
    int num_colors_ = 0;
    std::size_t num_masks_ = 1;
    std::vector<std::uint32_t> color_bit_;
    std::vector<BagTable> tables_;
};

} // namespace

std::vector<Solution> colorful_is_profile(const WeightedInstance& inst, const NormalizedTreeDecomposition& td,
                                          int alpha)
{
    ColorfulDp dp(inst, td, alpha, true);
    dp.run();
    return dp.profile();
}

Solution max_weight_colorful_is(const WeightedInstance& inst, const NormalizedTreeDecomposition& td, int alpha)
{
    return colorful_is_profile(inst, td, alpha).back();
}

Solution max_weight_is_chordal(const WeightedInstance& inst, const NormalizedTreeDecomposition& td)
{
    ColorfulDp dp(inst, td, 1, false);
    dp.run();
    return dp.profile().back();
}

DpStats last_dp_stats()
{
    return g_stats;
}

} // namespace iki
