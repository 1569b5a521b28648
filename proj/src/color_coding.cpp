#include "iki/color_coding.hpp"

#include "iki/colorful_dp.hpp"
#include "iki/errors.hpp"
#include "iki/recognition.hpp"
#include "iki/rng.hpp"
#include "iki/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace iki {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

using Profile = std::vector<Solution>;

void merge_profile(Profile& into, const Profile& from)
{
    for (std::size_t m = 0; m < into.size(); ++m) {
        if (better_solution(from[m], into[m])) {
            into[m] = from[m];
        }
    }
}

Profile empty_profile(int ell, bool with_colors)
{
    Solution empty;
    if (with_colors) {
        empty.color_assignment = std::vector<int>{};
    }
    return Profile(static_cast<std::size_t>(ell) + 1, empty);
}

// Runs eval(lo, hi, stats) over contiguous chunks of [0, trials) and merges
// the resulting profiles in chunk order, so the outcome matches a single
// sequential pass.
template <class Eval>
Profile run_chunks(std::uint64_t trials, int jobs, Profile init, ColoringStats& stats, Eval eval)
{
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, std::max<std::uint64_t>(trials, 1));
    if (workers == 1) {
        merge_profile(init, eval(0, trials, stats));
        return init;
    }
    std::vector<Profile> results(workers);
    std::vector<ColoringStats> local(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = trials * w / workers;
        const std::uint64_t hi = trials * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                results[w] = eval(lo, hi, local[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (std::uint64_t w = 0; w < workers; ++w) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        merge_profile(init, results[w]);
        stats += local[w];
    }
    return init;
}

std::uint64_t randomized_trials(double base, int ell, const ColoringFamilySpec& spec)
{
    if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0)) {
        throw ArgumentError("epsilon must lie strictly between 0 and 1");
    }
    const double x = std::ceil(std::pow(base, ell) * std::log(1.0 / spec.epsilon));
    std::uint64_t trials = x >= 1.8e19 ? kSaturated : static_cast<std::uint64_t>(std::max(x, 1.0));
    if (spec.trial_cap) {
        trials = std::min(trials, std::max<std::uint64_t>(*spec.trial_cap, 1));
    }
    if (trials == kSaturated) {
        throw SizeCapError("randomized repetition count overflows; set a trial cap");
    }
    return trials;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto num = static_cast<std::uint64_t>(n - k + i);
        if (r > kSaturated / num) {
            return kSaturated;
        }
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

void validate_modes(int c, int ell)
{
    if (c < 1) {
        throw ArgumentError("number of colors must be at least 1");
    }
    if (ell < 0) {
        throw ArgumentError("size bound must be non-negative");
    }
}

// Restricted growth strings over n positions using exactly `blocks` labels,
// in lexicographic order; f is called with the trial index and labels.
template <class F>
void for_each_rgs(int n, int blocks, std::uint64_t lo, std::uint64_t hi, F&& f)
{
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::uint64_t index = 0;
    auto rec = [&](auto&& self, int pos, int used) -> bool {
        if (index >= hi) {
            return false;
        }
        if (pos == n) {
            if (used == blocks) {
                if (index >= lo) {
                    f(index, labels);
                }
                ++index;
            }
            return true;
        }
        // Enough positions must remain to open the missing blocks.
        const int top = std::min(used + 1, blocks);
        for (int l = 0; l < top; ++l) {
            const int now = std::max(used, l + 1);
            if (n - pos - 1 < blocks - now) {
                continue;
            }
            labels[static_cast<std::size_t>(pos)] = l;
            if (!self(self, pos + 1, now)) {
                return false;
            }
        }
        return true;
    };
    rec(rec, 0, 0);
}

struct PreparedClusterChordal {
    WeightedInstance chordal;
    NormalizedTreeDecomposition td;
    std::vector<int> cluster_index;
    int num_clusters = 0;
    int alpha_chordal = 0;
};

NormalizedTreeDecomposition chordal_decomposition(const Graph& h)
{
    const auto peo = is_chordal(h);
    if (!peo) {
        throw ArgumentError("the chordal part of the decomposition is not chordal");
    }
    return normalize_binary(clique_tree_from_peo(h, *peo));
}

PreparedClusterChordal prepare(const WeightedInstance& inst)
{
    check_partition_consistency(inst);
    Graph h = chordal_part(inst);
    auto td = chordal_decomposition(h);
    std::vector<int> labels = *inst.clusters;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<int> index;
    index.reserve(inst.clusters->size());
    for (int l : *inst.clusters) {
        index.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
    }
    const int alpha = static_cast<int>(max_weight_is_chordal(WeightedInstance(h), td).vertices.size());
    return PreparedClusterChordal{WeightedInstance(std::move(h), inst.weights), std::move(td), std::move(index),
                                  static_cast<int>(labels.size()), alpha};
}

} // namespace

std::uint64_t stirling2(int n, int k)
{
    if (n < 0 || k < 0) {
        return 0;
    }
    // row[j] = S(i, j)
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            const auto uj = static_cast<std::size_t>(j);
            const std::uint64_t a = row[uj];
            const std::uint64_t b = row[uj - 1];
            if (a != 0 && a > (kSaturated - b) / static_cast<std::uint64_t>(j)) {
                row[uj] = kSaturated;
            } else {
                row[uj] = static_cast<std::uint64_t>(j) * a + b;
            }
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

std::vector<SizePartition> enumerate_size_partitions(int ell, int c)
{
    if (ell < 0 || c < 1) {
        throw ArgumentError("size partitions need ell >= 0 and c >= 1");
    }
    std::vector<SizePartition> out;
    SizePartition current(static_cast<std::size_t>(c), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == c - 1) {
            current[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (int sum = 0; sum <= ell; ++sum) {
        rec(rec, 0, sum);
    }
    return out;
}

const std::vector<std::vector<int>>& perfect_hash_family(int d, int t, std::uint64_t cap)
{
    if (t < 1 || t > d || d > 64) {
        throw ArgumentError("perfect hash family needs 1 <= t <= d <= 64");
    }
    static std::mutex lock;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard guard(lock);
    if (auto it = cache.find({d, t}); it != cache.end()) {
        return it->second;
    }
    std::vector<std::vector<int>> family;
    if (t == 1) {
        family.emplace_back(static_cast<std::size_t>(d), 0);
    } else if (t == d) {
        std::vector<int> id(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            id[static_cast<std::size_t>(i)] = i;
        }
        family.push_back(std::move(id));
    } else {
        if (binomial(d, t) > cap) {
            throw SizeCapError("perfect hash family for d=" + std::to_string(d) + ", t=" + std::to_string(t) +
                               " exceeds the exhaustive cap");
        }
        std::vector<std::uint64_t> uncovered;
        auto rec = [&](auto&& self, int from, int left, std::uint64_t mask) -> void {
            if (left == 0) {
                uncovered.push_back(mask);
                return;
            }
            for (int i = from; i <= d - left; ++i) {
                self(self, i + 1, left - 1, mask | (std::uint64_t{1} << i));
            }
        };
        rec(rec, 0, t, 0);
        auto injective = [&](const std::vector<int>& f, std::uint64_t mask) {
            std::uint64_t seen = 0;
            for (; mask != 0; mask &= mask - 1) {
                const std::uint64_t bit = std::uint64_t{1} << f[static_cast<std::size_t>(std::countr_zero(mask))];
                if ((seen & bit) != 0) {
                    return false;
                }
                seen |= bit;
            }
            return true;
        };
        Rng rng(mix_seed(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(t)));
        constexpr int kCandidates = 2;
        while (!uncovered.empty()) {
            std::vector<int> best;
            std::size_t best_count = 0;
            for (int k = 0; k < kCandidates; ++k) {
                std::vector<int> f(static_cast<std::size_t>(d));
                for (auto& x : f) {
                    x = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
                }
                const auto count = static_cast<std::size_t>(
                    std::count_if(uncovered.begin(), uncovered.end(), [&](auto m) { return injective(f, m); }));
                if (count > best_count) {
                    best_count = count;
                    best = std::move(f);
                }
            }
            if (best_count == 0) {
                continue;
            }
            std::erase_if(uncovered, [&](auto m) { return injective(best, m); });
            family.push_back(std::move(best));
        }
    }
    return cache.emplace(std::pair{d, t}, std::move(family)).first->second;
}

std::vector<Solution> mwis_cluster_chordal_profile(const WeightedInstance& inst, int ell,
                                                   const ColoringFamilySpec& spec, ColoringStats* stats)
{
    if (ell < 0) {
        throw ArgumentError("size bound must be non-negative");
    }
    if (!inst.has_decomposition()) {
        throw ArgumentError("cluster⋈chordal solving needs the decomposition witness");
    }
    ColoringStats local;
    PreparedClusterChordal prep = prepare(inst);
    // No independent set is larger than the number of clusters or the
    // independence number of the chordal part.
    const int t = std::min({ell, prep.num_clusters, prep.alpha_chordal});
    Profile best = empty_profile(t, false);
    if (t > 0) {
        std::uint64_t trials = 1;
        const std::vector<std::vector<int>>* family = nullptr;
        if (t < prep.num_clusters) {
            if (spec.mode == ColoringMode::Exhaustive) {
                family = &perfect_hash_family(prep.num_clusters, t, spec.exhaustive_cap);
                trials = family->size();
            } else {
                trials = randomized_trials(std::exp(1.0), t, spec);
            }
        }
        auto eval = [&](std::uint64_t lo, std::uint64_t hi, ColoringStats& st) {
            WeightedInstance colored = prep.chordal;
            colored.colors = std::vector<int>(static_cast<std::size_t>(colored.num_vertices()));
            std::vector<int> f(static_cast<std::size_t>(prep.num_clusters));
            Profile acc = empty_profile(t, false);
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                if (t == prep.num_clusters) {
                    for (std::size_t i = 0; i < f.size(); ++i) {
                        f[i] = static_cast<int>(i);
                    }
                } else if (family) {
                    f = (*family)[trial];
                } else {
                    Rng rng(mix_seed(spec.seed, trial));
                    for (auto& x : f) {
                        x = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
                    }
                }
                for (std::size_t v = 0; v < colored.colors->size(); ++v) {
                    (*colored.colors)[v] = f[static_cast<std::size_t>(prep.cluster_index[v])] + 1;
                }
                Profile p = colorful_is_profile(colored, prep.td, 1);
                p.resize(static_cast<std::size_t>(t) + 1, p.back());
                merge_profile(acc, p);
                ++st.inner_trials;
            }
            return acc;
        };
        best = run_chunks(trials, spec.jobs, std::move(best), local, eval);
    }
    best.resize(static_cast<std::size_t>(ell) + 1, best.back());
    for (std::size_t m = 0; m < best.size(); ++m) {
        SolutionRequirements req;
        req.independent = true;
        req.max_size = m;
        check_solution(inst, best[m], req);
    }
    if (stats) {
        *stats += local;
    }
    return best;
}

Solution mwis_cluster_chordal(const WeightedInstance& inst, int ell, const ColoringFamilySpec& spec,
                              ColoringStats* stats)
{
    return mwis_cluster_chordal_profile(inst, ell, spec, stats).back();
}

Solution mwccs_from_mwis(const WeightedInstance& inst, int c, int ell, const BoundedMwisSolver& solver,
                         const ColoringFamilySpec& spec, ColoringStats* stats)
{
    MwisProfileSolver adapter = [&](const WeightedInstance& sub, int bound, std::uint64_t, ColoringStats&) {
        Profile p;
        for (int b = 0; b <= bound; ++b) {
            Solution s = solver(sub, b);
            SolutionRequirements req;
            req.independent = true;
            req.max_size = static_cast<std::size_t>(b);
            check_solution(sub, s, req);
            p.push_back(std::move(s));
        }
        return p;
    };
    return mwccs_from_mwis(inst, c, ell, adapter, spec, stats);
}

Solution mwccs_from_mwis(const WeightedInstance& inst, int c, int ell, const MwisProfileSolver& solver,
                         const ColoringFamilySpec& spec, ColoringStats* stats)
{
    validate_modes(c, ell);
    const int n = inst.num_vertices();
    const auto parts = enumerate_size_partitions(ell, c);
    const int blocks = std::min(n, c);
    ColoringStats local;

    enum class Source { Identity, Rgs, Random } source = Source::Identity;
    std::uint64_t trials = 1;
    if (n > c) {
        if (spec.mode == ColoringMode::Exhaustive) {
            trials = stirling2(n, blocks);
            if (trials > spec.exhaustive_cap) {
                throw SizeCapError("exhaustive coloring enumeration needs " + std::to_string(trials) +
                                   " functions, above the cap; use randomized mode");
            }
            source = Source::Rgs;
        } else {
            trials = randomized_trials(static_cast<double>(c), ell, spec);
            source = Source::Random;
        }
    }

    auto eval = [&](std::uint64_t lo, std::uint64_t hi, ColoringStats& st) {
        std::unordered_map<VertexSet, Profile> memo;
        Profile acc = empty_profile(0, true);
        std::vector<const Profile*> class_profiles(static_cast<std::size_t>(c));
        std::vector<VertexSet> classes(static_cast<std::size_t>(c), inst.graph.empty_set());
        auto evaluate = [&](const std::vector<int>& f) {
            for (auto& s : classes) {
                s.clear();
            }
            for (Vertex v = 0; v < n; ++v) {
                classes[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])].insert(v);
            }
            for (std::size_t j = 0; j < classes.size(); ++j) {
                auto it = memo.find(classes[j]);
                if (it == memo.end()) {
                    SubInstance sub = restrict_instance(inst, classes[j]);
                    Profile local_profile =
                        solver(sub.instance, ell, mix_seed(spec.seed ^ 0x5bd1e995ULL, classes[j].hash()), st);
                    if (local_profile.size() != static_cast<std::size_t>(ell) + 1) {
                        throw InternalError("inner solver returned a profile of the wrong length");
                    }
                    for (auto& s : local_profile) {
                        for (auto& v : s.vertices) {
                            v = sub.to_original[static_cast<std::size_t>(v)];
                        }
                    }
                    ++st.inner_calls;
                    it = memo.emplace(classes[j], std::move(local_profile)).first;
                }
                class_profiles[j] = &it->second;
            }
            for (const auto& part : parts) {
                Weight total = 0;
                for (std::size_t j = 0; j < part.size(); ++j) {
                    total = checked_add(total, (*class_profiles[j])[static_cast<std::size_t>(part[j])].weight);
                }
                if (total < acc[0].weight) {
                    continue;
                }
                std::vector<std::pair<Vertex, int>> tagged;
                for (std::size_t j = 0; j < part.size(); ++j) {
                    for (Vertex v : (*class_profiles[j])[static_cast<std::size_t>(part[j])].vertices) {
                        tagged.emplace_back(v, static_cast<int>(j) + 1);
                    }
                }
                std::sort(tagged.begin(), tagged.end());
                Solution cand;
                cand.weight = total;
                cand.color_assignment = std::vector<int>{};
                for (const auto& [v, col] : tagged) {
                    cand.vertices.push_back(v);
                    cand.color_assignment->push_back(col);
                }
                if (better_solution(cand, acc[0])) {
                    acc[0] = std::move(cand);
                }
            }
            ++st.outer_trials;
        };
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        switch (source) {
        case Source::Identity:
            for (Vertex v = 0; v < n; ++v) {
                f[static_cast<std::size_t>(v)] = v;
            }
            if (lo < hi) {
                evaluate(f);
            }
            break;
        case Source::Rgs:
            for_each_rgs(n, blocks, lo, hi, [&](std::uint64_t, const std::vector<int>& labels) { evaluate(labels); });
            break;
        case Source::Random:
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                Rng rng(mix_seed(spec.seed, trial));
                for (auto& x : f) {
                    x = static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
                }
                evaluate(f);
            }
            break;
        }
        return acc;
    };
    Profile best = run_chunks(trials, spec.jobs, empty_profile(0, true), local, eval);
    SolutionRequirements req;
    req.num_colors = c;
    req.max_size = static_cast<std::size_t>(ell);
    check_solution(inst, best[0], req);
    if (stats) {
        *stats += local;
    }
    return best[0];
}

Solution mwccs_cluster_chordal(const WeightedInstance& inst, int c, int ell, const ColoringFamilySpec& spec,
                               ColoringStats* stats)
{
    validate_modes(c, ell);
    if (!inst.has_decomposition()) {
        throw ArgumentError("cluster⋈chordal solving needs the decomposition witness");
    }
    check_partition_consistency(inst);
    chordal_decomposition(chordal_part(inst));
    MwisProfileSolver inner = [&spec](const WeightedInstance& sub, int bound, std::uint64_t seed,
                                      ColoringStats& st) {
        ColoringFamilySpec s = spec;
        s.seed = seed;
        s.jobs = 1;
        return mwis_cluster_chordal_profile(sub, bound, s, &st);
    };
    return mwccs_from_mwis(inst, c, ell, inner, spec, stats);
}

} // namespace iki
