#pragma once

#include "iki/instance.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace iki {

enum class ColoringMode { Exhaustive, Randomized };

struct ColoringFamilySpec {
    ColoringMode mode = ColoringMode::Exhaustive;
    /// Failure probability for Randomized mode, in (0,1).
    double epsilon = 0.01;
    std::uint64_t seed = 0;
    /// Upper bound on the number of colorings tried per reduction.
    std::optional<std::uint64_t> trial_cap;
    /// Exhaustive mode refuses (SizeCapError) when its enumeration would
    /// exceed this many colorings or coverage checks.
    std::uint64_t exhaustive_cap = 5'000'000;
    /// Worker threads for the outermost trial loop. Results do not depend
    /// on this value.
    int jobs = 1;
};

struct ColoringStats {
    /// Colorings f: V -> {1..c} evaluated.
    std::uint64_t outer_trials = 0;
    /// Cluster colorings evaluated (one colorful DP run each).
    std::uint64_t inner_trials = 0;
    /// Distinct vertex subsets handed to the inner solver.
    std::uint64_t inner_calls = 0;

    ColoringStats& operator+=(const ColoringStats& o)
    {
        outer_trials += o.outer_trials;
        inner_trials += o.inner_trials;
        inner_calls += o.inner_calls;
        return *this;
    }
};

using SizePartition = std::vector<int>;

/// All (l_1..l_c) with l_i >= 0 and sum <= ell; ordered by sum, then
/// reverse-lexicographically: (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
std::vector<SizePartition> enumerate_size_partitions(int ell, int c);

/// Solves Max-Weight Independent Set with at most `bound` vertices on a
/// sub-instance (ids local to the sub-instance).
using BoundedMwisSolver = std::function<Solution(const WeightedInstance& sub, int bound)>;

/// Returns best[b] for every b = 0..bound in one call. `seed` is derived
/// from the caller's seed and the vertex subset; `stats` is per worker.
using MwisProfileSolver = std::function<std::vector<Solution>(const WeightedInstance& sub, int bound,
                                                              std::uint64_t seed, ColoringStats& stats)>;

/// Max-weight induced c-colorable subgraph with at most ell vertices, by
/// coloring V with c colors and combining bounded MWIS answers on the
/// color classes. The result carries a proper coloring in {1..c}.
Solution mwccs_from_mwis(const WeightedInstance& inst, int c, int ell, const BoundedMwisSolver& solver,
                         const ColoringFamilySpec& spec, ColoringStats* stats = nullptr);
Solution mwccs_from_mwis(const WeightedInstance& inst, int c, int ell, const MwisProfileSolver& solver,
                         const ColoringFamilySpec& spec, ColoringStats* stats = nullptr);

/// profile[b] (b = 0..ell) is a max-weight independent set with at most b
/// vertices of a cluster⋈chordal instance; `inst` must carry its
/// decomposition witness.
std::vector<Solution> mwis_cluster_chordal_profile(const WeightedInstance& inst, int ell,
                                                   const ColoringFamilySpec& spec, ColoringStats* stats = nullptr);

Solution mwis_cluster_chordal(const WeightedInstance& inst, int ell, const ColoringFamilySpec& spec,
                              ColoringStats* stats = nullptr);

/// Composition of the two reductions.
Solution mwccs_cluster_chordal(const WeightedInstance& inst, int c, int ell, const ColoringFamilySpec& spec,
                               ColoringStats* stats = nullptr);

/// Functions [d] -> [t] (as label vectors) such that every t-subset of
/// [d] is mapped injectively by at least one of them. Built greedily from
/// seeded candidates and checked against every t-subset; cached.
/// Throws SizeCapError when binom(d,t) exceeds `cap`.
const std::vector<std::vector<int>>& perfect_hash_family(int d, int t, std::uint64_t cap);

/// Number of partitions of an n-set into exactly k blocks, saturating at
/// UINT64_MAX.
std::uint64_t stirling2(int n, int k);

} // namespace iki
