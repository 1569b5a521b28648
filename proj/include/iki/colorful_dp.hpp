#pragma once

#include "iki/instance.hpp"
#include "iki/tree_decomposition.hpp"

#include <vector>

namespace iki {

inline constexpr int kMaxDpColors = 30;

/// Maximum-weight independent set whose vertices carry pairwise distinct
/// colors. Every bag of `td` must have independence number <= alpha.
///
/// Throws ArgumentError for a missing/invalid coloring or a decomposition
/// that does not fit the graph, AlphaViolation for a bag exceeding alpha,
/// SizeCapError for more than kMaxDpColors distinct colors.
Solution max_weight_colorful_is(const WeightedInstance& inst, const NormalizedTreeDecomposition& td, int alpha);

/// profile[m] is a best colorful independent set using at most m colors
/// (so at most m vertices), m = 0..c where c is the number of distinct
/// colors present. One DP run answers every bound.
std::vector<Solution> colorful_is_profile(const WeightedInstance& inst, const NormalizedTreeDecomposition& td,
                                          int alpha);

/// Maximum-weight independent set over a clique tree; the colorful DP
/// with the color dimension dropped. Colors on `inst` are ignored.
Solution max_weight_is_chordal(const WeightedInstance& inst, const NormalizedTreeDecomposition& td);

struct DpStats {
    /// (bag, C, S) entries written.
    std::size_t entries = 0;
    /// (S, C, D) triples evaluated at join bags.
    std::size_t join_triples = 0;
};

/// Statistics of the last DP run on this thread.
DpStats last_dp_stats();

} // namespace iki
