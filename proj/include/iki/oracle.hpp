#pragma once

#include "iki/hardness.hpp"
#include "iki/instance.hpp"

#include <optional>

namespace iki {

// Exhaustive reference solvers. They share nothing with the solvers they
// check beyond graph primitives, and refuse inputs above their caps.

inline constexpr int kBruteMwisCap = 40;
inline constexpr int kBruteMwccsCap = 18;
inline constexpr int kBruteColorfulCap = 20;
inline constexpr std::uint64_t kBruteMccCap = 1'000'000;
inline constexpr int kBruteHamiltonianCap = 14;

Solution brute_mwis(const WeightedInstance& inst, std::optional<int> ell = std::nullopt);

/// Best vertex set of size <= ell inducing a c-colorable subgraph; the
/// result carries a proper coloring.
Solution brute_mwccs(const WeightedInstance& inst, int c, std::optional<int> ell = std::nullopt);

Solution brute_colorful_is(const WeightedInstance& inst);

bool brute_multicolored_clique(const MulticoloredCliqueInstance& mcc);

bool brute_hamiltonian_cycle(const Graph& g);

} // namespace iki
