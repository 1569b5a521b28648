#pragma once

#include "iki/instance.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace iki {

/// Reads the line format
///   p iki <n> <m>
///   w <v> <weight>      (default 1)
///   col <v> <color>
///   cl <v> <cluster-id>
///   e <u> <v> [C|H]
/// with 1-based vertices and `c ...` comment lines. If edges carry tags
/// and no `cl` lines are given, clusters are the components of the C
/// edges. Throws ParseError (with line number) for malformed text and
/// WitnessError for an inconsistent decomposition witness.
WeightedInstance parse_instance(std::istream& in);
WeightedInstance read_instance_file(const std::string& path);

/// Canonical form: every weight, colors and clusters if present, edges
/// sorted; tags only when an edge partition is present.
void write_instance(std::ostream& out, const WeightedInstance& inst);
void write_instance_file(const std::string& path, const WeightedInstance& inst);

struct SolutionRecord {
    std::string problem;
    Solution solution;
    std::string mode;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    /// Written only when set; leave unset for byte-stable output.
    std::optional<double> elapsed_ms;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

void write_solution(std::ostream& out, const SolutionRecord& rec);
void write_solution_file(const std::string& path, const SolutionRecord& rec);
SolutionRecord parse_solution(std::istream& in);

} // namespace iki
