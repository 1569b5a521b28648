#pragma once

#include "iki/graph.hpp"
#include "iki/recognition.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace iki {

/// Rooted tree decomposition. Bags are sorted vertex lists; `parent[b]`
/// is -1 exactly for the root.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<int> parent;
    int root = -1;

    std::size_t num_bags() const noexcept { return bags.size(); }
    std::vector<std::vector<int>> children() const;
    /// Bags ordered so that every child precedes its parent.
    std::vector<int> postorder() const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// A decomposition in which every bag has at most two children, and a
/// bag with two children equals both of them as a vertex set. Only
/// `normalize_binary` creates one.
class NormalizedTreeDecomposition {
public:
    const TreeDecomposition& decomposition() const noexcept { return td_; }
    const std::vector<std::vector<int>>& children() const noexcept { return children_; }
    const std::vector<int>& postorder() const noexcept { return postorder_; }

private:
    friend NormalizedTreeDecomposition normalize_binary(const TreeDecomposition& td);
    explicit NormalizedTreeDecomposition(TreeDecomposition td);

    TreeDecomposition td_;
    std::vector<std::vector<int>> children_;
    std::vector<int> postorder_;
};

/// Clique tree from a perfect elimination ordering: bag(v) = {v} ∪ later
/// neighbors, attached to the bag of the earliest later neighbor, then
/// adjacent bags where one contains the other are merged. Components are
/// hung below the root (the bag of the last vertex). Throws ArgumentError
/// if `peo` is not a perfect elimination ordering.
TreeDecomposition clique_tree_from_peo(const Graph& g, const EliminationOrdering& peo);

/// Checks the tree shape plus vertex coverage, edge coverage and the
/// running-intersection property.
bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Gives every bag X with several children (not already two copies of X)
/// two copies X1, X2 as children: X1 adopts the first original child, X2
/// the rest; repeated on X2 until the invariant holds. Throws
/// ArgumentError on a malformed tree or a running-intersection violation.
NormalizedTreeDecomposition normalize_binary(const TreeDecomposition& td);

/// max over bags of the independence number of G[bag].
int bag_alpha(const Graph& g, const TreeDecomposition& td);

/// Line format, vertices 1-based:
///   t <num_bags> <root-id>
///   b <id> <parent-id or 0> <v> <v> ...
/// Bag ids are 1-based.
void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition read_tree_decomposition(std::istream& in);

} // namespace iki
