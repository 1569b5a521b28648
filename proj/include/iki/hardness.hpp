#pragma once

#include "iki/graph.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace iki {

/// Graph whose vertex set is split into k independent color classes.
/// classes[i][p] is the vertex v_{i+1}^{(p+1)}.
struct MulticoloredCliqueInstance {
    Graph graph;
    std::vector<std::vector<Vertex>> classes;

    int k() const noexcept { return static_cast<int>(classes.size()); }
};

/// Throws ArgumentError unless the classes partition V into independent sets.
void validate_mcc(const MulticoloredCliqueInstance& mcc);

/// Vertex name inside the reduced graph. Indices are 1-based as in the
/// gadget description: u[i->j](p) for selection vertices, e[i<j](p,q) for
/// verification vertices.
struct GadgetName {
    enum class Kind { Selection, Verification };
    Kind kind = Kind::Selection;
    int i = 0;
    int j = 0;
    int p = 0;
    int q = 0;

    std::string to_string() const;
    static GadgetName parse(const std::string& text);

    friend auto operator<=>(const GadgetName&, const GadgetName&) = default;
};

class GadgetIndex {
public:
    Vertex add(const GadgetName& name);
    const GadgetName& name_of(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> find(const GadgetName& name) const;
    std::size_t size() const noexcept { return names_.size(); }

    /// One "<vertex-1based> <name>" line per vertex.
    void write(std::ostream& out) const;
    static GadgetIndex read(std::istream& in);

    friend bool operator==(const GadgetIndex& a, const GadgetIndex& b) { return a.names_ == b.names_; }

private:
    std::vector<GadgetName> names_;
};

struct Construction {
    Graph graph;
    /// k^2 + binom(k,2)
    int ell = 0;
    GadgetIndex index;
    int k = 0;
    std::vector<int> class_sizes;
    /// The ell vertex-disjoint cliques U_{i->j} (i,j ascending) followed
    /// by E_{i<j}.
    std::vector<std::vector<Vertex>> cliques;
};

/// Reduction from Multicolored Clique to Independent Set on 2-simplicial
/// 3-minoes. Requires k >= 2.
Construction construct_mis_instance(const MulticoloredCliqueInstance& mcc);

struct ConstructionReport {
    bool has_clique = false;
    std::size_t max_independent_set = 0;
    bool equivalence = false;
    bool partition_ok = false;
    bool three_mino = false;
    bool two_simplicial = false;
    std::size_t certificates_checked = 0;
    bool certificates_ok = false;

    bool ok() const noexcept
    {
        return equivalence && partition_ok && three_mino && two_simplicial && certificates_ok;
    }
};

inline constexpr int kConstructionOracleCap = 40;

/// Checks the clique/independent-set equivalence by brute force, the
/// clique partition, the 3-mino and 2-simplicial properties, and every
/// clique cover certificate. Throws SizeCapError above
/// kConstructionOracleCap vertices and InternalError if a check fails.
ConstructionReport verify_construction(const MulticoloredCliqueInstance& mcc, const Construction& c);

/// The three cliques covering N[u] for a selection vertex u; the third is
/// empty when i = j. Throws ArgumentError for an unknown or verification
/// name and InternalError if the sets are not cliques covering N[u].
std::array<VertexSet, 3> clique_cover_certificate(const Construction& c, const GadgetName& u);

/// g plus k+1 pairwise nonadjacent vertices adjacent to all of V.
Graph gen_indkind_hardness(const Graph& g, int k);

/// g plus one vertex adjacent to all of V.
Graph gen_k1kfree_hardness(const Graph& g, int k);

} // namespace iki
