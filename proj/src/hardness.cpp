#include "iki/hardness.hpp"

#include "iki/errors.hpp"
#include "iki/oracle.hpp"
#include "iki/recognition.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace iki {

void validate_mcc(const MulticoloredCliqueInstance& mcc)
{
    const int n = mcc.graph.num_vertices();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < mcc.classes.size(); ++i) {
        for (Vertex v : mcc.classes[i]) {
            if (v < 0 || v >= n) {
                throw ArgumentError("class member out of range");
            }
            if (owner[static_cast<std::size_t>(v)] != -1) {
                throw ArgumentError("vertex " + std::to_string(v + 1) + " lies in two classes");
            }
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (owner[static_cast<std::size_t>(v)] == -1) {
            throw ArgumentError("vertex " + std::to_string(v + 1) + " lies in no class");
        }
    }
    for (const auto& [u, v] : mcc.graph.edges()) {
        if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)]) {
            throw ArgumentError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                "} lies inside a color class");
        }
    }
}

std::string GadgetName::to_string() const
{
    std::ostringstream out;
    if (kind == Kind::Selection) {
        out << "u[" << i << "->" << j << "](" << p << ")";
    } else {
        out << "e[" << i << "<" << j << "](" << p << "," << q << ")";
    }
    return out.str();
}

GadgetName GadgetName::parse(const std::string& text)
{
    GadgetName name;
    char tail = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "u[%d->%d](%d)%n%c", &name.i, &name.j, &name.p, &consumed, &tail) == 3 &&
        static_cast<std::size_t>(consumed) == text.size()) {
        name.kind = Kind::Selection;
        return name;
    }
    if (std::sscanf(text.c_str(), "e[%d<%d](%d,%d)%n%c", &name.i, &name.j, &name.p, &name.q, &consumed, &tail) ==
            4 &&
        static_cast<std::size_t>(consumed) == text.size()) {
        name.kind = Kind::Verification;
        return name;
    }
    throw ArgumentError("malformed gadget name '" + text + "'");
}

Vertex GadgetIndex::add(const GadgetName& name)
{
    names_.push_back(name);
    return static_cast<Vertex>(names_.size() - 1);
}

std::optional<Vertex> GadgetIndex::find(const GadgetName& name) const
{
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<Vertex>(it - names_.begin());
}

void GadgetIndex::write(std::ostream& out) const
{
    for (std::size_t v = 0; v < names_.size(); ++v) {
        out << v + 1 << ' ' << names_[v].to_string() << '\n';
    }
}

GadgetIndex GadgetIndex::read(std::istream& in)
{
    GadgetIndex index;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::size_t id = 0;
        std::string name;
        if (!(ls >> id)) {
            continue;
        }
        if (!(ls >> name) || id != index.size() + 1) {
            throw ParseError(line_no, "expected '<id> <name>' with consecutive ids");
        }
        try {
            index.add(GadgetName::parse(name));
        } catch (const ArgumentError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return index;
}

Construction construct_mis_instance(const MulticoloredCliqueInstance& mcc)
{
    validate_mcc(mcc);
    const int k = mcc.k();
    if (k < 2) {
        throw ArgumentError("the reduction needs k >= 2");
    }
    Construction out;
    out.k = k;
    out.ell = k * k + k * (k - 1) / 2;
    for (const auto& cls : mcc.classes) {
        out.class_sizes.push_back(static_cast<int>(cls.size()));
    }
    auto size_of = [&](int i) { return out.class_sizes[static_cast<std::size_t>(i - 1)]; };

    // Selection vertices, ordered by (i, j, p).
    std::map<std::array<int, 3>, Vertex> sel;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            std::vector<Vertex> clique;
            for (int p = 1; p <= size_of(i); ++p) {
                const Vertex v = out.index.add({GadgetName::Kind::Selection, i, j, p, 0});
                sel[{i, j, p}] = v;
                clique.push_back(v);
            }
            out.cliques.push_back(std::move(clique));
        }
    }
    // Verification vertices, ordered by (i, j, p, q).
    struct Ver {
        int i, j, p, q;
        Vertex id;
    };
    std::vector<Ver> ver;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            std::vector<Vertex> clique;
            for (int p = 1; p <= size_of(i); ++p) {
                for (int q = 1; q <= size_of(j); ++q) {
                    const Vertex a = mcc.classes[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p - 1)];
                    const Vertex b = mcc.classes[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(q - 1)];
                    if (mcc.graph.has_edge(a, b)) {
                        const Vertex v = out.index.add({GadgetName::Kind::Verification, i, j, p, q});
                        ver.push_back({i, j, p, q, v});
                        clique.push_back(v);
                    }
                }
            }
            out.cliques.push_back(std::move(clique));
        }
    }

    Graph g(static_cast<int>(out.index.size()));
    for (const auto& clique : out.cliques) {
        for (std::size_t a = 0; a < clique.size(); ++a) {
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                g.add_edge(clique[a], clique[b]);
            }
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const int l = (j % k) + 1;
            for (int p = 2; p <= size_of(i); ++p) {
                for (int q = 1; q < p; ++q) {
                    g.add_edge(sel[{i, j, p}], sel[{i, l, q}]);
                }
            }
        }
    }
    // Every selection vertex is wired, including those whose graph vertex
    // has no edge to the other class; otherwise such a vertex could sit
    // next to an arbitrary verification vertex in an independent set.
    for (const auto& e : ver) {
        for (int p = 1; p <= size_of(e.i); ++p) {
            if (p != e.p) {
                g.add_edge(sel[{e.i, e.j, p}], e.id);
            }
        }
        for (int q = 1; q <= size_of(e.j); ++q) {
            if (q != e.q) {
                g.add_edge(sel[{e.j, e.i, q}], e.id);
            }
        }
    }
    out.graph = std::move(g);
    return out;
}

std::array<VertexSet, 3> clique_cover_certificate(const Construction& c, const GadgetName& name)
{
    const auto u = c.index.find(name);
    if (!u || name.kind != GadgetName::Kind::Selection) {
        throw ArgumentError("no selection vertex named " + name.to_string());
    }
    const int k = c.k;
    const int i = name.i;
    const int j = name.j;
    const int p = name.p;
    const int succ = (j % k) + 1;
    const int pred = j == 1 ? k : j - 1;
    const int size = c.class_sizes[static_cast<std::size_t>(i - 1)];
    auto id = [&](int jj, int pp) { return *c.index.find({GadgetName::Kind::Selection, i, jj, pp, 0}); };

    std::array<VertexSet, 3> sets{c.graph.empty_set(), c.graph.empty_set(), c.graph.empty_set()};
    for (int q = 1; q <= size; ++q) {
        if (q >= p) {
            sets[0].insert(id(j, q));
        } else {
            sets[0].insert(id(succ, q));
        }
        if (q <= p) {
            sets[1].insert(id(j, q));
        } else {
            sets[1].insert(id(pred, q));
        }
    }
    if (i != j) {
        const int lo = std::min(i, j);
        const int hi = std::max(i, j);
        sets[2].insert(*u);
        for (Vertex w : c.graph.neighbors(*u)) {
            const auto& wn = c.index.name_of(w);
            if (wn.kind == GadgetName::Kind::Verification && wn.i == lo && wn.j == hi) {
                sets[2].insert(w);
            }
        }
    }
    VertexSet covered = c.graph.empty_set();
    for (const auto& s : sets) {
        if (!is_clique(c.graph, s)) {
            throw InternalError("certificate set for " + name.to_string() + " is not a clique");
        }
        covered |= s;
    }
    if (!neighborhood(c.graph, *u, true).is_subset_of(covered)) {
        throw InternalError("certificate for " + name.to_string() + " misses part of N[u]");
    }
    return sets;
}

ConstructionReport verify_construction(const MulticoloredCliqueInstance& mcc, const Construction& c)
{
    if (c.graph.num_vertices() > kConstructionOracleCap) {
        throw SizeCapError("construction check accepts at most " + std::to_string(kConstructionOracleCap) +
                           " vertices");
    }
    ConstructionReport r;
    r.has_clique = brute_multicolored_clique(mcc);
    r.max_independent_set = brute_mwis(WeightedInstance(c.graph)).vertices.size();
    r.equivalence = r.has_clique == (r.max_independent_set >= static_cast<std::size_t>(c.ell));

    VertexSet seen = c.graph.empty_set();
    r.partition_ok = c.cliques.size() == static_cast<std::size_t>(c.ell);
    for (const auto& clique : c.cliques) {
        const VertexSet s(static_cast<std::size_t>(c.graph.num_vertices()), clique);
        r.partition_ok = r.partition_ok && s.size() == clique.size() && !s.intersects(seen) && is_clique(c.graph, s);
        seen |= s;
    }
    r.partition_ok = r.partition_ok && seen == c.graph.all_vertices();

    r.three_mino = is_k_mino(c.graph, 3);
    r.two_simplicial = two_simplicial_ordering(c.graph).has_value();

    r.certificates_ok = true;
    for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
        const auto& name = c.index.name_of(v);
        if (name.kind != GadgetName::Kind::Selection) {
            continue;
        }
        try {
            clique_cover_certificate(c, name);
            ++r.certificates_checked;
        } catch (const InternalError&) {
            r.certificates_ok = false;
        }
    }
    if (!r.ok()) {
        throw InternalError("construction check failed");
    }
    return r;
}

Graph gen_indkind_hardness(const Graph& g, int k)
{
    if (k < 1) {
        throw ArgumentError("k must be at least 1");
    }
    const int n = g.num_vertices();
    Graph out(n + k + 1);
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    for (int a = 0; a <= k; ++a) {
        for (Vertex v = 0; v < n; ++v) {
            out.add_edge(n + a, v);
        }
    }
    return out;
}

Graph gen_k1kfree_hardness(const Graph& g, int k)
{
    if (k < 1) {
        throw ArgumentError("k must be at least 1");
    }
    const int n = g.num_vertices();
    Graph out(n + 1);
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    for (Vertex v = 0; v < n; ++v) {
        out.add_edge(n, v);
    }
    return out;
}

} // namespace iki
