#include "iki/tree_decomposition.hpp"

#include "iki/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace iki {

std::vector<std::vector<int>> TreeDecomposition::children() const
{
    std::vector<std::vector<int>> out(bags.size());
    for (std::size_t b = 0; b < bags.size(); ++b) {
        if (parent[b] >= 0) {
            out[static_cast<std::size_t>(parent[b])].push_back(static_cast<int>(b));
        }
    }
    return out;
}

namespace {

std::vector<int> postorder_of(const std::vector<std::vector<int>>& children, int root)
{
    std::vector<int> order;
    order.reserve(children.size());
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [bag, next] = stack.back();
        if (next < children[static_cast<std::size_t>(bag)].size()) {
            const int child = children[static_cast<std::size_t>(bag)][next++];
            stack.emplace_back(child, 0);
        } else {
            order.push_back(bag);
            stack.pop_back();
        }
    }
    return order;
}

// Parent pointers form a single tree rooted at `root`, and every bag is a
// strictly increasing list of vertices below `n` (n < 0: no range check).
bool valid_shape(const TreeDecomposition& td, int n)
{
    const std::size_t count = td.bags.size();
    if (count == 0 || td.parent.size() != count || td.root < 0 || static_cast<std::size_t>(td.root) >= count ||
        td.parent[static_cast<std::size_t>(td.root)] != -1) {
        return false;
    }
    for (std::size_t b = 0; b < count; ++b) {
        const int p = td.parent[b];
        if (static_cast<int>(b) != td.root && (p < 0 || static_cast<std::size_t>(p) >= count)) {
            return false;
        }
        const auto& bag = td.bags[b];
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || (n >= 0 && bag[i] >= n) || (i > 0 && bag[i - 1] >= bag[i])) {
                return false;
            }
        }
    }
    // Every bag reaches the root.
    std::vector<int> state(count, 0); // 0 unknown, 1 on current walk, 2 reaches root
    state[static_cast<std::size_t>(td.root)] = 2;
    for (std::size_t b = 0; b < count; ++b) {
        std::vector<std::size_t> walk;
        std::size_t x = b;
        while (state[x] == 0) {
            state[x] = 1;
            walk.push_back(x);
            x = static_cast<std::size_t>(td.parent[x]);
        }
        if (state[x] == 1) {
            return false;
        }
        for (auto w : walk) {
            state[w] = 2;
        }
    }
    return true;
}

// For each vertex, the bags containing it form a connected subtree:
// exactly one of them has a parent not containing the vertex.
bool running_intersection(const TreeDecomposition& td)
{
    std::vector<int> tops;
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        const int p = td.parent[b];
        for (Vertex v : td.bags[b]) {
            const bool parent_has =
                p >= 0 && std::binary_search(td.bags[static_cast<std::size_t>(p)].begin(),
                                             td.bags[static_cast<std::size_t>(p)].end(), v);
            if (!parent_has) {
                if (static_cast<std::size_t>(v) >= tops.size()) {
                    tops.resize(static_cast<std::size_t>(v) + 1, 0);
                }
                if (++tops[static_cast<std::size_t>(v)] > 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool sorted_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<int> TreeDecomposition::postorder() const
{
    return postorder_of(children(), root);
}

NormalizedTreeDecomposition::NormalizedTreeDecomposition(TreeDecomposition td)
    : td_(std::move(td)), children_(td_.children()), postorder_(postorder_of(children_, td_.root))
{
}

TreeDecomposition clique_tree_from_peo(const Graph& g, const EliminationOrdering& peo)
{
    const int n = g.num_vertices();
    const auto pos = positions_of(peo, n);
    if (!verify_peo(g, peo)) {
        throw ArgumentError("ordering is not a perfect elimination ordering");
    }
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        td.parent.push_back(-1);
        td.root = 0;
        return td;
    }
    // Bag i belongs to the vertex at position i.
    td.bags.resize(static_cast<std::size_t>(n));
    td.parent.assign(static_cast<std::size_t>(n), -1);
    td.root = n - 1;
    for (int i = 0; i < n; ++i) {
        const Vertex v = peo.order[static_cast<std::size_t>(i)];
        auto& bag = td.bags[static_cast<std::size_t>(i)];
        bag.push_back(v);
        int earliest = -1;
        for (Vertex u : g.neighbors(v)) {
            const int pu = pos[static_cast<std::size_t>(u)];
            if (pu > i) {
                bag.push_back(u);
                if (earliest == -1 || pu < earliest) {
                    earliest = pu;
                }
            }
        }
        std::sort(bag.begin(), bag.end());
        if (i != td.root) {
            td.parent[static_cast<std::size_t>(i)] = earliest == -1 ? td.root : earliest;
        }
    }

    // Contract tree edges whose bags are nested.
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> kids(alive.size());
        for (std::size_t b = 0; b < alive.size(); ++b) {
            if (alive[b] && td.parent[b] >= 0) {
                kids[static_cast<std::size_t>(td.parent[b])].push_back(static_cast<int>(b));
            }
        }
        for (int b : postorder_of(kids, td.root)) {
            const auto ub = static_cast<std::size_t>(b);
            const int p = td.parent[ub];
            if (p < 0) {
                continue;
            }
            const auto up = static_cast<std::size_t>(p);
            const bool child_in_parent = sorted_subset(td.bags[ub], td.bags[up]);
            const bool parent_in_child = !child_in_parent && sorted_subset(td.bags[up], td.bags[ub]);
            if (!child_in_parent && !parent_in_child) {
                continue;
            }
            if (parent_in_child) {
                td.bags[up] = td.bags[ub];
            }
            for (int k : kids[ub]) {
                td.parent[static_cast<std::size_t>(k)] = p;
                kids[up].push_back(k);
            }
            kids[ub].clear();
            auto& siblings = kids[up];
            siblings.erase(std::remove(siblings.begin(), siblings.end(), b), siblings.end());
            alive[ub] = false;
            td.parent[ub] = -1;
            changed = true;
        }
    }

    // Compact.
    std::vector<int> new_id(alive.size(), -1);
    TreeDecomposition out;
    for (std::size_t b = 0; b < alive.size(); ++b) {
        if (alive[b]) {
            new_id[b] = static_cast<int>(out.bags.size());
            out.bags.push_back(std::move(td.bags[b]));
        }
    }
    out.parent.assign(out.bags.size(), -1);
    for (std::size_t b = 0; b < alive.size(); ++b) {
        if (alive[b] && td.parent[b] >= 0) {
            out.parent[static_cast<std::size_t>(new_id[b])] = new_id[static_cast<std::size_t>(td.parent[b])];
        }
    }
    out.root = new_id[static_cast<std::size_t>(td.root)];
    return out;
}

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td)
{
    const int n = g.num_vertices();
    if (!valid_shape(td, n)) {
        return false;
    }
    std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        for (Vertex v : td.bags[b]) {
            bags_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
        }
    }
    for (const auto& list : bags_of) {
        if (list.empty()) {
            return false;
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const auto& a = bags_of[static_cast<std::size_t>(u)];
        const auto& b = bags_of[static_cast<std::size_t>(v)];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) {
            return false;
        }
    }
    return running_intersection(td);
}

NormalizedTreeDecomposition normalize_binary(const TreeDecomposition& td)
{
    if (!valid_shape(td, -1) || !running_intersection(td)) {
        throw ArgumentError("cannot normalize an invalid tree decomposition");
    }
    TreeDecomposition out = td;
    auto kids = td.children();
    std::vector<int> work(td.bags.size());
    for (std::size_t b = 0; b < work.size(); ++b) {
        work[b] = static_cast<int>(b);
    }
    auto add_copy = [&](int of, int parent) {
        const int id = static_cast<int>(out.bags.size());
        out.bags.push_back(out.bags[static_cast<std::size_t>(of)]);
        out.parent.push_back(parent);
        kids.emplace_back();
        return id;
    };
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        const auto ux = static_cast<std::size_t>(x);
        if (kids[ux].size() <= 1) {
            continue;
        }
        if (kids[ux].size() == 2 && out.bags[static_cast<std::size_t>(kids[ux][0])] == out.bags[ux] &&
            out.bags[static_cast<std::size_t>(kids[ux][1])] == out.bags[ux]) {
            continue;
        }
        const std::vector<int> original = kids[ux];
        const int first = add_copy(x, x);
        const int rest = add_copy(x, x);
        kids[static_cast<std::size_t>(first)] = {original.front()};
        out.parent[static_cast<std::size_t>(original.front())] = first;
        for (std::size_t i = 1; i < original.size(); ++i) {
            kids[static_cast<std::size_t>(rest)].push_back(original[i]);
            out.parent[static_cast<std::size_t>(original[i])] = rest;
        }
        kids[ux] = {first, rest};
        work.push_back(rest);
    }
    return NormalizedTreeDecomposition(std::move(out));
}

int bag_alpha(const Graph& g, const TreeDecomposition& td)
{
    int alpha = 0;
    for (const auto& bag : td.bags) {
        alpha = std::max(alpha, independence_number(g, VertexSet(static_cast<std::size_t>(g.num_vertices()), bag)));
    }
    return alpha;
}

void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td)
{
    out << "t " << td.bags.size() << ' ' << td.root + 1 << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1 << ' ' << td.parent[b] + 1;
        for (Vertex v : td.bags[b]) {
            out << ' ' << v + 1;
        }
        out << '\n';
    }
}

TreeDecomposition read_tree_decomposition(std::istream& in)
{
    TreeDecomposition td;
    std::string line;
    std::size_t line_no = 0;
    std::size_t declared = 0;
    bool header = false;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;
        }
        if (tag == "t") {
            long long count = 0;
            long long root = 0;
            if (header || !(ls >> count >> root) || count < 1 || root < 1 || root > count) {
                throw ParseError(line_no, "bad decomposition header");
            }
            header = true;
            declared = static_cast<std::size_t>(count);
            td.bags.resize(declared);
            td.parent.assign(declared, -1);
            seen.assign(declared, false);
            td.root = static_cast<int>(root - 1);
        } else if (tag == "b") {
            long long id = 0;
            long long parent = 0;
            if (!header || !(ls >> id >> parent) || id < 1 || static_cast<std::size_t>(id) > declared || parent < 0 ||
                static_cast<std::size_t>(parent) > declared || seen[static_cast<std::size_t>(id - 1)]) {
                throw ParseError(line_no, "bad bag line");
            }
            seen[static_cast<std::size_t>(id - 1)] = true;
            td.parent[static_cast<std::size_t>(id - 1)] = static_cast<int>(parent - 1);
            long long v = 0;
            auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
            while (ls >> v) {
                if (v < 1) {
                    throw ParseError(line_no, "bad bag vertex");
                }
                bag.push_back(static_cast<Vertex>(v - 1));
            }
            if (!ls.eof()) {
                throw ParseError(line_no, "bad bag vertex");
            }
            std::sort(bag.begin(), bag.end());
        } else {
            throw ParseError(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (!header || std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ParseError(line_no, "decomposition incomplete");
    }
    return td;
}

} // namespace iki
