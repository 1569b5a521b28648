#include "support.hpp"

#include "iki/errors.hpp"
#include "iki/generators.hpp"
#include "iki/hardness.hpp"
#include "iki/oracle.hpp"
#include "iki/recognition.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace iki;
using namespace iki::test;

namespace {

// Classes of the given sizes laid out as consecutive ids, with the listed
// cross edges (0-based vertex ids).
MulticoloredCliqueInstance mcc_of(std::vector<int> sizes, std::initializer_list<std::pair<int, int>> edges)
{
    MulticoloredCliqueInstance m;
    int next = 0;
    for (int s : sizes) {
        std::vector<Vertex> cls;
        for (int p = 0; p < s; ++p) {
            cls.push_back(next++);
        }
        m.classes.push_back(cls);
    }
    m.graph = make_graph(next, edges);
    return m;
}

GadgetName sel(int i, int j, int p)
{
    return {GadgetName::Kind::Selection, i, j, p, 0};
}

} // namespace

TEST_CASE("gadget names")
{
    const GadgetName u = sel(1, 2, 3);
    CHECK(u.to_string() == "u[1->2](3)");
    CHECK(GadgetName::parse("u[1->2](3)") == u);
    const GadgetName e{GadgetName::Kind::Verification, 1, 3, 2, 4};
    CHECK(e.to_string() == "e[1<3](2,4)");
    CHECK(GadgetName::parse(e.to_string()) == e);
    CHECK_THROWS_AS(GadgetName::parse("u[1->2](3)x"), ArgumentError);
    CHECK_THROWS_AS(GadgetName::parse("v1"), ArgumentError);
}

TEST_CASE("invalid multicolored instances")
{
    auto inside = mcc_of({2, 1}, {{0, 1}});
    CHECK_THROWS_AS(construct_mis_instance(inside), ArgumentError);
    auto single = mcc_of({2}, {});
    CHECK_THROWS_AS(construct_mis_instance(single), ArgumentError);
    auto uncovered = mcc_of({1, 1}, {{0, 1}});
    uncovered.classes[1].clear();
    CHECK_THROWS_AS(construct_mis_instance(uncovered), ArgumentError);
}

TEST_CASE("two single-vertex classes")
{
    const auto with_edge = mcc_of({1, 1}, {{0, 1}});
    const auto c = construct_mis_instance(with_edge);
    CHECK(c.graph.num_vertices() == 5);
    CHECK(c.ell == 5);
    CHECK(brute_mwis(WeightedInstance(c.graph)).vertices.size() == 5);
    const auto r = verify_construction(with_edge, c);
    CHECK(r.has_clique);
    CHECK(r.ok());

    const auto without = mcc_of({1, 1}, {});
    const auto c2 = construct_mis_instance(without);
    CHECK(c2.graph.num_vertices() == 4);
    CHECK(brute_mwis(WeightedInstance(c2.graph)).vertices.size() < 5);
    const auto r2 = verify_construction(without, c2);
    CHECK_FALSE(r2.has_clique);
    CHECK(r2.three_mino);
    CHECK(r2.two_simplicial);

    for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
        if (c.index.name_of(v).kind == GadgetName::Kind::Selection) {
            CHECK_NOTHROW(clique_cover_certificate(c, c.index.name_of(v)));
        }
    }
}

TEST_CASE("certificate corner cases")
{
    const auto m = random_multicolored_clique(3, std::vector<int>{3, 2, 3}, 0.6, true, 11);
    const auto c = construct_mis_instance(m);
    // Highest index in a selection clique with the next clique deleted:
    // the first set shrinks to that vertex alone.
    const auto top = clique_cover_certificate(c, sel(1, 2, 3));
    VertexSet rest = top[0];
    for (int p = 1; p <= 3; ++p) {
        rest.erase(*c.index.find(sel(1, 3, p)));
    }
    CHECK(rest.to_vector() == std::vector<Vertex>{*c.index.find(sel(1, 2, 3))});
    const auto diag = clique_cover_certificate(c, sel(2, 2, 1));
    CHECK(diag[2].empty());
    CHECK_THROWS_AS(clique_cover_certificate(c, sel(2, 2, 3)), ArgumentError);
    CHECK_THROWS_AS(clique_cover_certificate(c, GadgetName{GadgetName::Kind::Verification, 1, 2, 1, 1}),
                    ArgumentError);
}

TEST_CASE("every small two-class instance")
{
    int cases = 0;
    for (int n1 = 1; n1 <= 2; ++n1) {
        for (int n2 = 1; n2 <= 2; ++n2) {
            const int pairs = n1 * n2;
            for (int mask = 0; mask < (1 << pairs); ++mask) {
                MulticoloredCliqueInstance m;
                m.graph = Graph(n1 + n2);
                m.classes.resize(2);
                for (int p = 0; p < n1; ++p) {
                    m.classes[0].push_back(p);
                }
                for (int q = 0; q < n2; ++q) {
                    m.classes[1].push_back(n1 + q);
                }
                for (int b = 0; b < pairs; ++b) {
                    if ((mask >> b) & 1) {
                        m.graph.add_edge(b / n2, n1 + b % n2);
                    }
                }
                const auto c = construct_mis_instance(m);
                const auto r = verify_construction(m, c);
                CHECK(r.ok());
                CHECK(r.has_clique == (mask != 0));
                CHECK(r.certificates_checked == static_cast<std::size_t>(2 * (n1 + n2)));
                ++cases;
            }
        }
    }
    CHECK(cases == 2 + 4 + 4 + 16);
}

TEST_CASE("optimal independent sets pick one index per selection gadget")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto m = random_multicolored_clique(2, std::vector<int>{2, 2}, 0.7, true, seed);
        const auto c = construct_mis_instance(m);
        const auto best = brute_mwis(WeightedInstance(c.graph));
        REQUIRE(best.vertices.size() == static_cast<std::size_t>(c.ell));
        for (int i = 1; i <= 2; ++i) {
            std::set<int> chosen;
            for (Vertex v : best.vertices) {
                const auto& name = c.index.name_of(v);
                if (name.kind == GadgetName::Kind::Selection && name.i == i) {
                    chosen.insert(name.p);
                }
            }
            CHECK(chosen.size() == 1);
        }
    }
}

TEST_CASE("3-mino property depends on class size")
{
    for (int size = 1; size <= 4; ++size) {
        const auto m = random_multicolored_clique(3, std::vector<int>{size, size, size}, 1.0, false, 0);
        CHECK(is_k_mino(construct_mis_instance(m).graph, 3) == (size <= 2));
    }
}

TEST_CASE("three complete classes of four")
{
    MulticoloredCliqueInstance m = random_multicolored_clique(3, std::vector<int>{4, 4, 4}, 1.0, false, 0);
    const auto c = construct_mis_instance(m);
    CHECK(c.graph.num_vertices() == 84);
    CHECK(c.ell == 12);
    REQUIRE(c.cliques.size() == 12);
    VertexSet seen = c.graph.empty_set();
    std::vector<Vertex> one_each;
    for (const auto& clique : c.cliques) {
        const VertexSet s(84, clique);
        CHECK(is_clique(c.graph, s));
        CHECK_FALSE(s.intersects(seen));
        seen |= s;
    }
    CHECK(seen == c.graph.all_vertices());
    // The transversal picking index 1 in every class is a clique in the
    // source graph; its gadget image is independent and hits every clique.
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            one_each.push_back(*c.index.find(sel(i, j, 1)));
        }
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            one_each.push_back(*c.index.find({GadgetName::Kind::Verification, i, j, 1, 1}));
        }
    }
    CHECK(is_independent(c.graph, VertexSet(84, one_each)));
    CHECK(two_simplicial_ordering(c.graph).has_value());
    // Neighborhoods are still covered by three cliques, but with four
    // vertices per class the chained selection cliques put u[1->1](1) into
    // four maximal cliques, so the graph is not a 3-mino.
    const Vertex corner = *c.index.find(sel(1, 1, 1));
    CHECK(maximal_cliques_containing(c.graph, corner, 10).cliques.size() == 4);
    CHECK_FALSE(is_k_mino(c.graph, 3));
    for (int p = 1; p <= 4; ++p) {
        CHECK_NOTHROW(clique_cover_certificate(c, sel(1, 1, p)));
    }

    const auto small = random_multicolored_clique(3, std::vector<int>{1, 1, 1}, 1.0, false, 0);
    const auto cs = construct_mis_instance(small);
    CHECK(cs.graph.num_vertices() == 12);
    CHECK(brute_mwis(WeightedInstance(cs.graph)).vertices.size() == 12);
    CHECK(verify_construction(small, cs).ok());
}

TEST_CASE("reduction output is deterministic and the name map round-trips")
{
    const auto m = random_multicolored_clique(3, std::vector<int>{2, 1, 2}, 0.5, true, 4);
    const auto a = construct_mis_instance(m);
    const auto b = construct_mis_instance(m);
    CHECK(a.graph == b.graph);
    CHECK(a.index == b.index);
    std::stringstream buf;
    a.index.write(buf);
    CHECK(GadgetIndex::read(buf) == a.index);
    std::istringstream bad("1 u[1->1](1)\n3 u[1->2](1)\n");
    CHECK_THROWS_AS(GadgetIndex::read(bad), ParseError);
}

TEST_CASE("universal-vertex reductions")
{
    // Inductive k-independence of the padded graph follows alpha(g) <= k.
    CHECK(is_chordal(gen_indkind_hardness(complete(3), 1)).has_value());
    CHECK_FALSE(find_inductive_k_independent_ordering(gen_indkind_hardness(Graph(3), 2), 2).has_value());
    CHECK(find_inductive_k_independent_ordering(gen_indkind_hardness(cycle(5), 2), 2).has_value());
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(7, 0.5, seed);
        const int alpha = naive_alpha(g);
        for (int k = 1; k <= 4; ++k) {
            const Graph h = gen_indkind_hardness(g, k);
            CHECK(h.num_vertices() == 7 + k + 1);
            CHECK(find_inductive_k_independent_ordering(h, k).has_value() == (alpha <= k));
        }
    }

    CHECK(is_k1k_free(gen_k1kfree_hardness(Graph(3), 3), 3).has_value());
    CHECK_FALSE(is_k1k_free(gen_k1kfree_hardness(complete(3), 2), 2).has_value());
    CHECK_FALSE(is_k1k_free(gen_k1kfree_hardness(cycle(5), 3), 3).has_value());
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(7, 0.5, seed);
        const int alpha = naive_alpha(g);
        for (int k = 1; k <= 4; ++k) {
            const Graph h = gen_k1kfree_hardness(g, k);
            // Only the universal vertex can be a new star center.
            const bool g_has = is_k1k_free(g, k).has_value();
            CHECK(is_k1k_free(h, k).has_value() == (g_has || alpha >= k));
        }
    }
    CHECK_THROWS_AS(gen_indkind_hardness(path(3), 0), ArgumentError);
}
