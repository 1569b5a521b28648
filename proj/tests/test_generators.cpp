#include "support.hpp"

#include "iki/generators.hpp"
#include "iki/oracle.hpp"
#include "iki/recognition.hpp"

#include <doctest.h>

#include <algorithm>

using namespace iki;
using namespace iki::test;

TEST_CASE("random chordal graphs")
{
    CHECK(random_chordal(1, 3, 0).num_vertices() == 1);
    CHECK(random_chordal(10, 1, 0).num_edges() == 0);
    CHECK(is_chordal(random_chordal(50, 4, 0)).has_value());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_chordal(30, 1 + static_cast<int>(seed % 5), seed);
        CHECK(is_chordal(g).has_value());
        CHECK(random_chordal(30, 1 + static_cast<int>(seed % 5), seed) == g);
    }
}

TEST_CASE("random cluster graphs")
{
    CHECK(random_cluster(8, 1, 0).graph.num_edges() == 0);
    CHECK(random_cluster(6, 6, 0).graph.num_vertices() == 6);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto cg = random_cluster(30, 1 + static_cast<int>(seed % 6), seed);
        CHECK(is_cluster(cg.graph));
        for (const auto& [u, v] : cg.graph.edges()) {
            CHECK(cg.clusters[static_cast<std::size_t>(u)] == cg.clusters[static_cast<std::size_t>(v)]);
        }
        std::vector<int> sizes(30, 0);
        for (int c : cg.clusters) {
            ++sizes[static_cast<std::size_t>(c)];
        }
        CHECK(*std::max_element(sizes.begin(), sizes.end()) <= 1 + static_cast<int>(seed % 6));
    }
    // A single cluster covering everything is complete.
    bool saw_complete = false;
    for (std::uint64_t seed = 0; seed < 200 && !saw_complete; ++seed) {
        const auto cg = random_cluster(4, 4, seed);
        saw_complete = cg.graph == complete(4);
    }
    CHECK(saw_complete);
}

TEST_CASE("overlays carry a valid witness")
{
    const Graph h = random_chordal(10, 3, 1);
    const auto only_chordal = overlay_cluster_chordal(random_cluster(10, 1, 1), h);
    CHECK(only_chordal.graph == h);
    const auto cg = random_cluster(10, 4, 2);
    const auto only_cluster = overlay_cluster_chordal(cg, Graph(10));
    CHECK(only_cluster.graph == cg.graph);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = random_overlay(12, 4, 3, 10, seed);
        REQUIRE(inst.has_decomposition());
        CHECK_NOTHROW(check_partition_consistency(inst));
        CHECK(is_chordal(chordal_part(inst)).has_value());
        const Graph clusters(12, inst.edge_partition->cluster_edges);
        for (const auto& [u, v] : inst.edge_partition->cluster_edges) {
            CHECK((*inst.clusters)[static_cast<std::size_t>(u)] == (*inst.clusters)[static_cast<std::size_t>(v)]);
        }
        // Cluster side together with same-cluster chordal edges is a cluster graph.
        Graph full_cluster = clusters;
        for (const auto& [u, v] : inst.edge_partition->chordal_edges) {
            if ((*inst.clusters)[static_cast<std::size_t>(u)] == (*inst.clusters)[static_cast<std::size_t>(v)]) {
                full_cluster.add_edge(u, v);
            }
        }
        CHECK(is_cluster(full_cluster));
    }
}

TEST_CASE("random multicolored clique instances")
{
    const std::vector<int> sizes{2, 3, 2};
    const auto full = random_multicolored_clique(3, sizes, 1.0, false, 0);
    CHECK(full.graph.num_edges() == 2 * 3 + 2 * 2 + 3 * 2);
    CHECK(brute_multicolored_clique(full));
    CHECK_FALSE(brute_multicolored_clique(random_multicolored_clique(3, sizes, 0.0, false, 0)));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto m = random_multicolored_clique(3, sizes, 0.2, true, seed);
        CHECK_NOTHROW(validate_mcc(m));
        CHECK(brute_multicolored_clique(m));
    }
    CHECK_THROWS(random_multicolored_clique(2, sizes, 0.5, false, 0));
}

TEST_CASE("random weights and colors")
{
    const WeightedInstance base(random_graph(20, 0.3, 0));
    for (Weight w : random_weights(base, 0, 1).weights) {
        CHECK(w == 0);
    }
    for (Weight w : random_weights(base, 1, 1).weights) {
        CHECK(w <= 1);
    }
    CHECK(random_weights(base, 100, 5) == random_weights(base, 100, 5));
    CHECK(random_weights(base, 100, 5).weights != random_weights(base, 100, 6).weights);
    for (int c : random_colors(50, 3, 2)) {
        CHECK(c >= 1);
        CHECK(c <= 3);
    }
    CHECK(random_graph(15, 0.4, 9) == random_graph(15, 0.4, 9));
    CHECK(random_graph(6, 1.0, 1) == complete(6));
    CHECK(random_graph(6, 0.0, 1).num_edges() == 0);
}
