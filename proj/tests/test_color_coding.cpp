#include "support.hpp"

#include "iki/color_coding.hpp"
#include "iki/colorful_dp.hpp"
#include "iki/errors.hpp"
#include "iki/generators.hpp"
#include "iki/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

using namespace iki;
using namespace iki::test;

namespace {

ColoringFamilySpec exhaustive()
{
    return ColoringFamilySpec{};
}

ColoringFamilySpec randomized(std::uint64_t seed)
{
    ColoringFamilySpec spec;
    spec.mode = ColoringMode::Randomized;
    spec.seed = seed;
    return spec;
}

// Independent sets of size <= bound, by enumeration.
BoundedMwisSolver enumerating_solver()
{
    return [](const WeightedInstance& sub, int bound) { return brute_mwis(sub, bound); };
}

Weight naive_mwccs(const WeightedInstance& inst, int c, int ell)
{
    return naive_best_weight(inst, [&](const std::vector<Vertex>& s) {
        if (static_cast<int>(s.size()) > ell) {
            return false;
        }
        const VertexSet set(static_cast<std::size_t>(inst.num_vertices()), s);
        return naive_colorable(induced_subgraph(inst.graph, set).graph, c);
    });
}

void check_feasible(const WeightedInstance& inst, const Solution& sol, int c, int ell)
{
    REQUIRE(sol.color_assignment.has_value());
    CHECK(static_cast<int>(sol.vertices.size()) <= ell);
    CHECK(weight_of(inst.weights, sol.vertices) == sol.weight);
    for (std::size_t a = 0; a < sol.vertices.size(); ++a) {
        const int ca = (*sol.color_assignment)[a];
        CHECK(ca >= 1);
        CHECK(ca <= c);
        for (std::size_t b = a + 1; b < sol.vertices.size(); ++b) {
            if (inst.graph.has_edge(sol.vertices[a], sol.vertices[b])) {
                CHECK(ca != (*sol.color_assignment)[b]);
            }
        }
    }
}

} // namespace

TEST_CASE("size partitions")
{
    const auto p22 = enumerate_size_partitions(2, 2);
    const std::vector<SizePartition> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(p22 == expect);
    CHECK(enumerate_size_partitions(0, 5) == std::vector<SizePartition>{{0, 0, 0, 0, 0}});
    CHECK(enumerate_size_partitions(3, 1) == std::vector<SizePartition>{{0}, {1}, {2}, {3}});
    for (int ell = 0; ell <= 6; ++ell) {
        for (int c = 1; c <= 4; ++c) {
            const auto parts = enumerate_size_partitions(ell, c);
            std::uint64_t binom = 1;
            for (int i = 1; i <= c; ++i) {
                binom = binom * static_cast<std::uint64_t>(ell + i) / static_cast<std::uint64_t>(i);
            }
            CHECK(parts.size() == binom);
            CHECK(std::set<SizePartition>(parts.begin(), parts.end()).size() == parts.size());
            for (const auto& p : parts) {
                int sum = 0;
                for (int x : p) {
                    CHECK(x >= 0);
                    sum += x;
                }
                CHECK(sum <= ell);
            }
        }
    }
}

TEST_CASE("Stirling numbers of the second kind")
{
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(10, 1) == 1);
    CHECK(stirling2(3, 5) == 0);
    CHECK(stirling2(200, 100) == ~std::uint64_t{0});
}

TEST_CASE("perfect hash families cover every subset")
{
    for (int d = 1; d <= 9; ++d) {
        for (int t = 1; t <= std::min(d, 4); ++t) {
            const auto& family = perfect_hash_family(d, t, 1'000'000);
            for (std::uint32_t m = 0; m < (1U << d); ++m) {
                if (std::popcount(m) != t) {
                    continue;
                }
                bool hit = false;
                for (const auto& f : family) {
                    std::set<int> labels;
                    for (Vertex v : bits(m)) {
                        labels.insert(f[static_cast<std::size_t>(v)]);
                    }
                    hit = hit || static_cast<int>(labels.size()) == t;
                }
                CHECK(hit);
            }
        }
    }
    CHECK_THROWS_AS(perfect_hash_family(40, 8, 1000), SizeCapError);
}

TEST_CASE("reduction to bounded MWIS")
{
    const WeightedInstance c5(cycle(5));
    CHECK(mwccs_from_mwis(c5, 2, 5, enumerating_solver(), exhaustive()).weight == 4);
    CHECK(naive_mwccs(c5, 2, 5) == 4);

    const WeightedInstance k4(complete(4));
    CHECK(mwccs_from_mwis(k4, 2, 4, enumerating_solver(), exhaustive()).weight == 2);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        const auto inst = random_weights(WeightedInstance(random_graph(n, 0.5, seed)), 9, seed);
        // One color: plain bounded MWIS.
        CHECK(mwccs_from_mwis(inst, 1, 3, enumerating_solver(), exhaustive()).weight == brute_mwis(inst, 3).weight);
        // Enough colors and room for everything.
        CHECK(mwccs_from_mwis(inst, n, n, enumerating_solver(), exhaustive()).weight ==
              weight_of(inst.weights, inst.graph.all_vertices()));
        for (int c = 1; c <= 3; ++c) {
            const int ell = 1 + static_cast<int>(seed % 4);
            const auto sol = mwccs_from_mwis(inst, c, ell, enumerating_solver(), exhaustive());
            CHECK(sol.weight == naive_mwccs(inst, c, ell));
            check_feasible(inst, sol, c, ell);
        }
    }
}

TEST_CASE("exhaustive cap")
{
    const WeightedInstance inst(Graph(16));
    ColoringFamilySpec spec;
    spec.exhaustive_cap = 1000;
    CHECK_THROWS_AS(mwccs_from_mwis(inst, 3, 2, enumerating_solver(), spec), SizeCapError);
    CHECK_THROWS_AS(mwccs_from_mwis(inst, 0, 2, enumerating_solver(), spec), ArgumentError);
}

TEST_CASE("cluster-chordal MWIS")
{
    // Singleton clusters reduce to the chordal DP.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph h = random_chordal(10, 3, seed);
        auto inst = random_weights(overlay_cluster_chordal(random_cluster(10, 1, seed), h), 20, seed);
        const auto sol = mwis_cluster_chordal(inst, 10, exhaustive());
        CHECK(sol.weight == brute_mwis(inst).weight);
        CHECK(mwis_cluster_chordal(inst, 3, exhaustive()).weight == brute_mwis(inst, 3).weight);
    }

    // Edgeless chordal side: the ell heaviest per-cluster maxima.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto clusters = random_cluster(12, 4, seed);
        const auto inst = random_weights(overlay_cluster_chordal(clusters, Graph(12)), 30, seed);
        std::vector<Weight> best(12, 0);
        for (Vertex v = 0; v < 12; ++v) {
            auto& b = best[static_cast<std::size_t>(clusters.clusters[static_cast<std::size_t>(v)])];
            b = std::max(b, inst.weights[static_cast<std::size_t>(v)]);
        }
        std::sort(best.rbegin(), best.rend());
        for (int ell = 0; ell <= 5; ++ell) {
            Weight expect = 0;
            for (int i = 0; i < ell; ++i) {
                expect += best[static_cast<std::size_t>(i)];
            }
            CHECK(mwis_cluster_chordal(inst, ell, exhaustive()).weight == expect);
        }
    }

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_overlay(12, 3, 3, 20, seed);
        const auto sol = mwis_cluster_chordal(inst, 4, exhaustive());
        CHECK(sol.weight == brute_mwis(inst, 4).weight);
        CHECK(sol.vertices.size() <= 4);
        CHECK(naive_independent(inst.graph, sol.vertices));

        const auto profile = mwis_cluster_chordal_profile(inst, 4, exhaustive());
        REQUIRE(profile.size() == 5);
        for (int b = 0; b <= 4; ++b) {
            CHECK(profile[static_cast<std::size_t>(b)].weight == brute_mwis(inst, b).weight);
        }
    }

    WeightedInstance bare(path(3));
    CHECK_THROWS_AS(mwis_cluster_chordal(bare, 2, exhaustive()), ArgumentError);
}

TEST_CASE("full pipeline against the oracle")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto inst = random_overlay(10, 3, 3, 15, seed);
        const int c = 1 + static_cast<int>(seed % 3);
        const int ell = 1 + static_cast<int>(seed % 5);
        const auto sol = mwccs_cluster_chordal(inst, c, ell, exhaustive());
        CHECK(sol.weight == brute_mwccs(inst, c, ell).weight);
        check_feasible(inst, sol, c, ell);
    }
    const auto inst = random_overlay(9, 3, 3, 15, 99);
    CHECK(mwccs_cluster_chordal(inst, 1, 4, exhaustive()).weight == mwis_cluster_chordal(inst, 4, exhaustive()).weight);
    const auto none = mwccs_cluster_chordal(inst, 2, 0, exhaustive());
    CHECK(none.weight == 0);
    CHECK(none.vertices.empty());
}

TEST_CASE("weight grows with colors and size bound")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = random_overlay(9, 3, 3, 15, seed + 500);
        for (int c = 1; c <= 2; ++c) {
            for (int ell = 1; ell <= 3; ++ell) {
                const Weight base = mwccs_cluster_chordal(inst, c, ell, exhaustive()).weight;
                CHECK(mwccs_cluster_chordal(inst, c + 1, ell, exhaustive()).weight >= base);
                CHECK(mwccs_cluster_chordal(inst, c, ell + 1, exhaustive()).weight >= base);
            }
        }
    }
}

TEST_CASE("randomized mode is feasible, deterministic and independent of jobs")
{
    int matches = 0;
    const int total = 20;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        const auto inst = random_overlay(10, 3, 3, 15, seed + 1000);
        const int c = 2;
        const int ell = 3;
        auto spec = randomized(seed);
        ColoringStats stats;
        const auto a = mwccs_cluster_chordal(inst, c, ell, spec, &stats);
        check_feasible(inst, a, c, ell);
        CHECK(stats.outer_trials > 0);
        const auto b = mwccs_cluster_chordal(inst, c, ell, spec);
        CHECK(a == b);
        spec.jobs = 3;
        CHECK(mwccs_cluster_chordal(inst, c, ell, spec) == a);
        matches += a.weight == brute_mwccs(inst, c, ell).weight ? 1 : 0;
    }
    CHECK(matches >= total - 1);

    auto capped = randomized(7);
    capped.trial_cap = 1;
    ColoringStats stats;
    const auto inst = random_overlay(10, 3, 3, 15, 7);
    check_feasible(inst, mwccs_cluster_chordal(inst, 2, 3, capped, &stats), 2, 3);
    CHECK(stats.outer_trials == 1);
}

TEST_CASE("exhaustive results do not depend on jobs")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto inst = random_overlay(10, 3, 3, 15, seed + 2000);
        auto spec = exhaustive();
        const auto one = mwccs_cluster_chordal(inst, 2, 4, spec);
        spec.jobs = 4;
        CHECK(mwccs_cluster_chordal(inst, 2, 4, spec) == one);
    }
}
