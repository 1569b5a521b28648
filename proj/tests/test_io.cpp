#include "support.hpp"

#include "iki/errors.hpp"
#include "iki/generators.hpp"
#include "iki/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace iki;
using namespace iki::test;

namespace {

WeightedInstance parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

std::string written(const WeightedInstance& inst)
{
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

std::size_t parse_error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("instance parsing")
{
    const auto empty = parse("p iki 0 0\n");
    CHECK(empty.num_vertices() == 0);
    CHECK(empty.graph.num_edges() == 0);

    const auto tri = parse("c a triangle\np iki 3 3\nw 2 7\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(tri.graph == complete(3));
    CHECK(tri.weights == std::vector<Weight>{1, 7, 1});
    CHECK_FALSE(tri.colors.has_value());
    CHECK_FALSE(tri.has_decomposition());

    CHECK(parse_error_line("p iki 2 2\ne 1 2\ne 2 1\n") == 3);
    CHECK(parse_error_line("p iki 2 1\ne 1 3\n") == 2);
    CHECK(parse_error_line("p iki 2 1\ne 1 1\n") == 2);
    CHECK(parse_error_line("e 1 2\n") == 1);
    CHECK(parse_error_line("p iki 2 0\nw 1 -3\n") == 2);
    CHECK(parse_error_line("p iki 2 0\nx 1\n") == 2);
    CHECK(parse_error_line("p iki 2 2\ne 1 2\n") == 2);
    CHECK(parse_error_line("p iki 3 2\ne 1 2 C\ne 2 3\n") == 3);
    CHECK(parse_error_line("p iki 2 0\ncol 1 1\n") == 2);
}

TEST_CASE("decomposition witnesses")
{
    // Clusters from the components of C edges.
    const auto inst = parse("p iki 4 3\ne 1 2 C\ne 2 3 H\ne 3 4 C\n");
    REQUIRE(inst.has_decomposition());
    CHECK((*inst.clusters)[0] == (*inst.clusters)[1]);
    CHECK((*inst.clusters)[2] == (*inst.clusters)[3]);
    CHECK((*inst.clusters)[0] != (*inst.clusters)[2]);

    // C edges forming a path are not a cluster graph.
    try {
        parse("p iki 3 2\ne 1 2 C\ne 2 3 C\n");
        FAIL("expected a witness error");
    } catch (const WitnessError& e) {
        CHECK(e.witness().size() == 3);
        CHECK(e.witness()[1] == 1);
    }

    // H edges forming a 4-cycle are not chordal.
    try {
        parse("p iki 4 4\ne 1 2 H\ne 2 3 H\ne 3 4 H\ne 1 4 H\n");
        FAIL("expected a witness error");
    } catch (const WitnessError& e) {
        CHECK(e.witness().size() == 4);
    }

    // Explicit cluster labels must be cliques of the graph.
    CHECK_THROWS_AS(parse("p iki 3 1\ncl 1 0\ncl 2 0\ncl 3 0\ne 1 2 C\n"), WitnessError);
}

TEST_CASE("instance round trip")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        WeightedInstance inst;
        switch (seed % 3) {
        case 0:
            inst = random_weights(WeightedInstance(random_graph(12, 0.3, seed)), 1000, seed);
            break;
        case 1:
            inst = random_weights(WeightedInstance(random_chordal(15, 4, seed)), 50, seed);
            inst.colors = random_colors(15, 4, seed);
            break;
        default:
            inst = random_overlay(14, 4, 3, 99, seed);
            break;
        }
        const std::string text = written(inst);
        const auto back = parse(text);
        CHECK(back == inst);
        CHECK(written(back) == text);
    }
}

TEST_CASE("solution round trip")
{
    SolutionRecord empty;
    empty.problem = "mwis";
    std::ostringstream out;
    write_solution(out, empty);
    CHECK(out.str() == "s iki-solution\nproblem mwis\nweight 0\nvertices 0\n");

    SolutionRecord rec;
    rec.problem = "mwccs";
    rec.solution.vertices = {0, 4, 9};
    rec.solution.color_assignment = std::vector<int>{1, 2, 1};
    rec.solution.weight = 42;
    rec.mode = "randomized";
    rec.seed = 17;
    rec.trials = 300;
    for (const SolutionRecord& r : {empty, rec}) {
        std::stringstream buf;
        write_solution(buf, r);
        CHECK(parse_solution(buf) == r);
    }

    SolutionRecord colored_empty = empty;
    colored_empty.solution.color_assignment = std::vector<int>{};
    std::stringstream buf;
    write_solution(buf, colored_empty);
    CHECK(parse_solution(buf) == colored_empty);

    std::istringstream bad("s iki-solution\nvertices 2 5 3\n");
    CHECK_THROWS_AS(parse_solution(bad), ParseError);
}
