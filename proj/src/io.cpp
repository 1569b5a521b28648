#include "iki/io.hpp"

#include "iki/errors.hpp"
#include "iki/recognition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace iki {

namespace {

std::uint64_t parse_unsigned(const std::string& token, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
    }
    return value;
}

class LineReader {
public:
    LineReader(const std::string& text, std::size_t line) : in_(text), line_(line) {}

    std::uint64_t number(const char* what)
    {
        std::string token;
        if (!(in_ >> token)) {
            throw ParseError(line_, std::string("missing ") + what);
        }
        return parse_unsigned(token, line_, what);
    }

    Vertex vertex(int n)
    {
        const std::uint64_t v = number("vertex");
        if (v < 1 || v > static_cast<std::uint64_t>(n)) {
            throw ParseError(line_, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        return static_cast<Vertex>(v - 1);
    }

    std::optional<std::string> word()
    {
        std::string token;
        if (in_ >> token) {
            return token;
        }
        return std::nullopt;
    }

    void done()
    {
        if (word()) {
            throw ParseError(line_, "trailing tokens");
        }
    }

private:
    std::istringstream in_;
    std::size_t line_;
};

std::string one_based(const std::vector<Vertex>& vs)
{
    std::string out;
    for (Vertex v : vs) {
        out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    }
    return out;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot write " + path);
    }
    return out;
}

} // namespace

WeightedInstance parse_instance(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    int n = 0;
    std::uint64_t m = 0;
    Graph g;
    std::vector<Weight> weights;
    std::vector<bool> has_weight, has_color, has_cluster;
    std::vector<int> colors, clusters;
    bool any_color = false;
    bool any_cluster = false;
    std::optional<bool> tagged;
    EdgePartition part;
    std::size_t last_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        LineReader r(line, line_no);
        const auto tag = r.word();
        if (!tag || *tag == "c") {
            continue;
        }
        last_line = line_no;
        if (*tag == "p") {
            if (header) {
                throw ParseError(line_no, "second header line");
            }
            const auto kind = r.word();
            if (!kind || *kind != "iki") {
                throw ParseError(line_no, "header must read 'p iki <n> <m>'");
            }
            const std::uint64_t nn = r.number("vertex count");
            if (nn > 100'000'000) {
                throw ParseError(line_no, "vertex count too large");
            }
            m = r.number("edge count");
            r.done();
            n = static_cast<int>(nn);
            header = true;
            g = Graph(n);
            weights.assign(static_cast<std::size_t>(n), 1);
            has_weight.assign(static_cast<std::size_t>(n), false);
            has_color.assign(static_cast<std::size_t>(n), false);
            has_cluster.assign(static_cast<std::size_t>(n), false);
            colors.assign(static_cast<std::size_t>(n), 0);
            clusters.assign(static_cast<std::size_t>(n), 0);
            continue;
        }
        if (!header) {
            throw ParseError(line_no, "expected header 'p iki <n> <m>' first");
        }
        if (*tag == "w") {
            const Vertex v = r.vertex(n);
            const std::uint64_t w = r.number("weight");
            r.done();
            if (has_weight[static_cast<std::size_t>(v)]) {
                throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v + 1));
            }
            has_weight[static_cast<std::size_t>(v)] = true;
            weights[static_cast<std::size_t>(v)] = w;
        } else if (*tag == "col") {
            const Vertex v = r.vertex(n);
            const std::uint64_t c = r.number("color");
            r.done();
            if (c < 1 || c > 1'000'000) {
                throw ParseError(line_no, "color must lie in 1..1000000");
            }
            if (has_color[static_cast<std::size_t>(v)]) {
                throw ParseError(line_no, "duplicate color for vertex " + std::to_string(v + 1));
            }
            has_color[static_cast<std::size_t>(v)] = true;
            colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
            any_color = true;
        } else if (*tag == "cl") {
            const Vertex v = r.vertex(n);
            const std::uint64_t id = r.number("cluster id");
            r.done();
            if (id > 1'000'000'000) {
                throw ParseError(line_no, "cluster id too large");
            }
            if (has_cluster[static_cast<std::size_t>(v)]) {
                throw ParseError(line_no, "duplicate cluster for vertex " + std::to_string(v + 1));
            }
            has_cluster[static_cast<std::size_t>(v)] = true;
            clusters[static_cast<std::size_t>(v)] = static_cast<int>(id);
            any_cluster = true;
        } else if (*tag == "e") {
            const Vertex u = r.vertex(n);
            const Vertex v = r.vertex(n);
            const auto side = r.word();
            r.done();
            if (u == v) {
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u + 1));
            }
            if (side && *side != "C" && *side != "H") {
                throw ParseError(line_no, "edge tag must be C or H");
            }
            if (tagged && *tagged != side.has_value()) {
                throw ParseError(line_no, "either all edges carry a C/H tag or none does");
            }
            tagged = side.has_value();
            if (!g.add_edge(u, v)) {
                throw ParseError(line_no, "duplicate edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                              "}");
            }
            if (side) {
                (*side == "C" ? part.cluster_edges : part.chordal_edges).emplace_back(std::min(u, v), std::max(u, v));
            }
        } else {
            throw ParseError(line_no, "unknown line tag '" + *tag + "'");
        }
    }
    if (!header) {
        throw ParseError(line_no, "missing header 'p iki <n> <m>'");
    }
    if (g.num_edges() != m) {
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, file has " +
                                        std::to_string(g.num_edges()));
    }
    auto require_all = [&](const std::vector<bool>& have, const char* what) {
        const auto it = std::find(have.begin(), have.end(), false);
        if (it != have.end()) {
            throw ParseError(last_line, std::string(what) + " missing for vertex " +
                                            std::to_string(it - have.begin() + 1));
        }
    };
    WeightedInstance inst(std::move(g), std::move(weights));
    if (any_color) {
        require_all(has_color, "color");
        inst.colors = std::move(colors);
    }
    if (any_cluster) {
        require_all(has_cluster, "cluster");
        inst.clusters = std::move(clusters);
    }
    if (tagged.value_or(false)) {
        std::sort(part.cluster_edges.begin(), part.cluster_edges.end());
        std::sort(part.chordal_edges.begin(), part.chordal_edges.end());
        const Graph cluster_graph(n, part.cluster_edges);
        if (!inst.clusters) {
            if (const auto p3 = find_induced_p3(cluster_graph)) {
                const std::vector<Vertex> w{(*p3)[0], (*p3)[1], (*p3)[2]};
                throw WitnessError("C-tagged edges do not form a cluster graph: induced path " + one_based(w), w);
            }
            inst.clusters = connected_components(cluster_graph);
        }
        inst.edge_partition = std::move(part);
        try {
            check_partition_consistency(inst);
        } catch (const ArgumentError& e) {
            throw WitnessError(e.what());
        }
        if (const auto cycle = find_chordless_cycle(chordal_part(inst))) {
            throw WitnessError("H-tagged edges are not chordal: chordless cycle " + one_based(*cycle), *cycle);
        }
    }
    return inst;
}

WeightedInstance read_instance_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot read " + path);
    }
    return parse_instance(in);
}

void write_instance(std::ostream& out, const WeightedInstance& inst)
{
    const int n = inst.num_vertices();
    out << "p iki " << n << ' ' << inst.graph.num_edges() << '\n';
    for (Vertex v = 0; v < n; ++v) {
        out << "w " << v + 1 << ' ' << inst.weights[static_cast<std::size_t>(v)] << '\n';
    }
    if (inst.colors) {
        for (Vertex v = 0; v < n; ++v) {
            out << "col " << v + 1 << ' ' << (*inst.colors)[static_cast<std::size_t>(v)] << '\n';
        }
    }
    if (inst.clusters) {
        for (Vertex v = 0; v < n; ++v) {
            out << "cl " << v + 1 << ' ' << (*inst.clusters)[static_cast<std::size_t>(v)] << '\n';
        }
    }
    for (const auto& [u, v] : inst.graph.edges()) {
        out << "e " << u + 1 << ' ' << v + 1;
        if (inst.edge_partition) {
            const auto& ce = inst.edge_partition->cluster_edges;
            out << (std::binary_search(ce.begin(), ce.end(), Edge{u, v}) ? " C" : " H");
        }
        out << '\n';
    }
}

void write_instance_file(const std::string& path, const WeightedInstance& inst)
{
    auto out = open_out(path);
    write_instance(out, inst);
}

void write_solution(std::ostream& out, const SolutionRecord& rec)
{
    const auto& sol = rec.solution;
    out << "s iki-solution\n";
    if (!rec.problem.empty()) {
        out << "problem " << rec.problem << '\n';
    }
    out << "weight " << sol.weight << '\n';
    out << "vertices " << sol.vertices.size();
    for (Vertex v : sol.vertices) {
        out << ' ' << v + 1;
    }
    out << '\n';
    if (sol.color_assignment) {
        out << "colored\n";
        for (std::size_t i = 0; i < sol.vertices.size(); ++i) {
            out << "color " << sol.vertices[i] + 1 << ' ' << (*sol.color_assignment)[i] << '\n';
        }
    }
    if (!rec.mode.empty()) {
        out << "mode " << rec.mode << '\n';
    }
    if (rec.seed) {
        out << "seed " << *rec.seed << '\n';
    }
    if (rec.trials) {
        out << "trials " << *rec.trials << '\n';
    }
    if (rec.elapsed_ms) {
        std::ostringstream ms;
        ms.precision(3);
        ms << std::fixed << *rec.elapsed_ms;
        out << "elapsed_ms " << ms.str() << '\n';
    }
}

void write_solution_file(const std::string& path, const SolutionRecord& rec)
{
    auto out = open_out(path);
    write_solution(out, rec);
}

SolutionRecord parse_solution(std::istream& in)
{
    SolutionRecord rec;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    bool have_vertices = false;
    bool colored = false;
    std::vector<std::pair<Vertex, int>> colors;
    while (std::getline(in, line)) {
        ++line_no;
        LineReader r(line, line_no);
        const auto tag = r.word();
        if (!tag) {
            continue;
        }
        if (!header) {
            const auto kind = r.word();
            if (*tag != "s" || !kind || *kind != "iki-solution") {
                throw ParseError(line_no, "expected 's iki-solution'");
            }
            header = true;
            continue;
        }
        if (*tag == "problem" || *tag == "mode") {
            const auto value = r.word();
            if (!value) {
                throw ParseError(line_no, "missing value");
            }
            (*tag == "problem" ? rec.problem : rec.mode) = *value;
        } else if (*tag == "weight") {
            rec.solution.weight = r.number("weight");
        } else if (*tag == "vertices") {
            const std::uint64_t count = r.number("vertex count");
            for (std::uint64_t i = 0; i < count; ++i) {
                const std::uint64_t v = r.number("vertex");
                if (v < 1 || v > static_cast<std::uint64_t>(std::numeric_limits<Vertex>::max())) {
                    throw ParseError(line_no, "vertex out of range");
                }
                rec.solution.vertices.push_back(static_cast<Vertex>(v - 1));
            }
            if (!std::is_sorted(rec.solution.vertices.begin(), rec.solution.vertices.end()) ||
                std::adjacent_find(rec.solution.vertices.begin(), rec.solution.vertices.end()) !=
                    rec.solution.vertices.end()) {
                throw ParseError(line_no, "vertices must be strictly increasing");
            }
            have_vertices = true;
        } else if (*tag == "colored") {
            colored = true;
        } else if (*tag == "color") {
            const std::uint64_t v = r.number("vertex");
            const std::uint64_t c = r.number("color");
            if (v < 1 || c > 1'000'000) {
                throw ParseError(line_no, "bad color line");
            }
            colors.emplace_back(static_cast<Vertex>(v - 1), static_cast<int>(c));
        } else if (*tag == "seed") {
            rec.seed = r.number("seed");
        } else if (*tag == "trials") {
            rec.trials = r.number("trials");
        } else if (*tag == "elapsed_ms") {
            const auto value = r.word();
            try {
                rec.elapsed_ms = std::stod(value.value_or(""));
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad elapsed_ms");
            }
        } else {
            throw ParseError(line_no, "unknown field '" + *tag + "'");
        }
        r.done();
    }
    if (!header || !have_vertices) {
        throw ParseError(line_no, "incomplete solution record");
    }
    if (!colors.empty() && !colored) {
        throw ParseError(line_no, "color lines without 'colored'");
    }
    if (colored) {
        if (colors.size() != rec.solution.vertices.size()) {
            throw ParseError(line_no, "color lines must match the vertex list");
        }
        rec.solution.color_assignment = std::vector<int>{};
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (colors[i].first != rec.solution.vertices[i]) {
                throw ParseError(line_no, "color lines must follow the vertex order");
            }
            rec.solution.color_assignment->push_back(colors[i].second);
        }
    }
    return rec;
}

} // namespace iki
