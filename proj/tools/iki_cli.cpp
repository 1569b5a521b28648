#include "iki/color_coding.hpp"
#include "iki/colorful_dp.hpp"
#include "iki/errors.hpp"
#include "iki/generators.hpp"
#include "iki/hardness.hpp"
#include "iki/io.hpp"
#include "iki/oracle.hpp"
#include "iki/recognition.hpp"
#include "iki/rng.hpp"
#include "iki/tree_decomposition.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace iki;

enum Exit : int {
    kOk = 0,
    kAbsent = 2,
    kSizeCap = 3,
    kUsage = 64,
    kData = 65,
    kInternal = 70,
};

struct Output {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw ArgumentError("cannot write " + path);
        }
        out << text;
    }
};

std::string one_based(const std::vector<Vertex>& vs)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out << (i ? " " : "") << vs[i] + 1;
    }
    return out.str();
}

// Chordal graphs without a witness get the trivial one: singleton
// clusters, every edge on the chordal side.
WeightedInstance with_decomposition(WeightedInstance inst)
{
    if (inst.has_decomposition()) {
        return inst;
    }
    if (!is_chordal(inst.graph)) {
        throw ArgumentError("instance is not chordal and carries no cluster/chordal witness "
                            "(try: recognize --class cluster-chordal-brute)");
    }
    std::vector<int> singletons(static_cast<std::size_t>(inst.num_vertices()));
    for (std::size_t v = 0; v < singletons.size(); ++v) {
        singletons[v] = static_cast<int>(v);
    }
    inst.clusters = std::move(singletons);
    inst.edge_partition = EdgePartition{{}, inst.graph.edges()};
    return inst;
}

NormalizedTreeDecomposition clique_tree(const Graph& g)
{
    const auto peo = is_chordal(g);
    if (!peo) {
        throw ArgumentError("graph is not chordal");
    }
    return normalize_binary(clique_tree_from_peo(g, *peo));
}

MulticoloredCliqueInstance mcc_from_instance(const WeightedInstance& inst)
{
    if (!inst.colors) {
        throw ArgumentError("multicolored clique input needs 'col' lines giving the classes");
    }
    MulticoloredCliqueInstance mcc;
    mcc.graph = inst.graph;
    for (Vertex v = 0; v < inst.num_vertices(); ++v) {
        const auto c = static_cast<std::size_t>((*inst.colors)[static_cast<std::size_t>(v)]);
        if (mcc.classes.size() < c) {
            mcc.classes.resize(c);
        }
        mcc.classes[c - 1].push_back(v);
    }
    validate_mcc(mcc);
    return mcc;
}

WeightedInstance instance_from_mcc(const MulticoloredCliqueInstance& mcc)
{
    WeightedInstance inst(mcc.graph);
    inst.colors = std::vector<int>(static_cast<std::size_t>(mcc.graph.num_vertices()));
    for (std::size_t i = 0; i < mcc.classes.size(); ++i) {
        for (Vertex v : mcc.classes[i]) {
            (*inst.colors)[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
        }
    }
    return inst;
}

std::string instance_text(const WeightedInstance& inst, const std::string& comment = {})
{
    std::ostringstream out;
    if (!comment.empty()) {
        out << "c " << comment << '\n';
    }
    write_instance(out, inst);
    return out.str();
}

struct SpecFlags {
    std::string mode = "exhaustive";
    double epsilon = 0.01;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trial_cap;
    std::uint64_t exhaustive_cap = ColoringFamilySpec{}.exhaustive_cap;
    int jobs = 1;

    void attach(CLI::App* app)
    {
        app->add_option("--mode", mode, "Coloring family")
            ->check(CLI::IsMember({"exhaustive", "randomized"}))
            ->capture_default_str();
        app->add_option("--epsilon", epsilon, "Failure probability (randomized)")->capture_default_str();
        app->add_option("--seed", seed, "PRNG seed")->capture_default_str();
        app->add_option("--trial-cap", trial_cap, "Upper bound on randomized repetitions");
        app->add_option("--exhaustive-cap", exhaustive_cap, "Refuse exhaustive enumerations above this size")
            ->capture_default_str();
        app->add_option("--jobs", jobs, "Worker threads (results do not depend on it)")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
    }

    ColoringFamilySpec spec() const
    {
        ColoringFamilySpec s;
        s.mode = mode == "randomized" ? ColoringMode::Randomized : ColoringMode::Exhaustive;
        s.epsilon = epsilon;
        s.seed = seed;
        s.trial_cap = trial_cap;
        s.exhaustive_cap = exhaustive_cap;
        s.jobs = jobs;
        return s;
    }
};

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string solution_text(SolutionRecord rec, bool timing, const Stopwatch& clock)
{
    if (timing) {
        rec.elapsed_ms = clock.ms();
    }
    std::ostringstream out;
    write_solution(out, rec);
    return out.str();
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact solvers, recognizers and reductions for cluster/chordal independent set problems"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string instance_path;
    Output out;
    bool timing = false;
    int exit_code = kOk;
    std::function<void()> action;

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->require_subcommand(1);
    SpecFlags flags;
    int c = 1;
    std::optional<int> ell;

    auto* mwccs = solve->add_subcommand("mwccs", "Max-weight c-colorable subgraph with at most ell vertices");
    mwccs->add_option("--c", c, "Number of colors")->required()->check(CLI::Range(1, 64));
    mwccs->add_option("--ell", ell, "Maximum solution size")->required()->check(CLI::Range(0, 1 << 20));
    auto* mwis = solve->add_subcommand("mwis", "Max-weight independent set (chordal or cluster/chordal)");
    mwis->add_option("--ell", ell, "Maximum solution size")->check(CLI::Range(0, 1 << 20));
    auto* colorful = solve->add_subcommand("colorful", "Max-weight colorful independent set on a chordal graph");
    for (auto* sub : {mwccs, mwis, colorful}) {
        sub->add_option("instance", instance_path, "Instance file")->required();
        sub->add_option("-o,--output", out.path, "Solution file (default stdout)");
        sub->add_flag("--timing", timing, "Record elapsed_ms (output is then not byte-stable)");
    }
    flags.attach(mwccs);
    flags.attach(mwis);

    mwccs->callback([&] {
        action = [&] {
            Stopwatch clock;
            const auto inst = with_decomposition(read_instance_file(instance_path));
            ColoringStats stats;
            const auto spec = flags.spec();
            SolutionRecord rec{"mwccs", mwccs_cluster_chordal(inst, c, *ell, spec, &stats), flags.mode, spec.seed,
                               stats.outer_trials, std::nullopt};
            out.write(solution_text(std::move(rec), timing, clock));
        };
    });
    mwis->callback([&] {
        action = [&] {
            Stopwatch clock;
            const auto raw = read_instance_file(instance_path);
            SolutionRecord rec;
            rec.problem = "mwis";
            if (!raw.has_decomposition() && !ell) {
                rec.mode = "chordal-dp";
                rec.solution = max_weight_is_chordal(raw, clique_tree(raw.graph));
            } else {
                const auto inst = with_decomposition(raw);
                ColoringStats stats;
                const auto spec = flags.spec();
                rec.solution = mwis_cluster_chordal(inst, ell.value_or(inst.num_vertices()), spec, &stats);
                rec.mode = flags.mode;
                rec.seed = spec.seed;
                rec.trials = stats.inner_trials;
            }
            out.write(solution_text(std::move(rec), timing, clock));
        };
    });
    colorful->callback([&] {
        action = [&] {
            Stopwatch clock;
            const auto inst = read_instance_file(instance_path);
            SolutionRecord rec;
            rec.problem = "colorful";
            rec.mode = "chordal-dp";
            rec.solution = max_weight_colorful_is(inst, clique_tree(inst.graph), 1);
            out.write(solution_text(std::move(rec), timing, clock));
        };
    });

    // recognize
    auto* recognize = app.add_subcommand("recognize", "Test graph class membership");
    std::string cls;
    std::string witness_path;
    std::size_t edge_cap = kDefaultDecompositionEdgeCap;
    recognize->add_option("--class", cls,
                          "chordal|cluster|kmino:<k>|k1kfree:<k>|two-simplicial|inductive:<k>|cluster-chordal-brute")
        ->required();
    recognize->add_option("instance", instance_path, "Instance file")->required();
    recognize->add_option("-w,--witness", witness_path, "Witness file");
    recognize->add_option("--edge-cap", edge_cap, "Edge cap for cluster-chordal-brute")->capture_default_str();
    recognize->callback([&] {
        action = [&] {
            const auto inst = read_instance_file(instance_path);
            const Graph& g = inst.graph;
            std::string witness;
            bool member = false;
            auto param = [&](const std::string& prefix) -> std::optional<int> {
                if (cls.rfind(prefix, 0) != 0) {
                    return std::nullopt;
                }
                try {
                    std::size_t used = 0;
                    const int k = std::stoi(cls.substr(prefix.size()), &used);
                    if (used + prefix.size() == cls.size() && k >= 1) {
                        return k;
                    }
                } catch (const std::exception&) {
                }
                throw ArgumentError("bad class parameter in '" + cls + "'");
            };
            if (cls == "chordal") {
                if (const auto peo = is_chordal(g)) {
                    member = true;
                    witness = "peo " + one_based(peo->order) + "\n";
                } else if (const auto cycle = find_chordless_cycle(g)) {
                    witness = "cycle " + one_based(*cycle) + "\n";
                }
            } else if (cls == "cluster") {
                if (const auto p3 = find_induced_p3(g)) {
                    witness = "p3 " + one_based({(*p3)[0], (*p3)[1], (*p3)[2]}) + "\n";
                } else {
                    member = true;
                }
            } else if (const auto k = param("kmino:")) {
                member = is_k_mino(g, *k);
            } else if (const auto k1 = param("k1kfree:")) {
                if (const auto star = is_k1k_free(g, *k1)) {
                    witness = "star " + std::to_string(star->center + 1) + " " + one_based(star->leaves) + "\n";
                } else {
                    member = true;
                }
            } else if (cls == "two-simplicial") {
                if (const auto ord = two_simplicial_ordering(g)) {
                    member = true;
                    witness = "order " + one_based(ord->order) + "\n";
                }
            } else if (const auto ki = param("inductive:")) {
                if (const auto ord = find_inductive_k_independent_ordering(g, *ki)) {
                    member = true;
                    witness = "order " + one_based(ord->order) + "\n";
                }
            } else if (cls == "cluster-chordal-brute") {
                if (const auto dec = brute_force_cluster_chordal(g, edge_cap)) {
                    member = true;
                    WeightedInstance annotated = inst;
                    attach_decomposition(annotated, *dec);
                    witness = instance_text(annotated);
                }
            } else {
                throw ArgumentError("unknown class '" + cls + "'");
            }
            std::cout << (member ? "yes" : "no") << '\n';
            if (!witness_path.empty()) {
                Output{witness_path}.write(witness);
            }
            exit_code = member ? kOk : kAbsent;
        };
    });

    // generate
    auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
    std::string kind;
    int n = 10;
    int max_clique = 3;
    int max_cluster = 3;
    std::uint64_t seed = 0;
    std::optional<Weight> max_weight;
    std::optional<int> colors;
    int k = 3;
    std::vector<int> class_sizes;
    double p = 0.5;
    bool plant = false;
    generate->add_option("kind", kind, "chordal|cluster|overlay|mcc")
        ->required()
        ->check(CLI::IsMember({"chordal", "cluster", "overlay", "mcc"}));
    generate->add_option("-n", n, "Vertex count")->check(CLI::Range(0, 10'000'000))->capture_default_str();
    generate->add_option("--max-clique", max_clique, "Largest clique of the chordal part")
        ->check(CLI::Range(1, 1'000'000))
        ->capture_default_str();
    generate->add_option("--max-cluster", max_cluster, "Largest cluster")
        ->check(CLI::Range(1, 1'000'000))
        ->capture_default_str();
    generate->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    generate->add_option("--max-weight", max_weight, "Random weights in [0, max]");
    generate->add_option("--colors", colors, "Random vertex colors in [1, c]")->check(CLI::Range(1, 1'000'000));
    generate->add_option("-k", k, "Classes (mcc)")->check(CLI::Range(1, 1000))->capture_default_str();
    generate->add_option("--class-sizes", class_sizes, "Class sizes (mcc); default 2 each");
    generate->add_option("-p", p, "Cross edge probability (mcc)")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    generate->add_flag("--plant", plant, "Plant a multicolored clique (mcc)");
    generate->add_option("-o,--output", out.path, "Instance file (default stdout)");
    generate->callback([&] {
        action = [&] {
            WeightedInstance inst;
            if (kind == "chordal") {
                inst = WeightedInstance(random_chordal(n, max_clique, seed));
            } else if (kind == "cluster") {
                const auto cl = random_cluster(n, max_cluster, seed);
                inst = overlay_cluster_chordal(cl, Graph(n));
            } else if (kind == "overlay") {
                inst = overlay_cluster_chordal(random_cluster(n, max_cluster, mix_seed(seed, 1)),
                                               random_chordal(n, max_clique, mix_seed(seed, 2)));
            } else {
                if (class_sizes.empty()) {
                    class_sizes.assign(static_cast<std::size_t>(k), 2);
                }
                inst = instance_from_mcc(random_multicolored_clique(k, class_sizes, p, plant, seed));
            }
            if (max_weight) {
                inst = random_weights(std::move(inst), *max_weight, mix_seed(seed, 3));
            }
            if (colors && kind != "mcc") {
                inst.colors = random_colors(inst.num_vertices(), *colors, mix_seed(seed, 4));
            }
            out.write(instance_text(inst));
        };
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Apply a hardness reduction");
    std::string reduction;
    std::string names_path;
    reduce->add_option("reduction", reduction, "construction1|indkind:<k>|k1kfree:<k>")->required();
    reduce->add_option("instance", instance_path, "Instance file (construction1: classes from 'col' lines)")
        ->required();
    reduce->add_option("-o,--output", out.path, "Output instance (default stdout)");
    reduce->add_option("--names", names_path, "Gadget name sidecar (construction1)");
    reduce->callback([&] {
        action = [&] {
            const auto inst = read_instance_file(instance_path);
            auto param = [&](const std::string& prefix) -> std::optional<int> {
                if (reduction.rfind(prefix, 0) != 0) {
                    return std::nullopt;
                }
                const int value = std::atoi(reduction.c_str() + prefix.size());
                if (value < 1) {
                    throw ArgumentError("bad reduction parameter in '" + reduction + "'");
                }
                return value;
            };
            if (reduction == "construction1") {
                const auto con = construct_mis_instance(mcc_from_instance(inst));
                out.write(instance_text(WeightedInstance(con.graph), "ell " + std::to_string(con.ell)));
                if (!names_path.empty()) {
                    std::ostringstream names;
                    con.index.write(names);
                    Output{names_path}.write(names.str());
                }
            } else if (const auto ki = param("indkind:")) {
                out.write(instance_text(WeightedInstance(gen_indkind_hardness(inst.graph, *ki))));
            } else if (const auto kf = param("k1kfree:")) {
                out.write(instance_text(WeightedInstance(gen_k1kfree_hardness(inst.graph, *kf))));
            } else {
                throw ArgumentError("unknown reduction '" + reduction + "'");
            }
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
    std::string problem;
    oracle->add_option("problem", problem, "mwis|mwccs|colorful|mcc|hamiltonian")
        ->required()
        ->check(CLI::IsMember({"mwis", "mwccs", "colorful", "mcc", "hamiltonian"}));
    oracle->add_option("instance", instance_path, "Instance file")->required();
    oracle->add_option("--c", c, "Number of colors (mwccs)")->check(CLI::Range(0, 64));
    oracle->add_option("--ell", ell, "Maximum solution size")->check(CLI::Range(0, 1 << 20));
    oracle->add_option("-o,--output", out.path, "Solution file (default stdout)");
    oracle->callback([&] {
        action = [&] {
            const auto inst = read_instance_file(instance_path);
            SolutionRecord rec;
            rec.problem = problem;
            rec.mode = "oracle";
            if (problem == "mwis") {
                rec.solution = brute_mwis(inst, ell);
            } else if (problem == "mwccs") {
                rec.solution = brute_mwccs(inst, c, ell);
            } else if (problem == "colorful") {
                rec.solution = brute_colorful_is(inst);
            } else {
                const bool yes = problem == "mcc" ? brute_multicolored_clique(mcc_from_instance(inst))
                                                  : brute_hamiltonian_cycle(inst.graph);
                std::cout << (yes ? "yes" : "no") << '\n';
                exit_code = yes ? kOk : kAbsent;
                return;
            }
            std::ostringstream text;
            write_solution(text, rec);
            out.write(text.str());
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        action();
        return exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kData;
    } catch (const WitnessError& e) {
        std::cerr << "witness error: " << e.what() << '\n';
        return kData;
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return kSizeCap;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
