#include "dmst/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "dmst/bench.hpp"
#include "dmst/gen.hpp"
#include "dmst/recon.hpp"
#include "dmst/solver.hpp"

namespace dmst {

namespace {

struct FormatArgs {
    std::string format = "edgelist";
    std::uint64_t seed = 1;
    Weight max_w = 1000;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Input format")
            ->check(CLI::IsMember({"edgelist", "konect"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Weight sampling seed (konect)")->capture_default_str();
        cmd->add_option("--max-w", max_w, "Largest sampled weight (konect)")
            ->check(CLI::Range(Weight{1}, kMaxAbsWeightLargeGraph))
            ->capture_default_str();
    }

    [[nodiscard]] InputSpec spec() const {
        return {format == "konect" ? InputFormat::Konect : InputFormat::EdgeList, seed, max_w};
    }
};

struct SolveArgs {
    std::string algorithm;
    std::string input;
    std::string output;
    std::int64_t root = -1;
    FormatArgs format;
};

struct BenchArgs {
    std::vector<std::string> algorithms;
    std::vector<std::string> inputs;
    int repetitions = 1;
    double timeout = 1800;
    std::string csv;
    FormatArgs format;
};

struct GenArgs {
    std::string family;
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    Weight max_w = 100;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_solve(const SolveArgs& args, bool root_given, std::ostream& out, std::ostream& err) {
    const auto algorithm = parse_algorithm(args.algorithm);
    if (!algorithm) {
        err << "unknown algorithm: " << args.algorithm << '\n';
        return kExitUsage;
    }
    const InputSpec spec = args.format.spec();
    if (root_given && spec.format == InputFormat::Konect) {
        err << "--root cannot be combined with --format konect\n";
        return kExitUsage;
    }

    LoadedInstance instance;
    try {
        instance = load_instance(args.input, spec);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
    Graph& graph = instance.graph;
    if (root_given) {
        if (args.root < 0 || args.root >= graph.n) {
            err << "root " << args.root << " out of range\n";
            return kExitUsage;
        }
        graph.root = static_cast<Vertex>(args.root);
    }

    SolveResult result;
    try {
        result = solve(graph, *algorithm);
    } catch (const InfeasibleError& e) {
        err << e.what() << '\n';
        return kExitInfeasible;
    }
    const std::vector<EdgeId> edges = reconstruct(result, graph);

    std::ofstream file(args.output);
    if (!file) {
        err << "error: cannot open " << args.output << '\n';
        return kExitIoError;
    }
    for (const EdgeId id : edges) {
        if (instance.prepared) {
            // Report ids of the konect file's edges; super-root edges have none.
            const EdgeId original = instance.prepared->original_edge[id];
            if (original != kNoEdge) file << original << '\n';
        } else {
            file << id << '\n';
        }
    }
    if (!file) {
        err << "error: cannot write " << args.output << '\n';
        return kExitIoError;
    }
    out << result.total_weight << '\n';
    return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    for (const std::string& name : args.algorithms) {
        const auto algorithm = parse_algorithm(name);
        if (!algorithm) {
            err << "unknown algorithm: " << name << '\n';
            return kExitUsage;
        }
        config.algorithms.push_back(*algorithm);
    }
    config.inputs = args.inputs;
    config.repetitions = args.repetitions;
    config.timeout_seconds = args.timeout;
    config.input = args.format.spec();

    try {
        append_csv(args.csv, {});
        run_bench(config, [&](const BenchRow& row) {
            append_csv(args.csv, {row});
            write_csv_row(out, row);
        });
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
    return kExitOk;
}

int cmd_gen(const GenArgs& args, bool has_k, bool has_n, bool has_m, std::ostream& err) {
    constexpr std::int64_t kMaxId = std::numeric_limits<std::int32_t>::max() - 1;
    Graph graph;
    try {
        if (args.family == "antilemon") {
            if (!has_k) throw std::invalid_argument("antilemon needs --k");
            if (args.k > kMaxId) throw std::invalid_argument("--k too large");
            graph = gen_antilemon(static_cast<Vertex>(args.k));
        } else {
            if (!has_n || !has_m) throw std::invalid_argument("er-rooted needs --n and --m");
            if (args.n > kMaxId || args.m > kMaxId) throw std::invalid_argument("--n or --m too large");
            if (args.max_w > kMaxAbsWeight) throw std::invalid_argument("--max-w too large");
            graph = gen_er_rooted(static_cast<Vertex>(args.n), static_cast<EdgeId>(args.m), args.max_w, args.seed);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file(args.output);
    if (!file) {
        err << "error: cannot open " << args.output << '\n';
        return kExitIoError;
    }
    write_edge_list(file, graph);
    if (!file) {
        err << "error: cannot write " << args.output << '\n';
        return kExitIoError;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-weight spanning arborescence solvers"};
    app.name("dmst");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
    solve_cmd->add_option("--algo", solve_args.algorithm, "ggst, tarjan-matrix, tarjan-heap or tarjan-sil")->required();
    solve_cmd->add_option("--in", solve_args.input, "Instance file")->required();
    auto* root_opt = solve_cmd->add_option("--root", solve_args.root, "Override the root vertex");
    solve_cmd->add_option("--out", solve_args.output, "File receiving the arborescence edge ids")->required();
    solve_args.format.attach(solve_cmd);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time solvers phase by phase");
    bench_cmd->add_option("--algos", bench_args.algorithms, "Comma-separated algorithm names")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--in", bench_args.inputs, "Instance files")->required();
    bench_cmd->add_option("--reps", bench_args.repetitions, "Repetitions per pair")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--timeout", bench_args.timeout, "Per-run limit in seconds")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bench_cmd->add_option("--csv", bench_args.csv, "CSV file to append to")->required();
    bench_args.format.attach(bench_cmd);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("family", gen_args.family, "antilemon or er-rooted")
        ->required()
        ->check(CLI::IsMember({"antilemon", "er-rooted"}));
    auto* k_opt = gen_cmd->add_option("--k", gen_args.k, "Antilemon size");
    auto* n_opt = gen_cmd->add_option("--n", gen_args.n, "Vertex count");
    auto* m_opt = gen_cmd->add_option("--m", gen_args.m, "Edge count");
    gen_cmd->add_option("--max-w", gen_args.max_w, "Largest weight")->capture_default_str();
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_args.output, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitUsage;
    }

    if (*solve_cmd) return cmd_solve(solve_args, root_opt->count() > 0, out, err);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
    return cmd_gen(gen_args, k_opt->count() > 0, n_opt->count() > 0, m_opt->count() > 0, err);
}

}  // namespace dmst
