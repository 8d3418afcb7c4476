#include "dmst/bench.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "dmst/recon.hpp"

namespace dmst {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

}  // namespace

LoadedInstance load_instance(const std::string& path, const InputSpec& spec) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    LoadedInstance loaded;
    if (spec.format == InputFormat::EdgeList) {
        loaded.graph = parse_edge_list(in);
    } else {
        loaded.prepared = attach_super_root(sample_weights(parse_konect(in), spec.seed, spec.max_w));
        loaded.graph = loaded.prepared->graph;
    }
    return loaded;
}

BenchRow run_once(const std::string& path, Algorithm algorithm, const BenchConfig& config) {
    BenchRow row;
    row.instance = path;
    row.algorithm = algorithm;

    const auto budget = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.timeout_seconds));
    const auto start = Clock::now();
    SolveOptions options;
    options.deadline = start + budget;

    auto mark_timeout = [&] {
        row.status = "timeout";
        row.weight.reset();
        row.init_ms = row.recon_ms = row.teardown_ms = 0;
        row.exec_ms = std::chrono::duration_cast<std::chrono::milliseconds>(budget).count();
    };

    Graph graph;
    try {
        graph = load_instance(path, config.input).graph;
        row.n = graph.n;
        row.m = graph.m();
    } catch (const std::exception&) {
        row.status = "error";
        return row;
    }

    auto t_prev = start;
    auto lap = [&t_prev] {
        const auto now = Clock::now();
        const auto elapsed = ms_between(t_prev, now);
        t_prev = now;
        return elapsed;
    };

    std::unique_ptr<Solver> solver;
    try {
        solver = make_solver(algorithm, graph, options);
        row.init_ms = lap();
        solver->run();
        row.exec_ms = lap();
        reconstruct(solver->result(), graph);
        row.recon_ms = lap();
        row.weight = solver->result().total_weight;
        solver.reset();
        row.teardown_ms = lap();
        row.status = Clock::now() - start > budget ? "timeout" : "ok";
    } catch (const TimeoutError&) {
        row.status = "timeout";
    } catch (const InfeasibleError&) {
        row.exec_ms = lap();
        solver.reset();
        row.teardown_ms = lap();
        row.status = "infeasible";
    } catch (const std::exception&) {
        row.status = "error";
    }
    if (row.status == "timeout") mark_timeout();
    return row;
}

void run_bench(const BenchConfig& config, const std::function<void(const BenchRow&)>& on_row) {
    for (const std::string& path : config.inputs) {
        for (const Algorithm algorithm : config.algorithms) {
            for (int rep = 0; rep < config.repetitions; ++rep) on_row(run_once(path, algorithm, config));
        }
    }
}

void write_csv_row(std::ostream& out, const BenchRow& row) {
    out << csv_field(row.instance) << ',' << to_string(row.algorithm) << ',' << row.n << ',' << row.m << ',';
    if (row.weight) out << *row.weight;
    out << ',' << row.init_ms << ',' << row.exec_ms << ',' << row.recon_ms << ',' << row.teardown_ms << ',' << row.status
        << '\n';
}

void append_csv(const std::string& path, const std::vector<BenchRow>& rows) {
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (fresh) out << kCsvHeader << '\n';
    for (const BenchRow& row : rows) write_csv_row(out, row);
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace dmst
