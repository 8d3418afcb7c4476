#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmst/graph.hpp"
#include "dmst/solver.hpp"

namespace dmst {

enum class InputFormat { EdgeList, Konect };

/// How an instance file is turned into a solver input. Konect files get
/// random weights and a super root (see sample_weights, attach_super_root).
struct InputSpec {
    InputFormat format = InputFormat::EdgeList;
    std::uint64_t seed = 1;
    Weight max_w = 1000;
};

struct LoadedInstance {
    Graph graph;
    /// Konect only: super-root bookkeeping of the prepared graph.
    std::optional<RootedInstance> prepared;
};

/// Throws std::runtime_error if the file cannot be read, ParseError if it is malformed.
LoadedInstance load_instance(const std::string& path, const InputSpec& spec);

inline constexpr std::string_view kCsvHeader = "instance,algorithm,n,m,weight,init_ms,exec_ms,recon_ms,teardown_ms,status";

struct BenchRow {
    std::string instance;
    Algorithm algorithm = Algorithm::Ggst;
    Vertex n = 0;
    EdgeId m = 0;
    std::optional<Weight> weight;
    std::int64_t init_ms = 0;
    std::int64_t exec_ms = 0;
    std::int64_t recon_ms = 0;
    std::int64_t teardown_ms = 0;
    std::string status;  // ok | infeasible | timeout | error
};

struct BenchConfig {
    std::vector<std::string> inputs;
    std::vector<Algorithm> algorithms;
    int repetitions = 1;
    double timeout_seconds = 1800;
    InputSpec input;
};

/// One timed run: init (load + build the solver), exec (main phase),
/// recon (reconstruction) and teardown (destroying the solver). A run that
/// hits the deadline is reported as status=timeout with the whole budget
/// charged to exec_ms and the other phases at 0.
BenchRow run_once(const std::string& path, Algorithm algorithm, const BenchConfig& config);

/// Every (instance, algorithm, repetition) in that order, strictly sequential.
void run_bench(const BenchConfig& config, const std::function<void(const BenchRow&)>& on_row);

void write_csv_row(std::ostream& out, const BenchRow& row);

/// Opens `path` for appending and writes the header if the file is new or empty.
/// Throws std::runtime_error if the file cannot be opened.
void append_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace dmst
