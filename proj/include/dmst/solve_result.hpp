#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmst/graph.hpp"

namespace dmst {

/// Thrown when some vertex cannot be reached from the root.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError() : std::runtime_error("no arborescence") {}
};

/// Thrown by a solver loop once its deadline has passed.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("timeout") {}
};

struct SolveOptions {
    /// Run the (expensive) internal consistency checks while solving.
    bool check_invariants = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Counters filled in by the solvers.
struct SolveStats {
    std::uint64_t contractions = 0;
    std::uint64_t contracted_cycle_length = 0;  // summed over all contractions
    /// Incoming-edge queue sizes of cycle members at contraction time, i.e. what
    /// a solver merging plain edge lists would rescan.
    std::uint64_t list_merge_scan = 0;
    std::uint64_t queue_moves = 0;  // smaller-into-larger only

    // GGST active forest and exit lists
    std::uint64_t af_inserts = 0;
    std::uint64_t af_replaces = 0;
    std::uint64_t af_deletes = 0;
    std::uint64_t af_merges = 0;
    std::uint64_t af_queries = 0;
    std::uint64_t exit_list_inserts = 0;
    std::uint64_t exit_list_deletes = 0;
    std::uint64_t stale_passive_entries = 0;
    std::uint64_t paths = 0;
};

/// Output of the main phase. `picked` lists the edges in the order they were
/// chosen; forest_parent[i] is the index of the pick that replaced pick i's
/// cycle (kNoParent if none), which is what reconstruction needs.
struct SolveResult {
    static constexpr std::int32_t kNoParent = -1;

    Weight total_weight = 0;
    std::vector<EdgeId> picked;
    std::vector<std::int32_t> forest_parent;
    SolveStats stats;
};

/// Cheap cooperative deadline check: reads the clock once every kStride ticks.
class Budget {
public:
    static constexpr std::uint32_t kStride = 1024;

    explicit Budget(std::optional<std::chrono::steady_clock::time_point> deadline) : deadline_(deadline) { check_now(); }

    void tick() {
        if (deadline_ && ++ticks_ % kStride == 0) check_now();
    }

    void check_now() const {
        if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) throw TimeoutError();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint32_t ticks_ = 0;
};

}  // namespace dmst
