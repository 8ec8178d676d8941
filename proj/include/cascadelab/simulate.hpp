#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cascadelab/graph.hpp"

namespace cascadelab {

// Two social-contagion mechanisms sharing one engine. IndependentCascade:
// every exposure of a not-yet-voted node is an independent Bernoulli(lambda)
// trial; the first success fixes the node's vote time at exposure time plus
// a uniform delay. FriendSaturation: only the chronologically first exposure
// draws a trial; a node that declines is immune to all later exposures.
// In both, a node votes at most once and spreads exactly once, on its own
// vote (the one-shot rule: recovery rate 1, infection rate lambda).
enum class CascadeModel { IndependentCascade, FriendSaturation };

struct TimedVote {
    NodeId node = -1;
    double time = 0;
};

struct SimulatedCascade {
    double lambda = 0;
    NodeId seed_node = -1;
    std::vector<TimedVote> votes;            // time order, seed first
    std::vector<NodeId> exposed_nonvoters;   // exposed but never voted
    std::vector<std::int64_t> new_exposures; // per voter: fans first exposed by it

    // v and w of the transmissibility likelihood: voters beyond the seed,
    // and distinct exposed nodes (those voters plus exposed non-voters).
    std::int64_t voter_count() const {
        return static_cast<std::int64_t>(votes.size()) - 1;
    }
    std::int64_t exposed_count() const {
        return voter_count() + static_cast<std::int64_t>(exposed_nonvoters.size());
    }
    std::int64_t size() const { return static_cast<std::int64_t>(votes.size()); }
};

struct SimConfig {
    CascadeModel model = CascadeModel::IndependentCascade;
    double lambda_lo = 0;   // lambda_lo == lambda_hi means fixed lambda
    double lambda_hi = 0;
    double delay_max = 1.0; // vote delay ~ Uniform(0, delay_max), > 0
    std::int64_t runs = 1;
    std::int64_t min_size = 10; // emit only cascades with size > min_size
    std::uint64_t seed = 0;
    std::optional<NodeId> fixed_seed_node; // default: uniform per run
    int threads = 0;                       // 0 = hardware concurrency
};

// One cascade to quiescence. run_key selects the run's private random
// stream; every trial and delay is a pure function of (run_key, node,
// counter), so concurrent runs are reproducible regardless of scheduling.
SimulatedCascade run_cascade(const DirectedGraph& graph, CascadeModel model,
                             double lambda, NodeId seed_node,
                             std::uint64_t run_key, double delay_max = 1.0);

// The run key the sweep machinery assigns to run index `run`.
std::uint64_t sweep_run_key(std::uint64_t master_seed, std::int64_t run);
double sweep_lambda(const SimConfig& config, std::int64_t run);
NodeId sweep_seed_node(const DirectedGraph& graph, const SimConfig& config,
                       std::int64_t run);

struct SweepRow {
    std::int64_t run = 0;
    double lambda = 0;
    NodeId seed_node = -1;
    std::int64_t size = 0;    // voters including the seed
    std::int64_t exposed = 0; // distinct exposed nodes (w)
};

struct SweepResult {
    std::vector<SweepRow> emitted; // size > min_size, ordered by run index
    std::int64_t total_runs = 0;
    std::int64_t filtered_out = 0;
};

// Monte Carlo sweep: per-run lambda uniform in [lambda_lo, lambda_hi],
// seed node per config, runs executed across threads with deterministic
// aggregation order.
SweepResult sweep(const DirectedGraph& graph, const SimConfig& config);

// Sweep variant handing every full cascade (in run order) to `sink`,
// serialized, for analyses that need vote/exposure detail. Rows for all
// runs are still returned.
SweepResult sweep_cascades(const DirectedGraph& graph, const SimConfig& config,
                           const std::function<void(std::int64_t run, const SimulatedCascade&)>& sink);

} // namespace cascadelab
