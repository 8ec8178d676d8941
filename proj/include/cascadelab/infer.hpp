#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cascadelab/graph.hpp"
#include "cascadelab/simulate.hpp"
#include "cascadelab/votes.hpp"

namespace cascadelab {

struct CascadeStats {
    std::int64_t voters = 0;  // v: voters excluding the seed
    std::int64_t exposed = 0; // w: distinct exposed nodes (v + watchers)
    double lambda_inf = 0;    // v / w
};

// Probability of a cascade with v voters out of w exposed at
// transmissibility lambda: (1-lambda)^(w-v) * lambda^v.
double cascade_likelihood(std::int64_t v, std::int64_t w, double lambda);
double log_cascade_likelihood(std::int64_t v, std::int64_t w, double lambda);

CascadeStats infer_lambda(std::int64_t v, std::int64_t w);
CascadeStats infer_lambda(const SimulatedCascade& cascade);

// Counts v and w for a time-ordered member list (seed first) by walking the
// cascade and crediting each exposed node exactly once. When `story` is
// given, nodes that voted for the story before an exposure are not exposable
// (an edge into an earlier voter is inert).
CascadeStats infer_lambda(std::span<const TimedVote> members,
                          const DirectedGraph& graph,
                          const VoteLog* story = nullptr);

double pearson(std::span<const double> x, std::span<const double> y);

struct DynamicsPoint {
    std::int64_t index = 0;      // voter order, 1-based, seed = 1
    NodeId node = -1;
    std::int64_t d_watching = 0; // fans first exposed by this voter
    std::int64_t d_voting = 0;   // later voters among those fans
    std::optional<double> lambda; // d_voting / d_watching
    std::optional<double> r;      // d_watching * lambda
};

// Per-voter fanout/transmissibility series: walks voters in time order
// maintaining the cumulative exposed set.
std::vector<DynamicsPoint> dynamics_series(std::span<const TimedVote> members,
                                           const DirectedGraph& graph,
                                           const VoteLog* story = nullptr);

struct DynamicsBin {
    std::int64_t first_index = 0;
    std::int64_t last_index = 0;
    double mean_watching = 0;
    double mean_voting = 0;
    std::optional<double> lambda; // mean over defined per-voter values
    std::optional<double> r;      // mean_watching * lambda
};

// Geometric binning over voter index for trend plots.
std::vector<DynamicsBin> bin_dynamics(std::span<const DynamicsPoint> series,
                                      double ratio);

} // namespace cascadelab
