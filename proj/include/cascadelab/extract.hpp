#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cascadelab/graph.hpp"
#include "cascadelab/simulate.hpp"
#include "cascadelab/votes.hpp"

namespace cascadelab {

// One reconstructed cascade: a seed (a voter with no earlier-voting friend)
// plus every later voter reachable from it through earlier-voting friends.
struct ExtractedCascade {
    NodeId seed = -1;
    std::vector<TimedVote> members;          // vote order, seed first
    std::unordered_map<NodeId, double> phi;  // generating-function value per member
};

struct ExtractResult {
    std::vector<ExtractedCascade> cascades; // one per seed, in seed vote order
    std::int64_t skipped_voters = 0;        // voters absent from the graph
    std::int64_t resolved_voters = 0;
};

// Cascade extraction by the generating-function recursion
//   phi(seed) = 1,  phi(j) = alpha * sum of phi(i) over earlier-voting
//   friends i of j,
// with membership propagated as the positivity of the per-seed restriction
// (equivalently: reachability in the time-respecting friend->fan DAG).
// A voter can belong to several cascades when they collide. Activation
// requires a strictly earlier timestamp; equal-time votes do not activate
// each other. phi is reported at the supplied alpha.
ExtractResult assign_cascades(const VoteLog& log, const DirectedGraph& graph,
                              double alpha = 1.0);

// Same phi recursion evaluated in log space (log-sum-exp), for deep
// cascades where phi under- or overflows. Returns log(phi) per voter node.
std::unordered_map<NodeId, double> log_phi_values(const VoteLog& log,
                                                  const DirectedGraph& graph,
                                                  double alpha);

// The cascade seeded at the story's submitter. Throws data_error if the
// submitter is missing from the graph or never voted.
ExtractedCascade principal_cascade(const VoteLog& log, const DirectedGraph& graph,
                                   double alpha = 1.0);

} // namespace cascadelab
