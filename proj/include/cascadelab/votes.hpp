#pragma once

#include <string>
#include <vector>

namespace cascadelab {

struct Vote {
    double time = 0;   // Unix seconds or abstract time units
    std::string voter; // external id; may be absent from the graph
};

// Per-story, time-ordered vote record. Invariants established by load_votes:
// one vote per voter (first kept), times non-decreasing, and the submitter's
// vote, when the submitter voted, is first.
struct VoteLog {
    std::string story;
    std::string submitter; // earliest voter unless the input named one
    std::vector<Vote> votes;
};

} // namespace cascadelab
