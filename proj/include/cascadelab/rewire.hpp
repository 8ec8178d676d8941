#pragma once

#include <cstdint>
#include <span>

#include "cascadelab/graph.hpp"

namespace cascadelab {

struct RewireReport {
    std::int64_t edges_dropped = 0; // stub pairs discarded after the retry budget
    std::int64_t swap_passes = 0;
};

// Directed configuration model: keeps every node's exact in- and
// out-degree while matching stubs uniformly at random. Self-loops and
// duplicate edges left by the matching are resolved by swapping endpoints
// with uniformly chosen partner edges; pairs still in conflict after the
// retry budget are dropped (throws if more than 0.1% of edges would go).
DirectedGraph configuration_rewire(const DirectedGraph& graph, std::uint64_t seed,
                                   RewireReport* report = nullptr);

// Same stub-matching engine, starting from explicit degree sequences
// (in_degrees and out_degrees must have equal sums).
DirectedGraph random_configuration_graph(std::span<const std::int64_t> out_degrees,
                                         std::span<const std::int64_t> in_degrees,
                                         std::uint64_t seed,
                                         RewireReport* report = nullptr);

} // namespace cascadelab
