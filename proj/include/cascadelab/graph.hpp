#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cascadelab {

using NodeId = std::int32_t;

struct LoadReport {
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicate_edges_dropped = 0;
};

// Immutable directed follower graph in CSR form. An edge u -> v means v is
// a fan of u: v sees u's votes, information flows from u to v. Both
// directions are stored, so fans(u) and friends(v) are O(1) lookups.
// External string ids map to dense NodeIds in first-seen order.
class DirectedGraph {
public:
    DirectedGraph() = default;

    NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(fan_targets_.size()); }

    // Successors of u: the fans who see u's activity.
    std::span<const NodeId> fans(NodeId u) const {
        return {fan_targets_.data() + fan_offsets_[u],
                fan_targets_.data() + fan_offsets_[u + 1]};
    }

    // Predecessors of v: the friends v is watching.
    std::span<const NodeId> friends(NodeId v) const {
        return {friend_sources_.data() + friend_offsets_[v],
                friend_sources_.data() + friend_offsets_[v + 1]};
    }

    std::int64_t out_degree(NodeId u) const { return static_cast<std::int64_t>(fans(u).size()); }
    std::int64_t in_degree(NodeId v) const { return static_cast<std::int64_t>(friends(v).size()); }

    const std::string& label(NodeId id) const { return labels_[id]; }
    std::optional<NodeId> find(std::string_view label) const;

    bool has_edge(NodeId u, NodeId v) const;

private:
    friend class GraphBuilder;

    std::vector<std::int64_t> fan_offsets_;
    std::vector<NodeId> fan_targets_;
    std::vector<std::int64_t> friend_offsets_;
    std::vector<NodeId> friend_sources_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

// Accumulates labelled edges and builds the immutable graph. Self-loops and
// duplicate (u, v) pairs are dropped at build time and counted in the
// LoadReport.
class GraphBuilder {
public:
    GraphBuilder() = default;

    // Start from an existing label set (used by rewiring, which must keep
    // the node universe of its input even for now-isolated nodes).
    explicit GraphBuilder(std::vector<std::string> labels);

    // Dense id for a label, assigned in first-seen order.
    NodeId intern(std::string_view label);
    std::optional<NodeId> find(std::string_view label) const;

    void add_edge(NodeId u, NodeId v) { edges_.emplace_back(u, v); }
    void add_edge(std::string_view u, std::string_view v) {
        edges_.emplace_back(intern(u), intern(v));
    }

    NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    DirectedGraph build(LoadReport* report = nullptr) &&;

private:
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

// Convenience for tests and generators: nodes 0..n-1 labelled by their
// decimal index.
DirectedGraph graph_from_dense_edges(NodeId n,
                                     std::vector<std::pair<NodeId, NodeId>> edges,
                                     LoadReport* report = nullptr);

} // namespace cascadelab
