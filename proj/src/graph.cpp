#include "cascadelab/graph.hpp"

#include <algorithm>

#include "cascadelab/errors.hpp"

namespace cascadelab {

std::optional<NodeId> DirectedGraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
    auto f = fans(u);
    return std::binary_search(f.begin(), f.end(), v);
}

GraphBuilder::GraphBuilder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (NodeId i = 0; i < static_cast<NodeId>(labels_.size()); ++i) {
        index_.emplace(labels_[i], i);
    }
}

NodeId GraphBuilder::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    return id;
}

std::optional<NodeId> GraphBuilder::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

DirectedGraph GraphBuilder::build(LoadReport* report) && {
    const NodeId n = node_count();

    std::int64_t self_loops = 0;
    auto writer = edges_.begin();
    for (const auto& e : edges_) {
        if (e.first == e.second) {
            ++self_loops;
            continue;
        }
        *writer++ = e;
    }
    edges_.erase(writer, edges_.end());

    std::sort(edges_.begin(), edges_.end());
    const auto unique_end = std::unique(edges_.begin(), edges_.end());
    const std::int64_t duplicates = std::distance(unique_end, edges_.end());
    edges_.erase(unique_end, edges_.end());

    if (report != nullptr) {
        report->self_loops_dropped += self_loops;
        report->duplicate_edges_dropped += duplicates;
    }

    DirectedGraph g;
    g.labels_ = std::move(labels_);
    g.index_ = std::move(index_);

    const std::int64_t m = static_cast<std::int64_t>(edges_.size());
    g.fan_offsets_.assign(n + 1, 0);
    g.friend_offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++g.fan_offsets_[u + 1];
        ++g.friend_offsets_[v + 1];
    }
    for (NodeId i = 0; i < n; ++i) {
        g.fan_offsets_[i + 1] += g.fan_offsets_[i];
        g.friend_offsets_[i + 1] += g.friend_offsets_[i];
    }

    g.fan_targets_.resize(m);
    std::vector<std::int64_t> cursor(g.fan_offsets_.begin(), g.fan_offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        g.fan_targets_[cursor[u]++] = v;
    }

    g.friend_sources_.resize(m);
    cursor.assign(g.friend_offsets_.begin(), g.friend_offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        g.friend_sources_[cursor[v]++] = u;
    }
    // edges_ is (u,v)-sorted, so both adjacency arrays come out sorted.

    edges_.clear();
    return g;
}

DirectedGraph graph_from_dense_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                                     LoadReport* report) {
    std::vector<std::string> labels(n);
    for (NodeId i = 0; i < n; ++i) labels[i] = std::to_string(i);
    GraphBuilder b(std::move(labels));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw data_error("edge endpoint out of range");
        }
        b.add_edge(u, v);
    }
    return std::move(b).build(report);
}

} // namespace cascadelab
