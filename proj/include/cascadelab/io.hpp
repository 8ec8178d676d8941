#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cascadelab/graph.hpp"
#include "cascadelab/votes.hpp"

namespace cascadelab {

enum class EdgeFormat {
    Auto,        // sniff the first line
    EdgeList,    // "source target" whitespace-separated, or source,target CSV
    DiggFriends, // CSV header: mutual,friend_date,user_id,friend_id
};

// Edge-list semantics: information flows source -> target (target is a fan
// of source). Digg friends files declare "user_id is a fan of friend_id",
// producing the edge friend_id -> user_id; mutual=1 adds the reverse edge.
DirectedGraph load_graph(std::istream& in, EdgeFormat format = EdgeFormat::Auto,
                         LoadReport* report = nullptr);
DirectedGraph load_graph_file(const std::string& path,
                              EdgeFormat format = EdgeFormat::Auto,
                              LoadReport* report = nullptr);

// CSV with header "source,target", one row per edge, external ids.
void write_edge_csv(const DirectedGraph& graph, std::ostream& out);

// CSV with header "node_id,label" mapping dense ids to external ids.
void write_id_map_csv(const DirectedGraph& graph, std::ostream& out);

// Votes CSV: header vote_date,voter_id,story_id (submitter_id optional).
// Returns one log per story in order of first appearance, each sorted by
// (time, input order) with duplicate voters dropped (first vote kept).
std::vector<VoteLog> load_votes(std::istream& in);
std::vector<VoteLog> load_votes_file(const std::string& path);

void write_votes_csv(const std::vector<VoteLog>& logs, std::ostream& out);

} // namespace cascadelab
