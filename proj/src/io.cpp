#include "cascadelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cascadelab/errors.hpp"

namespace cascadelab {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
    return fields;
}

double parse_time(const std::string& s, std::int64_t line_no) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw data_error("line " + std::to_string(line_no) + ": bad timestamp '" + s + "'");
    }
    return value;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

EdgeFormat sniff_format(const std::string& first_line) {
    if (first_line.find(',') == std::string::npos) return EdgeFormat::EdgeList;
    auto fields = split_csv(first_line);
    for (auto& f : fields) {
        std::transform(f.begin(), f.end(), f.begin(),
                       [](unsigned char c) { return std::tolower(c); });
    }
    if (std::find(fields.begin(), fields.end(), "friend_id") != fields.end()) {
        return EdgeFormat::DiggFriends;
    }
    return EdgeFormat::EdgeList;
}

} // namespace

DirectedGraph load_graph(std::istream& in, EdgeFormat format, LoadReport* report) {
    GraphBuilder builder;
    std::string line;
    std::int64_t line_no = 0;
    bool saw_record = false;
    bool header_checked = false;

    // Digg friends layout: mutual,friend_date,user_id,friend_id.
    int col_mutual = 0, col_user = 2, col_friend = 3;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;

        if (format == EdgeFormat::Auto) format = sniff_format(line);

        if (format == EdgeFormat::DiggFriends) {
            auto fields = split_csv(line);
            if (!header_checked) {
                header_checked = true;
                // map columns by name
                int idx = 0;
                bool found_friend = false;
                for (const auto& f : fields) {
                    std::string low = f;
                    std::transform(low.begin(), low.end(), low.begin(),
                                   [](unsigned char c) { return std::tolower(c); });
                    if (low == "mutual") col_mutual = idx;
                    if (low == "user_id") col_user = idx;
                    if (low == "friend_id") {
                        col_friend = idx;
                        found_friend = true;
                    }
                    ++idx;
                }
                if (found_friend) continue; // header row consumed
            }
            const int needed = std::max({col_mutual, col_user, col_friend});
            if (static_cast<int>(fields.size()) <= needed) {
                throw data_error("line " + std::to_string(line_no) +
                                 ": expected at least " + std::to_string(needed + 1) +
                                 " comma-separated fields");
            }
            const std::string& user = fields[col_user];
            const std::string& friend_of = fields[col_friend];
            if (user.empty() || friend_of.empty()) {
                throw data_error("line " + std::to_string(line_no) + ": empty node id");
            }
            // user is a fan of friend_of: information flows friend -> user.
            builder.add_edge(friend_of, user);
            if (fields[col_mutual] == "1") builder.add_edge(user, friend_of);
            saw_record = true;
        } else {
            std::vector<std::string> fields = line.find(',') != std::string::npos
                                                  ? split_csv(line)
                                                  : split_ws(line);
            if (!header_checked) {
                header_checked = true;
                if (fields.size() == 2 && fields[0] == "source" && fields[1] == "target") {
                    continue;
                }
            }
            if (fields.size() != 2) {
                throw data_error("line " + std::to_string(line_no) +
                                 ": expected 'source target', got " +
                                 std::to_string(fields.size()) + " fields");
            }
            if (fields[0].empty() || fields[1].empty()) {
                throw data_error("line " + std::to_string(line_no) + ": empty node id");
            }
            builder.add_edge(fields[0], fields[1]);
            saw_record = true;
        }
    }

    if (!saw_record) throw data_error("no edge records in input");
    return std::move(builder).build(report);
}

DirectedGraph load_graph_file(const std::string& path, EdgeFormat format, LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open graph file: " + path);
    return load_graph(in, format, report);
}

void write_edge_csv(const DirectedGraph& graph, std::ostream& out) {
    out << "source,target\n";
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (NodeId v : graph.fans(u)) {
            out << graph.label(u) << ',' << graph.label(v) << '\n';
        }
    }
}

void write_id_map_csv(const DirectedGraph& graph, std::ostream& out) {
    out << "node_id,label\n";
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        out << u << ',' << graph.label(u) << '\n';
    }
}

std::vector<VoteLog> load_votes(std::istream& in) {
    struct RawVote {
        double time;
        std::int64_t order;
        std::string voter;
    };
    struct RawStory {
        std::vector<RawVote> votes;
        std::string submitter; // from an explicit column, if any
    };

    std::unordered_map<std::string, RawStory> stories;
    std::vector<std::string> story_order;

    std::string line;
    std::int64_t line_no = 0;
    std::int64_t order = 0;
    bool header_checked = false;
    int col_time = 0, col_voter = 1, col_story = 2, col_submitter = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;

        auto fields = line.find(',') != std::string::npos ? split_csv(line) : split_ws(line);
        if (!header_checked) {
            header_checked = true;
            bool is_header = false;
            int idx = 0;
            for (const auto& f : fields) {
                std::string low = f;
                std::transform(low.begin(), low.end(), low.begin(),
                               [](unsigned char c) { return std::tolower(c); });
                if (low == "vote_date") { col_time = idx; is_header = true; }
                if (low == "voter_id") { col_voter = idx; is_header = true; }
                if (low == "story_id") { col_story = idx; is_header = true; }
                if (low == "submitter_id") { col_submitter = idx; is_header = true; }
                ++idx;
            }
            if (is_header) continue;
        }
        const int needed = std::max({col_time, col_voter, col_story, col_submitter});
        if (static_cast<int>(fields.size()) <= needed) {
            throw data_error("line " + std::to_string(line_no) +
                             ": expected vote_date,voter_id,story_id record");
        }
        RawVote v{parse_time(fields[col_time], line_no), order++, fields[col_voter]};
        if (v.voter.empty() || fields[col_story].empty()) {
            throw data_error("line " + std::to_string(line_no) + ": empty id field");
        }
        auto [it, inserted] = stories.try_emplace(fields[col_story]);
        if (inserted) story_order.push_back(fields[col_story]);
        if (col_submitter >= 0 && it->second.submitter.empty()) {
            it->second.submitter = fields[col_submitter];
        }
        it->second.votes.push_back(std::move(v));
    }

    std::vector<VoteLog> logs;
    logs.reserve(story_order.size());
    for (const auto& story : story_order) {
        RawStory& raw = stories[story];
        std::sort(raw.votes.begin(), raw.votes.end(), [](const RawVote& a, const RawVote& b) {
            if (a.time != b.time) return a.time < b.time;
            return a.order < b.order;
        });

        VoteLog log;
        log.story = story;
        std::unordered_map<std::string, bool> seen;
        seen.reserve(raw.votes.size());
        for (auto& v : raw.votes) {
            auto [it, inserted] = seen.try_emplace(v.voter, true);
            if (!inserted) continue; // duplicate vote by the same voter: first kept
            log.votes.push_back(Vote{v.time, std::move(v.voter)});
        }
        log.submitter = !raw.submitter.empty() ? raw.submitter : log.votes.front().voter;

        // Keep the submitter's vote first among equal-time votes.
        if (!log.votes.empty() && log.votes.front().voter != log.submitter) {
            auto it = std::find_if(log.votes.begin(), log.votes.end(),
                                   [&](const Vote& v) { return v.voter == log.submitter; });
            if (it != log.votes.end() && it->time == log.votes.front().time) {
                std::rotate(log.votes.begin(), it, it + 1);
            }
        }
        logs.push_back(std::move(log));
    }
    return logs;
}

std::vector<VoteLog> load_votes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open votes file: " + path);
    return load_votes(in);
}

void write_votes_csv(const std::vector<VoteLog>& logs, std::ostream& out) {
    out << "vote_date,voter_id,story_id\n";
    for (const auto& log : logs) {
        for (const auto& v : log.votes) {
            out << v.time << ',' << v.voter << ',' << log.story << '\n';
        }
    }
}

} // namespace cascadelab
