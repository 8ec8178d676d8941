#include "cascadelab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "cascadelab/errors.hpp"

namespace cascadelab {

DegreeHistogram degree_histogram(const DirectedGraph& graph, Direction direction) {
    DegreeHistogram hist;
    hist.direction = direction;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        const std::int64_t d =
            direction == Direction::Out ? graph.out_degree(u) : graph.in_degree(u);
        ++hist.counts[d];
    }
    return hist;
}

double clustering_coefficient(const DirectedGraph& graph) {
    const NodeId n = graph.node_count();
    if (n == 0) throw data_error("clustering coefficient of an empty graph");

    // Undirected projection: neighbour lists merged over both directions.
    std::vector<std::vector<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u) {
        auto f = graph.fans(u);
        auto r = graph.friends(u);
        adj[u].reserve(f.size() + r.size());
        adj[u].insert(adj[u].end(), f.begin(), f.end());
        adj[u].insert(adj[u].end(), r.begin(), r.end());
        std::sort(adj[u].begin(), adj[u].end());
        adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
    }

    // Forward triangle counting: orient each edge from lower to higher
    // (degree, id) rank and intersect forward lists, so every triangle is
    // seen exactly once. O(m^(3/2)) even with heavy-tailed degrees.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() < adj[b].size();
        return a < b;
    });
    std::vector<NodeId> rank(n);
    for (NodeId i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<std::vector<NodeId>> forward(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : adj[u]) {
            if (rank[u] < rank[v]) forward[u].push_back(v);
        }
    }

    std::vector<std::int64_t> triangles(n, 0);
    std::vector<NodeId> mark(n, -1);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : forward[u]) mark[v] = u;
        for (NodeId v : forward[u]) {
            for (NodeId w : forward[v]) {
                if (mark[w] == u) {
                    ++triangles[u];
                    ++triangles[v];
                    ++triangles[w];
                }
            }
        }
    }

    double sum = 0;
    for (NodeId u = 0; u < n; ++u) {
        const double d = static_cast<double>(adj[u].size());
        if (d < 2) continue;
        sum += 2.0 * static_cast<double>(triangles[u]) / (d * (d - 1.0));
    }
    return sum / static_cast<double>(n);
}

void ExposureStats::merge(const ExposureStats& other) {
    for (const auto& [n, c] : other.multiplicity) multiplicity[n] += c;
    for (const auto& [n, cell] : other.vote_table) {
        vote_table[n].voted += cell.voted;
        vote_table[n].not_voted += cell.not_voted;
    }
    exposed_users += other.exposed_users;
    skipped_voters += other.skipped_voters;
}

double ExposureStats::vote_fraction(std::int64_t n) const {
    auto it = vote_table.find(n);
    if (it == vote_table.end()) return std::numeric_limits<double>::quiet_NaN();
    const double total = static_cast<double>(it->second.voted + it->second.not_voted);
    if (total == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(it->second.voted) / total;
}

double ExposureStats::multiplicity_tail(std::int64_t n) const {
    if (exposed_users == 0) return std::numeric_limits<double>::quiet_NaN();
    std::int64_t tail = 0;
    for (auto it = multiplicity.lower_bound(n); it != multiplicity.end(); ++it) {
        tail += it->second;
    }
    return static_cast<double>(tail) / static_cast<double>(exposed_users);
}

ExposureStats exposure_stats(const DirectedGraph& graph, const VoteLog& log) {
    if (log.votes.empty()) throw data_error("empty vote log for story " + log.story);

    ExposureStats stats;

    // Voters resolvable to graph ids, in vote order (the log is already
    // sorted by time with file order breaking ties).
    std::vector<NodeId> voters;
    std::unordered_map<NodeId, std::int64_t> voter_pos;
    voters.reserve(log.votes.size());
    for (const auto& v : log.votes) {
        auto id = graph.find(v.voter);
        if (!id) {
            ++stats.skipped_voters;
            continue;
        }
        voter_pos.emplace(*id, static_cast<std::int64_t>(voters.size()));
        voters.push_back(*id);
    }

    // For each exposed user: total voting friends, and voting friends
    // strictly before the user's own vote.
    std::unordered_map<NodeId, std::int64_t> total_count;
    std::unordered_map<NodeId, std::int64_t> before_count;
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(voters.size()); ++p) {
        for (NodeId fan : graph.fans(voters[p])) {
            ++total_count[fan];
            auto it = voter_pos.find(fan);
            if (it != voter_pos.end() && p < it->second) ++before_count[fan];
        }
    }

    for (const auto& [user, total] : total_count) {
        const bool voted = voter_pos.count(user) > 0;
        std::int64_t n = total;
        if (voted) {
            auto it = before_count.find(user);
            n = it == before_count.end() ? 0 : it->second;
        }
        ++stats.multiplicity[n];
        if (voted) {
            ++stats.vote_table[n].voted;
        } else {
            ++stats.vote_table[n].not_voted;
        }
    }
    stats.exposed_users = static_cast<std::int64_t>(total_count.size());
    return stats;
}

namespace {

// Hurwitz zeta sum_{k>=0} (a+k)^(-s) for s > 1, by Euler-Maclaurin.
double hurwitz_zeta(double s, double a) {
    constexpr int kDirect = 32;
    double sum = 0;
    for (int k = 0; k < kDirect; ++k) {
        sum += std::pow(a + k, -s);
    }
    const double b = a + kDirect;
    sum += std::pow(b, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(b, -s);
    sum += s * std::pow(b, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(b, -s - 3.0) / 720.0;
    sum += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(b, -s - 5.0) / 30240.0;
    return sum;
}

} // namespace

double fit_power_law(std::span<const std::int64_t> samples, std::int64_t k_min) {
    if (k_min < 1) throw data_error("k_min must be >= 1");

    std::int64_t n = 0;
    double log_sum = 0;
    std::int64_t distinct = 0;
    std::int64_t last = -1;
    std::vector<std::int64_t> tail(samples.begin(), samples.end());
    std::sort(tail.begin(), tail.end());
    for (std::int64_t k : tail) {
        if (k < k_min) continue;
        ++n;
        log_sum += std::log(static_cast<double>(k));
        if (k != last) {
            ++distinct;
            last = k;
        }
    }
    if (distinct < 2) {
        throw data_error("power-law fit needs at least two distinct degrees >= k_min");
    }

    const double a = static_cast<double>(k_min);
    const auto neg_log_lik = [&](double gamma) {
        return static_cast<double>(n) * std::log(hurwitz_zeta(gamma, a)) + gamma * log_sum;
    };

    // Golden-section: the log-likelihood is concave in gamma.
    double lo = 1.0 + 1e-9, hi = 20.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = neg_log_lik(x1);
    double f2 = neg_log_lik(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = neg_log_lik(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = neg_log_lik(x2);
        }
    }
    return (lo + hi) / 2.0;
}

double fit_power_law(const DegreeHistogram& hist, std::int64_t k_min) {
    std::vector<std::int64_t> samples;
    for (const auto& [k, c] : hist.counts) {
        if (k < k_min) continue;
        samples.insert(samples.end(), static_cast<size_t>(c), k);
    }
    return fit_power_law(samples, k_min);
}

LogNormalFit fit_log_normal(std::span<const double> sizes) {
    if (sizes.size() < 2) throw data_error("log-normal fit needs at least two sizes");
    double sum = 0;
    for (double s : sizes) {
        if (!(s > 0)) throw data_error("log-normal fit requires positive sizes");
        sum += std::log(s);
    }
    const double n = static_cast<double>(sizes.size());
    const double mu = sum / n;
    double ss = 0;
    for (double s : sizes) {
        const double d = std::log(s) - mu;
        ss += d * d;
    }
    LogNormalFit fit;
    fit.mu_log = mu;
    fit.sigma_log = std::sqrt(ss / n);
    fit.mean = std::exp(mu + fit.sigma_log * fit.sigma_log / 2.0);
    return fit;
}

} // namespace cascadelab
