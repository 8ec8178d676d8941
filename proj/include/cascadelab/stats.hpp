#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "cascadelab/graph.hpp"
#include "cascadelab/votes.hpp"

namespace cascadelab {

enum class Direction { In, Out };

struct DegreeHistogram {
    Direction direction = Direction::Out;
    std::map<std::int64_t, std::int64_t> counts; // degree -> node count
};

DegreeHistogram degree_histogram(const DirectedGraph& graph, Direction direction);

// Watts-Strogatz clustering coefficient of the undirected projection
// (edge present if either direction exists). Nodes with fewer than two
// neighbours contribute zero.
double clustering_coefficient(const DirectedGraph& graph);

struct VoteCell {
    std::int64_t voted = 0;
    std::int64_t not_voted = 0;
};

// Exposure bookkeeping for one story (or an aggregate over stories).
// For every user exposed to the story (a fan of at least one voter),
// n is the number of the user's friends who voted before the user's own
// vote, or the total number of voting friends if the user never voted.
struct ExposureStats {
    std::map<std::int64_t, std::int64_t> multiplicity; // n -> exposed users
    std::map<std::int64_t, VoteCell> vote_table;       // n -> (voted, not voted)
    std::int64_t exposed_users = 0;
    std::int64_t skipped_voters = 0; // voters not present in the graph

    void merge(const ExposureStats& other);
    double vote_fraction(std::int64_t n) const;
    // Fraction of exposed users with at least `n` voting friends.
    double multiplicity_tail(std::int64_t n) const;
};

ExposureStats exposure_stats(const DirectedGraph& graph, const VoteLog& log);

// Discrete maximum-likelihood power-law exponent for the degree tail
// k >= k_min (Hurwitz-zeta normalization, golden-section maximization).
double fit_power_law(const DegreeHistogram& hist, std::int64_t k_min = 1);
double fit_power_law(std::span<const std::int64_t> samples, std::int64_t k_min = 1);

struct LogNormalFit {
    double mu_log = 0;
    double sigma_log = 0;
    double mean = 0; // exp(mu + sigma^2/2)
};

LogNormalFit fit_log_normal(std::span<const double> sizes);

} // namespace cascadelab
