#pragma once

#include <cstdint>

#include "cascadelab/graph.hpp"

namespace cascadelab {

struct PowerIterationResult {
    double eigenvalue = 0;
    int iterations = 0;
    double residual = 0; // ||A v - lambda v|| / ||v|| at the returned vector
};

// Spectral radius of the adjacency matrix (entry (u,v)=1 iff v is a fan of
// u) by power iteration on A + I from strictly positive random starts; the
// shift keeps the iteration convergent on periodic structures such as pure
// cycles. Several restarts are taken and the largest estimate wins, which
// covers reducible graphs whose dominant eigenvalue is not simple.
// Throws convergence_error (carrying the last estimate and residual) if the
// Rayleigh quotient has not settled to relative tolerance `tol` within
// `max_iters` iterations.
PowerIterationResult largest_eigenvalue(const DirectedGraph& graph,
                                        double tol = 1e-8, int max_iters = 10000,
                                        std::uint64_t seed = 1, int restarts = 3);

// Epidemic threshold 1 / largest_eigenvalue.
double epidemic_threshold(const DirectedGraph& graph, double tol = 1e-8,
                          int max_iters = 10000, std::uint64_t seed = 1);

} // namespace cascadelab
