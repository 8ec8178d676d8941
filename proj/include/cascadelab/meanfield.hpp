#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cascadelab/stats.hpp"

namespace cascadelab {

// Normalized degree distribution p(k) on an integer support [k_min, k_max],
// with cached first and second moments.
class DegreeDistribution {
public:
    static DegreeDistribution power_law(double gamma, std::int64_t k_min,
                                        std::int64_t k_max);
    static DegreeDistribution from_histogram(const DegreeHistogram& hist,
                                             std::int64_t k_min = 1);
    static DegreeDistribution from_probabilities(std::int64_t k_min,
                                                 std::vector<double> probs);

    std::int64_t k_min() const { return k_min_; }
    std::int64_t k_max() const { return k_min_ + static_cast<std::int64_t>(probs_.size()) - 1; }
    double p(std::int64_t k) const {
        return (k < k_min() || k > k_max()) ? 0.0 : probs_[k - k_min_];
    }
    std::span<const double> probabilities() const { return probs_; }

    double mean() const { return mean_; }          // <k>
    double second_moment() const { return m2_; }   // <k^2>

    // Inverse-CDF sample for u in [0,1).
    std::int64_t sample(double u) const;

private:
    DegreeDistribution(std::int64_t k_min, std::vector<double> probs);

    std::int64_t k_min_ = 1;
    std::vector<double> probs_;
    std::vector<double> cdf_;
    double mean_ = 0;
    double m2_ = 0;
};

// SIR heterogeneous mean-field threshold <k> / (<k^2> - <k>).
double hmf_threshold(const DegreeDistribution& dist);

// Final fraction of ever-infected nodes: solves the mean-field
// self-consistency
//   phi = sum_k ((k-1)/<k>) p(k) (1 - exp(-lambda k phi))
// by damped fixed-point iteration from phi0 = 1 and returns
//   R = sum_k p(k) (1 - exp(-lambda k phi)).
// At or below the threshold the only fixed point in [0,1] is 0 (the map is
// increasing and concave), so 0 is returned exactly.
double hmf_final_size(const DegreeDistribution& dist, double lambda,
                      double tol = 1e-9);

// Expected cascade sizes n_nodes * R(lambda) over a grid.
std::vector<std::pair<double, double>> hmf_curve(const DegreeDistribution& dist,
                                                 std::span<const double> lambdas,
                                                 double n_nodes,
                                                 double tol = 1e-9);

} // namespace cascadelab
