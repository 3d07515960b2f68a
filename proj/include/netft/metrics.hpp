#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netft/matrix.hpp"

namespace netft {

/// One (model, method, degrade parameters, replicate) outcome.
struct trial_record {
    std::string model;
    std::string method;
    double prune = 0.0;
    double noise_sd = 0.0;
    int replicate = 0;
    std::uint64_t seed = 0;
    double f1 = 0.0;
    double mse = 0.0;
    int iterations = 1;
    bool converged = true;
};

/// Per-group summary across replicates; sem = sample SD / sqrt(n),
/// defined 0 when n == 1.
struct aggregate_record {
    std::string model;
    std::string method;
    double prune = 0.0;
    double noise_sd = 0.0;
    int n = 0;
    double mean_f1 = 0.0;
    double sem_f1 = 0.0;
    double mean_mse = 0.0;
    double sem_mse = 0.0;
};

/// Edge-classification F1 over all n^2 positions, diagonal included.
/// Positive = truth entry nonzero, predicted = denoised entry nonzero
/// (exact zero test). Both edge sets empty scores 1.
double f1_score(const real_matrix& truth, const real_matrix& denoised);

/// Elementwise mean squared error over all positions.
double mse(const real_matrix& truth, const real_matrix& denoised);

/// Group records by (model, method, prune, noise_sd) and summarize.
/// Output order follows first appearance of each group.
std::vector<aggregate_record> aggregate(const std::vector<trial_record>& records);

} // namespace netft
