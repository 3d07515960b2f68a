#pragma once

#include <cstdint>
#include <utility>

#include "netft/matrix.hpp"

namespace netft {

/// Parameters for one degradation: fraction of edges to prune, Gaussian
/// noise standard deviation, and the seed driving both random stages.
struct degrade_spec {
    double prune_proportion = 0.25;
    double noise_sd = 0.25;
    std::uint64_t seed = 0;
};

/// One degraded observation: the ground truth A, the pruning mask P
/// (1 everywhere except removed edges), and the observed X = A .* P + E.
struct degraded_instance {
    real_matrix truth;
    real_matrix mask;
    real_matrix observed;
};

/// Removes exactly round(proportion * E) edges chosen uniformly without
/// replacement, where E counts undirected edges once. For undirected
/// inputs both symmetric entries of a removed edge are zeroed. Returns the
/// pruned matrix and the mask.
std::pair<real_matrix, real_matrix> prune(const real_matrix& a, double proportion,
                                          std::uint64_t seed, bool directed);

/// Adds an independent Normal(0, sd^2) draw to every entry, diagonal
/// included, in row-major order. sd == 0 returns the input unchanged.
real_matrix add_noise(const real_matrix& x, double sd, std::uint64_t seed);

/// Full degradation pipeline. Pruning consumes the spec seed directly;
/// the noise stage uses a derived sub-seed so the two stages draw from
/// disjoint streams.
degraded_instance degrade(const real_matrix& truth, const degrade_spec& spec, bool directed);

} // namespace netft
