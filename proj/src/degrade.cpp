#include "netft/degrade.hpp"

#include <cmath>
#include <vector>

#include "netft/rng.hpp"

namespace netft {

std::pair<real_matrix, real_matrix> prune(const real_matrix& a, double proportion,
                                          std::uint64_t seed, bool directed) {
    require_finite(a, "prune");
    if (!(proportion >= 0.0 && proportion <= 1.0)) {
        throw invalid_input_error("prune: proportion must lie in [0,1]");
    }

    // Edge positions; undirected edges are a single unit covering both
    // symmetric entries.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::size_t j0 = directed ? 0 : i;
        for (std::size_t j = j0; j < a.cols(); ++j) {
            if (a(i, j) != 0.0) edges.emplace_back(i, j);
        }
    }

    const auto remove_count =
        static_cast<std::size_t>(std::llround(proportion * static_cast<double>(edges.size())));

    // Partial Fisher-Yates: the first remove_count slots end up holding a
    // uniform sample without replacement.
    random_stream rng(seed);
    for (std::size_t k = 0; k < remove_count; ++k) {
        const std::size_t pick = k + static_cast<std::size_t>(rng.below(edges.size() - k));
        std::swap(edges[k], edges[pick]);
    }

    real_matrix pruned = a;
    real_matrix mask(a.rows(), a.cols(), 1.0);
    for (std::size_t k = 0; k < remove_count; ++k) {
        const auto [i, j] = edges[k];
        pruned(i, j) = 0.0;
        mask(i, j) = 0.0;
        if (!directed) {
            pruned(j, i) = 0.0;
            mask(j, i) = 0.0;
        }
    }
    return {std::move(pruned), std::move(mask)};
}

real_matrix add_noise(const real_matrix& x, double sd, std::uint64_t seed) {
    require_finite(x, "add_noise");
    if (sd < 0.0) throw invalid_input_error("add_noise: sd must be non-negative");
    if (sd == 0.0) return x;
    real_matrix out = x;
    random_stream rng(seed);
    for (double& v : out.data()) v += rng.normal(sd);
    return out;
}

degraded_instance degrade(const real_matrix& truth, const degrade_spec& spec, bool directed) {
    auto [pruned, mask] = prune(truth, spec.prune_proportion, spec.seed, directed);
    real_matrix observed = add_noise(pruned, spec.noise_sd, mix_seed(spec.seed, {0x6e6f697365ULL}));
    return {truth, std::move(mask), std::move(observed)};
}

} // namespace netft
