#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netft/degrade.hpp"
#include "netft/denoise.hpp"
#include "netft/graph_models.hpp"
#include "netft/metrics.hpp"

namespace netft {

struct grid_spec {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    std::vector<double> points() const;
};

/// Full description of one sweep run. Two families are produced: pruning
/// varies over prune_grid at noise_sd == default_noise, then noise varies
/// over noise_grid at prune == default_prune.
struct sweep_config {
    std::vector<model_spec> models;
    std::vector<method> methods;
    grid_spec prune_grid{0.05, 0.95, 0.05};
    grid_spec noise_grid{0.0, 1.0, 0.05};
    double default_prune = 0.25;
    double default_noise = 0.25;
    int replicates = 10;
    std::uint64_t master_seed = 1;
    int i_max = 100;
    double lans_alpha = 0.05;
};

/// All five models and methods at the parameters the experiments use.
sweep_config default_sweep_config();

/// Flat key = value format; '#' starts a comment. Unknown keys are
/// configuration errors. Missing keys keep their defaults.
sweep_config parse_sweep_config(std::istream& in);
sweep_config read_sweep_config_file(const std::string& path);

/// Canonical key = value echo of a config (also the manifest payload).
std::string sweep_config_text(const sweep_config& config);

struct run_manifest {
    std::string version;
    std::string timestamp; // RFC 3339 UTC; excluded from byte-reproducibility
    std::string config_echo;
    std::vector<std::uint64_t> trial_seeds; // degraded-instance order
};

struct sweep_result {
    std::vector<trial_record> trials;
    std::vector<aggregate_record> aggregates;
    run_manifest manifest;
};

/// Per-trial degradation seed: a documented splitmix64 fold of
/// (master_seed, model index, family tag, point index, replicate).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t model_index, int family,
                         std::size_t point_index, int replicate);

/// Ground-truth seed for the stochastic model, fresh per replicate.
std::uint64_t truth_seed(std::uint64_t master_seed, std::size_t model_index, int replicate);

/// Runs the whole grid: every method scores the same degraded instance
/// per trial, records appear in deterministic (model, family, point,
/// replicate, method) order, and rerunning with one master seed
/// reproduces every byte.
sweep_result run_sweep(const sweep_config& config);

/// The 8 panels of one worked example: truth, pruned, noisy, then each
/// method's output in canonical order.
std::vector<std::pair<std::string, real_matrix>> run_example(const model_spec& model,
                                                             const degrade_spec& degrade_params,
                                                             int i_max, double lans_alpha = 0.05);

std::string trials_csv(const std::vector<trial_record>& trials);
std::string aggregates_csv(const std::vector<aggregate_record>& aggregates);
std::string manifest_json(const run_manifest& manifest);

} // namespace netft
