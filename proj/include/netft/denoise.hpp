#pragma once

#include <string>
#include <vector>

#include "netft/matrix.hpp"

namespace netft {

/// Outcome of one denoiser run. iterations is the pass count for the
/// iterative method and 1 everywhere else; converged records whether the
/// iterative method stopped because its sparsity pattern stabilized before
/// the cap.
struct denoise_result {
    real_matrix output;
    int iterations = 1;
    bool converged = true;
};

struct lans_config {
    double alpha = 0.05;
};

/// Iterative Fourier denoiser. Each pass thresholds the current real
/// matrix at its mean absolute value, stops when the resulting sparsity
/// pattern repeats the previous pass's, and otherwise filters the matrix
/// through a mean-magnitude spectral threshold before the next pass.
/// Hitting the cap returns the last thresholded iterate with
/// converged == false.
denoise_result iterative_ft(const real_matrix& x, int i_max);

/// One mean-absolute-value threshold of the input.
denoise_result real_threshold_denoise(const real_matrix& x);

/// Spectral pass: forward DFT, mean-magnitude threshold, inverse DFT,
/// real part. Output is generally dense.
denoise_result freq_threshold_denoise(const real_matrix& x);

/// Rank-3 SVD reconstruction.
denoise_result low_rank_denoise(const real_matrix& x);

/// Locally adaptive network sparsification. Weights are symmetrized
/// absolute values; each edge receives one empirical survival p-value per
/// endpoint (fraction of that endpoint's fractional weights strictly
/// greater than the edge's); all endpoint p-values form one
/// Benjamini-Hochberg family and an edge survives when either endpoint is
/// significant at alpha. Retained positions carry the original observed
/// values.
denoise_result lans_denoise(const real_matrix& x, const lans_config& config = {});

/// Step-up Benjamini-Hochberg adjustment: sorted ascending,
/// adj_(i) = min_{j >= i} (m * p_(j) / j) clamped to 1, mapped back to the
/// input order.
std::vector<double> benjamini_hochberg(const std::vector<double>& pvalues);

enum class method { iterative_ft, real_threshold, freq_threshold, low_rank, lans };

/// Canonical method order used by result files and figure panels.
const std::vector<method>& all_methods();
std::string method_name(method m);
method parse_method(const std::string& name);

/// Dispatch by method. i_max only affects the iterative method, config
/// only LANS.
denoise_result run_method(method m, const real_matrix& x, int i_max,
                          const lans_config& config = {});

} // namespace netft
