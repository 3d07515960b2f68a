#include "netft/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "netft/matrix_core.hpp"

namespace netft {

denoise_result iterative_ft(const real_matrix& x, int i_max) {
    require_square(x, "iterative_ft");
    require_finite(x, "iterative_ft");
    if (i_max < 1) throw invalid_input_error("iterative_ft: i_max must be at least 1");

    real_matrix current = x;
    real_matrix thresholded(x.rows(), x.cols());
    std::optional<bool_matrix> previous_pattern;

    for (int i = 1; i <= i_max; ++i) {
        thresholded = abs_threshold(current);
        bool_matrix pattern = sparsity_pattern(thresholded);
        if (previous_pattern && sparse_match(pattern, *previous_pattern)) {
            return {std::move(thresholded), i, true};
        }
        previous_pattern = std::move(pattern);

        complex_matrix spectrum = magnitude_threshold(dft2(thresholded));
        current = real_part(idft2(spectrum));
        if (!all_finite(current)) {
            throw numeric_error("iterative_ft: non-finite intermediate");
        }
    }
    return {std::move(thresholded), i_max, false};
}

denoise_result real_threshold_denoise(const real_matrix& x) {
    require_square(x, "real_threshold_denoise");
    return {abs_threshold(x), 1, true};
}

denoise_result freq_threshold_denoise(const real_matrix& x) {
    require_square(x, "freq_threshold_denoise");
    return {real_part(idft2(magnitude_threshold(dft2(x)))), 1, true};
}

denoise_result low_rank_denoise(const real_matrix& x) {
    require_square(x, "low_rank_denoise");
    if (x.rows() < 3) throw invalid_input_error("low_rank_denoise: matrix smaller than rank 3");
    return {truncated_svd_reconstruct(x, 3), 1, true};
}

std::vector<double> benjamini_hochberg(const std::vector<double>& pvalues) {
    for (double p : pvalues) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw invalid_input_error("benjamini_hochberg: p-values must lie in [0,1]");
        }
    }
    const std::size_t m = pvalues.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });

    std::vector<double> adjusted(m, 0.0);
    double running_min = 1.0;
    for (std::size_t r = m; r > 0; --r) {
        const std::size_t idx = order[r - 1];
        const double scaled = pvalues[idx] * (static_cast<double>(m) / static_cast<double>(r));
        running_min = std::min(running_min, scaled);
        adjusted[idx] = running_min;
    }
    return adjusted;
}

namespace {

struct lans_edge {
    std::size_t i;
    std::size_t j;
};

} // namespace

denoise_result lans_denoise(const real_matrix& x, const lans_config& config) {
    require_square(x, "lans_denoise");
    require_finite(x, "lans_denoise");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw invalid_input_error("lans_denoise: alpha must lie in (0,1)");
    }
    const std::size_t n = x.rows();

    // Nonnegative symmetric weights.
    real_matrix w(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = 0.5 * (std::abs(x(i, j)) + std::abs(x(j, i)));
        }
    }

    std::vector<double> strength(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) strength[i] += w(i, j);
    }

    // Sorted fractional weights per vertex, for survival lookups.
    std::vector<std::vector<double>> fractions(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (strength[i] <= 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (w(i, j) > 0.0) fractions[i].push_back(w(i, j) / strength[i]);
        }
        std::sort(fractions[i].begin(), fractions[i].end());
    }

    // Empirical survival: fraction of endpoint i's fractional weights
    // strictly greater than f.
    const auto survival = [&](std::size_t i, double f) {
        const auto& fs = fractions[i];
        const auto above = fs.end() - std::upper_bound(fs.begin(), fs.end(), f);
        return static_cast<double>(above) / static_cast<double>(fs.size());
    };

    std::vector<lans_edge> edges;
    std::vector<double> pvalues; // two per edge, one per self-loop
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (w(i, j) <= 0.0) continue;
            edges.push_back({i, j});
            pvalues.push_back(survival(i, w(i, j) / strength[i]));
            if (j != i) pvalues.push_back(survival(j, w(i, j) / strength[j]));
        }
    }

    real_matrix out(n, n, 0.0);
    if (edges.empty()) {
        return {std::move(out), 1, true}; // nothing to test
    }

    const std::vector<double> adjusted = benjamini_hochberg(pvalues);
    std::size_t k = 0;
    for (const auto& e : edges) {
        bool keep = adjusted[k++] <= config.alpha;
        if (e.j != e.i) keep = (adjusted[k++] <= config.alpha) || keep;
        if (keep) {
            out(e.i, e.j) = x(e.i, e.j);
            out(e.j, e.i) = x(e.j, e.i);
        }
    }
    return {std::move(out), 1, true};
}

const std::vector<method>& all_methods() {
    static const std::vector<method> methods = {
        method::iterative_ft, method::real_threshold, method::freq_threshold,
        method::low_rank, method::lans};
    return methods;
}

std::string method_name(method m) {
    switch (m) {
        case method::iterative_ft: return "iterft";
        case method::real_threshold: return "real-thresh";
        case method::freq_threshold: return "freq-thresh";
        case method::low_rank: return "low-rank";
        case method::lans: return "lans";
    }
    throw invalid_input_error("method_name: unknown method");
}

method parse_method(const std::string& name) {
    for (method m : all_methods()) {
        if (method_name(m) == name) return m;
    }
    throw invalid_input_error("unknown method name: " + name);
}

denoise_result run_method(method m, const real_matrix& x, int i_max, const lans_config& config) {
    switch (m) {
        case method::iterative_ft: return iterative_ft(x, i_max);
        case method::real_threshold: return real_threshold_denoise(x);
        case method::freq_threshold: return freq_threshold_denoise(x);
        case method::low_rank: return low_rank_denoise(x);
        case method::lans: return lans_denoise(x, config);
    }
    throw invalid_input_error("run_method: unknown method");
}

} // namespace netft
