#include "netft/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>

namespace netft {

double f1_score(const real_matrix& truth, const real_matrix& denoised) {
    if (!truth.same_shape(denoised)) {
        throw invalid_input_error("f1_score: shapes differ");
    }
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool pos = truth.data()[i] != 0.0;
        const bool pred = denoised.data()[i] != 0.0;
        if (pos && pred) ++tp;
        else if (!pos && pred) ++fp;
        else if (pos && !pred) ++fn;
    }
    if (tp + fp + fn == 0) return 1.0; // both edge sets empty
    return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

double mse(const real_matrix& truth, const real_matrix& denoised) {
    if (!truth.same_shape(denoised)) {
        throw invalid_input_error("mse: shapes differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double d = denoised.data()[i] - truth.data()[i];
        sum += d * d;
    }
    return sum / static_cast<double>(truth.size());
}

namespace {

// Grid coordinates are grouped via their 9-significant-digit printed form,
// the same precision the CSV files carry, so values that differ only by
// grid-arithmetic rounding fall into one group.
std::string grid_key(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct accum {
    aggregate_record rec;
    std::vector<double> f1s;
    std::vector<double> mses;
};

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sem_of(const std::vector<double>& xs, double mean) {
    const std::size_t n = xs.size();
    if (n <= 1) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

} // namespace

std::vector<aggregate_record> aggregate(const std::vector<trial_record>& records) {
    if (records.empty()) {
        throw invalid_input_error("aggregate: no records");
    }
    std::vector<accum> groups;
    std::map<std::string, std::size_t> index;
    for (const auto& r : records) {
        const std::string key =
            r.model + "|" + r.method + "|" + grid_key(r.prune) + "|" + grid_key(r.noise_sd);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, groups.size()).first;
            accum a;
            a.rec.model = r.model;
            a.rec.method = r.method;
            a.rec.prune = r.prune;
            a.rec.noise_sd = r.noise_sd;
            groups.push_back(std::move(a));
        }
        accum& a = groups[it->second];
        a.rec.n += 1;
        a.f1s.push_back(r.f1);
        a.mses.push_back(r.mse);
    }
    std::vector<aggregate_record> out;
    out.reserve(groups.size());
    for (auto& a : groups) {
        a.rec.mean_f1 = mean_of(a.f1s);
        a.rec.sem_f1 = sem_of(a.f1s, a.rec.mean_f1);
        a.rec.mean_mse = mean_of(a.mses);
        a.rec.sem_mse = sem_of(a.mses, a.rec.mean_mse);
        out.push_back(std::move(a.rec));
    }
    return out;
}

} // namespace netft
