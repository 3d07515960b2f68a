#include "netft/matrix_core.hpp"

#include <fftw3.h>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <tuple>

namespace netft {

namespace {

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is. Plans are cached per (rows, cols, sign) and created with
// FFTW_UNALIGNED so they can run on any caller buffer.
class plan_cache {
public:
    static fftw_plan get(int rows, int cols, int sign) {
        static plan_cache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        const auto key = std::make_tuple(rows, cols, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;
        std::vector<std::complex<double>> scratch(static_cast<std::size_t>(rows) * cols);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_2d(rows, cols, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache.plans_.emplace(key, p);
        return p;
    }

private:
    plan_cache() = default;
    ~plan_cache() {
        for (auto& [key, p] : plans_) fftw_destroy_plan(p);
    }
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

complex_matrix transform(const complex_matrix& x, int sign) {
    complex_matrix out = x;
    fftw_plan p = plan_cache::get(static_cast<int>(x.rows()), static_cast<int>(x.cols()), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(out.data().data());
    fftw_execute_dft(p, buf, buf);
    return out;
}

} // namespace

complex_matrix dft2(const complex_matrix& x) {
    require_finite(x, "dft2");
    return transform(x, FFTW_FORWARD);
}

complex_matrix dft2(const real_matrix& x) {
    require_finite(x, "dft2");
    complex_matrix z(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z.data()[i] = std::complex<double>(x.data()[i], 0.0);
    }
    return transform(z, FFTW_FORWARD);
}

complex_matrix idft2(const complex_matrix& w) {
    require_finite(w, "idft2");
    complex_matrix out = transform(w, FFTW_BACKWARD);
    const double scale = 1.0 / (static_cast<double>(w.rows()) * static_cast<double>(w.cols()));
    for (auto& v : out.data()) v *= scale;
    return out;
}

double max_imag_abs(const complex_matrix& x) {
    double m = 0.0;
    for (const auto& v : x.data()) m = std::max(m, std::abs(v.imag()));
    return m;
}

real_matrix real_part(const complex_matrix& x, double max_imag) {
    const double residue = max_imag_abs(x);
    if (residue > max_imag) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "real_part: imaginary residue %.3e exceeds bound %.3e", residue, max_imag);
        throw numeric_error(msg);
    }
    real_matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.size(); ++i) out.data()[i] = x.data()[i].real();
    return out;
}

real_matrix abs_threshold(const real_matrix& x) {
    require_finite(x, "abs_threshold");
    double sum = 0.0;
    for (double v : x.data()) sum += std::abs(v);
    const double mean = sum / static_cast<double>(x.size());
    real_matrix out = x;
    for (double& v : out.data()) {
        if (std::abs(v) < mean) v = 0.0;
    }
    return out;
}

complex_matrix magnitude_threshold(const complex_matrix& w) {
    require_finite(w, "magnitude_threshold");
    double sum = 0.0;
    for (const auto& v : w.data()) sum += std::abs(v);
    const double mean = sum / static_cast<double>(w.size());
    complex_matrix out = w;
    for (auto& v : out.data()) {
        if (std::abs(v) < mean) v = std::complex<double>(0.0, 0.0);
    }
    return out;
}

bool_matrix sparsity_pattern(const real_matrix& x) {
    bool_matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.data()[i] = (x.data()[i] == 0.0) ? 1 : 0;
    }
    return out;
}

bool sparse_match(const bool_matrix& a, const bool_matrix& b) {
    if (!a.same_shape(b)) {
        throw invalid_input_error("sparse_match: pattern shapes differ");
    }
    return a.data() == b.data();
}

real_matrix truncated_svd_reconstruct(const real_matrix& x, std::size_t k) {
    require_finite(x, "truncated_svd_reconstruct");
    const std::size_t kmax = std::min(x.rows(), x.cols());
    if (k < 1 || k > kmax) {
        throw invalid_input_error("truncated_svd_reconstruct: rank out of range");
    }
    Eigen::MatrixXd m(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x(i, j);
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto kk = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd rec = svd.matrixU().leftCols(kk) *
                          svd.singularValues().head(kk).asDiagonal() *
                          svd.matrixV().leftCols(kk).transpose();
    real_matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = rec(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return out;
}

} // namespace netft
