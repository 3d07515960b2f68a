#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "netft/errors.hpp"

namespace netft {

/// Dense row-major matrix with flat storage. Dimensions are fixed at
/// construction and must both be at least 1.
template <typename T>
class basic_matrix {
public:
    using value_type = T;

    basic_matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) {
            throw invalid_input_error("matrix dimensions must be at least 1x1");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool same_shape(const basic_matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const basic_matrix& a, const basic_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

/// Real-valued matrix; the universal currency between pipeline stages.
/// Adjacency matrices are the square case, row i / column j holding the
/// weight of the edge i -> j.
using real_matrix = basic_matrix<double>;

/// Complex-valued matrix holding a 2D DFT image; same shape as the
/// real-domain matrix it was produced from.
using complex_matrix = basic_matrix<std::complex<double>>;

/// Boolean matrix; true where the source entry is exactly zero.
using bool_matrix = basic_matrix<std::uint8_t>;

inline bool all_finite(const real_matrix& x) {
    for (double v : x.data()) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline bool all_finite(const complex_matrix& x) {
    for (const auto& v : x.data()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

inline void require_finite(const real_matrix& x, const char* who) {
    if (!all_finite(x)) {
        throw invalid_input_error(std::string(who) + ": input has non-finite entries");
    }
}

inline void require_finite(const complex_matrix& x, const char* who) {
    if (!all_finite(x)) {
        throw invalid_input_error(std::string(who) + ": input has non-finite entries");
    }
}

inline void require_square(const real_matrix& x, const char* who) {
    if (!x.square()) {
        throw invalid_input_error(std::string(who) + ": matrix must be square");
    }
}

} // namespace netft
