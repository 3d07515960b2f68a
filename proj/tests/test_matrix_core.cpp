#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <limits>
#include <random>

#include "netft/matrix_core.hpp"
#include "oracles.hpp"

using namespace netft;

namespace {

real_matrix random_real(std::size_t rows, std::size_t cols, std::uint64_t seed,
                        double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 eng(seed);
    real_matrix m(rows, cols);
    for (double& v : m.data()) {
        v = lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }
    return m;
}

complex_matrix random_complex(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    complex_matrix m(rows, cols);
    for (auto& v : m.data()) {
        const double re = 2.0 * static_cast<double>(eng() >> 11) * 0x1.0p-53 - 1.0;
        const double im = 2.0 * static_cast<double>(eng() >> 11) * 0x1.0p-53 - 1.0;
        v = std::complex<double>(re, im);
    }
    return m;
}

double max_abs_diff(const complex_matrix& a, const complex_matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double max_abs_diff(const real_matrix& a, const real_matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

} // namespace

TEST_CASE("matrix construction rejects empty dimensions") {
    CHECK_THROWS_AS(real_matrix(0, 3), invalid_input_error);
    CHECK_THROWS_AS(complex_matrix(2, 0), invalid_input_error);
}

TEST_CASE("dft2 of a unit impulse is all ones") {
    real_matrix x(2, 2, 0.0);
    x(0, 0) = 1.0;
    const complex_matrix w = dft2(x);
    for (const auto& v : w.data()) {
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("dft2 of a constant matrix is DC-only") {
    const double c = -2.25;
    real_matrix x(4, 4, c);
    const complex_matrix w = dft2(x);
    CHECK(std::abs(w(0, 0) - std::complex<double>(c * 16.0, 0.0)) < 1e-10);
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = 0; v < 4; ++v) {
            if (u == 0 && v == 0) continue;
            CHECK(std::abs(w(u, v)) < 1e-10);
        }
    }
}

TEST_CASE("dft2 matches the quadruple-sum oracle on random 8x8") {
    const real_matrix x = random_real(8, 8, 11);
    CHECK(max_abs_diff(dft2(x), oracles::naive_dft2(x)) < 1e-10);
}

TEST_CASE("idft2 inverts dft2 on random 16x16") {
    const real_matrix x = random_real(16, 16, 12);
    const real_matrix back = real_part(idft2(dft2(x)), 1e-9);
    CHECK(max_abs_diff(back, x) < 1e-9);
}

TEST_CASE("idft2 of an all-ones spectrum is the impulse") {
    complex_matrix w(2, 2, std::complex<double>(1.0, 0.0));
    const complex_matrix x = idft2(w);
    CHECK(std::abs(x(0, 0) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(x(0, 1)) < 1e-12);
    CHECK(std::abs(x(1, 0)) < 1e-12);
    CHECK(std::abs(x(1, 1)) < 1e-12);
}

TEST_CASE("idft2 matches the naive inverse oracle on random complex 5x7") {
    const complex_matrix w = random_complex(5, 7, 13);
    CHECK(max_abs_diff(idft2(w), oracles::naive_idft2(w)) < 1e-10);
}

TEST_CASE("Parseval holds on random rectangular input") {
    const real_matrix x = random_real(6, 9, 14);
    const complex_matrix w = dft2(x);
    double real_energy = 0.0, spec_energy = 0.0;
    for (double v : x.data()) real_energy += v * v;
    for (const auto& v : w.data()) spec_energy += std::norm(v);
    spec_energy /= static_cast<double>(x.size());
    CHECK(real_energy == doctest::Approx(spec_energy).epsilon(1e-8));
}

TEST_CASE("dft2 rejects non-finite input") {
    real_matrix x(2, 2, 0.0);
    x(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(dft2(x), invalid_input_error);
}

TEST_CASE("abs_threshold examples") {
    real_matrix a(2, 2, 0.0);
    a(0, 0) = 1.0; // mean 0.25, the 1 survives
    const real_matrix ta = abs_threshold(a);
    CHECK(ta == a);

    const real_matrix z(3, 3, 0.0);
    CHECK(abs_threshold(z) == z); // mean 0, nothing strictly below it

    real_matrix b(2, 2, 1.0);
    b(0, 0) = 4.0;
    b(1, 1) = 0.0; // mean 1.5
    const real_matrix tb = abs_threshold(b);
    CHECK(tb(0, 0) == 4.0);
    CHECK(tb(0, 1) == 0.0);
    CHECK(tb(1, 0) == 0.0);
    CHECK(tb(1, 1) == 0.0);
}

TEST_CASE("abs_threshold keeps signs and exact-mean entries") {
    real_matrix a(2, 2, 2.0); // every entry equals the mean, all retained
    CHECK(abs_threshold(a) == a);

    real_matrix b(2, 2, 1.0);
    b(0, 0) = -4.0;
    b(1, 1) = 0.0;
    const real_matrix tb = abs_threshold(b);
    CHECK(tb(0, 0) == -4.0); // sign preserved
}

TEST_CASE("abs_threshold survivors sit at or above the input mean") {
    const real_matrix x = random_real(12, 12, 15);
    double mean = 0.0;
    for (double v : x.data()) mean += std::abs(v);
    mean /= static_cast<double>(x.size());
    const real_matrix t = abs_threshold(x);
    for (double v : t.data()) {
        if (v != 0.0) CHECK(std::abs(v) >= mean);
    }
}

TEST_CASE("magnitude_threshold examples") {
    complex_matrix a(2, 2, std::complex<double>(0.0, 0.0));
    a(0, 0) = {6.0, 0.0};
    a(1, 1) = {2.0, 0.0}; // mean magnitude 2, the 2 survives the tie
    const complex_matrix ta = magnitude_threshold(a);
    CHECK(ta(0, 0) == std::complex<double>(6.0, 0.0));
    CHECK(ta(1, 1) == std::complex<double>(2.0, 0.0));

    complex_matrix b(2, 2, std::complex<double>(0.0, 0.0));
    b(0, 0) = {6.0, 0.0};
    b(1, 1) = {1.0, 0.0}; // mean magnitude 1.75 kills the 1
    const complex_matrix tb = magnitude_threshold(b);
    CHECK(tb(0, 0) == std::complex<double>(6.0, 0.0));
    CHECK(tb(1, 1) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("magnitude_threshold keeps an equal-magnitude spectrum intact") {
    real_matrix impulse(4, 4, 0.0);
    impulse(0, 0) = 1.0;
    const complex_matrix w = dft2(impulse); // all bins share magnitude 1
    const complex_matrix t = magnitude_threshold(w);
    CHECK(max_abs_diff(t, w) == 0.0);
}

TEST_CASE("magnitude_threshold preserves conjugate symmetry of real spectra") {
    const real_matrix x = random_real(8, 8, 16);
    const complex_matrix t = magnitude_threshold(dft2(x));
    const std::size_t n = t.rows(), m = t.cols();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            const auto mirror = std::conj(t((n - u) % n, (m - v) % m));
            CHECK(std::abs(t(u, v) - mirror) < 1e-9);
        }
    }
    CHECK(max_imag_abs(idft2(t)) < 1e-9);
}

TEST_CASE("real_part enforces the residue bound") {
    complex_matrix w(2, 2, std::complex<double>(1.0, 0.0));
    w(0, 1) = {1.0, 0.5};
    CHECK_THROWS_AS(real_part(w, 1e-6), numeric_error);
    const real_matrix ok = real_part(w, 1.0);
    CHECK(ok(0, 1) == 1.0);
}

TEST_CASE("sparsity_pattern marks exact zeros") {
    real_matrix a(2, 2, 0.0);
    a(0, 0) = 1.0;
    const bool_matrix p = sparsity_pattern(a);
    CHECK(p(0, 0) == 0);
    CHECK(p(0, 1) == 1);
    CHECK(p(1, 0) == 1);
    CHECK(p(1, 1) == 1);

    const real_matrix z(2, 3, 0.0);
    const bool_matrix pz = sparsity_pattern(z);
    for (auto v : pz.data()) CHECK(v == 1);
}

TEST_CASE("thresholding never loses zeros") {
    const real_matrix x = random_real(9, 9, 17);
    const auto zeros_of = [](const real_matrix& m) {
        std::size_t c = 0;
        for (double v : m.data()) c += v == 0.0;
        return c;
    };
    CHECK(zeros_of(abs_threshold(x)) >= zeros_of(x));
}

TEST_CASE("sparse_match compares patterns") {
    const real_matrix x = random_real(5, 5, 18);
    const bool_matrix p = sparsity_pattern(x);
    CHECK(sparse_match(p, p));

    bool_matrix q = p;
    q(2, 2) = q(2, 2) ? 0 : 1;
    CHECK_FALSE(sparse_match(p, q));

    const bool_matrix r(5, 4, 0);
    CHECK_THROWS_AS(sparse_match(p, r), invalid_input_error);
}

TEST_CASE("abs_threshold is pattern-idempotent on random inputs") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const real_matrix x = random_real(10, 10, seed);
        const real_matrix once = abs_threshold(x);
        const real_matrix twice = abs_threshold(once);
        CHECK(sparse_match(sparsity_pattern(once), sparsity_pattern(twice)));
    }
}

TEST_CASE("truncated SVD reproduces an exact low-rank input") {
    const std::size_t n = 7;
    real_matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x(i, j) = (1.0 + static_cast<double>(i)) * (2.0 - 0.3 * static_cast<double>(j));
        }
    }
    const real_matrix rec = truncated_svd_reconstruct(x, 3);
    CHECK(max_abs_diff(rec, x) < 1e-10);
}

TEST_CASE("truncated SVD of a diagonal matrix drops the smallest value") {
    real_matrix x(4, 4, 0.0);
    x(0, 0) = 4.0;
    x(1, 1) = 3.0;
    x(2, 2) = 2.0;
    x(3, 3) = 1.0;
    const real_matrix rec = truncated_svd_reconstruct(x, 3);
    CHECK(rec(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rec(1, 1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rec(2, 2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(rec(3, 3)) < 1e-12);
}

TEST_CASE("truncated SVD error matches the Jacobi singular-value oracle") {
    const real_matrix x = random_real(10, 10, 19);
    const real_matrix rec = truncated_svd_reconstruct(x, 3);
    double err2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x.data()[i] - rec.data()[i];
        err2 += d * d;
    }
    const auto sv = oracles::jacobi_singular_values(x);
    double tail = 0.0;
    for (std::size_t i = 3; i < sv.size(); ++i) tail += sv[i] * sv[i];
    CHECK(err2 == doctest::Approx(tail).epsilon(1e-8));
}

TEST_CASE("truncated SVD beats random rank-3 projections") {
    const std::size_t n = 12;
    const real_matrix x = random_real(n, n, 20);
    const real_matrix best = truncated_svd_reconstruct(x, 3);
    double best_err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x.data()[i] - best.data()[i];
        best_err += d * d;
    }

    std::mt19937_64 eng(21);
    for (int trial = 0; trial < 100; ++trial) {
        // Orthonormal basis of a random 3-dimensional column space.
        std::vector<std::vector<double>> q(3, std::vector<double>(n));
        for (auto& col : q) {
            for (double& v : col) v = 2.0 * static_cast<double>(eng() >> 11) * 0x1.0p-53 - 1.0;
        }
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += q[a][i] * q[b][i];
                for (std::size_t i = 0; i < n; ++i) q[a][i] -= dot * q[b][i];
            }
            double norm = 0.0;
            for (double v : q[a]) norm += v * v;
            norm = std::sqrt(norm);
            for (double& v : q[a]) v /= norm;
        }
        // Projection Q Q^T x.
        double proj_err = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> col(n, 0.0);
            for (std::size_t a = 0; a < 3; ++a) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += q[a][i] * x(i, j);
                for (std::size_t i = 0; i < n; ++i) col[i] += dot * q[a][i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double d = x(i, j) - col[i];
                proj_err += d * d;
            }
        }
        CHECK(best_err <= proj_err + 1e-9);
    }
}

TEST_CASE("truncated SVD validates the rank") {
    const real_matrix x = random_real(4, 4, 22);
    CHECK_THROWS_AS(truncated_svd_reconstruct(x, 0), invalid_input_error);
    CHECK_THROWS_AS(truncated_svd_reconstruct(x, 5), invalid_input_error);
}
