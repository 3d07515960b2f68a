#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "netft/graph_models.hpp"
#include "netft/metrics.hpp"

using namespace netft;

TEST_CASE("f1 is 1 for a perfect prediction and 0 for an empty one") {
    const real_matrix truth = lattice(4, 4);
    CHECK(f1_score(truth, truth) == 1.0);
    CHECK(f1_score(truth, real_matrix(16, 16, 0.0)) == 0.0);
}

TEST_CASE("f1 of one extra prediction over a single edge is 2/3") {
    real_matrix truth(3, 3, 0.0);
    truth(0, 1) = 1.0;
    real_matrix pred(3, 3, 0.0);
    pred(0, 1) = 0.7;
    pred(2, 2) = -0.1;
    CHECK(f1_score(truth, pred) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("f1 conventions for empty edge sets") {
    const real_matrix zero(3, 3, 0.0);
    CHECK(f1_score(zero, zero) == 1.0);
    real_matrix pred(3, 3, 0.0);
    pred(1, 1) = 0.2;
    CHECK(f1_score(zero, pred) == 0.0);
    CHECK(f1_score(pred, zero) == 0.0);
}

TEST_CASE("f1 rejects shape mismatches") {
    CHECK_THROWS_AS(f1_score(real_matrix(2, 2), real_matrix(3, 3)), invalid_input_error);
}

TEST_CASE("f1 is invariant under simultaneous vertex permutation") {
    const real_matrix truth = tree(9, 2);
    real_matrix pred = truth;
    pred(0, 5) = 0.3;
    pred(5, 0) = 0.3;
    const double base = f1_score(truth, pred);

    // Apply the permutation i -> (i + 3) mod 9 to both matrices.
    const std::size_t n = 9;
    real_matrix pt(n, n, 0.0), pp(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pt((i + 3) % n, (j + 3) % n) = truth(i, j);
            pp((i + 3) % n, (j + 3) % n) = pred(i, j);
        }
    }
    CHECK(f1_score(pt, pp) == base);
}

TEST_CASE("undegraded positives match known model edge counts") {
    std::size_t kautz_nonzero = 0;
    for (double v : kautz(3, 3).data()) kautz_nonzero += v != 0.0;
    CHECK(kautz_nonzero == 324);

    std::size_t lattice_nonzero = 0;
    for (double v : lattice(10, 10).data()) lattice_nonzero += v != 0.0;
    CHECK(lattice_nonzero == 360);
}

TEST_CASE("mse basics") {
    const real_matrix a = lattice(4, 4);
    CHECK(mse(a, a) == 0.0);

    real_matrix shifted = a;
    for (double& v : shifted.data()) v += 0.5;
    CHECK(mse(a, shifted) == doctest::Approx(0.25).epsilon(1e-12));

    real_matrix truth(2, 2, 0.0);
    real_matrix pred(2, 2, 0.0);
    pred(0, 0) = 1.0;
    CHECK(mse(truth, pred) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("mse is symmetric and scales quadratically") {
    real_matrix t(3, 3, 0.0);
    real_matrix d(3, 3, 0.0);
    d(0, 1) = 0.6;
    d(2, 0) = -0.2;
    CHECK(mse(t, d) == mse(d, t));

    real_matrix d3 = t;
    for (std::size_t i = 0; i < d3.size(); ++i) {
        d3.data()[i] = t.data()[i] + 3.0 * (d.data()[i] - t.data()[i]);
    }
    CHECK(mse(t, d3) == doctest::Approx(9.0 * mse(t, d)).epsilon(1e-12));
}

TEST_CASE("aggregate of a single record has zero sem") {
    trial_record r;
    r.model = "lattice";
    r.method = "iterft";
    r.prune = 0.25;
    r.noise_sd = 0.25;
    r.f1 = 0.8;
    r.mse = 0.01;
    const auto aggs = aggregate({r});
    REQUIRE(aggs.size() == 1);
    CHECK(aggs[0].n == 1);
    CHECK(aggs[0].mean_f1 == 0.8);
    CHECK(aggs[0].sem_f1 == 0.0);
}

TEST_CASE("aggregate computes the textbook sem") {
    trial_record a, b;
    a.model = b.model = "tree";
    a.method = b.method = "lans";
    a.prune = b.prune = 0.25;
    a.noise_sd = b.noise_sd = 0.25;
    a.f1 = 0.4;
    b.f1 = 0.6;
    const auto aggs = aggregate({a, b});
    REQUIRE(aggs.size() == 1);
    CHECK(aggs[0].mean_f1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(aggs[0].sem_f1 == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("aggregate partitions records without loss") {
    std::vector<trial_record> records;
    for (int rep = 0; rep < 4; ++rep) {
        for (const char* method : {"iterft", "lans"}) {
            for (double p : {0.1, 0.2, 0.3}) {
                trial_record r;
                r.model = "kautz";
                r.method = method;
                r.prune = p;
                r.noise_sd = 0.25;
                r.replicate = rep;
                r.f1 = 0.5 + 0.01 * rep;
                records.push_back(r);
            }
        }
    }
    const auto aggs = aggregate(records);
    CHECK(aggs.size() == 6);
    const int total = std::accumulate(aggs.begin(), aggs.end(), 0,
                                      [](int acc, const aggregate_record& a) { return acc + a.n; });
    CHECK(total == static_cast<int>(records.size()));
}

TEST_CASE("aggregate groups grid values that print identically") {
    trial_record a, b;
    a.model = b.model = "pa";
    a.method = b.method = "iterft";
    a.noise_sd = b.noise_sd = 0.25;
    a.prune = 0.25;
    b.prune = 0.05 + 4 * 0.05; // same grid point computed by stepping
    const auto aggs = aggregate({a, b});
    CHECK(aggs.size() == 1);
    CHECK(aggs[0].n == 2);
}

TEST_CASE("aggregate rejects empty input") {
    CHECK_THROWS_AS(aggregate({}), invalid_input_error);
}
