#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "frl/clustering.hpp"
#include "frl/reference.hpp"
#include "frl/rng.hpp"

using namespace frl;

namespace {

// Best two-center solution by exhaustive 0.01-step search over (c1, c2),
// scoring each candidate with the optimal-membership FCM objective.
std::pair<double, double> grid_best_two_centers(std::span<const double> values) {
    double best_j = 1e300, best_a = 0, best_b = 0;
    for (int ga = 0; ga <= 100; ++ga) {
        for (int gb = ga; gb <= 100; ++gb) {
            double ca = ga / 100.0, cb = gb / 100.0;
            double j = 0.0;
            for (double x : values) {
                double da = (x - ca) * (x - ca), db = (x - cb) * (x - cb);
                if (da == 0.0 || db == 0.0) continue;  // contributes zero at optimum
                j += 1.0 / (1.0 / da + 1.0 / db);  // min_u u^2*da + (1-u)^2*db
            }
            if (j < best_j) {
                best_j = j;
                best_a = ca;
                best_b = cb;
            }
        }
    }
    return {best_a, best_b};
}

}  // namespace

TEST_SUITE_BEGIN("clustering");

TEST_CASE("two well-separated blobs recover their centers") {
    std::vector<double> values = {0.0, 0.0, 0.0, 1.0, 1.0, 1.0};
    FcmParams params;
    params.k = 2;
    FcmResult res = fcm(values, params);
    REQUIRE(res.centers.size() == 2);
    double lo = std::min(res.centers[0], res.centers[1]);
    double hi = std::max(res.centers[0], res.centers[1]);

    auto [oracle_lo, oracle_hi] = grid_best_two_centers(values);
    CHECK(std::abs(lo - oracle_lo) < 0.05);
    CHECK(std::abs(hi - oracle_hi) < 0.05);

    std::size_t lo_idx = res.centers[0] <= res.centers[1] ? 0 : 1;
    for (std::size_t j = 0; j < values.size(); ++j) {
        std::size_t near = values[j] < 0.5 ? lo_idx : 1 - lo_idx;
        CHECK(res.memberships[near][j] > 0.9);
    }
}

TEST_CASE("a point equidistant from two centers splits its membership") {
    // Symmetric data pins the converged centers symmetrically around 0.5.
    std::vector<double> values = {0.0, 0.0, 0.5, 1.0, 1.0};
    FcmParams params;
    params.k = 2;
    FcmResult res = fcm(values, params);
    CHECK(res.memberships[0][2] == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(res.memberships[1][2] == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("k = 1 degenerates to the mean with full membership") {
    std::vector<double> values = {0.1, 0.2, 0.6};
    FcmParams params;
    params.k = 1;
    FcmResult res = fcm(values, params);
    REQUIRE(res.centers.size() == 1);
    CHECK(res.centers[0] == doctest::Approx(0.3));
    for (double u : res.memberships[0]) CHECK(u == 1.0);
}

TEST_CASE("membership columns sum to 1 and centers stay in range") {
    Rng rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> values;
        std::size_t m = 5 + rng.below(60);
        for (std::size_t j = 0; j < m; ++j) values.push_back(rng.uniform());
        FcmParams params;
        params.k = 3;
        params.seed = trial;
        FcmResult res = fcm(values, params);
        double lo = *std::min_element(values.begin(), values.end());
        double hi = *std::max_element(values.begin(), values.end());
        for (double c : res.centers) {
            CHECK(c >= lo - 1e-9);
            CHECK(c <= hi + 1e-9);
        }
        for (std::size_t j = 0; j < values.size(); ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i < res.centers.size(); ++i) sum += res.memberships[i][j];
            CHECK(std::abs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("objective is non-increasing across iterations") {
    Rng rng(909);
    std::vector<double> values;
    for (int j = 0; j < 200; ++j) values.push_back(rng.uniform());
    FcmParams params;
    params.k = 3;
    params.tol = 0.0;  // never early-stop; drive a fixed number of rounds

    double prev = 1e300;
    for (int iters = 1; iters <= 12; ++iters) {
        FcmParams p = params;
        p.max_iter = iters;
        p.tol = 1e-300;
        FcmResult res = fcm(values, p);
        double j = fcm_objective(values, res, p.fuzzifier);
        CHECK(j <= prev + 1e-12);
        prev = j;
    }
}

TEST_CASE("fixed seed is bit-exact across runs") {
    Rng rng(111);
    std::vector<double> values;
    for (int j = 0; j < 500; ++j) values.push_back(rng.uniform());
    FcmParams params;
    params.k = 3;
    FcmResult a = fcm(values, params);
    FcmResult b = fcm(values, params);
    REQUIRE(a.centers.size() == b.centers.size());
    for (std::size_t i = 0; i < a.centers.size(); ++i) {
        CHECK(a.centers[i] == b.centers[i]);
        for (std::size_t j = 0; j < values.size(); ++j) {
            CHECK(a.memberships[i][j] == b.memberships[i][j]);
        }
    }
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("fewer distinct values than k collapses with a flag") {
    std::vector<double> values = {1.0, 1.0, 1.0};
    FcmParams params;
    params.k = 3;
    FcmResult res = fcm(values, params);
    CHECK(res.collapsed);
    CHECK(res.centers.size() == 1);
    CHECK(effective_labels(res) == std::vector<std::string>{"Match"});
}

TEST_CASE("labels bind to sorted centers, not storage order") {
    CHECK(cluster_labels(3) == std::vector<std::string>{"Non-match", "Possible Match", "Match"});
    CHECK(cluster_labels(2).size() == 2);

    FcmResult res;
    res.requested_k = 3;
    res.centers = {0.9, 0.1, 0.5};  // deliberately unsorted
    res.memberships = {{0.7, 0.1}, {0.2, 0.8}, {0.1, 0.1}};
    auto best = assign_best(res);
    // Point 0 favors center 0.9 -> top position (2); point 1 favors 0.1 -> 0.
    CHECK(best[0] == 2);
    CHECK(best[1] == 0);

    // Permuting the internal cluster order leaves assignments unchanged.
    FcmResult perm;
    perm.requested_k = 3;
    perm.centers = {0.1, 0.5, 0.9};
    perm.memberships = {{0.2, 0.8}, {0.1, 0.1}, {0.7, 0.1}};
    auto best_perm = assign_best(perm);
    CHECK(best_perm == best);
}

TEST_CASE("membership ties resolve toward the higher center") {
    FcmResult res;
    res.requested_k = 3;
    res.centers = {0.0, 0.5, 1.0};
    res.memberships = {{0.5}, {0.5}, {0.0}};
    auto best = assign_best(res);
    CHECK(best[0] == 1);  // "Possible Match" beats "Non-match" on a tie

    FcmResult res2;
    res2.requested_k = 3;
    res2.centers = {0.0, 0.5, 1.0};
    res2.memberships = {{0.1}, {0.2}, {0.7}};
    CHECK(assign_best(res2)[0] == 2);
}

TEST_CASE("parallel fcm matches the serial reference") {
    Rng rng(333);
    std::vector<double> values;
    for (int j = 0; j < 800; ++j) values.push_back(rng.uniform());
    FcmParams params;
    params.k = 3;
    FcmResult fast = fcm(values, params);
    FcmResult slow = ref::fcm(values, params);
    REQUIRE(fast.centers.size() == slow.centers.size());
    CHECK(fast.iterations == slow.iterations);
    for (std::size_t i = 0; i < fast.centers.size(); ++i) {
        CHECK(fast.centers[i] == doctest::Approx(slow.centers[i]).epsilon(1e-9));
    }
}

TEST_CASE("empty input and bad parameters are rejected") {
    FcmParams params;
    CHECK_THROWS_AS(fcm({}, params), std::invalid_argument);
    params.k = 0;
    CHECK_THROWS_AS(fcm(std::vector<double>{0.5}, params), std::invalid_argument);
    params.k = 2;
    params.fuzzifier = 1.0;
    CHECK_THROWS_AS(fcm(std::vector<double>{0.5, 0.7}, params), std::invalid_argument);
}

TEST_SUITE_END();
