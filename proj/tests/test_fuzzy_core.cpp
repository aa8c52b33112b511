#include <doctest.h>

#include <stdexcept>

#include "frl/fuzzy_core.hpp"
#include "frl/rng.hpp"

using namespace frl;

TEST_SUITE_BEGIN("fuzzy_core");

TEST_CASE("membership of a plain triangle") {
    Tfn t(0.0, 0.5, 1.0);
    CHECK(membership(t, Shoulder::none, 0.5) == doctest::Approx(1.0));
    CHECK(membership(t, Shoulder::none, 0.25) == doctest::Approx(0.5));
    CHECK(membership(t, Shoulder::none, 1.2) == doctest::Approx(0.0));
    CHECK(membership(t, Shoulder::none, -0.1) == doctest::Approx(0.0));
}

TEST_CASE("shoulder terms plateau at 1 beyond the mode") {
    // Right shoulder (b == c): rises on [a, b], plateaus toward the right.
    Tfn high(0.5, 1.0, 1.0);
    CHECK(membership(high, Shoulder::right, 1.2) == doctest::Approx(1.0));
    CHECK(membership(high, Shoulder::right, 0.75) == doctest::Approx(0.5));
    CHECK(membership(high, Shoulder::right, 0.2) == doctest::Approx(0.0));

    // Left shoulder (a == b): plateaus toward the left, falls on [b, c].
    Tfn low(0.2, 0.2, 0.7);
    CHECK(membership(low, Shoulder::left, 0.1) == doctest::Approx(1.0));
    CHECK(membership(low, Shoulder::left, -5.0) == doctest::Approx(1.0));
    CHECK(membership(low, Shoulder::left, 0.45) == doctest::Approx(0.5));
    CHECK(membership(low, Shoulder::left, 0.8) == doctest::Approx(0.0));
}

TEST_CASE("degenerate triangles keep membership(b) == 1") {
    Tfn left_degenerate(0.3, 0.3, 0.9);
    CHECK(membership(left_degenerate, Shoulder::none, 0.3) == doctest::Approx(1.0));
    CHECK(membership(left_degenerate, Shoulder::none, 0.29) == doctest::Approx(0.0));
    Tfn point(0.4, 0.4, 0.4);
    CHECK(membership(point, Shoulder::none, 0.4) == doctest::Approx(1.0));
    CHECK(membership(point, Shoulder::none, 0.41) == doctest::Approx(0.0));
}

TEST_CASE("invalid vertex order is rejected") {
    CHECK_THROWS_AS(Tfn(0.5, 0.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Tfn(0.0, 0.8, 0.5), std::invalid_argument);
}

TEST_CASE("alpha cuts") {
    Tfn t(0.1, 0.16, 0.33);
    Interval a1 = alpha_cut(t, 1.0);
    CHECK(a1.lo == doctest::Approx(0.16));
    CHECK(a1.hi == doctest::Approx(0.16));
    Interval a0 = alpha_cut(t, 0.0);
    CHECK(a0.lo == doctest::Approx(0.10));
    CHECK(a0.hi == doctest::Approx(0.33));
    Interval ah = alpha_cut(t, 0.5);
    CHECK(ah.lo == doctest::Approx(0.13));
    CHECK(ah.hi == doctest::Approx(0.245));

    CHECK_THROWS_AS(alpha_cut(t, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(alpha_cut(t, 1.01), std::invalid_argument);
}

TEST_CASE("alpha-cut nesting on random inputs") {
    Rng rng(123);
    for (int i = 0; i < 500; ++i) {
        double a = rng.range(-2.0, 2.0);
        double b = a + rng.range(0.0, 1.0);
        double c = b + rng.range(0.0, 1.0);
        Tfn t(a, b, c);
        double a1 = rng.uniform(), a2 = rng.uniform();
        if (a1 > a2) std::swap(a1, a2);
        Interval outer = alpha_cut(t, a1);
        Interval inner = alpha_cut(t, a2);
        CHECK(outer.contains(inner));
        CHECK(alpha_cut(t, 0.0).lo == t.a);
        CHECK(alpha_cut(t, 0.0).hi == t.c);
        CHECK(alpha_cut(t, 1.0).lo == t.b);
        CHECK(alpha_cut(t, 1.0).hi == t.b);
    }
}

TEST_CASE("membership stays within [0,1] and peaks at the mode") {
    Rng rng(321);
    for (int i = 0; i < 500; ++i) {
        double a = rng.range(-1.0, 1.0);
        double b = a + rng.range(0.0, 1.0);
        double c = b + rng.range(0.0, 1.0);
        Tfn t(a, b, c);
        CHECK(membership(t, Shoulder::none, t.b) == doctest::Approx(1.0));
        double x = rng.range(-2.0, 3.0);
        double mu = membership(t, Shoulder::none, x);
        CHECK(mu >= 0.0);
        CHECK(mu <= 1.0);
    }
}

TEST_CASE("centroid defuzzification") {
    CHECK(centroid_defuzzify(Tfn(0.0, 0.5, 1.0)) == doctest::Approx(0.5));
    CHECK(centroid_defuzzify(Tfn(0.15, 0.3, 0.6)) == doctest::Approx(0.35));
    CHECK(centroid_defuzzify(Tfn(0.1, 0.16, 0.33)) == doctest::Approx(0.19666666).epsilon(1e-6));

    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        double a = rng.range(-1.0, 1.0);
        double b = a + rng.range(0.0, 1.0);
        double c = b + rng.range(0.0, 1.0);
        Tfn t(a, b, c);
        double d = centroid_defuzzify(t);
        CHECK(d >= t.a);
        CHECK(d <= t.c);
    }
}

TEST_CASE("normalize") {
    std::vector<double> paper = {0.1967, 0.35, 0.5933};
    auto w = normalize(paper);
    CHECK(w[0] == doctest::Approx(0.17).epsilon(0.03));
    CHECK(std::abs(w[0] - 0.17) < 0.005);
    CHECK(std::abs(w[1] - 0.31) < 0.005);
    CHECK(std::abs(w[2] - 0.52) < 0.005);

    auto uniform = normalize(std::vector<double>{1.0, 1.0, 1.0});
    CHECK(uniform[0] == doctest::Approx(1.0 / 3));
    auto single = normalize(std::vector<double>{2.0, 0.0, 0.0});
    CHECK(single[0] == doctest::Approx(1.0));
    CHECK(single[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(normalize(std::vector<double>{0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(normalize(std::vector<double>{0.5, -0.1}), std::invalid_argument);
}

TEST_CASE("normalize sums to one and preserves the argmax") {
    Rng rng(55);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + rng.below(6);
        std::vector<double> v(n);
        for (double& x : v) x = rng.uniform();
        v[rng.below(n)] += 0.5;  // make the argmax unambiguous
        auto w = normalize(v);
        double sum = 0.0;
        std::size_t arg_in = 0, arg_out = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += w[j];
            if (v[j] > v[arg_in]) arg_in = j;
            if (w[j] > w[arg_out]) arg_out = j;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
        CHECK(arg_in == arg_out);
    }
}

TEST_SUITE_END();
