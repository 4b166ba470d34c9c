#include <catch2/catch_amalgamated.hpp>

#include "caps/theory.hpp"

using namespace caps;

TEST_CASE("euler_phi small values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("lambda matches the paper values") {
    CHECK(lambda(1, 1) == Rational(1));
    CHECK(lambda(2, 2) == Rational(3, 4));
    CHECK(lambda(4, 4) == Rational(11, 16));
    CHECK(lambda(2, 3) == Rational(1, 6));
}

TEST_CASE("lambda is symmetric") {
    for (int tau = 1; tau <= 12; ++tau)
        for (int sigma = 1; sigma <= 12; ++sigma)
            CHECK(lambda(tau, sigma) == lambda(sigma, tau));
}

TEST_CASE("lambda equals the piecewise table for sigma in 1..4") {
    for (int sigma = 1; sigma <= 4; ++sigma)
        for (int tau = 1; tau <= 48; ++tau)
            CHECK(lambda(tau, sigma) == lambda_piecewise(sigma, tau));
    CHECK_THROWS_AS(lambda_piecewise(5, 1), std::domain_error);
}

TEST_CASE("lambda_piecewise spot values") {
    CHECK(lambda_piecewise(3, 6) == Rational(7, 18));
    CHECK(lambda_piecewise(4, 2) == Rational(3, 8));
    CHECK(lambda_piecewise(4, 3) == Rational(1, 12));
}

TEST_CASE("lambda_set sums over the product set") {
    CHECK(lambda_set({{1}, {1}}) == Rational(1));
    CHECK(lambda_set({{1, 2}, {2}}) == Rational(5, 4));
    CHECK(lambda_set({{1, 2, 3}, {1}}) == Rational(11, 6));
}

TEST_CASE("limiting probabilities") {
    CHECK(limit_existence_prob(1, 1) == Catch::Approx(0.632121).margin(1e-6));
    CHECK(limit_existence_prob(2, 2) == Catch::Approx(0.527633).margin(1e-6));
    CHECK(limit_existence_prob_set({{1, 2}, {2}}) ==
          Catch::Approx(1.0 - std::exp(-1.25)).margin(1e-12));
}

TEST_CASE("limit_cdf_Y values and monotonicity") {
    CHECK(limit_cdf_Y(1, 1) == Catch::Approx(0.632121).margin(1e-6));
    CHECK(limit_cdf_Y(2, 2) == Catch::Approx(0.713495).margin(1e-6));

    for (int sigma = 1; sigma <= 4; ++sigma) {
        double prev = 0.0;
        for (int y = 1; y <= 40; ++y) {
            const double cur = limit_cdf_Y(sigma, y);
            CHECK(cur >= prev);
            CHECK(cur < 1.0);
            prev = cur;
        }
    }

    // definitional consistency with the period-set probability
    PeriodSet ps;
    ps.sigmas = {3};
    for (int y = 1; y <= 6; ++y) {
        ps.taus.insert(y);
        CHECK(limit_existence_prob_set(ps) == Catch::Approx(limit_cdf_Y(3, y)).margin(1e-12));
    }
}

TEST_CASE("simple_sizes") {
    CHECK(simple_sizes(2, 2, 4) == std::set<long long>{2, 4});
    CHECK(simple_sizes(2, 2, 9) == std::set<long long>{2, 4});
    CHECK(simple_sizes(2, 3, 6) == std::set<long long>{6});
    CHECK(simple_sizes(2, 2, 3) == std::set<long long>{2});
    CHECK(simple_sizes(1, 1, 1) == std::set<long long>{1});
}

TEST_CASE("simple_tile_count") {
    CHECK(simple_tile_count(3, 1, 1, 1) == 3);
    CHECK(simple_tile_count(4, 2, 2, 2) == 6);
    CHECK(simple_tile_count(4, 2, 2, 4) == 6);
    CHECK_THROWS_AS(simple_tile_count(3, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("finite_n_mean evaluates the proof formula") {
    for (int n : {1, 2, 10, 1000})
        CHECK(finite_n_mean(n, 1, 1) == Rational(1));

    CHECK(rational_to_double(finite_n_mean(100, 2, 2)) == Catch::Approx(0.7302735).margin(1e-7));
    // the gap to the limit is ~2/n here, so 1e-3 needs n in the thousands
    CHECK(std::abs(rational_to_double(finite_n_mean(4000, 2, 2)) - 0.75) < 1e-3);

    // converges monotonically from below, with an O(1/n) gap: doubling n
    // roughly halves the distance to the limit
    double prev = rational_to_double(finite_n_mean(8, 2, 2));
    for (int n : {16, 32, 64, 128, 256}) {
        const double cur = rational_to_double(finite_n_mean(n, 2, 2));
        CHECK(cur > prev);
        CHECK(cur < 0.75);
        if (n >= 32) {
            const double ratio = (0.75 - prev) / (0.75 - cur);
            CHECK(ratio > 1.8);
            CHECK(ratio < 2.2);
        }
        prev = cur;
    }
}

TEST_CASE("brute-force census on tiny instances") {
    const TileCensus c211 = brute_force_tile_census(2, 1, 1);
    REQUIRE(c211.size() == 1);
    CHECK(c211.at({1, 0}) == 2);

    const TileCensus c321 = brute_force_tile_census(3, 2, 1);
    CHECK(c321.at({2, 0}) == 3);

    const TileCensus c422 = brute_force_tile_census(4, 2, 2);
    CHECK(c422.at({2, 0}) == 6);
    CHECK(c422.at({4, 0}) == 6);

    std::set<long long> lag0;
    for (const auto& [key, count] : c422)
        if (key.second == 0 && count > 0)
            lag0.insert(key.first);
    CHECK(lag0 == simple_sizes(2, 2, 4));
}

TEST_CASE("census guard rejects oversized scans") {
    CHECK_THROWS_AS(brute_force_tile_census(10, 3, 3), std::length_error);
}

TEST_CASE("rational formatting") {
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(1)) == "1");
    CHECK(rational_to_string(Rational(19, 27)) == "19/27");
    CHECK(rational_to_string(lambda(2, 2)) == "3/4");
}
