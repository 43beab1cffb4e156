#include <doctest.h>

#include <random>

#include "ncores/series.hpp"

using namespace ncores;

namespace {

PowerSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<long long> coeff(-4, 4);
    std::vector<bigint> c(order + 1);
    for (auto& x : c) x = coeff(rng);
    return PowerSeries(std::move(c));
}

PowerSeries unit_series(std::mt19937& rng, std::size_t order) {
    PowerSeries s = random_series(rng, order);
    std::vector<bigint> c = s.coeffs();
    c[0] = rng() % 2 == 0 ? 1 : -1;
    return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const PowerSeries one_plus_q({1, 1, 0});
    const PowerSeries one_minus_q({1, -1, 0});
    CHECK(one_plus_q * one_minus_q == PowerSeries({1, 0, -1}));
    CHECK(one_plus_q + one_minus_q == PowerSeries({2, 0, 0}));
    CHECK(one_plus_q - one_minus_q == PowerSeries({0, 2, 0}));
}

TEST_CASE("truncation telescopes: geometric times (1-q)") {
    const PowerSeries geom({1, 1, 1, 1});
    const PowerSeries one_minus_q({1, -1, 0, 0});
    CHECK(geom * one_minus_q == PowerSeries::one(3));
}

TEST_CASE("order mismatch is rejected") {
    CHECK_THROWS_AS(PowerSeries(3) + PowerSeries(4), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries(3) * PowerSeries(4), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries(3).hadamard(PowerSeries(2)), std::invalid_argument);
}

TEST_CASE("reciprocal of 1-q is the geometric series") {
    const auto r = PowerSeries({1, -1, 0, 0, 0, 0}).reciprocal();
    CHECK(r == PowerSeries({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("reciprocal of 1-q-q^2 carries Fibonacci coefficients") {
    std::vector<bigint> denom(11, 0);
    denom[0] = 1;
    denom[1] = -1;
    denom[2] = -1;
    const PowerSeries s = PowerSeries(denom).reciprocal();
    // Independent oracle: iterate the Fibonacci addition directly.
    std::vector<bigint> fib = {1, 1};
    while (fib.size() <= 10) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    CHECK(s.coeffs() == fib);
    CHECK(s * PowerSeries(denom) == PowerSeries::one(10));
}

TEST_CASE("reciprocal of 1+q alternates") {
    CHECK(PowerSeries({1, 1, 0, 0}).reciprocal() == PowerSeries({1, -1, 1, -1}));
}

TEST_CASE("reciprocal requires a unit constant term") {
    CHECK_THROWS_AS(PowerSeries({2, 1}).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(PowerSeries({0, 1}).reciprocal(), std::domain_error);
    const auto neg = PowerSeries({-1, 3, -2}).reciprocal();
    CHECK(neg * PowerSeries({-1, 3, -2}) == PowerSeries::one(2));
}

TEST_CASE("reciprocal inverts exactly on random units") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const PowerSeries a = unit_series(rng, 12);
        CHECK(a * a.reciprocal() == PowerSeries::one(12));
    }
}

TEST_CASE("hadamard product") {
    const PowerSeries a({1, 2, 3});
    CHECK(a.hadamard(PowerSeries({1, 1, 1})) == a);
    CHECK(a.hadamard(PowerSeries({0, 1, 1})) == PowerSeries({0, 2, 3}));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const PowerSeries x = random_series(rng, 9);
        const PowerSeries y = random_series(rng, 9);
        const PowerSeries z = random_series(rng, 9);
        CHECK(x.hadamard(y) == y.hadamard(x));
        CHECK(x.hadamard(y).hadamard(z) == x.hadamard(y.hadamard(z)));
        CHECK(x.hadamard(PowerSeries({1, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == x);
    }
}

TEST_CASE("derivative basics and the order convention") {
    CHECK(PowerSeries({1, 1, 1}).derivative() == PowerSeries({1, 2}));
    CHECK(PowerSeries({0, 1, 1, 1, 1}).derivative() == PowerSeries({1, 2, 3, 4}));
    CHECK(PowerSeries(std::vector<bigint>{5}).derivative() == PowerSeries(0));
    CHECK(PowerSeries({1, 1, 1}).derivative().order() == 1);
}

TEST_CASE("product rule holds to the reduced order") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const PowerSeries a = random_series(rng, 10);
        const PowerSeries b = random_series(rng, 10);
        const PowerSeries lhs = (a * b).derivative();
        const PowerSeries rhs =
            a.derivative() * b.truncate(9) + a.truncate(9) * b.derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ring axioms to truncation order") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const PowerSeries a = random_series(rng, 8);
        const PowerSeries b = random_series(rng, 8);
        const PowerSeries c = random_series(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * PowerSeries::one(8) == a);
    }
}

TEST_CASE("truncate shrinks only") {
    const PowerSeries a({1, 2, 3, 4});
    CHECK(a.truncate(1) == PowerSeries({1, 2}));
    CHECK_THROWS_AS(a.truncate(5), std::invalid_argument);
}

TEST_CASE("JSON round trip preserves width") {
    const bigint big = bigint(1) << 100;
    const PowerSeries s({1, -big, big + 7});
    const nlohmann::json j = s;
    CHECK(j["coeffs"][1].get<std::string>() == bigint(-big).str());
    CHECK(j.get<PowerSeries>() == s);
    // Plain numbers are accepted on input.
    const auto parsed = nlohmann::json::parse(R"({"order":1,"coeffs":[1,-2]})");
    CHECK(parsed.get<PowerSeries>() == PowerSeries({1, -2}));
    const auto bad = nlohmann::json::parse(R"({"order":3,"coeffs":[1,-2]})");
    CHECK_THROWS_AS(bad.get<PowerSeries>(), std::invalid_argument);
}
