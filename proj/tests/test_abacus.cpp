#include <doctest.h>

#include <numeric>
#include <set>

#include "ncores/abacus.hpp"
#include "ncores/counting.hpp"

using namespace ncores;

namespace {

// Partition-level oracle for the gap conditions, straight from the parts.
bool oracle_satisfies(const Partition& lambda, const DiffSet& m, Variant variant) {
    const auto& parts = lambda.parts();
    const std::size_t len = parts.size();
    for (std::size_t i = 0; i < len; ++i) {
        const long long gap = i + 1 < len ? parts[i] - parts[i + 1] : parts[i];
        const bool last = i + 1 == len;
        switch (variant) {
            case Variant::Q:
                if (!m.contains(gap)) return false;
                break;
            case Variant::P:
                if (!last && !m.contains(gap)) return false;
                break;
            case Variant::Odd:
                if (last ? gap % 2 == 0 : gap % 2 != 0) return false;
                break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("validation accepts and rejects per the two conditions") {
    CHECK_NOTHROW(AbacusFunction::validate(2, {0, 1}));
    CHECK_NOTHROW(AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1}));
    CHECK_THROWS_WITH_AS(AbacusFunction::validate(2, {0, 2}),
                         doctest::Contains("index 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(AbacusFunction::validate(2, {1, 0}),
                         doctest::Contains("index 0"), std::invalid_argument);
    CHECK_THROWS_AS(AbacusFunction::validate(3, {0, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(AbacusFunction::validate(3, {0, 1}), std::invalid_argument);
}

TEST_CASE("decode worked examples") {
    CHECK(AbacusFunction::validate(5, {0, 0, 0, 0, 0}).decode() == Partition());
    CHECK(AbacusFunction::validate(2, {0, 1}).decode() == Partition({1}));
    const Partition big = AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1}).decode();
    CHECK(big == Partition({5, 3, 3, 3, 1, 1}));
    CHECK(big.largest() == 5);
    CHECK(big.length() == 6);
    CHECK(big.size() == 16);
    CHECK(big.is_core(8));
    CHECK(big.is_core(9));
    // The (1) cross-check: it passes the hook predicate for 2 and 3.
    CHECK(Partition({1}).is_core(2));
    CHECK(Partition({1}).is_core(3));
}

TEST_CASE("encode worked examples and error") {
    CHECK(encode(Partition(), 5).values() == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(encode(Partition({1}), 2).values() == std::vector<int>{0, 1});
    CHECK(encode(Partition({5, 3, 3, 3, 1, 1}), 8).values() ==
          std::vector<int>{0, 1, 2, 0, 0, 0, 1, 1});
    // (3) has a 3-hook, so it is neither a 3-core nor a (2,3)-core.
    CHECK_THROWS_AS(encode(Partition({3}), 2), std::domain_error);
    CHECK_THROWS_AS(encode(Partition({3}), 3), std::domain_error);
}

TEST_CASE("gap lengths worked examples") {
    CHECK(AbacusFunction::validate(4, {0, 0, 0, 0}).gap_lengths().empty());
    CHECK(AbacusFunction::validate(2, {0, 1}).gap_lengths() == std::vector<long long>{1});
    CHECK(AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1}).gap_lengths() ==
          std::vector<long long>{2, 0, 0, 2, 0, 1});
    CHECK(AbacusFunction::validate(3, {0, 1, 2}).gap_lengths() ==
          std::vector<long long>{2, 0, 1});
}

TEST_CASE("satisfies worked examples") {
    const AbacusFunction paper = AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1});
    CHECK(paper.satisfies(DiffSet::naturals(), Variant::Q));

    const AbacusFunction one = AbacusFunction::validate(2, {0, 1});
    CHECK_FALSE(one.satisfies(DiffSet::multiples(2), Variant::Q));
    CHECK(one.satisfies(DiffSet::multiples(2), Variant::Odd));

    // Repeated part means a zero gap, so positive-only sets reject it.
    const AbacusFunction rep = AbacusFunction::validate(3, {0, 1, 2});
    CHECK(rep.satisfies(DiffSet::naturals(), Variant::Odd));
    CHECK_FALSE(rep.satisfies(DiffSet::positives(), Variant::Q));
    CHECK(rep.satisfies(DiffSet::positives(), Variant::P) ==
          oracle_satisfies(rep.decode(), DiffSet::positives(), Variant::P));
}

TEST_CASE("statistics worked examples") {
    CHECK(AbacusFunction::validate(3, {0, 0, 0}).statistics() == AbacusStats{0, 0, 0});
    CHECK(AbacusFunction::validate(2, {0, 1}).statistics() == AbacusStats{1, 1, 1});
    // Whites sit at positions {2,3,7,8,11}; the inversion count over them is
    // 1+1+4+4+6 = 16, which is also the cell count of (5,3,3,3,1,1).
    CHECK(AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1}).statistics() ==
          AbacusStats{5, 6, 16});
}

TEST_CASE("exhaustive: abacus count is Catalan and decode lands on cores") {
    for (int n = 1; n <= 12; ++n) {
        long long count = 0;
        for_each_abacus(n, [&](const std::vector<int>&) { ++count; });
        CHECK(bigint(count) == catalan(n));
    }
    for (int n = 1; n <= 8; ++n) {
        for_each_abacus(n, [&](const std::vector<int>& f) {
            const Partition p = AbacusFunction(f).decode();
            REQUIRE(p.is_core(n));
            REQUIRE(p.is_core(n + 1));
        });
    }
}

TEST_CASE("exhaustive: decode is a bijection onto the (n,n+1)-cores") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::vector<long long>> decoded;
        for_each_abacus(n, [&](const std::vector<int>& f) {
            decoded.insert(AbacusFunction(f).decode().parts());
        });
        const long long bound = (n * n - 1) * ((n + 1) * (n + 1) - 1) / 24;
        std::set<std::vector<long long>> expected;
        for (const auto& p : enumerate_ab_cores(n, n + 1, bound)) expected.insert(p.parts());
        CHECK(decoded == expected);
    }
}

TEST_CASE("exhaustive: encode inverts decode") {
    for (int n = 1; n <= 8; ++n) {
        for_each_abacus(n, [&](const std::vector<int>& f) {
            const AbacusFunction back = encode(AbacusFunction(f).decode(), n);
            REQUIRE(back.values() == f);
        });
    }
}

TEST_CASE("exhaustive: gaps match part differences and statistics match decode") {
    for (int n = 1; n <= 9; ++n) {
        for_each_abacus(n, [&](const std::vector<int>& fv) {
            const AbacusFunction f(fv);
            const Partition p = f.decode();
            const auto gaps = f.gap_lengths();
            const auto& parts = p.parts();
            REQUIRE(gaps.size() == parts.size());
            long long gap_total = 0;
            for (std::size_t i = 0; i < gaps.size(); ++i) {
                const long long expected =
                    i + 1 < parts.size() ? parts[i] - parts[i + 1] : parts[i];
                REQUIRE(gaps[i] == expected);
                gap_total += gaps[i];
            }
            REQUIRE(gap_total == p.largest());

            const AbacusStats stats = f.statistics();
            REQUIRE(stats.largest == p.largest());
            REQUIRE(stats.length == p.length());
            REQUIRE(stats.size == p.size());
            REQUIRE(stats.largest == std::accumulate(fv.begin(), fv.end(), 0LL));
        });
    }
}

TEST_CASE("exhaustive: satisfies agrees with the partition-level definition") {
    const std::vector<std::string> battery = {"all",     "positive", "mult:2",
                                              "mult+:2", "atleast:2", "upto:1", "finite:1,3"};
    std::vector<DiffSet> sets;
    for (const auto& spec : battery) sets.push_back(DiffSet::parse(spec));
    for (int n = 1; n <= 10; ++n) {
        for_each_abacus(n, [&](const std::vector<int>& fv) {
            const AbacusFunction f(fv);
            const Partition p = f.decode();
            for (const auto& m : sets) {
                REQUIRE(f.satisfies(m, Variant::Q) == oracle_satisfies(p, m, Variant::Q));
                REQUIRE(f.satisfies(m, Variant::P) == oracle_satisfies(p, m, Variant::P));
            }
            REQUIRE(f.satisfies(sets[0], Variant::Odd) ==
                    oracle_satisfies(p, sets[0], Variant::Odd));
        });
    }
}

TEST_CASE("abacus JSON round trip") {
    const AbacusFunction f = AbacusFunction::validate(8, {0, 1, 2, 0, 0, 0, 1, 1});
    const nlohmann::json j = f;
    CHECK(j["n"] == 8);
    CHECK(j.get<AbacusFunction>() == f);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"n":2,"f":[0,2]})").get<AbacusFunction>(),
                    std::invalid_argument);
}
