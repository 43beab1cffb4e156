#include <doctest.h>

#include "ncores/oddeven.hpp"
#include "ncores/verify.hpp"

using namespace ncores;

namespace {
AbacusFunction make(std::vector<int> values) { return AbacusFunction(std::move(values)); }
}  // namespace

TEST_CASE("count_even worked values") {
    CHECK(count_even(0) == 1);
    CHECK(count_even(3) == 2);
    CHECK(count_even(6) == 12);
    CHECK(count_even(7) == 30);
    // Equality with the brute oracle over the even-gap set.
    const auto brute = count_brute(DiffSet::multiples(2), 10, Variant::Q);
    for (long long n = 0; n <= 10; ++n)
        CHECK(count_even(n) == brute.values[static_cast<std::size_t>(n)]);
}

TEST_CASE("count_odd worked values and the brute oracle") {
    CHECK(count_odd(-2) == 0);
    CHECK(count_odd(0) == 1);
    CHECK(count_odd(1) == 1);
    CHECK(count_odd(3) == 4);
    CHECK(count_odd(4) == 7);
    CHECK(count_odd(5) == 17);
    CHECK(count_odd(4) == (count_even(6) + count_odd(2)) / 2);
    CHECK(count_odd(5) == (count_even(7) + count_odd(3)) / 2);
    const auto brute = count_brute(DiffSet::multiples(2), 11, Variant::Odd);
    for (long long n = 0; n <= 11; ++n)
        CHECK(count_odd(n) == brute.values[static_cast<std::size_t>(n)]);
}

TEST_CASE("the four odd (3,4)-cores") {
    // {empty, (1), (1,1), (3,1,1)} are exactly the odd-part (3,4)-cores.
    std::vector<std::vector<long long>> odd_parts;
    for_each_abacus(3, [&](const std::vector<int>& f) {
        if (all_parts_odd(AbacusFunction(f)))
            odd_parts.push_back(AbacusFunction(f).decode().parts());
    });
    std::sort(odd_parts.begin(), odd_parts.end());
    CHECK(odd_parts == std::vector<std::vector<long long>>{
                           {}, {1}, {1, 1}, {3, 1, 1}});
}

TEST_CASE("is_single_column") {
    CHECK(is_single_column(make({0, 0, 0})));
    CHECK(is_single_column(make({0, 1, 1, 0})));
    CHECK_FALSE(is_single_column(make({0, 1, 2})));
}

TEST_CASE("locate_last_run worked examples") {
    const RunLocus a = locate_last_run(make({0, 1, 2}));
    CHECK(a == RunLocus{2, 1, 1, false, false});
    const RunLocus b = locate_last_run(make({0, 1, 1, 0}));
    CHECK(b == RunLocus{1, 0, 2, false, true});
    CHECK_THROWS_AS(locate_last_run(make({0, 0, 0, 0})), std::domain_error);
    // An earlier plateau at the same height is not the last run.
    const RunLocus c = locate_last_run(make({0, 1, 2, 1, 2}));
    CHECK(c == RunLocus{2, 3, 1, false, false});
}

TEST_CASE("insert_two_rows worked examples") {
    const AbacusFunction f = make({0, 1, 2});
    const AbacusFunction before = insert_two_rows(f, InsertSide::Before);
    CHECK(before.values() == std::vector<int>{0, 1, 1, 2, 2});
    CHECK(before.decode() == Partition({6, 2, 2, 2}));
    const AbacusFunction after = insert_two_rows(f, InsertSide::After);
    CHECK(after.values() == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(after.decode() == Partition({6, 2, 2}));

    CHECK_THROWS_AS(insert_two_rows(make({0, 1, 0}), InsertSide::Before),
                    std::invalid_argument);  // single-column
    CHECK_THROWS_AS(insert_two_rows(make({0, 1, 1}), InsertSide::Before),
                    std::invalid_argument);  // parts even, not odd
}

TEST_CASE("delete_rows_h rejects bad inputs") {
    CHECK_THROWS_AS(delete_rows_h(make({0, 1, 2})), std::invalid_argument);  // odd parts
    // Single-column all-even example.
    CHECK_THROWS_AS(delete_rows_h(make({0, 1, 1, 0})), std::invalid_argument);
    // g_b images always carry an extra bead before the run.
    const AbacusFunction image = insert_two_rows(make({0, 1, 2}), InsertSide::Before);
    CHECK_THROWS_AS(delete_rows_h(image), std::invalid_argument);
}

TEST_CASE("delete_rows_h inverts on every eligible member, exhaustively") {
    for (int n = 4; n <= 10; ++n) {
        long long eligible = 0;
        for_each_abacus(n, [&](const std::vector<int>& fv) {
            const AbacusFunction f(fv);
            if (!all_parts_even(f) || is_single_column(f)) return;
            const RunLocus locus = locate_last_run(f);
            if (locus.extra_before || locus.extra_after) return;
            ++eligible;
            const AbacusFunction h = delete_rows_h(f);
            REQUIRE(all_parts_odd(h));
            REQUIRE_FALSE(is_single_column(h));
            REQUIRE_FALSE(locate_last_run(h).extra_after);
            REQUIRE(h.n() == n - locus.k - 2);
        });
        if (n >= 8) CHECK(eligible > 0);
    }
}

TEST_CASE("phi worked examples") {
    CHECK(phi_insert_one(make({0, 0, 0})).values() == std::vector<int>{0, 0, 0, 0});
    const AbacusFunction image = phi_insert_one(make({0, 1, 0}));
    CHECK(image.values() == std::vector<int>{0, 1, 1, 0});
    CHECK(image.decode() == Partition({2}));
    CHECK_THROWS_AS(phi_insert_one(make({0, 1, 1})), std::invalid_argument);  // (2): even part
    CHECK_THROWS_AS(phi_insert_one(make({0, 1, 2})), std::invalid_argument);  // repeated parts
}

TEST_CASE("verify suites: odd/even identities and bijections") {
    for (const auto& result : verify::oddeven_identities(12)) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.passed);
    }
    for (const auto& result : verify::bijections(9)) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.passed);
    }
}

TEST_CASE("distinct parts force a single column") {
    for (int n = 1; n <= 10; ++n) {
        for_each_abacus(n, [&](const std::vector<int>& fv) {
            const AbacusFunction f(fv);
            const auto gaps = f.gap_lengths();
            bool distinct = true;
            for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
                if (gaps[i] == 0) distinct = false;
            if (distinct) REQUIRE(is_single_column(f));
        });
    }
}

TEST_CASE("classify_brute splits E and O") {
    for (int n = 0; n <= 10; ++n) {
        const OddEvenCounts c = classify_brute(n);
        CHECK(c.se + c.ce == count_even(n));
        CHECK(c.so + c.co == count_odd(n));
    }
    const OddEvenCounts c0 = classify_brute(0);
    CHECK(c0.se == 1);
    CHECK(c0.so == 1);
    CHECK(c0.ce == 0);
    CHECK(c0.co == 0);
}

TEST_CASE("oddeven_table identity columns are all green") {
    const auto rows = oddeven_table(11);
    CHECK(rows.size() == 12);
    for (const auto& row : rows) {
        INFO("n = ", row.n);
        CHECK(row.e == row.se + row.ce);
        CHECK(row.o == row.so + row.co);
        if (row.n >= 1) CHECK(row.eo_ok.value_or(false));
        if (row.se_fib_ok) CHECK(*row.se_fib_ok);
        if (row.so_se_ok) CHECK(*row.so_se_ok);
        if (row.co_ce_ok) CHECK(*row.co_ce_ok);
    }
    // SE initial values and the Fibonacci pattern.
    CHECK(rows[0].se == 1);
    CHECK(rows[1].se == 1);
    CHECK(rows[2].se == 1);
    CHECK(rows[3].se == 2);
    CHECK(rows[4].se == 3);
    CHECK_THROWS_AS(oddeven_table(15), ResourceLimitError);
}
