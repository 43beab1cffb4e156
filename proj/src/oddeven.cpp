#include "ncores/oddeven.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncores {

bigint count_even(long long n) {
    if (n < 0) return 0;
    return closed_form_raney(2, n);
}

bigint count_odd(long long n) {
    if (n < 0) return 0;
    if (n <= 1) return 1;
    bigint two_back = count_odd(n % 2);  // O(0) or O(1)
    bigint current = 0;
    for (long long i = n % 2 + 2; i <= n; i += 2) {
        current = exact_div(count_even(i + 2) + two_back, 2);
        two_back = current;
    }
    return current;
}

bool is_single_column(const AbacusFunction& f) {
    return *std::max_element(f.values().begin(), f.values().end()) <= 1;
}

namespace {

// Gap parities: non-last gaps even and last gap odd (all parts odd), or
// every gap even (all parts even).
bool gaps_have_parity(const AbacusFunction& f, bool last_odd) {
    const auto gaps = f.gap_lengths();
    if (gaps.empty()) return true;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        if (gaps[i] % 2 != 0) return false;
    return gaps.back() % 2 == (last_odd ? 1 : 0);
}

}  // namespace

bool all_parts_odd(const AbacusFunction& f) { return gaps_have_parity(f, true); }
bool all_parts_even(const AbacusFunction& f) { return gaps_have_parity(f, false); }

RunLocus locate_last_run(const AbacusFunction& f) {
    const auto& v = f.values();
    const int m = *std::max_element(v.begin(), v.end());
    if (m == 0) throw std::domain_error("locate_last_run: the empty partition has no white run");

    int end = static_cast<int>(v.size()) - 1;
    while (v[static_cast<std::size_t>(end)] != m) --end;
    int start = end;
    while (start > 0 && v[static_cast<std::size_t>(start - 1)] == m) --start;

    RunLocus locus;
    locus.m = m;
    locus.ell = start - 1;
    locus.k = end - start + 1;
    // Growth forces f(ell) = m-1; anything else means corrupted state.
    if (locus.ell < 0 || v[static_cast<std::size_t>(locus.ell)] != m - 1)
        throw std::logic_error("locate_last_run: f(ell) != m-1, abacus invariant broken");
    locus.extra_before = locus.ell >= 1 && v[static_cast<std::size_t>(locus.ell - 1)] == m - 1;
    locus.extra_after =
        end + 1 < static_cast<int>(v.size()) && v[static_cast<std::size_t>(end + 1)] == m - 1;
    return locus;
}

AbacusFunction insert_two_rows(const AbacusFunction& f, InsertSide side) {
    if (!all_parts_odd(f))
        throw std::invalid_argument("insert_two_rows: input must have all parts odd");
    if (is_single_column(f))
        throw std::invalid_argument("insert_two_rows: input must not be single-column");
    const RunLocus locus = locate_last_run(f);
    const auto& v = f.values();
    std::vector<int> out;
    out.reserve(v.size() + 2);
    // Insertion point: right after index ell (Before) or after the run (After).
    const int at = side == InsertSide::Before ? locus.ell : locus.ell + locus.k;
    for (int i = 0; i <= at; ++i) out.push_back(v[static_cast<std::size_t>(i)]);
    if (side == InsertSide::Before) {
        out.push_back(locus.m - 1);
        out.push_back(locus.m);
    } else {
        out.push_back(locus.m);
        out.push_back(locus.m - 1);
    }
    for (std::size_t i = static_cast<std::size_t>(at) + 1; i < v.size(); ++i) out.push_back(v[i]);

    AbacusFunction result(std::move(out));
    if (!all_parts_even(result))
        throw std::logic_error("insert_two_rows: image does not have all parts even");
    return result;
}

AbacusFunction delete_rows_h(const AbacusFunction& f) {
    if (!all_parts_even(f))
        throw std::invalid_argument("delete_rows_h: input must have all parts even");
    if (is_single_column(f))
        throw std::invalid_argument("delete_rows_h: input must not be single-column");
    const RunLocus locus = locate_last_run(f);
    if (locus.extra_before || locus.extra_after)
        throw std::invalid_argument(
            "delete_rows_h: input must have no extra black bead before or after the last run");
    if (locus.k % 2 != 0)
        throw std::logic_error("delete_rows_h: last run of an all-even abacus has odd length");

    const auto& v = f.values();
    // With both extras absent the analysis forces f(ell-1) = m; a violation
    // here would be a genuine discrepancy, so it is surfaced, not masked.
    if (locus.ell < 1 || v[static_cast<std::size_t>(locus.ell - 1)] != locus.m)
        throw std::logic_error("delete_rows_h: derived constraint f(ell-1) = m fails");

    std::vector<int> out;
    out.reserve(v.size() - static_cast<std::size_t>(locus.k) - 2);
    for (int i = 0; i <= locus.ell - 2; ++i) out.push_back(v[static_cast<std::size_t>(i)]);
    for (std::size_t i = static_cast<std::size_t>(locus.ell + locus.k) + 1; i < v.size(); ++i)
        out.push_back(v[i]);

    AbacusFunction result(std::move(out));
    if (!all_parts_odd(result))
        throw std::logic_error("delete_rows_h: image does not have all parts odd");
    return result;
}

AbacusFunction phi_insert_one(const AbacusFunction& f) {
    const auto& v = f.values();
    const int m = *std::max_element(v.begin(), v.end());
    if (m == 0) {
        // Empty partition maps to the empty partition on one more row.
        return AbacusFunction(std::vector<int>(v.size() + 1, 0));
    }
    if (!all_parts_odd(f))
        throw std::invalid_argument("phi_insert_one: input must have all parts odd");
    const auto gaps = f.gap_lengths();
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        if (gaps[i] == 0)
            throw std::invalid_argument("phi_insert_one: input must have distinct parts");
    // Distinct parts force a single-column abacus.
    if (m > 1) throw std::logic_error("phi_insert_one: distinct-part abacus reaches column 2");

    int end = static_cast<int>(v.size()) - 1;
    while (v[static_cast<std::size_t>(end)] != 1) --end;
    std::vector<int> out;
    out.reserve(v.size() + 1);
    for (int i = 0; i <= end; ++i) out.push_back(v[static_cast<std::size_t>(i)]);
    out.push_back(1);
    for (std::size_t i = static_cast<std::size_t>(end) + 1; i < v.size(); ++i) out.push_back(v[i]);

    AbacusFunction result(std::move(out));
    if (!all_parts_even(result))
        throw std::logic_error("phi_insert_one: image does not have all parts even");
    return result;
}

OddEvenCounts classify_brute(int n) {
    OddEvenCounts counts{0, 0, 0, 0};
    if (n == 0) {
        // Only the empty partition, which is single-column and in both classes.
        counts.se = counts.so = 1;
        return counts;
    }
    long long se = 0, so = 0, ce = 0, co = 0;
    std::vector<long long> gaps;
    for_each_abacus(n, [&](const std::vector<int>& f) {
        const bool single = *std::max_element(f.begin(), f.end()) <= 1;
        values_gaps(f, gaps);
        bool even = true, odd = true;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            const bool is_even = gaps[i] % 2 == 0;
            const bool last = i + 1 == gaps.size();
            even = even && is_even;
            odd = odd && (last ? !is_even : is_even);
        }
        if (even) (single ? se : ce) += 1;
        if (odd) (single ? so : co) += 1;
    });
    counts.se = se;
    counts.so = so;
    counts.ce = ce;
    counts.co = co;
    return counts;
}

std::vector<OddEvenRow> oddeven_table(int n_max, int work_limit) {
    if (n_max < 0) throw std::invalid_argument("oddeven_table: n_max must be >= 0");
    if (n_max > work_limit)
        throw ResourceLimitError("oddeven_table: n_max " + std::to_string(n_max) +
                                 " exceeds the work limit " + std::to_string(work_limit));
    std::vector<OddEvenCounts> classes;
    for (int n = 0; n <= n_max; ++n) classes.push_back(classify_brute(n));

    std::vector<OddEvenRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        OddEvenRow row;
        row.n = n;
        row.e = count_even(n);
        row.o = count_odd(n);
        row.se = classes[static_cast<std::size_t>(n)].se;
        row.so = classes[static_cast<std::size_t>(n)].so;
        row.ce = classes[static_cast<std::size_t>(n)].ce;
        row.co = classes[static_cast<std::size_t>(n)].co;

        const bigint o_brute = row.so + row.co;
        const bigint o_brute_back =
            n >= 2 ? classes[static_cast<std::size_t>(n - 2)].so +
                         classes[static_cast<std::size_t>(n - 2)].co
                   : bigint(0);
        // The identity needs n >= 1: at n = 0 the O(n-2) = 0 convention would
        // claim E(2) = 2.
        if (n >= 1) row.eo_ok = (2 * o_brute - o_brute_back == count_even(n + 2));
        if (n >= 3)
            row.se_fib_ok = (row.se == classes[static_cast<std::size_t>(n - 1)].se +
                                           classes[static_cast<std::size_t>(n - 2)].se);
        if (n >= 1)
            row.so_se_ok = (classes[static_cast<std::size_t>(n - 1)].so == row.se);
        if (n + 2 <= n_max) {
            const bigint co_back = n >= 2 ? classes[static_cast<std::size_t>(n - 2)].co : bigint(0);
            row.co_ce_ok = (2 * row.co - co_back == classes[static_cast<std::size_t>(n + 2)].ce);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ncores
