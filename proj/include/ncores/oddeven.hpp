#pragma once

#include <optional>
#include <vector>

#include "ncores/abacus.hpp"
#include "ncores/bigint.hpp"
#include "ncores/counting.hpp"

namespace ncores {

/// Location of the last (highest-position) maximal run of white beads:
/// f(ell) = m-1, f(ell+1..ell+k) = m, and no later index reaches m.
/// The flags record an "extra" black bead in the run's column immediately
/// before (f(ell-1) = m-1) or after (f(ell+k+1) = m-1) the run.
struct RunLocus {
    int m = 0;    // value of f on the run; the run itself sits in column m-1
    int ell = 0;  // index just below the run
    int k = 0;    // run length
    bool extra_before = false;
    bool extra_after = false;

    bool operator==(const RunLocus&) const = default;
};

enum class InsertSide { Before, After };

/// E(n): (n,n+1)-cores with all parts even, via the d = 2 Raney closed form.
bigint count_even(long long n);

/// O(n): (n,n+1)-cores with all parts odd, via the identity route
/// O(n) = (E(n+2) + O(n-2)) / 2 with O(0) = O(1) = 1 and O(n<0) = 0.
/// Divisibility by 2 is asserted; failure would falsify the identity as
/// implemented.
bigint count_odd(long long n);

/// True iff every white bead is in column 0, i.e. max f <= 1.
bool is_single_column(const AbacusFunction& f);

/// All gaps even except the last, which is odd (empty partition accepted).
bool all_parts_odd(const AbacusFunction& f);
/// All gaps even, including the last.
bool all_parts_even(const AbacusFunction& f);

/// Throws std::domain_error on the empty partition.
RunLocus locate_last_run(const AbacusFunction& f);

/// The two-row insertions g_b / g_a mapping an all-odd, multi-column abacus
/// on n rows to an all-even one on n+2 rows: a white bead joins the last run
/// and a black bead lands immediately before (g_b) or after (g_a) it.
/// Preconditions (all parts odd, not single-column) are checked.
AbacusFunction insert_two_rows(const AbacusFunction& f, InsertSide side);

/// The deletion map h: for an all-even, multi-column abacus whose last run
/// (length 2c) has neither extra black bead, removes the run, its bounding
/// black bead, and the final white of the preceding run — 2c+2 rows — landing
/// in the all-odd class. The derived constraint f(ell-1) = m is checked and
/// its failure reported rather than patched over.
AbacusFunction delete_rows_h(const AbacusFunction& f);

/// The bijection between distinct-odd-part cores on n rows and distinct-even
/// ones on n+1 rows: one white bead is added to the last run (empty maps to
/// empty).
AbacusFunction phi_insert_one(const AbacusFunction& f);

/// Counts split by the single-column test: SE/SO have all whites in column 0,
/// CE/CO do not; E = SE + CE and O = SO + CO.
struct OddEvenCounts {
    bigint se, so, ce, co;
};

/// Exhaustive classification at modulus n.
OddEvenCounts classify_brute(int n);

struct OddEvenRow {
    long long n = 0;
    bigint e, o;              // closed form / identity route
    bigint se, so, ce, co;    // brute force
    std::optional<bool> eo_ok;      // 2*(SO+CO+... brute O)(n) - O(n-2) == E(n+2)
    std::optional<bool> se_fib_ok;  // SE(n) == SE(n-1) + SE(n-2), n >= 3
    std::optional<bool> so_se_ok;   // SO(n-1) == SE(n)
    std::optional<bool> co_ce_ok;   // 2 CO(n) - CO(n-2) == CE(n+2)
};

/// The table behind the `oddeven` subcommand; brute columns respect the work
/// limit.
std::vector<OddEvenRow> oddeven_table(int n_max, int work_limit = kDefaultWorkLimit);

}  // namespace ncores
