#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncores/abacus.hpp"
#include "ncores/bigint.hpp"
#include "ncores/diffset.hpp"
#include "ncores/series.hpp"

namespace ncores {

enum class Method { Recurrence, Series, Brute, Closed };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Exhaustive abacus enumeration is capped at this modulus by default
/// (Catalan(14) ~ 2.7M abaci per level); all brute entry points take an
/// override.
inline constexpr int kDefaultWorkLimit = 14;

/// A sequence of counts (or statistic totals) with provenance.
struct CountReport {
    std::string m_spec;
    Variant variant = Variant::Q;
    Method method = Method::Recurrence;
    long long n_lo = 0;
    long long n_hi = 0;
    std::vector<bigint> values;          // counts, indexed n_lo..n_hi
    std::vector<bigint> tl, tp, ts;      // totals, for totals reports only

    bool operator==(const CountReport&) const = default;
};

void to_json(nlohmann::json& j, const CountReport& r);
void from_json(const nlohmann::json& j, CountReport& r);

/// Counts of (n,n+1)-cores whose gap sequence lies in M, for n = 0..n_max,
/// via the recurrence: C(0) = 1 and
///   0 in M:      C(n+1) = sum_{k in M, k <= n} C(k) C(n-k)
///   0 not in M:  C(n+1) = 1 + sum_{k in M, k <= n} C(n-k)
CountReport count_recurrence(const DiffSet& m, long long n_max);

/// Same counts via generating functions. With 0 outside M this is the
/// coefficient list of 1/((1-q)(1-q chi_M)); with 0 in M it solves the fixed
/// point C = 1 + q (C hadamard chi_M) C degree by degree.
CountReport count_series(const DiffSet& m, long long n_max);

/// Same counts by exhaustive abacus generation and gap filtering; the
/// ground-truth oracle. Supports all three variants.
CountReport count_brute(const DiffSet& m, long long n_max, Variant variant,
                        int work_limit = kDefaultWorkLimit);

/// Fuss-Catalan/Raney closed form for cores with all parts divisible by d:
/// with n = qd + r (0 <= r < d), the count is (r+1)/(n+1) * binomial(n+q, q).
/// Divisibility is asserted; failure would be an implementation bug.
bigint closed_form_raney(long long d, long long n);

/// Catalan number, as the d = 1 Raney value.
bigint catalan(long long n);

/// binomial(a+b, a)/(a+b) — the count of (a,b)-cores for coprime a, b.
/// Throws std::domain_error when gcd(a,b) != 1 (the set is infinite).
bigint anderson_count(long long a, long long b);

/// Totals of largest part (TL), length (TP), and size (TS) over all counted
/// cores per n, from the closed forms
///   TL = q^2 chi' / ((1-q)(1-q chi)^2)
///   TP = q chi   / ((1-q)(1-q chi)^2)
///   TS = q^2 chi' / ((1-q)(1-q chi)^3)
/// Requires 0 outside M.
CountReport totals_formulas(const DiffSet& m, long long n_max);

/// The same totals by exhaustive enumeration and summation of statistics.
CountReport totals_brute(const DiffSet& m, long long n_max, Variant variant,
                         int work_limit = kDefaultWorkLimit);

/// Partition-level (not core) generating function: sum of q^|lambda| over all
/// partitions whose gap sequence satisfies the variant against M. Uses the
/// bijection of a partition with its gap sequence (g_1..g_l), |lambda| =
/// sum j*g_j.
PowerSeries partition_gf(const DiffSet& m, std::size_t order, Variant variant);

}  // namespace ncores
