#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncores/diffset.hpp"
#include "ncores/partition.hpp"

namespace ncores {

/// Which gaps of the gap sequence are constrained:
///   Q    — every gap, including the final one (the smallest part), lies in M;
///   P    — every gap except the final one lies in M;
///   Odd  — all parts odd: non-final gaps even, final gap odd (M fixed to 2N).
enum class Variant { Q, P, Odd };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// The three partition statistics read off an abacus.
struct AbacusStats {
    long long largest = 0;  // total white beads
    long long length = 0;   // black beads preceding at least one white bead
    long long size = 0;     // inversions: (black, white) pairs in position order

    bool operator==(const AbacusStats&) const = default;
};

/// The first-column description of an (n,n+1)-core on the n-abacus.
///
/// Beads live at positions i = k*n + r with rows r = 1..n and columns
/// k = 0,1,2,...; position order is column-major. The bead at row r, column k
/// is black iff k >= f(r-1). Validity means f(0) = 0 and f(k+1) <= f(k) + 1;
/// row 1 is therefore all black and no white run ever spans two columns.
class AbacusFunction {
public:
    /// The 1-abacus of the empty partition.
    AbacusFunction() : values_{0} {}

    /// Validates and wraps; throws std::invalid_argument naming the first
    /// failing index.
    explicit AbacusFunction(std::vector<int> values);

    /// Checks values has length n, then validates as above.
    static AbacusFunction validate(int n, std::vector<int> values);

    int n() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }

    /// The partition this abacus encodes: each black bead with w > 0 white
    /// beads after it contributes a part of size w.
    Partition decode() const;

    /// Gap sequence (g_1..g_l): white beads strictly between consecutive black
    /// beads, for the l black beads preceding at least one white. Satisfies
    /// g_k = lambda_k - lambda_{k+1} for k < l and g_l = smallest part; zeros
    /// encode repeated parts.
    std::vector<long long> gap_lengths() const;

    /// Tests the gap sequence against M under the given variant. Zero gaps
    /// are tested like any other gap: a literal runs-of-white-beads reading
    /// would wrongly admit repeated parts whenever 0 is outside M, so the
    /// test is the partition-faithful one.
    bool satisfies(const DiffSet& m, Variant variant) const;

    /// (largest part, length, size); agrees with decode() exactly.
    AbacusStats statistics() const;

    bool operator==(const AbacusFunction&) const = default;
    bool operator<(const AbacusFunction& other) const { return values_ < other.values_; }

private:
    std::vector<int> values_;
};

/// Inverse of decode. Throws std::domain_error unless lambda passes the hook
/// predicate for both n and n+1.
AbacusFunction encode(const Partition& lambda, int n);

/// JSON form: {"n":8,"f":[0,1,2,0,0,0,1,1]}.
void to_json(nlohmann::json& j, const AbacusFunction& f);
void from_json(const nlohmann::json& j, AbacusFunction& f);

// Low-level variants used by exhaustive enumeration; `values` is assumed to
// already satisfy the abacus conditions.

/// Gap test against a membership table (table[g] nonzero iff g in M). The
/// table must cover every possible gap, i.e. sum of values.
bool values_satisfy(const std::vector<int>& values, const std::vector<char>& in_m,
                    Variant variant);
AbacusStats values_statistics(const std::vector<int>& values);
void values_gaps(const std::vector<int>& values, std::vector<long long>& out);

/// Invokes fn(f) for every valid abacus of modulus n >= 1, in lexicographic
/// order of the value vector. The buffer is reused between calls. There are
/// Catalan(n) of them.
template <class F>
void for_each_abacus(int n, F&& fn) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            fn(static_cast<const std::vector<int>&>(f));
            return;
        }
        for (int v = 0; v <= f[static_cast<std::size_t>(j) - 1] + 1; ++v) {
            f[static_cast<std::size_t>(j)] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 1);
}

}  // namespace ncores
