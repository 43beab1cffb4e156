#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ncores {

/// Thrown when an enumeration would exceed its configured work budget.
/// Signals resource exhaustion, never a mathematical failure.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// An integer partition: a nonincreasing sequence of positive parts.
/// The empty sequence is the empty partition. Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and nonincreasing.
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// |lambda| — the sum of the parts.
    long long size() const;
    /// Number of parts.
    long long length() const { return static_cast<long long>(parts_.size()); }
    /// First part, or 0 for the empty partition.
    long long largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// Last part, or 0 for the empty partition.
    long long smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Transpose of the diagram; an involution.
    Partition conjugate() const;

    /// Multiset of hook lengths over all cells, sorted descending.
    /// Conjugation-invariant, so the internal drawing convention is unobservable.
    std::vector<long long> hook_multiset() const;

    /// True iff no cell has hook length a. Requires a >= 1.
    bool is_core(long long a) const;

    bool operator==(const Partition&) const = default;

    /// Orders by size, then lexicographically on the part lists.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<long long> parts_;
};

/// All (a,b)-cores of size <= size_bound, in size-lexicographic order.
/// When gcd(a,b) = 1 and size_bound >= (a^2-1)(b^2-1)/24 — the classical
/// maximal-core-size bound, a standard fact not re-derived here — the result
/// is the complete finite set of (a,b)-cores.
///
/// Throws ResourceLimitError when the number of candidate partitions exceeds
/// work_limit.
std::vector<Partition> enumerate_ab_cores(long long a, long long b, long long size_bound,
                                          long long work_limit = 2'000'000);

/// JSON form: array of parts, e.g. [3,2,2,1]; [] is the empty partition.
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace ncores
