#include "ncores/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ncores {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: part at index " + std::to_string(i) +
                                        " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts increase at index " + std::to_string(i));
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
    std::vector<long long> cols;
    // Column j of the diagram has height = number of parts > j.
    for (long long j = 0; j < largest(); ++j) {
        long long height = 0;
        for (long long p : parts_)
            if (p > j) ++height;
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

std::vector<long long> Partition::hook_multiset() const {
    // Row convention: hook(i,j) = lambda_i - j + lambda'_j - i + 1 (1-based).
    const Partition conj = conjugate();
    const auto& cp = conj.parts();
    std::vector<long long> hooks;
    hooks.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 1; i <= parts_.size(); ++i)
        for (long long j = 1; j <= parts_[i - 1]; ++j)
            hooks.push_back(parts_[i - 1] - j + cp[static_cast<std::size_t>(j - 1)] -
                            static_cast<long long>(i) + 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

bool Partition::is_core(long long a) const {
    if (a < 1) throw std::invalid_argument("is_core: a must be >= 1");
    for (long long h : hook_multiset())
        if (h == a) return false;
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return parts_ <=> other.parts_;
}

namespace {

// Partitions of exactly n with parts <= max_part, lexicographically descending
// first part. Invokes fn on a reused buffer.
void each_partition_of(long long n, long long max_part, std::vector<long long>& prefix,
                       const std::function<void(const std::vector<long long>&)>& fn) {
    if (n == 0) {
        fn(prefix);
        return;
    }
    for (long long p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        each_partition_of(n - p, p, prefix, fn);
        prefix.pop_back();
    }
}

long long count_partitions_upto(long long bound) {
    // p(0) + p(1) + ... + p(bound) via the standard two-variable recurrence.
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(bound) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(bound) + 1, 0));
    for (long long k = 0; k <= bound; ++k) table[0][static_cast<std::size_t>(k)] = 1;
    for (long long n = 1; n <= bound; ++n)
        for (long long k = 1; k <= bound; ++k) {
            long long v = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
            if (n >= k) v += table[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(k)];
            table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = v;
        }
    long long total = 0;
    for (long long n = 0; n <= bound; ++n) total += table[static_cast<std::size_t>(n)][static_cast<std::size_t>(bound)];
    return total;
}

}  // namespace

std::vector<Partition> enumerate_ab_cores(long long a, long long b, long long size_bound,
                                          long long work_limit) {
    if (a < 1 || b < 1) throw std::invalid_argument("enumerate_ab_cores: a, b must be >= 1");
    if (size_bound < 0) throw std::invalid_argument("enumerate_ab_cores: size_bound must be >= 0");
    // Beyond 300 the candidate count (~9e15) exceeds any practical budget, and
    // the predictor table itself would overflow.
    if (size_bound > 300)
        throw ResourceLimitError("enumerate_ab_cores: size_bound " + std::to_string(size_bound) +
                                 " exceeds the hard enumeration ceiling of 300");
    if (count_partitions_upto(size_bound) > work_limit)
        throw ResourceLimitError("enumerate_ab_cores: more than " + std::to_string(work_limit) +
                                 " candidate partitions up to size " + std::to_string(size_bound));

    std::vector<Partition> cores;
    std::vector<long long> prefix;
    for (long long n = 0; n <= size_bound; ++n) {
        std::vector<Partition> of_size;
        each_partition_of(n, n, prefix, [&](const std::vector<long long>& parts) {
            Partition lambda(parts);
            if (lambda.is_core(a) && lambda.is_core(b)) of_size.push_back(std::move(lambda));
        });
        std::sort(of_size.begin(), of_size.end());
        cores.insert(cores.end(), of_size.begin(), of_size.end());
    }
    return cores;
}

void to_json(nlohmann::json& j, const Partition& p) {
    j = p.parts();
}

void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<long long>>());
}

}  // namespace ncores
