#include "ncores/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncores {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Q: return "Q";
        case Variant::P: return "P";
        case Variant::Odd: return "ODD";
    }
    throw std::logic_error("unreachable variant");
}

Variant variant_from_string(const std::string& s) {
    if (s == "Q" || s == "q") return Variant::Q;
    if (s == "P" || s == "p") return Variant::P;
    if (s == "ODD" || s == "odd") return Variant::Odd;
    throw std::invalid_argument("unknown variant '" + s + "' (expected q, p, or odd)");
}

AbacusFunction::AbacusFunction(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("abacus: needs at least one row");
    if (values_[0] != 0) throw std::invalid_argument("abacus: condition f(0)=0 fails at index 0");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] < 0)
            throw std::invalid_argument("abacus: negative value at index " + std::to_string(k));
        if (k + 1 < values_.size() && values_[k + 1] > values_[k] + 1)
            throw std::invalid_argument("abacus: condition f(k+1)<=f(k)+1 fails at index " +
                                        std::to_string(k + 1) + " (" +
                                        std::to_string(values_[k + 1]) + " > " +
                                        std::to_string(values_[k]) + "+1)");
    }
}

AbacusFunction AbacusFunction::validate(int n, std::vector<int> values) {
    if (n < 1) throw std::invalid_argument("abacus: n must be >= 1");
    if (static_cast<std::size_t>(n) != values.size())
        throw std::invalid_argument("abacus: expected " + std::to_string(n) + " values, got " +
                                    std::to_string(values.size()));
    return AbacusFunction(std::move(values));
}

namespace {

long long total_whites(const std::vector<int>& f) {
    return std::accumulate(f.begin(), f.end(), 0LL);
}

// Walks beads in position order (column-major), calling on_bead(is_black)
// until all white beads have been passed and one further black has been seen.
// The walk is guaranteed to end: beyond column max(f)-1 everything is black.
template <class OnBead>
void walk_positions(const std::vector<int>& f, OnBead&& on_bead) {
    const long long whites = total_whites(f);
    if (whites == 0) return;
    long long seen = 0;
    for (int col = 0;; ++col) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            const bool black = f[j] <= col;
            if (!black) ++seen;
            if (!on_bead(black, seen == whites)) return;
        }
    }
}

}  // namespace

Partition AbacusFunction::decode() const {
    const long long whites = total_whites(values_);
    std::vector<long long> parts;
    long long seen = 0;
    walk_positions(values_, [&](bool black, bool done) {
        if (black) {
            if (whites - seen > 0) parts.push_back(whites - seen);
            return !done;
        }
        ++seen;
        return true;
    });
    return Partition(std::move(parts));
}

void values_gaps(const std::vector<int>& values, std::vector<long long>& out) {
    out.clear();
    long long since = 0;
    bool first_black = true;
    walk_positions(values, [&](bool black, bool done) {
        if (!black) {
            ++since;
            return true;
        }
        if (first_black) {
            first_black = false;
            return true;
        }
        out.push_back(since);
        since = 0;
        return !done;
    });
}

std::vector<long long> AbacusFunction::gap_lengths() const {
    std::vector<long long> gaps;
    values_gaps(values_, gaps);
    return gaps;
}

bool values_satisfy(const std::vector<int>& values, const std::vector<char>& in_m,
                    Variant variant) {
    long long since = 0;
    bool first_black = true;
    bool ok = true;
    walk_positions(values, [&](bool black, bool done) {
        if (!black) {
            ++since;
            return true;
        }
        if (first_black) {
            first_black = false;
            return true;
        }
        const long long gap = since;
        since = 0;
        switch (variant) {
            case Variant::Q:
                ok = in_m[static_cast<std::size_t>(gap)];
                break;
            case Variant::P:
                ok = done || in_m[static_cast<std::size_t>(gap)];
                break;
            case Variant::Odd:
                ok = done ? (gap % 2 == 1) : (gap % 2 == 0);
                break;
        }
        return ok && !done;
    });
    return ok;
}

bool AbacusFunction::satisfies(const DiffSet& m, Variant variant) const {
    const std::vector<char> table = m.membership_table(total_whites(values_));
    return values_satisfy(values_, table, variant);
}

AbacusStats values_statistics(const std::vector<int>& values) {
    AbacusStats stats;
    stats.largest = total_whites(values);
    long long blacks = 0;
    walk_positions(values, [&](bool black, bool done) {
        if (black) {
            ++blacks;
            return true;
        }
        stats.size += blacks;
        stats.length = blacks;
        return !done;
    });
    return stats;
}

AbacusStats AbacusFunction::statistics() const {
    return values_statistics(values_);
}

AbacusFunction encode(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("encode: n must be >= 1");
    if (!lambda.is_core(n) || !lambda.is_core(n + 1))
        throw std::domain_error("encode: partition is not an (" + std::to_string(n) + "," +
                                std::to_string(n + 1) + ")-core");

    // Boundary word: E, then g_k south steps, for each gap; trailing E's implied.
    const auto& parts = lambda.parts();
    std::vector<char> word;  // word[i] nonzero = E (black) at position i+1
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const long long gap = (k + 1 < parts.size()) ? parts[k] - parts[k + 1] : parts[k];
        word.push_back(1);
        for (long long s = 0; s < gap; ++s) word.push_back(0);
    }

    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        int col = 0;
        while (true) {
            const std::size_t pos = static_cast<std::size_t>(col) * static_cast<std::size_t>(n) +
                                    static_cast<std::size_t>(j);  // position col*n + j + 1
            if (pos >= word.size() || word[pos]) break;
            ++col;
        }
        f[static_cast<std::size_t>(j)] = col;
    }
    return AbacusFunction(std::move(f));
}

void to_json(nlohmann::json& j, const AbacusFunction& f) {
    j = nlohmann::json{{"n", f.n()}, {"f", f.values()}};
}

void from_json(const nlohmann::json& j, AbacusFunction& f) {
    f = AbacusFunction::validate(j.at("n").get<int>(), j.at("f").get<std::vector<int>>());
}

}  // namespace ncores
