#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncores/series.hpp"

namespace ncores {

/// A parse failure in the set mini-language; carries the byte offset of the
/// offending token within the spec text.
class SpecParseError : public std::invalid_argument {
public:
    SpecParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A subset M of the nonnegative integers, stored as a finite set plus a
/// finite union of arithmetic progressions {start + t*step : t >= 0}.
///
/// This shape covers every restriction family the counting layer needs
/// (all, positive, multiples, shifted naturals, initial segments) while
/// keeping membership queries O(|finite| + |progressions|). Canonical form
/// drops finite elements already covered by a progression; unions are
/// otherwise left as written.
class DiffSet {
public:
    /// The empty set. Mostly useful as a from_json target.
    DiffSet() = default;

    /// Parses the mini-language:
    ///   all | positive | mult:d | mult+:d | atleast:r | upto:r
    ///       | finite:a,b,... | ap:a:d | clause|clause|...
    /// with d >= 1 and r >= 0. Throws SpecParseError on bad syntax and on
    /// semantic violations such as a zero step.
    static DiffSet parse(const std::string& spec);

    static DiffSet naturals() { return parse("all"); }
    static DiffSet positives() { return parse("positive"); }
    static DiffSet multiples(long long d);
    static DiffSet positive_multiples(long long d);
    static DiffSet at_least(long long r);
    static DiffSet up_to(long long r);

    /// True iff k >= 0 and k is in the set. Negative k is allowed and false.
    bool contains(long long k) const;

    bool contains_zero() const { return contains(0); }

    /// Indicator series chi_M truncated to the given order: coefficient k is
    /// 1 iff k is in M.
    PowerSeries indicator_series(std::size_t order) const;

    /// Membership table for 0..n inclusive.
    std::vector<char> membership_table(long long n) const;

    /// The elements of M in [0, n], ascending.
    std::vector<long long> elements_upto(long long n) const;

    /// The spec text this set was parsed from (or a canonical rendering for
    /// sets built programmatically).
    const std::string& spec_text() const { return spec_text_; }

    /// Canonical textual form using only finite:/ap: clauses; parsing it
    /// yields a set that renders identically.
    std::string render_spec() const;

    const std::set<long long>& finite() const { return finite_; }
    const std::vector<std::pair<long long, long long>>& progressions() const {
        return progressions_;
    }

private:
    static DiffSet build(std::set<long long> finite,
                         std::vector<std::pair<long long, long long>> progressions,
                         std::string spec_text);

    std::set<long long> finite_;
    std::vector<std::pair<long long, long long>> progressions_;  // (start, step), step >= 1
    std::string spec_text_;
};

/// JSON form: {"finite":[...],"progressions":[[start,step],...]}.
void to_json(nlohmann::json& j, const DiffSet& m);
void from_json(const nlohmann::json& j, DiffSet& m);

}  // namespace ncores
