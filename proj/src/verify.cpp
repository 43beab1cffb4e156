#include "ncores/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ncores/oddeven.hpp"

namespace ncores::verify {

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

const std::vector<std::string>& spec_battery() {
    static const std::vector<std::string> battery = {
        // 0 in M
        "all", "mult:2", "mult:3", "upto:1", "upto:2", "finite:0,2,3",
        // 0 not in M
        "positive", "mult+:2", "mult+:3", "atleast:2", "atleast:3", "finite:1,4|ap:7:5"};
    return battery;
}

namespace {

std::string join_counts(const std::vector<bigint>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ",";
        out += v.str();
    }
    return out;
}

CheckResult compare_reports(const std::string& name, const CountReport& a, const CountReport& b) {
    if (a.values == b.values) return {name, true, ""};
    return {name, false,
            to_string(a.method) + " gives " + join_counts(a.values) + " but " +
                to_string(b.method) + " gives " + join_counts(b.values)};
}

// All valid abaci of modulus n accepted by pred, as a set of value vectors.
template <class Pred>
std::set<std::vector<int>> collect_abaci(int n, Pred&& pred) {
    std::set<std::vector<int>> out;
    for_each_abacus(n, [&](const std::vector<int>& f) {
        if (pred(f)) out.insert(f);
    });
    return out;
}

bool gaps_even_except_last_odd(const std::vector<long long>& gaps, bool last_odd) {
    if (gaps.empty()) return true;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        if (gaps[i] % 2 != 0) return false;
    return gaps.back() % 2 == (last_odd ? 1 : 0);
}

bool gaps_distinct(const std::vector<long long>& gaps) {
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        if (gaps[i] == 0) return false;
    return true;
}

struct Classes {
    std::set<std::vector<int>> co, ce;       // multi-column, odd / even parts
    std::set<std::vector<int>> do_, de;      // distinct parts, odd / even
    long long so = 0, se = 0;                // single-column counts
};

Classes classify_sets(int n) {
    Classes c;
    if (n == 0) {
        c.so = c.se = 1;
        return c;
    }
    std::vector<long long> gaps;
    for_each_abacus(n, [&](const std::vector<int>& f) {
        values_gaps(f, gaps);
        const bool single = *std::max_element(f.begin(), f.end()) <= 1;
        const bool odd = gaps_even_except_last_odd(gaps, true);
        const bool even = gaps_even_except_last_odd(gaps, false);
        if (odd) {
            if (single)
                ++c.so;
            else
                c.co.insert(f);
            if (gaps_distinct(gaps)) c.do_.insert(f);
        }
        if (even) {
            if (single)
                ++c.se;
            else
                c.ce.insert(f);
            if (gaps_distinct(gaps)) c.de.insert(f);
        }
    });
    return c;
}

}  // namespace

std::vector<CheckResult> oracle_vs_recurrence(int n_max, int work_limit) {
    std::vector<CheckResult> results;
    for (const auto& spec : spec_battery()) {
        const DiffSet m = DiffSet::parse(spec);
        results.push_back(compare_reports("oracle-vs-recurrence " + spec + " n<=" +
                                              std::to_string(n_max),
                                          count_recurrence(m, n_max),
                                          count_brute(m, n_max, Variant::Q, work_limit)));
    }
    return results;
}

std::vector<CheckResult> gf_vs_recurrence(long long order) {
    std::vector<CheckResult> results;
    for (const auto& spec : spec_battery()) {
        const DiffSet m = DiffSet::parse(spec);
        results.push_back(compare_reports("gf-vs-recurrence " + spec + " order " +
                                              std::to_string(order),
                                          count_series(m, order), count_recurrence(m, order)));
    }
    return results;
}

std::vector<CheckResult> oddeven_identities(int n_max, int work_limit) {
    if (n_max > work_limit)
        throw ResourceLimitError("oddeven_identities: n_max exceeds the work limit");
    std::vector<CheckResult> results;
    std::vector<OddEvenCounts> cls;
    for (int n = 0; n <= n_max; ++n) cls.push_back(classify_brute(n));
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, ok ? "" : detail});
    };

    for (int n = 0; n <= n_max; ++n) {
        const auto& c = cls[static_cast<std::size_t>(n)];
        const bigint e_brute = c.se + c.ce;
        const bigint o_brute = c.so + c.co;
        check("E brute = Raney closed form, n=" + std::to_string(n),
              e_brute == count_even(n),
              e_brute.str() + " vs " + count_even(n).str());
        check("O brute = identity route, n=" + std::to_string(n), o_brute == count_odd(n),
              o_brute.str() + " vs " + count_odd(n).str());
        if (n >= 2) {
            const auto& back = cls[static_cast<std::size_t>(n - 2)];
            check("2O(n)-O(n-2) = E(n+2), n=" + std::to_string(n),
                  2 * o_brute - (back.so + back.co) == count_even(n + 2), "identity fails");
            if (n + 2 <= n_max) {
                const auto& fwd = cls[static_cast<std::size_t>(n + 2)];
                check("2CO(n)-CO(n-2) = CE(n+2), n=" + std::to_string(n),
                      2 * c.co - back.co == fwd.ce, "identity fails");
                check("2SO(n)-SO(n-2) = SE(n+2), n=" + std::to_string(n),
                      2 * c.so - back.so == fwd.se, "identity fails");
            }
        }
        if (n >= 3)
            check("SE(n) = SE(n-1)+SE(n-2), n=" + std::to_string(n),
                  c.se == cls[static_cast<std::size_t>(n - 1)].se +
                              cls[static_cast<std::size_t>(n - 2)].se,
                  "identity fails");
        if (n >= 1)
            check("SO(n-1) = SE(n), n=" + std::to_string(n),
                  cls[static_cast<std::size_t>(n - 1)].so == c.se, "identity fails");
    }
    check("SE(0)=SE(1)=SE(2)=1", cls.size() < 3 || (cls[0].se == 1 && cls[1].se == 1 &&
                                                    cls[2].se == 1),
          "initial values wrong");
    return results;
}

std::vector<CheckResult> bijections(int n_max, int work_limit) {
    if (n_max > work_limit)
        throw ResourceLimitError("bijections: n_max exceeds the work limit");
    std::vector<CheckResult> results;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, ok ? "" : detail});
    };

    std::vector<Classes> cls;
    for (int n = 0; n <= n_max + 2; ++n) cls.push_back(classify_sets(n));

    // phi: distinct odd parts at n <-> distinct even parts at n+1.
    for (int n = 1; n <= n_max + 1; ++n) {
        const auto& dos = cls[static_cast<std::size_t>(n)].do_;
        const auto& des = cls[static_cast<std::size_t>(n + 1)].de;
        std::set<std::vector<int>> images;
        bool valid = true;
        for (const auto& f : dos) {
            const AbacusFunction img = phi_insert_one(AbacusFunction(f));
            valid = valid && des.count(img.values()) > 0;
            images.insert(img.values());
        }
        check("phi maps DO(" + std::to_string(n) + ") onto DE(" + std::to_string(n + 1) + ")",
              valid && images.size() == dos.size() && images == des,
              "|DO|=" + std::to_string(dos.size()) + " |DE|=" + std::to_string(des.size()) +
                  " |image|=" + std::to_string(images.size()));
    }

    for (int n = 1; n <= n_max; ++n) {
        const auto& co_n = cls[static_cast<std::size_t>(n)].co;
        const auto& ce_n2 = cls[static_cast<std::size_t>(n + 2)].ce;

        std::set<std::vector<int>> before_images, after_images;
        std::map<std::vector<int>, int> hits;
        bool images_in_ce = true;
        for (const auto& f : co_n) {
            const AbacusFunction src(f);
            const auto b = insert_two_rows(src, InsertSide::Before).values();
            const auto a = insert_two_rows(src, InsertSide::After).values();
            images_in_ce = images_in_ce && ce_n2.count(b) > 0 && ce_n2.count(a) > 0;
            before_images.insert(b);
            after_images.insert(a);
            ++hits[b];
            ++hits[a];
        }
        check("g_b, g_a injective into CE, n=" + std::to_string(n),
              images_in_ce && before_images.size() == co_n.size() &&
                  after_images.size() == co_n.size(),
              "image sizes " + std::to_string(before_images.size()) + "," +
                  std::to_string(after_images.size()) + " vs |CO|=" + std::to_string(co_n.size()));

        // Hit multiplicity = number of extra black beads adjacent to the run.
        bool multiplicity_ok = true;
        std::set<std::vector<int>> doubly_hit, unhit;
        for (const auto& y : ce_n2) {
            const RunLocus locus = locate_last_run(AbacusFunction(y));
            const int expected = (locus.extra_before ? 1 : 0) + (locus.extra_after ? 1 : 0);
            const auto it = hits.find(y);
            const int got = it == hits.end() ? 0 : it->second;
            multiplicity_ok = multiplicity_ok && got == expected;
            if (expected == 2) doubly_hit.insert(y);
            if (expected == 0) unhit.insert(y);
        }
        check("hit multiplicity = extra_before + extra_after, n=" + std::to_string(n),
              multiplicity_ok && hits.size() + unhit.size() == ce_n2.size(), "mismatch");

        // Doubly-hit elements: removing both extra rows lands bijectively in CE(n).
        std::set<std::vector<int>> reduced;
        bool reduction_ok = true;
        for (const auto& y : doubly_hit) {
            const RunLocus locus = locate_last_run(AbacusFunction(y));
            std::vector<int> r;
            const int drop_lo = locus.ell - 1;                 // extra black before
            const int drop_hi = locus.ell + locus.k + 1;       // extra black after
            for (int i = 0; i < static_cast<int>(y.size()); ++i)
                if (i != drop_lo && i != drop_hi) r.push_back(y[static_cast<std::size_t>(i)]);
            reduction_ok = reduction_ok && cls[static_cast<std::size_t>(n)].ce.count(r) > 0;
            reduced.insert(std::move(r));
        }
        check("doubly-hit set reduces onto CE(n), n=" + std::to_string(n),
              reduction_ok && reduced.size() == doubly_hit.size() &&
                  doubly_hit.size() == cls[static_cast<std::size_t>(n)].ce.size(),
              "|doubly-hit|=" + std::to_string(doubly_hit.size()) +
                  " |CE(n)|=" + std::to_string(cls[static_cast<std::size_t>(n)].ce.size()));

        // Unhit elements: h lands in CO(n-2c) with no extra_after, exactly once
        // each, and the extra_after complement flips onto CE of the same level.
        std::map<int, std::set<std::vector<int>>> h_images;
        bool h_ok = true;
        for (const auto& y : unhit) {
            const AbacusFunction h = delete_rows_h(AbacusFunction(y));
            h_ok = h_ok && !locate_last_run(h).extra_after;
            h_ok = h_ok && h_images[h.n()].insert(h.values()).second;  // injective
        }
        bool h_targets_ok = true;
        std::string h_detail;
        std::size_t matched_total = 0;
        for (int j = n - 2; j >= 1; j -= 2) {
            std::set<std::vector<int>> expected;
            for (const auto& x : cls[static_cast<std::size_t>(j)].co)
                if (!locate_last_run(AbacusFunction(x)).extra_after) expected.insert(x);
            const auto it = h_images.find(j);
            const std::set<std::vector<int>> empty;
            const auto& got = it == h_images.end() ? empty : it->second;
            matched_total += got.size();
            if (got != expected) {
                h_targets_ok = false;
                h_detail = "level " + std::to_string(j) + ": " + std::to_string(got.size()) +
                           " images vs " + std::to_string(expected.size()) + " expected";
            }
        }
        // No image may land at a level the expected family does not cover.
        h_targets_ok = h_targets_ok && matched_total == unhit.size();
        check("h maps unhit CE(n+2) onto extra-after-free CO levels, n=" + std::to_string(n),
              h_ok && h_targets_ok, h_detail.empty() ? "invalid h image" : h_detail);

        // Flip map: CO(j) with extra_after <-> CE(j), per level.
        bool flip_ok = true;
        for (int j = n; j >= 1; j -= 2) {
            std::set<std::vector<int>> flipped;
            for (const auto& x : cls[static_cast<std::size_t>(j)].co) {
                const RunLocus locus = locate_last_run(AbacusFunction(x));
                if (!locus.extra_after) continue;
                std::vector<int> y = x;
                y[static_cast<std::size_t>(locus.ell + locus.k + 1)] = locus.m;
                flipped.insert(std::move(y));
            }
            std::size_t count_with_after = 0;
            for (const auto& x : cls[static_cast<std::size_t>(j)].co)
                if (locate_last_run(AbacusFunction(x)).extra_after) ++count_with_after;
            flip_ok = flip_ok && flipped.size() == count_with_after &&
                      flipped == cls[static_cast<std::size_t>(j)].ce;
        }
        check("extra-after CO flips onto CE at each level, n=" + std::to_string(n), flip_ok,
              "flip map mismatch");
    }
    return results;
}

}  // namespace ncores::verify
