// Command-line front door for the (n,n+1)-core enumeration library.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncores/counting.hpp"
#include "ncores/oddeven.hpp"
#include "ncores/oeis.hpp"
#include "ncores/render.hpp"
#include "ncores/verify.hpp"

namespace {

using namespace ncores;

/// Bad flag combinations detected after CLI11 parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string set_spec;
    long long n_max = -1;
    long long n = -1;
    std::string variant = "q";
    std::string method;
    std::string format = "text";
    int work_limit = kDefaultWorkLimit;
    std::string suite;
    std::string abacus_arg;
    std::string partition_arg = "\x01";  // sentinel: flag absent ("" is the empty partition)
    std::string prefix_arg;
    std::string snapshot_path = NCORES_DEFAULT_SNAPSHOT;
    std::size_t max_shift = 6;
    bool remote = false;
    int timeout_ms = 5000;
};

std::vector<long long> parse_csv_longs(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

void print_count_report(const CountReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << nlohmann::json(report).dump(2) << "\n";
        return;
    }
    std::cout << "# set=" << report.m_spec << " variant=" << to_string(report.variant)
              << " method=" << to_string(report.method) << "\n";
    if (!report.values.empty()) {
        std::cout << "n\tcount\n";
        for (long long n = report.n_lo; n <= report.n_hi; ++n)
            std::cout << n << "\t" << report.values[static_cast<std::size_t>(n - report.n_lo)]
                      << "\n";
    } else {
        std::cout << "n\tTL\tTP\tTS\n";
        for (long long n = report.n_lo; n <= report.n_hi; ++n) {
            const auto i = static_cast<std::size_t>(n - report.n_lo);
            std::cout << n << "\t" << report.tl[i] << "\t" << report.tp[i] << "\t" << report.ts[i]
                      << "\n";
        }
    }
}

int run_count(const Options& opt) {
    const Variant variant = variant_from_string(opt.variant);
    const std::string method = opt.method.empty() ? "recurrence" : opt.method;

    if (variant == Variant::Odd) {
        if (!opt.set_spec.empty() && opt.set_spec != "mult:2")
            throw UsageError("count: variant odd fixes the set to even gaps; omit --set or pass "
                             "--set mult:2");
        CountReport report;
        report.m_spec = "mult:2";
        report.variant = Variant::Odd;
        report.n_hi = opt.n_max;
        if (method == "recurrence") {
            report.method = Method::Recurrence;
            for (long long n = 0; n <= opt.n_max; ++n) report.values.push_back(count_odd(n));
        } else if (method == "brute") {
            report = count_brute(DiffSet::multiples(2), opt.n_max, Variant::Odd, opt.work_limit);
        } else {
            throw UsageError("count: variant odd supports --method recurrence or brute");
        }
        print_count_report(report, opt.format);
        return 0;
    }

    if (opt.set_spec.empty()) throw UsageError("count: --set is required");
    const DiffSet m = DiffSet::parse(opt.set_spec);

    if (variant == Variant::P) {
        if (!opt.method.empty() && opt.method != "brute")
            throw UsageError("count: variant p supports only --method brute");
        print_count_report(count_brute(m, opt.n_max, Variant::P, opt.work_limit), opt.format);
        return 0;
    }

    CountReport report;
    if (method == "recurrence") {
        report = count_recurrence(m, opt.n_max);
    } else if (method == "series") {
        report = count_series(m, opt.n_max);
    } else if (method == "brute") {
        report = count_brute(m, opt.n_max, Variant::Q, opt.work_limit);
    } else {  // closed
        report.m_spec = m.spec_text();
        report.method = Method::Closed;
        report.n_hi = opt.n_max;
        if (opt.set_spec == "all") {
            for (long long n = 0; n <= opt.n_max; ++n) report.values.push_back(catalan(n));
        } else if (opt.set_spec == "positive") {
            bigint a = 1, b = 1;  // Fibonacci with C(0) = C(1) = 1
            for (long long n = 0; n <= opt.n_max; ++n) {
                report.values.push_back(a);
                const bigint next = a + b;
                a = b;
                b = next;
            }
        } else if (opt.set_spec.rfind("mult:", 0) == 0) {
            const long long d = std::stoll(opt.set_spec.substr(5));
            for (long long n = 0; n <= opt.n_max; ++n)
                report.values.push_back(closed_form_raney(d, n));
        } else {
            throw UsageError("count: --method closed is available for sets all, positive, and "
                             "mult:d only; use recurrence, series, or brute");
        }
    }
    print_count_report(report, opt.format);
    return 0;
}

int run_totals(const Options& opt) {
    const DiffSet m = DiffSet::parse(opt.set_spec);
    const std::string method = opt.method.empty() ? "formulas" : opt.method;
    CountReport report;
    if (method == "formulas") {
        if (opt.variant != "q")
            throw UsageError("totals: --method formulas computes the Q-variant totals");
        report = totals_formulas(m, opt.n_max);
    } else {
        report = totals_brute(m, opt.n_max, variant_from_string(opt.variant), opt.work_limit);
    }
    print_count_report(report, opt.format);
    return 0;
}

int run_list(const Options& opt) {
    if (opt.n > opt.work_limit)
        throw ResourceLimitError("list: n exceeds the work limit " +
                                 std::to_string(opt.work_limit));
    const DiffSet m = DiffSet::parse(opt.set_spec);
    const Variant variant = variant_from_string(opt.variant);

    std::vector<Partition> matches;
    if (opt.n == 0) {
        matches.emplace_back();
    } else {
        const auto in_m = m.membership_table(std::max<long long>(1, opt.n * (opt.n - 1) / 2));
        for_each_abacus(static_cast<int>(opt.n), [&](const std::vector<int>& f) {
            if (values_satisfy(f, in_m, variant)) matches.push_back(AbacusFunction(f).decode());
        });
        std::sort(matches.begin(), matches.end());
    }

    if (opt.format == "json") {
        std::cout << nlohmann::json(matches).dump() << "\n";
    } else {
        for (const auto& p : matches) std::cout << nlohmann::json(p).dump() << "\n";
    }
    return 0;
}

int run_render(const Options& opt) {
    AbacusFunction f;
    const bool have_partition = opt.partition_arg != "\x01";
    if (opt.abacus_arg.empty() == !have_partition)
        throw UsageError("render: pass exactly one of --abacus or --partition");
    if (!opt.abacus_arg.empty()) {
        const std::size_t colon = opt.abacus_arg.find(':');
        if (colon == std::string::npos)
            throw UsageError("render: --abacus expects \"n:f0,f1,...\"");
        long long n = 0;
        try {
            n = std::stoll(opt.abacus_arg.substr(0, colon));
        } catch (const std::exception&) {
            throw UsageError("render: bad abacus modulus");
        }
        const auto values = parse_csv_longs(opt.abacus_arg.substr(colon + 1), "render");
        f = AbacusFunction::validate(static_cast<int>(n),
                                     std::vector<int>(values.begin(), values.end()));
    } else {
        if (opt.n < 1) throw UsageError("render: --partition needs --n");
        const Partition lambda(parse_csv_longs(opt.partition_arg, "render"));
        f = encode(lambda, static_cast<int>(opt.n));
    }
    if (opt.format == "svg")
        std::cout << render_abacus_svg(f);
    else
        std::cout << render_abacus_ascii(f);
    return 0;
}

int run_verify(const Options& opt) {
    std::vector<verify::CheckResult> results;
    if (opt.suite == "oracle-vs-recurrence")
        results = verify::oracle_vs_recurrence(opt.n_max < 0 ? 12 : static_cast<int>(opt.n_max),
                                               opt.work_limit);
    else if (opt.suite == "gf-vs-recurrence")
        results = verify::gf_vs_recurrence(opt.n_max < 0 ? 40 : opt.n_max);
    else if (opt.suite == "oddeven-identities")
        results = verify::oddeven_identities(opt.n_max < 0 ? 12 : static_cast<int>(opt.n_max),
                                             opt.work_limit);
    else if (opt.suite == "bijections")
        results = verify::bijections(opt.n_max < 0 ? 10 : static_cast<int>(opt.n_max),
                                     opt.work_limit);
    else
        throw UsageError("verify: unknown suite '" + opt.suite +
                         "' (expected oracle-vs-recurrence, gf-vs-recurrence, "
                         "oddeven-identities, or bijections)");

    int failures = 0;
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "ok   " << r.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << (results.size() - failures) << "/" << results.size() << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

std::string tri(const std::optional<bool>& v) {
    if (!v) return "-";
    return *v ? "ok" : "FAIL";
}

int run_oddeven(const Options& opt) {
    const auto rows = oddeven_table(static_cast<int>(opt.n_max), opt.work_limit);
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"n", r.n},         {"E", r.e.str()},   {"O", r.o.str()},
                               {"SE", r.se.str()}, {"SO", r.so.str()}, {"CE", r.ce.str()},
                               {"CO", r.co.str()}};
            auto put = [&row](const char* key, const std::optional<bool>& v) {
                if (v) row[key] = *v;
            };
            put("eo_identity", r.eo_ok);
            put("se_fibonacci", r.se_fib_ok);
            put("so_equals_se", r.so_se_ok);
            put("co_ce_identity", r.co_ce_ok);
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "n\tE\tO\tSE\tSO\tCE\tCO\teo\tse_fib\tso=se\tco_ce\n";
    bool all_ok = true;
    for (const auto& r : rows) {
        std::cout << r.n << "\t" << r.e << "\t" << r.o << "\t" << r.se << "\t" << r.so << "\t"
                  << r.ce << "\t" << r.co << "\t" << tri(r.eo_ok) << "\t" << tri(r.se_fib_ok)
                  << "\t" << tri(r.so_se_ok) << "\t" << tri(r.co_ce_ok) << "\n";
        for (const auto& flag : {r.eo_ok, r.se_fib_ok, r.so_se_ok, r.co_ce_ok})
            all_ok = all_ok && flag.value_or(true);
    }
    return all_ok ? 0 : 1;
}

int run_oeis(const Options& opt) {
    std::vector<bigint> prefix;
    std::stringstream ss(opt.prefix_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            prefix.emplace_back(item);
        } catch (const std::exception&) {
            throw UsageError("oeis: '" + item + "' is not an integer");
        }
    }

    if (opt.remote) {
        oeis::FetchOptions fetch;
        const char* env = std::getenv("NCORES_ALLOW_NETWORK");
        fetch.enabled = env != nullptr && std::string(env) == "1";
        fetch.timeout_ms = opt.timeout_ms;
        const auto records = oeis::fetch_remote(prefix, fetch);
        if (records.empty()) std::cout << "no remote matches\n";
        for (const auto& rec : records) std::cout << rec.id << "  " << rec.name << "\n";
        return 0;
    }

    const auto snapshot = oeis::load_snapshot(opt.snapshot_path);
    const auto matches = oeis::match_local(snapshot, prefix, opt.max_shift);
    if (matches.empty()) std::cout << "no local matches (max shift " << opt.max_shift << ")\n";
    for (const auto& m : matches)
        std::cout << m.record.id << "  shift=" << m.shift << "  " << m.record.name << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of (n,n+1)-core partitions with restricted gaps"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--work-limit", opt.work_limit,
                        "largest modulus brute-force enumeration will attempt");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* count = app.add_subcommand("count", "count cores with restricted gap sequence");
    count->add_option("--set", opt.set_spec, "set spec, e.g. positive, mult:2, finite:1,3|ap:7:5");
    count->add_option("--n-max", opt.n_max)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--variant", opt.variant)->check(CLI::IsMember({"q", "p", "odd"}));
    count->add_option("--method", opt.method)
        ->check(CLI::IsMember({"recurrence", "series", "brute", "closed"}));
    add_common(count);

    CLI::App* totals = app.add_subcommand("totals", "total largest part/length/size per n");
    totals->add_option("--set", opt.set_spec)->required();
    totals->add_option("--n-max", opt.n_max)->required()->check(CLI::NonNegativeNumber);
    totals->add_option("--method", opt.method)->check(CLI::IsMember({"formulas", "brute"}));
    totals->add_option("--variant", opt.variant)->check(CLI::IsMember({"q", "p", "odd"}));
    add_common(totals);

    CLI::App* list = app.add_subcommand("list", "list matching cores at one modulus");
    list->add_option("--n", opt.n)->required()->check(CLI::NonNegativeNumber);
    list->add_option("--set", opt.set_spec)->required();
    list->add_option("--variant", opt.variant)->check(CLI::IsMember({"q", "p", "odd"}));
    add_common(list);

    CLI::App* render = app.add_subcommand("render", "draw an abacus diagram");
    render->add_option("--abacus", opt.abacus_arg, "abacus as \"n:f0,f1,...\"");
    render->add_option("--partition", opt.partition_arg, "partition as \"a,b,c\" (with --n)");
    render->add_option("--n", opt.n, "modulus for --partition");
    render->add_option("--format", opt.format)->check(CLI::IsMember({"ascii", "svg"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named cross-check suite");
    verify_cmd->add_option("--suite", opt.suite)->required();
    verify_cmd->add_option("--n-max", opt.n_max);
    verify_cmd->add_option("--work-limit", opt.work_limit);

    CLI::App* oddeven = app.add_subcommand("oddeven", "table of even/odd-part core counts");
    oddeven->add_option("--n-max", opt.n_max)->required()->check(CLI::NonNegativeNumber);
    add_common(oddeven);

    CLI::App* oeis_cmd = app.add_subcommand("oeis", "match a prefix against known sequences");
    oeis_cmd->add_option("--prefix", opt.prefix_arg)->required();
    oeis_cmd->add_option("--max-shift", opt.max_shift);
    oeis_cmd->add_flag("--remote", opt.remote,
                       "query oeis.org (also needs NCORES_ALLOW_NETWORK=1)");
    oeis_cmd->add_option("--timeout-ms", opt.timeout_ms);
    oeis_cmd->add_option("--snapshot", opt.snapshot_path, "path to the snapshot file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (count->parsed()) return run_count(opt);
        if (totals->parsed()) return run_totals(opt);
        if (list->parsed()) return run_list(opt);
        if (render->parsed()) return run_render(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
        if (oddeven->parsed()) return run_oddeven(opt);
        if (oeis_cmd->parsed()) return run_oeis(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
