#include "ncores/counting.hpp"

#include <numeric>
#include <stdexcept>

namespace ncores {

std::string to_string(Method m) {
    switch (m) {
        case Method::Recurrence: return "recurrence";
        case Method::Series: return "series";
        case Method::Brute: return "brute";
        case Method::Closed: return "closed";
    }
    throw std::logic_error("unreachable method");
}

Method method_from_string(const std::string& s) {
    if (s == "recurrence") return Method::Recurrence;
    if (s == "series") return Method::Series;
    if (s == "brute") return Method::Brute;
    if (s == "closed") return Method::Closed;
    throw std::invalid_argument("unknown method '" + s +
                                "' (expected recurrence, series, brute, or closed)");
}

namespace {

nlohmann::json strings_of(const std::vector<bigint>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

std::vector<bigint> bigints_of(const nlohmann::json& arr) {
    std::vector<bigint> out;
    for (const auto& v : arr) {
        if (v.is_string())
            out.emplace_back(v.get<std::string>());
        else
            out.emplace_back(v.get<long long>());
    }
    return out;
}

void check_work_limit(long long n_max, int work_limit, const char* where) {
    if (n_max > work_limit)
        throw ResourceLimitError(std::string(where) + ": n_max " + std::to_string(n_max) +
                                 " exceeds the work limit " + std::to_string(work_limit) +
                                 " (override the limit to go further)");
}

}  // namespace

void to_json(nlohmann::json& j, const CountReport& r) {
    j = nlohmann::json{{"m_spec", r.m_spec},
                       {"variant", to_string(r.variant)},
                       {"method", to_string(r.method)},
                       {"n_range", {r.n_lo, r.n_hi}}};
    if (!r.values.empty()) j["values"] = strings_of(r.values);
    if (!r.tl.empty()) {
        j["tl"] = strings_of(r.tl);
        j["tp"] = strings_of(r.tp);
        j["ts"] = strings_of(r.ts);
    }
}

void from_json(const nlohmann::json& j, CountReport& r) {
    r = CountReport{};
    r.m_spec = j.at("m_spec").get<std::string>();
    r.variant = variant_from_string(j.at("variant").get<std::string>());
    r.method = method_from_string(j.at("method").get<std::string>());
    r.n_lo = j.at("n_range").at(0).get<long long>();
    r.n_hi = j.at("n_range").at(1).get<long long>();
    if (j.contains("values")) r.values = bigints_of(j["values"]);
    if (j.contains("tl")) {
        r.tl = bigints_of(j["tl"]);
        r.tp = bigints_of(j["tp"]);
        r.ts = bigints_of(j["ts"]);
    }
}

CountReport count_recurrence(const DiffSet& m, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("count_recurrence: n_max must be >= 0");
    std::vector<bigint> c(static_cast<std::size_t>(n_max) + 1);
    c[0] = 1;
    const auto in_m = m.membership_table(n_max);
    const bool zero_in = m.contains(0);
    for (long long n = 0; n < n_max; ++n) {
        bigint next = zero_in ? 0 : 1;
        for (long long k = 0; k <= n; ++k) {
            if (!in_m[static_cast<std::size_t>(k)]) continue;
            if (zero_in)
                next += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
            else
                next += c[static_cast<std::size_t>(n - k)];
        }
        c[static_cast<std::size_t>(n) + 1] = next;
    }
    CountReport report;
    report.m_spec = m.spec_text();
    report.variant = Variant::Q;
    report.method = Method::Recurrence;
    report.n_hi = n_max;
    report.values = std::move(c);
    return report;
}

CountReport count_series(const DiffSet& m, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("count_series: n_max must be >= 0");
    const auto order = static_cast<std::size_t>(n_max);
    const PowerSeries chi = m.indicator_series(order);
    const PowerSeries one = PowerSeries::one(order);
    const PowerSeries q = PowerSeries::monomial(1, 1, order);

    PowerSeries c = one;
    if (m.contains(0)) {
        // Fixed point C = 1 + q (C * chi) C; each pass settles at least one
        // further coefficient, so order+1 passes always reach stability.
        bool stable = false;
        for (std::size_t pass = 0; pass <= order + 1; ++pass) {
            PowerSeries next = one + q * c.hadamard(chi) * c;
            if (next == c) {
                stable = true;
                break;
            }
            c = std::move(next);
        }
        if (!stable) throw std::logic_error("count_series: fixed point failed to stabilize");
    } else {
        c = ((one - q) * (one - q * chi)).reciprocal();
    }

    CountReport report;
    report.m_spec = m.spec_text();
    report.variant = Variant::Q;
    report.method = Method::Series;
    report.n_hi = n_max;
    report.values = c.coeffs();
    return report;
}

CountReport count_brute(const DiffSet& m, long long n_max, Variant variant, int work_limit) {
    if (n_max < 0) throw std::invalid_argument("count_brute: n_max must be >= 0");
    check_work_limit(n_max, work_limit, "count_brute");
    // Largest possible gap at modulus n is the total of whites <= n(n-1)/2.
    const auto in_m = m.membership_table(std::max<long long>(1, n_max * (n_max - 1) / 2));

    std::vector<bigint> values(static_cast<std::size_t>(n_max) + 1);
    values[0] = 1;  // the empty partition
    for (long long n = 1; n <= n_max; ++n) {
        long long count = 0;
        for_each_abacus(static_cast<int>(n), [&](const std::vector<int>& f) {
            if (values_satisfy(f, in_m, variant)) ++count;
        });
        values[static_cast<std::size_t>(n)] = count;
    }

    CountReport report;
    report.m_spec = m.spec_text();
    report.variant = variant;
    report.method = Method::Brute;
    report.n_hi = n_max;
    report.values = std::move(values);
    return report;
}

bigint closed_form_raney(long long d, long long n) {
    if (d < 1) throw std::invalid_argument("closed_form_raney: d must be >= 1");
    if (n < 0) throw std::invalid_argument("closed_form_raney: n must be >= 0");
    const long long q = n / d;
    const long long r = n % d;
    return exact_div(bigint(r + 1) * binomial(n + q, q), bigint(n + 1));
}

bigint catalan(long long n) {
    return closed_form_raney(1, n);
}

bigint anderson_count(long long a, long long b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("anderson_count: need nonnegative a, b with a+b >= 1");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("anderson_count: gcd(" + std::to_string(a) + "," +
                                std::to_string(b) + ") != 1, the set of cores is infinite");
    return exact_div(binomial(a + b, a), bigint(a + b));
}

CountReport totals_formulas(const DiffSet& m, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("totals_formulas: n_max must be >= 0");
    if (m.contains(0))
        throw std::domain_error("totals_formulas: M must not contain 0 (closed forms hold for "
                                "gap sets without repeats)");
    const auto order = static_cast<std::size_t>(n_max);
    // chi' costs one order, so chi is built one order higher for it.
    const PowerSeries chi_prime = m.indicator_series(order + 1).derivative();
    const PowerSeries chi = m.indicator_series(order);
    const PowerSeries one = PowerSeries::one(order);
    const PowerSeries q = PowerSeries::monomial(1, 1, order);
    const PowerSeries q2 = PowerSeries::monomial(1, 2, order);

    const PowerSeries one_minus_q = one - q;
    const PowerSeries one_minus_qchi = one - q * chi;
    const PowerSeries inv2 = (one_minus_q * one_minus_qchi * one_minus_qchi).reciprocal();
    const PowerSeries inv3 =
        (one_minus_q * one_minus_qchi * one_minus_qchi * one_minus_qchi).reciprocal();

    CountReport report;
    report.m_spec = m.spec_text();
    report.variant = Variant::Q;
    report.method = Method::Series;
    report.n_hi = n_max;
    report.tl = (q2 * chi_prime * inv2).coeffs();
    report.tp = (q * chi * inv2).coeffs();
    report.ts = (q2 * chi_prime * inv3).coeffs();
    return report;
}

CountReport totals_brute(const DiffSet& m, long long n_max, Variant variant, int work_limit) {
    if (n_max < 0) throw std::invalid_argument("totals_brute: n_max must be >= 0");
    check_work_limit(n_max, work_limit, "totals_brute");
    const auto in_m = m.membership_table(std::max<long long>(1, n_max * (n_max - 1) / 2));

    CountReport report;
    report.m_spec = m.spec_text();
    report.variant = variant;
    report.method = Method::Brute;
    report.n_hi = n_max;
    report.tl.assign(static_cast<std::size_t>(n_max) + 1, 0);
    report.tp.assign(static_cast<std::size_t>(n_max) + 1, 0);
    report.ts.assign(static_cast<std::size_t>(n_max) + 1, 0);
    for (long long n = 1; n <= n_max; ++n) {
        long long tl = 0, tp = 0, ts = 0;
        for_each_abacus(static_cast<int>(n), [&](const std::vector<int>& f) {
            if (!values_satisfy(f, in_m, variant)) return;
            const AbacusStats stats = values_statistics(f);
            tl += stats.largest;
            tp += stats.length;
            ts += stats.size;
        });
        report.tl[static_cast<std::size_t>(n)] = tl;
        report.tp[static_cast<std::size_t>(n)] = tp;
        report.ts[static_cast<std::size_t>(n)] = ts;
    }
    return report;
}

PowerSeries partition_gf(const DiffSet& m, std::size_t order, Variant variant) {
    // A partition corresponds to its gap sequence (g_1..g_l) with g_l >= 1,
    // and |lambda| = sum j*g_j; level j contributes A_j = sum_{g in M} q^{jg},
    // the last level B_l restricts to g >= 1 (and drops the M constraint for
    // the P variant).
    if (variant == Variant::Odd)
        throw std::invalid_argument("partition_gf: variants Q and P only");
    PowerSeries result = PowerSeries::one(order);
    PowerSeries running = PowerSeries::one(order);
    for (std::size_t level = 1; level <= order; ++level) {
        std::vector<bigint> last(order + 1, 0);
        std::vector<bigint> all(order + 1, 0);
        for (std::size_t g = 0; g * level <= order; ++g) {
            const bool in_m = m.contains(static_cast<long long>(g));
            if (in_m) all[g * level] = 1;
            if (g >= 1 && (variant == Variant::P || in_m)) last[g * level] = 1;
        }
        result = result + running * PowerSeries(std::move(last));
        running = running * PowerSeries(std::move(all));
        if (running.is_zero()) break;
    }
    return result;
}

}  // namespace ncores
