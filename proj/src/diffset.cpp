#include "ncores/diffset.hpp"

#include <algorithm>
#include <cctype>

namespace ncores {

namespace {

struct Clause {
    std::string text;
    std::size_t offset;  // position of the clause within the full spec
};

std::vector<Clause> split_clauses(const std::string& spec) {
    std::vector<Clause> clauses;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = spec.find('|', start);
        std::size_t end = bar == std::string::npos ? spec.size() : bar;
        clauses.push_back({spec.substr(start, end - start), start});
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return clauses;
}

// Parses a nonnegative decimal integer occupying all of text.
long long parse_number(const std::string& text, std::size_t offset) {
    if (text.empty()) throw SpecParseError("expected a number", offset);
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw SpecParseError("expected a nonnegative integer, got '" + text + "'", offset);
    if (text.size() > 12) throw SpecParseError("number '" + text + "' is too large", offset);
    return std::stoll(text);
}

std::string trim(const std::string& s, std::size_t& offset_adjust) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    offset_adjust = b;
    return s.substr(b, e - b);
}

}  // namespace

DiffSet DiffSet::build(std::set<long long> finite,
                       std::vector<std::pair<long long, long long>> progressions,
                       std::string spec_text) {
    DiffSet m;
    m.progressions_ = std::move(progressions);
    std::sort(m.progressions_.begin(), m.progressions_.end());
    m.progressions_.erase(std::unique(m.progressions_.begin(), m.progressions_.end()),
                          m.progressions_.end());
    // Canonical form: a finite element covered by some progression is redundant.
    for (long long v : finite) {
        bool covered = false;
        for (const auto& [a, d] : m.progressions_)
            if (v >= a && (v - a) % d == 0) {
                covered = true;
                break;
            }
        if (!covered) m.finite_.insert(v);
    }
    m.spec_text_ = std::move(spec_text);
    return m;
}

DiffSet DiffSet::parse(const std::string& spec) {
    std::set<long long> finite;
    std::vector<std::pair<long long, long long>> progressions;

    for (const auto& clause : split_clauses(spec)) {
        std::size_t pad = 0;
        const std::string body = trim(clause.text, pad);
        const std::size_t at = clause.offset + pad;
        if (body.empty()) throw SpecParseError("empty clause", at);

        const std::size_t colon = body.find(':');
        const std::string head = body.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : body.substr(colon + 1);
        const std::size_t args_at = colon == std::string::npos ? at : at + colon + 1;

        if (head == "all") {
            if (colon != std::string::npos) throw SpecParseError("'all' takes no argument", args_at);
            progressions.emplace_back(0, 1);
        } else if (head == "positive") {
            if (colon != std::string::npos)
                throw SpecParseError("'positive' takes no argument", args_at);
            progressions.emplace_back(1, 1);
        } else if (head == "mult" || head == "mult+") {
            long long d = parse_number(args, args_at);
            if (d == 0) throw SpecParseError("step of '" + head + "' must be >= 1", args_at);
            progressions.emplace_back(head == "mult" ? 0 : d, d);
        } else if (head == "atleast") {
            long long r = parse_number(args, args_at);
            progressions.emplace_back(r, 1);
        } else if (head == "upto") {
            long long r = parse_number(args, args_at);
            if (r > 1'000'000)
                throw SpecParseError("'upto' bound " + std::to_string(r) + " is too large",
                                     args_at);
            for (long long v = 0; v <= r; ++v) finite.insert(v);
        } else if (head == "finite") {
            if (args.empty()) throw SpecParseError("'finite' needs at least one element", args_at);
            std::size_t pos = 0, elem_at = args_at;
            while (true) {
                std::size_t comma = args.find(',', pos);
                std::string item = args.substr(pos, comma == std::string::npos ? std::string::npos
                                                                               : comma - pos);
                finite.insert(parse_number(item, elem_at));
                if (comma == std::string::npos) break;
                pos = comma + 1;
                elem_at = args_at + pos;
            }
        } else if (head == "ap") {
            std::size_t second = args.find(':');
            if (second == std::string::npos)
                throw SpecParseError("'ap' needs two arguments: ap:start:step", args_at);
            long long a = parse_number(args.substr(0, second), args_at);
            long long d = parse_number(args.substr(second + 1), args_at + second + 1);
            if (d == 0) throw SpecParseError("step of 'ap' must be >= 1", args_at + second + 1);
            progressions.emplace_back(a, d);
        } else {
            throw SpecParseError("unknown clause '" + head + "'", at);
        }
    }
    return build(std::move(finite), std::move(progressions), spec);
}

DiffSet DiffSet::multiples(long long d) { return parse("mult:" + std::to_string(d)); }
DiffSet DiffSet::positive_multiples(long long d) { return parse("mult+:" + std::to_string(d)); }
DiffSet DiffSet::at_least(long long r) { return parse("atleast:" + std::to_string(r)); }
DiffSet DiffSet::up_to(long long r) { return parse("upto:" + std::to_string(r)); }

bool DiffSet::contains(long long k) const {
    if (k < 0) return false;
    if (finite_.count(k)) return true;
    for (const auto& [a, d] : progressions_)
        if (k >= a && (k - a) % d == 0) return true;
    return false;
}

PowerSeries DiffSet::indicator_series(std::size_t order) const {
    std::vector<bigint> coeffs(order + 1, 0);
    const auto table = membership_table(static_cast<long long>(order));
    for (std::size_t k = 0; k <= order; ++k) coeffs[k] = table[k] ? 1 : 0;
    return PowerSeries(std::move(coeffs));
}

std::vector<char> DiffSet::membership_table(long long n) const {
    std::vector<char> table(static_cast<std::size_t>(n) + 1, 0);
    for (long long v : finite_)
        if (v <= n) table[static_cast<std::size_t>(v)] = 1;
    for (const auto& [a, d] : progressions_)
        for (long long v = a; v <= n; v += d) table[static_cast<std::size_t>(v)] = 1;
    return table;
}

std::vector<long long> DiffSet::elements_upto(long long n) const {
    const auto table = membership_table(n);
    std::vector<long long> out;
    for (long long v = 0; v <= n; ++v)
        if (table[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::string DiffSet::render_spec() const {
    std::vector<std::string> clauses;
    if (!finite_.empty()) {
        std::string clause = "finite:";
        bool first = true;
        for (long long v : finite_) {
            if (!first) clause += ',';
            clause += std::to_string(v);
            first = false;
        }
        clauses.push_back(std::move(clause));
    }
    for (const auto& [a, d] : progressions_)
        clauses.push_back("ap:" + std::to_string(a) + ":" + std::to_string(d));
    if (clauses.empty()) return "finite:";  // unreachable for parseable specs
    std::string out = clauses[0];
    for (std::size_t i = 1; i < clauses.size(); ++i) out += "|" + clauses[i];
    return out;
}

void to_json(nlohmann::json& j, const DiffSet& m) {
    nlohmann::json progressions = nlohmann::json::array();
    for (const auto& [a, d] : m.progressions()) progressions.push_back({a, d});
    j = nlohmann::json{{"finite", m.finite()}, {"progressions", std::move(progressions)}};
}

void from_json(const nlohmann::json& j, DiffSet& m) {
    std::string spec;
    bool first = true;
    for (const auto& v : j.at("finite")) {
        spec += first ? "finite:" : ",";
        spec += std::to_string(v.get<long long>());
        first = false;
    }
    for (const auto& p : j.at("progressions")) {
        if (!spec.empty()) spec += "|";
        spec += "ap:" + std::to_string(p.at(0).get<long long>()) + ":" +
                std::to_string(p.at(1).get<long long>());
    }
    m = spec.empty() ? DiffSet() : DiffSet::parse(spec);
}

}  // namespace ncores
