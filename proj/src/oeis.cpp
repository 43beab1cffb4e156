#include "ncores/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace ncores::oeis {

MalformedResponseError::MalformedResponseError(const std::string& reason,
                                               const std::string& payload)
    : NetworkError("malformed OEIS response: " + reason + " [payload: " +
                   payload.substr(0, 200) + (payload.size() > 200 ? "..." : "") + "]"),
      excerpt_(payload.substr(0, 200)) {}

namespace {

bool valid_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    return std::all_of(id.begin() + 1, id.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<bigint> values_of(const nlohmann::json& arr) {
    std::vector<bigint> out;
    for (const auto& v : arr) {
        if (v.is_string())
            out.emplace_back(v.get<std::string>());
        else
            out.emplace_back(v.get<long long>());
    }
    return out;
}

}  // namespace

std::vector<SequenceRecord> load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file: " + path);

    std::vector<SequenceRecord> records;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("snapshot line " + std::to_string(line_no) +
                                     " is not valid JSON: " + e.what());
        }
        SequenceRecord rec;
        rec.id = j.at("id").get<std::string>();
        rec.name = j.at("name").get<std::string>();
        rec.start = j.value("start", 0LL);
        rec.values = values_of(j.at("values"));
        if (!valid_id(rec.id))
            throw std::runtime_error("snapshot line " + std::to_string(line_no) +
                                     ": id '" + rec.id + "' is not A followed by 6 digits");
        if (rec.values.empty())
            throw std::runtime_error("snapshot line " + std::to_string(line_no) +
                                     ": record " + rec.id + " has no values");
        if (!seen.insert(rec.id).second)
            throw std::runtime_error("snapshot line " + std::to_string(line_no) +
                                     ": duplicate id " + rec.id);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const SequenceRecord& a, const SequenceRecord& b) { return a.id < b.id; });
    return records;
}

std::vector<Match> match_local(const std::vector<SequenceRecord>& snapshot,
                               const std::vector<bigint>& prefix, std::size_t max_shift) {
    if (prefix.size() < 5)
        throw std::invalid_argument("match_local: prefix must have at least 5 terms");
    std::vector<Match> matches;
    for (const auto& rec : snapshot) {
        if (rec.values.size() < prefix.size()) continue;
        const std::size_t last_start =
            std::min(max_shift, rec.values.size() - prefix.size());
        for (std::size_t s = 0; s <= last_start; ++s) {
            if (std::equal(prefix.begin(), prefix.end(), rec.values.begin() + s)) {
                matches.push_back({rec, s});
                break;
            }
        }
    }
    std::sort(matches.begin(), matches.end(),
              [](const Match& a, const Match& b) { return a.record.id < b.record.id; });
    return matches;
}

std::vector<SequenceRecord> fetch_remote(const std::vector<bigint>& prefix,
                                         const FetchOptions& options) {
    if (!options.enabled) throw NetworkDisabledError();
    if (prefix.size() < 5)
        throw std::invalid_argument("fetch_remote: prefix must have at least 5 terms");
    if (options.timeout_ms <= 0)
        throw TimeoutError("fetch_remote: timeout of " + std::to_string(options.timeout_ms) +
                           "ms expired before the request was sent");

    std::string query;
    for (const auto& v : prefix) {
        if (!query.empty()) query += ',';
        query += v.str();
    }

    httplib::Client client(options.base_url);
    client.set_connection_timeout(0, options.timeout_ms * 1000);
    client.set_read_timeout(0, options.timeout_ms * 1000);
    client.set_follow_location(true);

    const auto res = client.Get("/search?q=" + query + "&fmt=json");
    if (!res) {
        const auto err = res.error();
        if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
            err == httplib::Error::Write)
            throw TimeoutError("fetch_remote: request timed out (" + httplib::to_string(err) + ")");
        throw NetworkError("fetch_remote: transport failure (" + httplib::to_string(err) + ")");
    }
    if (res->status != 200)
        throw MalformedResponseError("HTTP status " + std::to_string(res->status), res->body);

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedResponseError(e.what(), res->body);
    }

    // The endpoint answers either {"results":[...]} or a bare array; "results"
    // is null when nothing matches.
    nlohmann::json results;
    if (j.is_array())
        results = j;
    else if (j.contains("results"))
        results = j["results"];
    else
        throw MalformedResponseError("no results field", res->body);
    if (results.is_null()) return {};
    if (!results.is_array()) throw MalformedResponseError("results is not a list", res->body);

    std::vector<SequenceRecord> records;
    try {
        for (const auto& entry : results) {
            SequenceRecord rec;
            const long long number = entry.at("number").get<long long>();
            std::ostringstream id;
            id << 'A' << std::setw(6) << std::setfill('0') << number;
            rec.id = id.str();
            rec.name = entry.value("name", "");
            std::string data = entry.value("data", "");
            std::size_t pos = 0;
            while (pos < data.size()) {
                std::size_t comma = data.find(',', pos);
                if (comma == std::string::npos) comma = data.size();
                std::string token = data.substr(pos, comma - pos);
                pos = comma + 1;
                if (token.empty()) continue;
                const bool numeric =
                    std::all_of(token.begin() + (token[0] == '-' ? 1 : 0), token.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
                if (!numeric || token == "-")
                    throw MalformedResponseError("non-numeric data term '" + token + "'",
                                                 res->body);
                rec.values.emplace_back(token);
            }
            if (rec.values.empty())
                throw MalformedResponseError("entry " + rec.id + " carries no data", res->body);
            records.push_back(std::move(rec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedResponseError(e.what(), res->body);
    }
    return records;
}

}  // namespace ncores::oeis
