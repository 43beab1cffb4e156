#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncores/bigint.hpp"

namespace ncores::oeis {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Remote lookup attempted without the explicit opt-in.
class NetworkDisabledError : public NetworkError {
public:
    NetworkDisabledError() : NetworkError("remote OEIS lookup is disabled (opt in explicitly)") {}
};

class TimeoutError : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// The response could not be parsed; carries an excerpt of the raw payload.
class MalformedResponseError : public NetworkError {
public:
    explicit MalformedResponseError(const std::string& reason, const std::string& payload);
    const std::string& payload_excerpt() const { return excerpt_; }

private:
    std::string excerpt_;
};

struct SequenceRecord {
    std::string id;    // "A" + 6 digits
    std::string name;
    long long start = 0;  // index (in the sequence's own numbering) of values[0]
    std::vector<bigint> values;

    bool operator==(const SequenceRecord&) const = default;
};

/// Loads a JSON-lines snapshot ({"id":...,"name":...,"values":[...]} per
/// line; optional "start"). Validates id shape, uniqueness, and nonempty
/// values; the result is sorted by id.
std::vector<SequenceRecord> load_snapshot(const std::string& path);

struct Match {
    SequenceRecord record;
    std::size_t shift = 0;  // index within record.values where prefix begins
};

/// All records containing prefix as a contiguous run starting at an index
/// <= max_shift, in id order (smallest matching shift reported per record).
/// Requires prefix length >= 5.
std::vector<Match> match_local(const std::vector<SequenceRecord>& snapshot,
                               const std::vector<bigint>& prefix, std::size_t max_shift);

struct FetchOptions {
    bool enabled = false;                       // both gates must be open
    std::string base_url = "https://oeis.org";  // overridable for hermetic tests
    int timeout_ms = 5000;
};

/// Queries the OEIS JSON search endpoint with the comma-joined prefix.
/// Returns a possibly-empty record list. Throws NetworkDisabledError unless
/// options.enabled, TimeoutError on expiry (a nonpositive timeout expires
/// immediately), and MalformedResponseError when the payload does not parse.
std::vector<SequenceRecord> fetch_remote(const std::vector<bigint>& prefix,
                                         const FetchOptions& options);

}  // namespace ncores::oeis
