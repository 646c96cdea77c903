// Copyright 2026 The camoca authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAMOCA_IO_HPP
#define CAMOCA_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "camoca/latin.hpp"
#include "camoca/scheme.hpp"

namespace camoca {

using Json = nlohmann::ordered_json;

/// Every on-disk document carries this version.
inline constexpr int kFormatVersion = 1;

/// FNV-1a 64-bit hex digest; stable mismatch detector, not a cryptographic hash.
std::string fnv1a_hex(const std::string& data);

/// Splits a prime power q into (p, m); throws when q is not a prime power.
std::pair<int, int> factor_prime_power(int q);

Json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

/// Rules serialize as {q, d, table} with the table as a digit string in
/// index order.
Json rule_to_json(const LocalRule& rule);
LocalRule rule_from_json(const Json& j);

/// Digest over the canonical {q, d, rules} payload; identifies the public
/// parameters in every share and candidate document.
std::string family_digest(const MocaFamily& family);

Json family_to_json(const MocaFamily& family);
MocaFamily family_from_json(const Json& j);

struct ShareDocument {
    int q = 0;
    int d = 0;
    Word share;
    std::string family_digest;
    /// Present in the basic scheme only: recovery there needs to know
    /// which rule produced the share. Anonymous shares carry no identity.
    std::optional<int> rule_index;
};

Json share_to_json(const ShareDocument& doc);
ShareDocument share_from_json(const Json& j);

/// Dealer-private record of a deal. Holds R and the secret, so it must
/// never be published; files carry an explicit sensitive marker.
struct DealerRecord {
    std::string scheme;  // "basic" or "anon"
    int q = 0;
    int d = 0;
    std::string family_digest;
    std::optional<Word> secret_block;  // basic
    std::optional<int> secret_index;   // anon
    Word random_block;
};

Json dealer_record_to_json(const DealerRecord& rec);
DealerRecord dealer_record_from_json(const Json& j);

/// A player's candidate family for the interactive step. The owner share
/// is deliberately omitted.
struct CandidateDocument {
    int q = 0;
    int d = 0;
    std::string family_digest;
    std::vector<std::vector<long long>> sets;
};

Json candidate_to_json(const CandidateDocument& doc);
CandidateDocument candidate_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

} // namespace camoca

#endif
