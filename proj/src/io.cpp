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

#include "camoca/io.hpp"

#include <fstream>

namespace camoca {

namespace {

void check_header(const Json& j, const std::string& kind) {
    if (!j.is_object()) throw Error("document must be a JSON object");
    if (!j.contains("format") || !j["format"].is_number_integer() ||
        j["format"].get<int>() != kFormatVersion)
        throw Error("unsupported or missing format version in " + kind + " document");
    if (!j.contains("kind") || j["kind"].get<std::string>() != kind)
        throw Error("expected a document of kind '" + kind + "'");
}

Json canonical_family_payload(const MocaFamily& family) {
    Json rules = Json::array();
    for (const auto& rule : family.rules()) rules.push_back(rule_to_json(rule));
    Json payload;
    payload["q"] = family.q();
    payload["d"] = family.d();
    payload["rules"] = std::move(rules);
    return payload;
}

} // namespace

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x00000100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw Error("alphabet size must be at least 2");
    int p = 0;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) { p = f; break; }
    if (p == 0) return {q, 1};
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error("alphabet size " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

Json field_to_json(const FieldPtr& field) {
    Json j;
    j["p"] = field->p();
    j["m"] = field->m();
    if (field->m() > 1) {
        std::string digits;
        for (int c : field->modulus()) digits.push_back(digit_to_char(c));
        j["modulus"] = digits;
    }
    return j;
}

FieldPtr field_from_json(const Json& j) {
    const int p = j.at("p").get<int>();
    const int m = j.at("m").get<int>();
    auto field = Field::make(p, m);
    if (m > 1 && j.contains("modulus")) {
        std::string digits;
        for (int c : field->modulus()) digits.push_back(digit_to_char(c));
        if (j["modulus"].get<std::string>() != digits)
            throw Error("field modulus does not match the canonical choice");
    }
    return field;
}

Json rule_to_json(const LocalRule& rule) {
    Json j;
    j["q"] = rule.q();
    j["d"] = rule.d();
    j["table"] = word_to_digits(rule.table());
    return j;
}

LocalRule rule_from_json(const Json& j) {
    const int q = j.at("q").get<int>();
    const int d = j.at("d").get<int>();
    const auto [p, m] = factor_prime_power(q);
    auto field = Field::make(p, m);
    return LocalRule::from_table(std::move(field),  d,
                                 word_from_digits(j.at("table").get<std::string>(), q));
}

std::string family_digest(const MocaFamily& family) {
    return fnv1a_hex(canonical_family_payload(family).dump());
}

Json family_to_json(const MocaFamily& family) {
    Json j;
    j["format"] = kFormatVersion;
    j["kind"] = "moca-family";
    const Json payload = canonical_family_payload(family);
    j["q"] = payload["q"];
    j["d"] = payload["d"];
    j["rules"] = payload["rules"];
    j["digest"] = fnv1a_hex(payload.dump());
    return j;
}

MocaFamily family_from_json(const Json& j) {
    check_header(j, "moca-family");
    const int q = j.at("q").get<int>();
    const int d = j.at("d").get<int>();
    const auto [p, m] = factor_prime_power(q);
    auto field = Field::make(p, m);
    std::vector<LocalRule> rules;
    for (const auto& rj : j.at("rules")) {
        if (rj.at("q").get<int>() != q || rj.at("d").get<int>() != d)
            throw Error("rule record does not match the family header");
        rules.push_back(rule_from_json(rj));
    }
    MocaFamily family = MocaFamily::create(std::move(field), d, std::move(rules));
    if (j.contains("digest") && j["digest"].get<std::string>() != family_digest(family))
        throw Error("family digest mismatch: file corrupt or parameters altered");
    return family;
}

Json share_to_json(const ShareDocument& doc) {
    Json j;
    j["format"] = kFormatVersion;
    j["kind"] = "share";
    j["q"] = doc.q;
    j["d"] = doc.d;
    j["share"] = word_to_digits(doc.share);
    j["family_digest"] = doc.family_digest;
    if (doc.rule_index) j["rule_index"] = *doc.rule_index;
    return j;
}

ShareDocument share_from_json(const Json& j) {
    check_header(j, "share");
    ShareDocument doc;
    doc.q = j.at("q").get<int>();
    doc.d = j.at("d").get<int>();
    doc.share = word_from_digits(j.at("share").get<std::string>(), doc.q);
    doc.family_digest = j.at("family_digest").get<std::string>();
    if (j.contains("rule_index")) doc.rule_index = j["rule_index"].get<int>();
    return doc;
}

Json dealer_record_to_json(const DealerRecord& rec) {
    Json j;
    j["format"] = kFormatVersion;
    j["kind"] = "dealer-record";
    j["sensitive"] = true;  // holds R and the secret; never publish
    j["scheme"] = rec.scheme;
    j["q"] = rec.q;
    j["d"] = rec.d;
    j["family_digest"] = rec.family_digest;
    if (rec.secret_block) j["secret"] = word_to_digits(*rec.secret_block);
    if (rec.secret_index) j["secret_index"] = *rec.secret_index;
    j["r"] = word_to_digits(rec.random_block);
    return j;
}

DealerRecord dealer_record_from_json(const Json& j) {
    check_header(j, "dealer-record");
    DealerRecord rec;
    rec.scheme = j.at("scheme").get<std::string>();
    rec.q = j.at("q").get<int>();
    rec.d = j.at("d").get<int>();
    rec.family_digest = j.at("family_digest").get<std::string>();
    if (j.contains("secret")) rec.secret_block = word_from_digits(j["secret"].get<std::string>(), rec.q);
    if (j.contains("secret_index")) rec.secret_index = j["secret_index"].get<int>();
    rec.random_block = word_from_digits(j.at("r").get<std::string>(), rec.q);
    return rec;
}

Json candidate_to_json(const CandidateDocument& doc) {
    Json j;
    j["format"] = kFormatVersion;
    j["kind"] = "candidate-family";
    j["q"] = doc.q;
    j["d"] = doc.d;
    j["family_digest"] = doc.family_digest;
    j["sets"] = doc.sets;
    return j;
}

CandidateDocument candidate_from_json(const Json& j) {
    check_header(j, "candidate-family");
    CandidateDocument doc;
    doc.q = j.at("q").get<int>();
    doc.d = j.at("d").get<int>();
    doc.family_digest = j.at("family_digest").get<std::string>();
    doc.sets = j.at("sets").get<std::vector<std::vector<long long>>>();
    return doc;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace camoca
