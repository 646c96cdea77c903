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

#include "camoca/scheme.hpp"

#include <algorithm>

namespace camoca {

namespace {

void check_block(const MocaFamily& family, const Word& block, const char* what) {
    if (static_cast<int>(block.size()) != family.d() - 1)
        throw Error(std::string(what) + " must have length d - 1");
    for (int s : block)
        if (s < 0 || s >= family.q()) throw Error(std::string(what) + " symbol out of range");
}

Word random_block(const MocaFamily& family, Rng& rng) {
    Word r(family.d() - 1);
    for (auto& s : r) s = static_cast<int>(rng.uniform_below(family.q()));
    return r;
}

void check_rule_index(const MocaFamily& family, int index) {
    if (index < 1 || index > family.size())
        throw Error("rule index " + std::to_string(index) + " out of range [1, " +
                    std::to_string(family.size()) + "]");
}

} // namespace

std::vector<std::vector<long long>> CandidateFamily::sets() const {
    std::vector<std::vector<long long>> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.cells);
    return out;
}

BasicDeal basic_setup(const MocaFamily& family, const Word& secret, Rng& rng) {
    return basic_setup_with_r(family, secret, random_block(family, rng));
}

BasicDeal basic_setup_with_r(const MocaFamily& family, const Word& secret, const Word& r) {
    check_block(family, secret, "secret block");
    check_block(family, r, "random block");
    Word input = secret;
    input.insert(input.end(), r.begin(), r.end());
    BasicDeal deal{family, secret, r, {}};
    deal.shares.reserve(family.size());
    for (const auto& rule : family.rules()) deal.shares.push_back(evaluate(rule, input));
    return deal;
}

Word basic_recover(const MocaFamily& family, int rule_i, int rule_j,
                   const Word& share_i, const Word& share_j, OpCounter* counter) {
    check_rule_index(family, rule_i);
    check_rule_index(family, rule_j);
    if (rule_i == rule_j) throw SameShareError("recovery needs two distinct rule indices");
    check_block(family, share_i, "share");
    check_block(family, share_j, "share");
    const Word input = coupled_recover(family.rules()[rule_i - 1], family.rules()[rule_j - 1],
                                       share_i, share_j, counter);
    return Word(input.begin(), input.begin() + (family.d() - 1));
}

AnonDeal anon_setup(const MocaFamily& family, int secret_index, Rng& rng) {
    return anon_setup_with_r(family, secret_index, random_block(family, rng));
}

AnonDeal anon_setup_with_r(const MocaFamily& family, int secret_index, const Word& r) {
    if (family.size() < 2)
        throw Error("the anonymous scheme needs a family of at least two rules");
    check_rule_index(family, secret_index);
    check_block(family, r, "random block");
    AnonDeal deal{family, secret_index, r, {}};
    deal.shares = preimages(family.rules()[secret_index - 1], r);
    return deal;
}

CandidateFamily anon_precompute(const MocaFamily& family, const Word& share,
                                OpCounter* counter) {
    if (static_cast<int>(share.size()) != 2 * (family.d() - 1))
        throw Error("share must have length 2(d - 1)");
    for (int s : share)
        if (s < 0 || s >= family.q()) throw Error("share symbol out of range");

    const IndexCodec codec(family.field(), family.d());
    CandidateFamily result;
    result.share = share;
    result.entries.reserve(family.size());
    for (int k = 1; k <= family.size(); ++k) {
        const auto& rule = family.rules()[k - 1];
        CandidateFamily::Entry entry;
        entry.rule_index = k;
        entry.output_block = evaluate(rule, share, counter);
        for (const Word& x : preimages(rule, entry.output_block, counter))
            entry.cells.push_back(codec.config_to_cell(x));
        std::sort(entry.cells.begin(), entry.cells.end());
        result.entries.push_back(std::move(entry));
    }
    return result;
}

CombineResult anon_combine_sets(const std::vector<std::vector<long long>>& a,
                                const std::vector<std::vector<long long>>& b) {
    if (a.empty() || b.empty()) throw Error("candidate families must not be empty");
    if (a == b)
        throw SameShareError("both candidate families are identical: the same share was used twice");

    std::vector<std::pair<std::vector<long long>, int>> common;
    for (size_t i = 0; i < a.size(); ++i) {
        const auto it = std::find(b.begin(), b.end(), a[i]);
        if (it != b.end()) {
            // A preimage set lives in exactly one parallel class, so its
            // position must agree on both sides.
            if (static_cast<size_t>(it - b.begin()) != i)
                throw AmbiguityError("a common preimage set sits in different positions: invalid public family");
            common.emplace_back(a[i], static_cast<int>(i) + 1);
        }
    }
    if (common.empty())
        throw NoPathError("no common preimage set: the shares come from different deals");
    if (common.size() > 1)
        throw AmbiguityError("several common preimage sets: the public family is not pairwise orthogonal");
    return {common.front().first, common.front().second};
}

CombineResult anon_combine(const CandidateFamily& a, const CandidateFamily& b,
                           const MocaFamily& family) {
    if (static_cast<int>(a.entries.size()) != family.size() ||
        static_cast<int>(b.entries.size()) != family.size())
        throw Error("candidate families do not match the public family size");
    return anon_combine_sets(a.sets(), b.sets());
}

int consistency_count(const MocaFamily& family, int rule_index, const Word& share) {
    check_rule_index(family, rule_index);
    if (static_cast<int>(share.size()) != 2 * (family.d() - 1))
        throw Error("share must have length 2(d - 1)");
    const auto& rule = family.rules()[rule_index - 1];
    int count = 0;
    const long long n = IndexCodec(family.field(), family.d()).N();
    for (long long e = 0; e < n; ++e) {
        const Word y = word_decode(e, family.q(), family.d() - 1);
        const auto pre = preimages(rule, y);
        if (std::find(pre.begin(), pre.end(), share) != pre.end()) ++count;
    }
    return count;
}

RecoveryTranscript run_basic_recovery(const MocaFamily& family, int rule_i, int rule_j,
                                      const Word& share_i, const Word& share_j) {
    OpCounter counter;
    RecoveryTranscript transcript;
    transcript.scheme = "basic";
    // Normalize the pair order so the transcript cannot depend on it.
    if (rule_i <= rule_j)
        transcript.secret_block = basic_recover(family, rule_i, rule_j, share_i, share_j, &counter);
    else
        transcript.secret_block = basic_recover(family, rule_j, rule_i, share_j, share_i, &counter);
    transcript.rule_applications = counter.rule_applications;
    return transcript;
}

RecoveryTranscript run_anon_recovery(const MocaFamily& family, const Word& share_a,
                                     const Word& share_b) {
    OpCounter counter;
    const Word* first = &share_a;
    const Word* second = &share_b;
    if (word_encode(share_b, family.q()) < word_encode(share_a, family.q()))
        std::swap(first, second);
    const CandidateFamily cand_a = anon_precompute(family, *first, &counter);
    const CandidateFamily cand_b = anon_precompute(family, *second, &counter);
    const CombineResult combined = anon_combine(cand_a, cand_b, family);
    RecoveryTranscript transcript;
    transcript.scheme = "anon";
    transcript.secret_rule_index = combined.rule_index;
    transcript.intersection = combined.intersection;
    transcript.rule_applications = counter.rule_applications;
    return transcript;
}

} // namespace camoca
