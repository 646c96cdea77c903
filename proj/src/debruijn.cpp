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

#include "camoca/debruijn.hpp"

#include <ostream>

namespace camoca {

Word fusion(const Word& u, const Word& v) {
    if (u.size() != v.size() || u.empty())
        throw Error("fusion needs two words of equal positive length");
    for (size_t i = 1; i < u.size(); ++i)
        if (u[i] != v[i - 1]) throw Error("words do not overlap");
    Word out = u;
    out.push_back(v.back());
    return out;
}

DeBruijnGraph::DeBruijnGraph(LocalRule rule) : rule_(std::move(rule)) {
    if (rule_.d() < 2) throw Error("de Bruijn graph needs diameter at least 2");
    vertex_count_ = 1;
    for (int i = 1; i < rule_.d(); ++i) vertex_count_ *= rule_.q();
}

long long DeBruijnGraph::vertex_encode(const Word& w) const {
    if (static_cast<int>(w.size()) != d() - 1)
        throw Error("vertex word must have length d - 1");
    return word_encode(w, q());
}

long long DeBruijnGraph::next_vertex(long long v, int s) const {
    // Dropping the leftmost symbol shifts out the low digit; the appended
    // symbol becomes the new high digit.
    return v / q() + static_cast<long long>(s) * (vertex_count_ / q());
}

void DeBruijnGraph::write_edge_list(std::ostream& os) const {
    for (long long v = 0; v < vertex_count_; ++v) {
        const Word u = vertex_word(v);
        for (int s = 0; s < q(); ++s) {
            const Word w = vertex_word(next_vertex(v, s));
            os << word_to_digits(u) << ' ' << word_to_digits(w) << ' '
               << digit_to_char(label(v, s)) << '\n';
        }
    }
}

namespace {

// Follows the unique outgoing edge labelled with each symbol of y, starting
// from the given vertex. Scans all q outgoing edges per step so the
// operation count stays data-independent; bipermutivity guarantees exactly
// one match.
Word follow_path(const DeBruijnGraph& graph, long long start, const Word& y,
                 OpCounter* counter) {
    const int q = graph.q();
    Word config = graph.vertex_word(start);
    config.reserve(config.size() + y.size());
    long long v = start;
    for (int out : y) {
        int chosen = -1;
        for (int s = 0; s < q; ++s) {
            if (counter) ++counter->rule_applications;
            if (graph.label(v, s) == out) chosen = s;
        }
        if (chosen < 0) throw Error("no outgoing edge carries the required label");
        config.push_back(chosen);
        v = graph.next_vertex(v, chosen);
    }
    return config;
}

} // namespace

std::vector<Word> preimages(const LocalRule& rule, const Word& y, OpCounter* counter) {
    if (!is_bipermutive(rule)) throw Error("preimage enumeration needs a bipermutive rule");
    if (y.empty()) throw Error("output block must not be empty");
    for (int s : y)
        if (s < 0 || s >= rule.q()) throw Error("symbol out of range");

    const DeBruijnGraph graph(rule);
    std::vector<Word> result;
    result.reserve(graph.vertex_count());
    for (long long v = 0; v < graph.vertex_count(); ++v)
        result.push_back(follow_path(graph, v, y, counter));
    return result;
}

Word coupled_recover(const LocalRule& rule_i, const LocalRule& rule_j,
                     const Word& block_i, const Word& block_j, OpCounter* counter) {
    if (!same_field(rule_i.field(), rule_j.field()) || rule_i.d() != rule_j.d())
        throw Error("coupled recovery needs rules over the same alphabet and diameter");
    const int d = rule_i.d();
    if (static_cast<int>(block_i.size()) != d - 1 || static_cast<int>(block_j.size()) != d - 1)
        throw Error("blocks must have length d - 1");
    if (!is_bipermutive(rule_i) || !is_bipermutive(rule_j))
        throw Error("coupled recovery needs bipermutive rules");

    const DeBruijnGraph graph(rule_i);
    std::vector<Word> survivors;
    for (long long v = 0; v < graph.vertex_count(); ++v) {
        const Word candidate = follow_path(graph, v, block_i, counter);
        if (evaluate(rule_j, candidate, counter) == block_j) survivors.push_back(candidate);
    }
    if (survivors.empty())
        throw NoPathError("no input maps to both blocks: shares are corrupted or the rules are not orthogonal");
    if (survivors.size() > 1)
        throw AmbiguityError("several inputs map to both blocks: the rule pair is not orthogonal");
    return survivors.front();
}

} // namespace camoca
