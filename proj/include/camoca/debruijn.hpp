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

#ifndef CAMOCA_DEBRUIJN_HPP
#define CAMOCA_DEBRUIJN_HPP

#include <iosfwd>
#include <vector>

#include "camoca/ca.hpp"

namespace camoca {

/// Fusion of two overlapping words of length d-1: u extended by the
/// rightmost symbol of v. Throws unless u_2..u_{d-1} equals v_1..v_{d-2}.
Word fusion(const Word& u, const Word& v);

/// De Bruijn graph of a local rule: vertices are the words of length d - 1,
/// an edge joins u to v when they overlap on d - 2 symbols, and the edge
/// carries the label f(u fused with v). Vertices are handled through their
/// word encoding; the edge (u, v) is addressed by u and the rightmost
/// symbol s of v.
class DeBruijnGraph {
public:
    explicit DeBruijnGraph(LocalRule rule);

    const LocalRule& rule() const { return rule_; }
    int q() const { return rule_.q(); }
    int d() const { return rule_.d(); }
    long long vertex_count() const { return vertex_count_; }

    Word vertex_word(long long v) const { return word_decode(v, q(), d() - 1); }
    long long vertex_encode(const Word& w) const;

    /// Successor along the edge that appends symbol s.
    long long next_vertex(long long v, int s) const;

    /// Label of the edge from v that appends symbol s: f applied to the
    /// fused d-word, which is table entry v + s * q^(d-1).
    int label(long long v, int s) const { return rule_.apply_index(v + s * vertex_count_); }

    /// Edge list "u v label" with words in digit form, ordered by vertex
    /// encoding then appended symbol. Debugging aid, not a stable format.
    void write_edge_list(std::ostream& os) const;

private:
    LocalRule rule_;
    long long vertex_count_;
};

/// All preimages of the output block y under a bipermutive rule: exactly
/// q^(d-1) configurations of length |y| + d - 1, one per starting vertex of
/// the de Bruijn graph, found by following from each vertex the unique
/// outgoing edge matching the next symbol of y. Returned in ascending order
/// of the start vertex encoding, which for |y| = d - 1 coincides with the
/// ascending cell index of the configuration.
std::vector<Word> preimages(const LocalRule& rule, const Word& y, OpCounter* counter = nullptr);

/// Unique input configuration of length 2(d-1) mapping to block_i under
/// rule_i and to block_j under rule_j. Follows the rule_i-consistent path
/// from every start vertex and keeps the one whose rule_j labels also
/// match. Throws NoPathError when no start survives (corrupted shares or a
/// non-orthogonal pair) and AmbiguityError when several do (the pair is not
/// orthogonal, so the public family is invalid).
Word coupled_recover(const LocalRule& rule_i, const LocalRule& rule_j,
                     const Word& block_i, const Word& block_j,
                     OpCounter* counter = nullptr);

} // namespace camoca

#endif
