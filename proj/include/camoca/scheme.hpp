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

#ifndef CAMOCA_SCHEME_HPP
#define CAMOCA_SCHEME_HPP

#include <string>
#include <vector>

#include "camoca/latin.hpp"
#include "camoca/rng.hpp"

namespace camoca {

// Two (2, n) threshold protocols over a public family of pairwise
// orthogonal bipermutive rules.
//
// Basic scheme: the secret is a block S of d - 1 cells. The dealer draws a
// random block R, forms x = S || R and hands player i the output of rule i
// on x. Two players recover x through the coupled de Bruijn graphs of
// their rules; each player must know which rule is theirs.
//
// Anonymous scheme: the secret is one of the family's rules. The dealer
// draws a random block R and distributes the q^(d-1) preimages of R under
// the secret rule, one per player. Any two players compare the preimage
// sets of their shares under every rule; the single common set pins down
// the secret rule without tying any share to a player identity.
//
// The interactive step is realized here as a plain intersection by a
// combiner that sees both candidate families. That breaks anonymity
// between the two cooperating players themselves (each could spot the
// other's share as the one element common to all received sets); running
// the step under a private set intersection protocol would avoid this, and
// is out of scope.

/// Dealer output of the basic scheme.
struct BasicDeal {
    MocaFamily family;
    Word secret;        // S, length d - 1
    Word random_block;  // R, dealer-private
    std::vector<Word> shares;
};

/// Dealer output of the anonymous scheme.
struct AnonDeal {
    MocaFamily family;
    int secret_index = 0;  // 1-based rule index
    Word random_block;     // R, dealer-private
    std::vector<Word> shares;  // the q^(d-1) preimages of R in canonical order
};

/// One player's non-interactive recovery state in the anonymous scheme:
/// for every public rule, the output block of the share and the full
/// preimage set of that block, as sorted cell indices.
struct CandidateFamily {
    struct Entry {
        int rule_index = 0;  // 1-based
        Word output_block;
        std::vector<long long> cells;
    };
    Word share;
    std::vector<Entry> entries;

    std::vector<std::vector<long long>> sets() const;
};

/// What a recovery run did, for reporting: the recovered secret, the
/// intersection that produced it, and the cost counter. Independent of the
/// order the two shares were supplied in.
struct RecoveryTranscript {
    std::string scheme;                   // "basic" or "anon"
    Word secret_block;                    // basic
    int secret_rule_index = 0;            // anon, 1-based
    std::vector<long long> intersection;  // anon: the common preimage set
    long long rule_applications = 0;
};

BasicDeal basic_setup(const MocaFamily& family, const Word& secret, Rng& rng);

/// Test hook: same as basic_setup with the random block fixed.
BasicDeal basic_setup_with_r(const MocaFamily& family, const Word& secret, const Word& r);

/// Recovers the secret block from the shares of players i and j (1-based
/// rule indices, i != j) by unique-path reconstruction on the coupled
/// de Bruijn graph; the secret is the left half of the reconstructed input.
Word basic_recover(const MocaFamily& family, int rule_i, int rule_j,
                   const Word& share_i, const Word& share_j, OpCounter* counter = nullptr);

AnonDeal anon_setup(const MocaFamily& family, int secret_index, Rng& rng);
AnonDeal anon_setup_with_r(const MocaFamily& family, int secret_index, const Word& r);

/// The non-interactive step run by one player on their share.
CandidateFamily anon_precompute(const MocaFamily& family, const Word& share,
                                OpCounter* counter = nullptr);

struct CombineResult {
    std::vector<long long> intersection;
    int rule_index = 0;  // 1-based
};

/// Intersects two candidate families as sets of whole preimage sets. The
/// unique common set identifies the secret rule. Throws SameShareError for
/// identical inputs, NoPathError when nothing is common (shares from
/// different deals) and AmbiguityError when more than one set is (public
/// family not pairwise orthogonal).
CombineResult anon_combine(const CandidateFamily& a, const CandidateFamily& b,
                           const MocaFamily& family);

/// Same intersection on bare set lists, e.g. read back from files.
CombineResult anon_combine_sets(const std::vector<std::vector<long long>>& a,
                                const std::vector<std::vector<long long>>& b);

/// Number of output blocks R with share in the preimage set of R under
/// rule k; always 1 since the global rule is a function. Counted by
/// exhaustive scan, as the mechanically checkable form of the one-share
/// security argument.
int consistency_count(const MocaFamily& family, int rule_index, const Word& share);

RecoveryTranscript run_basic_recovery(const MocaFamily& family, int rule_i, int rule_j,
                                      const Word& share_i, const Word& share_j);
RecoveryTranscript run_anon_recovery(const MocaFamily& family, const Word& share_a,
                                     const Word& share_b);

} // namespace camoca

#endif
