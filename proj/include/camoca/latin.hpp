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

#ifndef CAMOCA_LATIN_HPP
#define CAMOCA_LATIN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "camoca/ca.hpp"
#include "camoca/debruijn.hpp"

namespace camoca {

/// Bijection between words of length d - 1 and 1-based indices [N],
/// N = q^(d-1), with the leftmost symbol least significant, plus the pair
/// codec mapping (i, j) in [N] x [N] to the single cell index N(i-1) + j.
class IndexCodec {
public:
    IndexCodec(FieldPtr field, int d);

    int q() const { return field_->q(); }
    int d() const { return d_; }
    long long N() const { return n_; }

    long long encode(const Word& w) const;
    Word decode(long long index) const;

    long long pair_to_cell(long long i, long long j) const;
    std::pair<long long, long long> cell_to_pair(long long cell) const;

    /// Cell index of a full input configuration of length 2(d-1): its left
    /// half encodes the row, its right half the column.
    long long config_to_cell(const Word& x) const;
    Word cell_to_config(long long cell) const;

private:
    FieldPtr field_;
    int d_;
    long long n_;
};

/// Square matrix with entries in [N], stored row-major. Construction
/// validates shape and entry range only; Latinness is a separate predicate.
class LatinSquare {
public:
    LatinSquare(long long order, std::vector<int> entries,
                std::optional<LocalRule> provenance = std::nullopt);

    long long order() const { return order_; }
    int at(long long row, long long col) const;  // 1-based coordinates
    const std::vector<int>& entries() const { return entries_; }
    const std::optional<LocalRule>& provenance() const { return provenance_; }
    LatinSquare transpose() const;

    bool operator==(const LatinSquare& other) const {
        return order_ == other.order_ && entries_ == other.entries_;
    }

private:
    long long order_;
    std::vector<int> entries_;
    std::optional<LocalRule> provenance_;
};

/// Cayley table of the no-boundary CA with the given bipermutive rule:
/// entry (i, j) is the encoded output of the rule applied to the
/// concatenation of the decoded row and column words. Refuses
/// non-bipermutive rules, whose tables would not be Latin.
LatinSquare cayley_table(const LocalRule& rule);

/// True iff every row and every column is a permutation of [N].
bool is_latin(const LatinSquare& square);

/// Brute-force orthogonality: the N^2 superposed entry pairs are distinct.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Orthogonality of two linear bipermutive rules through the coprimality of
/// their associated polynomials. Throws for nonlinear rules.
bool orthogonal_by_gcd(const LocalRule& rule_f, const LocalRule& rule_g);

/// A validated family of bipermutive rules whose Cayley tables are
/// pairwise orthogonal (checked at construction: by polynomial gcd for
/// linear pairs, by brute force otherwise).
class MocaFamily {
public:
    static MocaFamily create(FieldPtr field, int d, std::vector<LocalRule> rules);

    const FieldPtr& field() const { return field_; }
    int q() const { return field_->q(); }
    int d() const { return d_; }
    int size() const { return static_cast<int>(rules_.size()); }
    const std::vector<LocalRule>& rules() const { return rules_; }
    const std::vector<LatinSquare>& squares() const { return squares_; }

private:
    MocaFamily() = default;
    FieldPtr field_;
    int d_ = 0;
    std::vector<LocalRule> rules_;
    std::vector<LatinSquare> squares_;
};

/// Largest family of degree-k pairwise-coprime polynomials with nonzero
/// constant term (monic), hence the largest linear family for diameter
/// k + 1: count of degree-k irreducibles other than X, plus one slot per
/// irreducible of degree at most k/2 other than X.
long long max_family_size(const FieldPtr& field, int k);

/// The same bound read off the literature formula verbatim, counting every
/// irreducible including X. Reported alongside the adjusted value; the two
/// differ because X can never divide a polynomial with nonzero constant term.
long long max_family_size_printed(const FieldPtr& field, int k);

/// Builds a family of m linear bipermutive rules of diameter d whose
/// polynomials are pairwise coprime, in deterministic order: irreducibles
/// of degree k = d - 1 first (ascending value), then prime powers of
/// lower-degree irreducibles, then a backtracking completion over
/// factorizations with disjoint irreducible support.
MocaFamily build_mols(const FieldPtr& field, int d, int m);

/// The preimage partition of one bipermutive rule: for each output block y
/// the sorted 1-based cell indices of its preimages. The classes partition
/// [N^2] and have size N each.
class ParallelClassSet {
public:
    ParallelClassSet(LocalRule rule, std::vector<std::vector<long long>> classes);

    const LocalRule& rule() const { return rule_; }
    long long N() const { return static_cast<long long>(classes_.size()); }

    /// Class of the output block with encoding value e (0-based).
    const std::vector<long long>& class_at(long long e) const;
    const std::vector<long long>& class_of(const Word& y) const;
    const std::vector<std::vector<long long>>& classes() const { return classes_; }

private:
    LocalRule rule_;
    std::vector<std::vector<long long>> classes_;
};

ParallelClassSet parallel_classes(const LocalRule& rule);

/// Exhaustive census of families of bipermutive rules of the given size
/// with pairwise orthogonal Cayley tables. Bounded to q = 2 and d in
/// {3, 4}; d = 3 scans every rule table, d = 4 enumerates bipermutive
/// rules through their generating functions. Rules are ordered by Wolfram
/// code and families by lexicographic member order.
std::vector<std::vector<LocalRule>> search_moca(const FieldPtr& field, int d, int target_size,
                                                bool include_nonlinear, bool first_only);

} // namespace camoca

#endif
