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

#ifndef CAMOCA_CA_HPP
#define CAMOCA_CA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "camoca/gf.hpp"

namespace camoca {

/// A configuration: a word of field elements, leftmost cell first.
using Word = std::vector<int>;

/// Little-endian integer encoding of a word: the leftmost symbol is the
/// least significant base-q digit. This single convention drives table
/// indexing, de Bruijn vertex numbering and the row/column mapping of
/// Cayley tables.
long long word_encode(const Word& w, int q);
Word word_decode(long long value, int q, int length);

std::string word_to_digits(const Word& w);
Word word_from_digits(const std::string& digits, int q);

/// Counts local-rule applications across an operation, for cost reporting.
struct OpCounter {
    long long rule_applications = 0;
};

/// A d-variable local rule f: Sigma^d -> Sigma held as a lookup table of
/// q^d entries. The table is indexed by the word encoding of the
/// neighborhood (x_1..x_d). Linear rules additionally carry their
/// coefficients (a_1..a_d) with f(x) = a_1 x_1 + ... + a_d x_d; these are
/// detected by an exhaustive check at construction.
class LocalRule {
public:
    /// Any rule from its q^d-entry lookup table.
    static LocalRule from_table(FieldPtr field, int d, std::vector<int> table);

    /// Binary rule of diameter d from its Wolfram code: the output column of
    /// the truth table read as an integer, f(1,..,1) most significant.
    /// Supports d <= 5 (codes up to 2^32).
    static LocalRule from_wolfram(std::uint64_t code, int d);

    /// Linear rule with the given coefficients (a_1..a_d), d >= 2.
    static LocalRule from_coefficients(FieldPtr field, std::vector<int> coeffs);

    const FieldPtr& field() const { return field_; }
    int d() const { return d_; }
    int q() const { return field_->q(); }
    const std::vector<int>& table() const { return table_; }

    bool is_linear() const { return linear_.has_value(); }
    const std::optional<std::vector<int>>& linear_coefficients() const { return linear_; }

    /// The polynomial a_1 + a_2 X + ... + a_d X^(d-1) of a linear rule.
    Polynomial associated_polynomial() const;

    /// Wolfram code of a binary rule with d <= 5.
    std::uint64_t wolfram_code() const;

    int apply(std::span<const int> neighborhood) const;
    int apply_index(long long table_index) const { return table_[table_index]; }

    bool operator==(const LocalRule& other) const;

private:
    LocalRule(FieldPtr field, int d, std::vector<int> table);
    void detect_linear();

    FieldPtr field_;
    int d_;
    std::vector<int> table_;
    std::optional<std::vector<int>> linear_;
};

struct Permutivity {
    bool leftmost = false;
    bool rightmost = false;
    bool bipermutive() const { return leftmost && rightmost; }
};

/// Exhaustively classifies the rule: leftmost permutive when every
/// restriction to x_1 is a permutation of the alphabet, rightmost
/// symmetrically.
Permutivity permutivity(const LocalRule& rule);

bool is_bipermutive(const LocalRule& rule);

/// One application of the no-boundary global rule: output length n - d + 1,
/// coordinate i is f(x_i, .., x_{i+d-1}).
Word evaluate(const LocalRule& rule, const Word& input, OpCounter* counter = nullptr);

/// For a binary bipermutive rule f of diameter d >= 3, the unique g with
/// f(x) = x_1 xor g(x_2..x_{d-1}) xor x_d, returned as a rule of diameter d - 2.
LocalRule generating_function(const LocalRule& rule);

/// Transition matrix of a linear rule on n input cells: n - d + 1 rows,
/// row i carries the coefficients in columns i..i+d-1.
std::vector<std::vector<int>> transition_matrix(const LocalRule& rule, int n);

} // namespace camoca

#endif
