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

#ifndef CAMOCA_GF_HPP
#define CAMOCA_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "camoca/error.hpp"

namespace camoca {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_q, q = p^m. Elements are encoded as integers 0..q-1: the
/// base-p digits of an element are the coefficients of its residue
/// polynomial, lowest degree in the least significant digit. For m > 1 the
/// modulus is the least monic irreducible of degree m over F_p, comparing
/// polynomials by their base-p coefficient value; this makes the encoding
/// deterministic, so serialized objects never need to carry the modulus.
class Field {
public:
    /// Builds F_{p^m}. Throws Error for non-prime p, m < 1, or p^m > max_order.
    static FieldPtr make(int p, int m, long long max_order = kDefaultMaxOrder);

    static constexpr long long kDefaultMaxOrder = 256;

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }

    /// Modulus coefficients over F_p, low to high, monic. Empty when m == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    bool valid(int a) const { return a >= 0 && a < q_; }

    int add(int a, int b) const { check2(a, b); return add_[a * q_ + b]; }
    int sub(int a, int b) const { check2(a, b); return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { check2(a, b); return mul_[a * q_ + b]; }
    int neg(int a) const { check1(a); return neg_[a]; }
    int inv(int a) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Field() = default;
    void build_tables();
    void check1(int a) const {
        if (!valid(a)) throw Error("field element out of range");
    }
    void check2(int a, int b) const { check1(a); check1(b); }

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// True when the two handles denote the same field (identity or structure).
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Univariate polynomial over a field, stored as coefficients low to high
/// with no trailing zeros. The zero polynomial has no degree.
class Polynomial {
public:
    Polynomial(FieldPtr field, std::vector<int> coeffs);

    static Polynomial zero(FieldPtr field) { return {std::move(field), {}}; }
    static Polynomial one(FieldPtr field) { return {std::move(field), {1}}; }

    /// Parses a digit string, coefficients low to high ("101" is 1 + X^2).
    static Polynomial from_digits(FieldPtr field, const std::string& digits);

    const FieldPtr& field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    std::optional<int> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of X^i (zero beyond the stored degree).
    int coeff(int i) const;

    std::string to_digits() const;

    Polynomial monic() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    FieldPtr field_;
    std::vector<int> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd by Euclid's algorithm; gcd(a, 0) is monic(a). Throws when both
/// inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Orders polynomials by their base-q coefficient value (degree first, then
/// coefficients compared from the highest down). Matches the enumeration
/// order used everywhere in this library.
bool poly_value_less(const Polynomial& a, const Polynomial& b);

/// Moebius function: +1 / -1 for squarefree n with an even / odd number of
/// prime factors, 0 otherwise.
int mobius(long long n);

/// Number of monic irreducible polynomials of degree r over the field,
/// (1/r) * sum over t | r of mobius(t) * q^(r/t).
long long irreducible_count(const FieldPtr& field, int r);

/// All monic irreducibles of degree r in ascending value order, found by
/// trial division against every monic of degree <= r/2. The candidate count
/// q^r must stay within max_candidates.
std::vector<Polynomial> enumerate_irreducibles(const FieldPtr& field, int r,
                                               long long max_candidates = 1 << 20);

/// Digit alphabet shared by every serialized word and polynomial: 0-9 then
/// a-z, so alphabets up to q = 36 have single-character symbols.
char digit_to_char(int v);
int char_to_digit(char c, int q);

} // namespace camoca

#endif
