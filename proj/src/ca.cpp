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

#include "camoca/ca.hpp"

#include <algorithm>

namespace camoca {

long long word_encode(const Word& w, int q) {
    long long value = 0;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (w[i] < 0 || w[i] >= q) throw Error("symbol out of range");
        value = value * q + w[i];
    }
    return value;
}

Word word_decode(long long value, int q, int length) {
    if (value < 0) throw Error("word encoding must be non-negative");
    Word w(length, 0);
    for (int i = 0; i < length; ++i) {
        w[i] = static_cast<int>(value % q);
        value /= q;
    }
    if (value != 0) throw Error("word encoding out of range for length");
    return w;
}

std::string word_to_digits(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int v : w) s.push_back(digit_to_char(v));
    return s;
}

Word word_from_digits(const std::string& digits, int q) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) w.push_back(char_to_digit(c, q));
    return w;
}

LocalRule::LocalRule(FieldPtr field, int d, std::vector<int> table)
    : field_(std::move(field)), d_(d), table_(std::move(table)) {}

LocalRule LocalRule::from_table(FieldPtr field, int d, std::vector<int> table) {
    if (!field) throw Error("rule needs a field");
    if (d < 1) throw Error("diameter must be at least 1");
    const long long expected = [&] {
        long long v = 1;
        for (int i = 0; i < d; ++i) {
            if (v > (1LL << 40) / field->q()) throw Error("rule table too large");
            v *= field->q();
        }
        return v;
    }();
    if (static_cast<long long>(table.size()) != expected)
        throw Error("rule table must have q^d entries, expected " + std::to_string(expected) +
                    ", got " + std::to_string(table.size()));
    for (int v : table)
        if (!field->valid(v)) throw Error("rule table entry out of range");
    LocalRule rule(std::move(field), d, std::move(table));
    rule.detect_linear();
    return rule;
}

LocalRule LocalRule::from_wolfram(std::uint64_t code, int d) {
    if (d < 1 || d > 5) throw Error("Wolfram codes are supported for diameters 1..5");
    const int rows = 1 << d;
    if (d < 6 && rows < 64 && code >= (1ULL << rows))
        throw Error("Wolfram code out of range for diameter " + std::to_string(d));
    auto field = Field::make(2, 1);
    std::vector<int> table(rows, 0);
    for (int idx = 0; idx < rows; ++idx) {
        // idx encodes the neighborhood with x_1 least significant; the code
        // bit position reads the same bits with x_1 most significant.
        int pos = 0;
        for (int j = 0; j < d; ++j)
            if ((idx >> j) & 1) pos |= 1 << (d - 1 - j);
        table[idx] = static_cast<int>((code >> pos) & 1);
    }
    return from_table(std::move(field), d, std::move(table));
}

LocalRule LocalRule::from_coefficients(FieldPtr field, std::vector<int> coeffs) {
    if (!field) throw Error("rule needs a field");
    if (coeffs.empty()) throw Error("coefficient list must not be empty");
    const int d = static_cast<int>(coeffs.size());
    if (d < 2) throw Error("linear rule needs diameter at least 2");
    for (int c : coeffs)
        if (!field->valid(c)) throw Error("rule coefficient out of range");
    long long size = 1;
    for (int i = 0; i < d; ++i) size *= field->q();
    std::vector<int> table(size, 0);
    Word x(d, 0);
    for (long long idx = 0; idx < size; ++idx) {
        int acc = 0;
        for (int j = 0; j < d; ++j) acc = field->add(acc, field->mul(coeffs[j], x[j]));
        table[idx] = acc;
        for (int j = 0; j < d; ++j) {
            if (++x[j] < field->q()) break;
            x[j] = 0;
        }
    }
    return from_table(std::move(field), d, std::move(table));
}

void LocalRule::detect_linear() {
    const int q = field_->q();
    std::vector<int> coeffs(d_, 0);
    for (int j = 0; j < d_; ++j) {
        long long unit = 1;
        for (int i = 0; i < j; ++i) unit *= q;
        coeffs[j] = table_[unit];
    }
    Word x(d_, 0);
    for (long long idx = 0; idx < static_cast<long long>(table_.size()); ++idx) {
        int acc = 0;
        for (int j = 0; j < d_; ++j) acc = field_->add(acc, field_->mul(coeffs[j], x[j]));
        if (acc != table_[idx]) return;
        for (int j = 0; j < d_; ++j) {
            if (++x[j] < q) break;
            x[j] = 0;
        }
    }
    linear_ = std::move(coeffs);
}

Polynomial LocalRule::associated_polynomial() const {
    if (!linear_) throw Error("rule is not linear");
    return {field_, *linear_};
}

std::uint64_t LocalRule::wolfram_code() const {
    if (field_->q() != 2) throw Error("Wolfram codes exist for binary rules only");
    if (d_ > 5) throw Error("Wolfram codes are supported for diameters 1..5");
    std::uint64_t code = 0;
    for (size_t idx = 0; idx < table_.size(); ++idx) {
        if (!table_[idx]) continue;
        int pos = 0;
        for (int j = 0; j < d_; ++j)
            if ((idx >> j) & 1) pos |= 1 << (d_ - 1 - j);
        code |= 1ULL << pos;
    }
    return code;
}

int LocalRule::apply(std::span<const int> neighborhood) const {
    if (static_cast<int>(neighborhood.size()) != d_)
        throw Error("neighborhood size must equal the diameter");
    long long idx = 0;
    const int q = field_->q();
    for (int i = d_ - 1; i >= 0; --i) {
        if (neighborhood[i] < 0 || neighborhood[i] >= q) throw Error("symbol out of range");
        idx = idx * q + neighborhood[i];
    }
    return table_[idx];
}

bool LocalRule::operator==(const LocalRule& other) const {
    return d_ == other.d_ && same_field(field_, other.field_) && table_ == other.table_;
}

Permutivity permutivity(const LocalRule& rule) {
    const int q = rule.q();
    const int d = rule.d();
    const long long rest = static_cast<long long>(rule.table().size()) / q;

    Permutivity result{true, true};
    // Leftmost: x_1 is the least significant index digit, so the q entries of
    // a restriction sit at stride 1.
    for (long long r = 0; r < rest && result.leftmost; ++r) {
        std::vector<bool> seen(q, false);
        for (int s = 0; s < q; ++s) {
            const int out = rule.apply_index(r * q + s);
            if (seen[out]) { result.leftmost = false; break; }
            seen[out] = true;
        }
    }
    // Rightmost: x_d is the most significant digit, stride q^(d-1).
    long long stride = 1;
    for (int i = 1; i < d; ++i) stride *= q;
    for (long long r = 0; r < rest && result.rightmost; ++r) {
        std::vector<bool> seen(q, false);
        for (int s = 0; s < q; ++s) {
            const int out = rule.apply_index(r + s * stride);
            if (seen[out]) { result.rightmost = false; break; }
            seen[out] = true;
        }
    }
    return result;
}

bool is_bipermutive(const LocalRule& rule) { return permutivity(rule).bipermutive(); }

Word evaluate(const LocalRule& rule, const Word& input, OpCounter* counter) {
    const int d = rule.d();
    const int n = static_cast<int>(input.size());
    if (n < d) throw Error("configuration shorter than the rule diameter");
    Word out(n - d + 1);
    for (int i = 0; i + d <= n; ++i) {
        out[i] = rule.apply(std::span<const int>(input.data() + i, d));
        if (counter) ++counter->rule_applications;
    }
    return out;
}

LocalRule generating_function(const LocalRule& rule) {
    if (rule.q() != 2) throw Error("generating function is defined for binary rules");
    if (rule.d() < 3) throw Error("generating function needs diameter at least 3");
    if (!is_bipermutive(rule)) throw Error("generating function needs a bipermutive rule");
    const int gd = rule.d() - 2;
    std::vector<int> table(1LL << gd, 0);
    Word x(rule.d(), 0);
    for (long long inner = 0; inner < static_cast<long long>(table.size()); ++inner) {
        long long rest = inner;
        for (int j = 1; j <= gd; ++j) {
            x[j] = static_cast<int>(rest & 1);
            rest >>= 1;
        }
        table[inner] = rule.apply(x);  // g(y) = f(0, y, 0)
    }
    return LocalRule::from_table(rule.field(), gd, std::move(table));
}

std::vector<std::vector<int>> transition_matrix(const LocalRule& rule, int n) {
    if (!rule.is_linear()) throw Error("transition matrix requires a linear rule");
    const int d = rule.d();
    if (n < d) throw Error("input length must be at least the diameter");
    const auto& coeffs = *rule.linear_coefficients();
    std::vector<std::vector<int>> matrix(n - d + 1, std::vector<int>(n, 0));
    for (int i = 0; i + d <= n; ++i)
        for (int j = 0; j < d; ++j) matrix[i][i + j] = coeffs[j];
    return matrix;
}

} // namespace camoca
