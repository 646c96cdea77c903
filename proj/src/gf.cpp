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

#include "camoca/gf.hpp"

#include <algorithm>
#include <numeric>

namespace camoca {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; static_cast<long long>(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Digit-vector helpers for elements of extension fields: an element is the
// base-p digit vector of its residue polynomial, low digit first.
std::vector<int> to_digits(int value, int p, int m) {
    std::vector<int> d(m, 0);
    for (int i = 0; i < m; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Multiplies two residue polynomials over F_p and reduces mod the monic
// modulus (coefficients low to high, degree m).
std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& modulus, int p) {
    const int m = static_cast<int>(modulus.size()) - 1;
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int i = 2 * m - 2; i >= m; --i) {
        const int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < m; ++j)
            prod[i - m + j] = ((prod[i - m + j] - c * modulus[j]) % p + p * p) % p;
    }
    prod.resize(m);
    return prod;
}

long long checked_pow(long long base, int exp, long long limit) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > limit / base) throw Error("power exceeds supported range");
        v *= base;
    }
    return v;
}

} // namespace

FieldPtr Field::make(int p, int m, long long max_order) {
    if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw Error("extension degree must be at least 1");
    const long long q = checked_pow(p, m, (1LL << 30));
    if (q > max_order)
        throw Error("field order " + std::to_string(q) + " exceeds bound " +
                    std::to_string(max_order));

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<int>(q);
    if (m > 1) {
        auto prime_field = Field::make(p, 1, max_order);
        auto irreducibles = enumerate_irreducibles(prime_field, m);
        field->modulus_ = irreducibles.front().coeffs();
    }
    field->build_tables();
    return field;
}

void Field::build_tables() {
    add_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, -1);

    if (m_ == 1) {
        for (int a = 0; a < q_; ++a) {
            neg_[a] = (q_ - a) % q_;
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = (a + b) % q_;
                mul_[a * q_ + b] = (a * b) % q_;
            }
        }
    } else {
        for (int a = 0; a < q_; ++a) {
            const auto da = to_digits(a, p_, m_);
            std::vector<int> nd(m_);
            for (int i = 0; i < m_; ++i) nd[i] = (p_ - da[i]) % p_;
            neg_[a] = from_digits(nd, p_);
            for (int b = 0; b < q_; ++b) {
                const auto db = to_digits(b, p_, m_);
                std::vector<int> sd(m_);
                for (int i = 0; i < m_; ++i) sd[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = from_digits(sd, p_);
                mul_[a * q_ + b] = from_digits(mul_mod(da, db, modulus_, p_), p_);
            }
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

int Field::inv(int a) const {
    check1(a);
    if (a == 0) throw Error("inversion of zero");
    return inv_[a];
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Polynomial::Polynomial(FieldPtr field, std::vector<int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error("polynomial needs a field");
    for (int c : coeffs_)
        if (!field_->valid(c)) throw Error("polynomial coefficient out of range");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_digits(FieldPtr field, const std::string& digits) {
    std::vector<int> coeffs;
    coeffs.reserve(digits.size());
    for (char c : digits) coeffs.push_back(char_to_digit(c, field->q()));
    return {std::move(field), std::move(coeffs)};
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

int Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

std::string Polynomial::to_digits() const {
    std::string s;
    s.reserve(coeffs_.size());
    for (int c : coeffs_) s.push_back(digit_to_char(c));
    return s;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw Error("zero polynomial has no monic form");
    if (coeffs_.back() == 1) return *this;
    const int scale = field_->inv(coeffs_.back());
    std::vector<int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], scale);
    return {field_, std::move(out)};
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

namespace {
void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!same_field(a.field(), b.field()))
        throw Error("polynomial operands belong to different fields");
}
} // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const auto& f = *a.field();
    std::vector<int> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return {a.field(), std::move(out)};
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const auto& f = *a.field();
    std::vector<int> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return {a.field(), std::move(out)};
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
    const auto& f = *a.field();
    std::vector<int> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    return {a.field(), std::move(out)};
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error("division by zero polynomial");
    const auto& f = *a.field();
    std::vector<int> rem = a.coeffs();
    const auto& div = b.coeffs();
    if (rem.size() < div.size()) return {Polynomial::zero(a.field()), a};
    std::vector<int> quot(rem.size() - div.size() + 1, 0);
    const int lead_inv = f.inv(div.back());
    for (int shift = static_cast<int>(quot.size()) - 1; shift >= 0; --shift) {
        const int c = f.mul(rem[shift + div.size() - 1], lead_inv);
        quot[shift] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < div.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, div[i]));
    }
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = poly_divmod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

bool poly_value_less(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs().size() != b.coeffs().size())
        return a.coeffs().size() < b.coeffs().size();
    for (int i = static_cast<int>(a.coeffs().size()) - 1; i >= 0; --i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

int mobius(long long n) {
    if (n <= 0) throw Error("mobius needs a positive argument");
    int factors = 0;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

long long irreducible_count(const FieldPtr& field, int r) {
    if (r < 1) throw Error("degree must be at least 1");
    long long total = 0;
    for (int t = 1; t <= r; ++t) {
        if (r % t != 0) continue;
        total += mobius(t) * checked_pow(field->q(), r / t, (1LL << 62));
    }
    return total / r;
}

std::vector<Polynomial> enumerate_irreducibles(const FieldPtr& field, int r,
                                               long long max_candidates) {
    if (r < 1) throw Error("degree must be at least 1");
    const int q = field->q();
    const long long count = checked_pow(q, r, (1LL << 62));
    if (count > max_candidates)
        throw Error("irreducible enumeration bound exceeded");

    // Monics of degree s, ascending base-q value of the low coefficients.
    auto monics_of_degree = [&](int s) {
        std::vector<Polynomial> out;
        const long long n = checked_pow(q, s, (1LL << 62));
        for (long long v = 0; v < n; ++v) {
            std::vector<int> coeffs(s + 1, 0);
            long long rest = v;
            for (int i = 0; i < s; ++i) {
                coeffs[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            coeffs[s] = 1;
            out.emplace_back(field, std::move(coeffs));
        }
        return out;
    };

    std::vector<std::vector<Polynomial>> divisors;
    for (int s = 1; s <= r / 2; ++s) divisors.push_back(monics_of_degree(s));

    std::vector<Polynomial> result;
    for (auto& cand : monics_of_degree(r)) {
        bool reducible = false;
        for (const auto& level : divisors) {
            for (const auto& g : level) {
                if (poly_divmod(cand, g).second.is_zero()) {
                    reducible = true;
                    break;
                }
            }
            if (reducible) break;
        }
        if (!reducible) result.push_back(std::move(cand));
    }
    return result;
}

char digit_to_char(int v) {
    if (v < 0 || v >= 36) throw Error("digit out of range for string form (max alphabet 36)");
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

int char_to_digit(char c, int q) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    else throw Error(std::string("invalid digit character '") + c + "'");
    if (v >= q) throw Error(std::string("digit '") + c + "' out of range for alphabet size " + std::to_string(q));
    return v;
}

} // namespace camoca
