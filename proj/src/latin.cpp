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

#include "camoca/latin.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace camoca {

IndexCodec::IndexCodec(FieldPtr field, int d) : field_(std::move(field)), d_(d) {
    if (!field_) throw Error("codec needs a field");
    if (d < 2) throw Error("codec needs diameter at least 2");
    n_ = 1;
    for (int i = 1; i < d; ++i) {
        if (n_ > (1LL << 40) / field_->q()) throw Error("index space too large");
        n_ *= field_->q();
    }
}

long long IndexCodec::encode(const Word& w) const {
    if (static_cast<int>(w.size()) != d_ - 1) throw Error("word must have length d - 1");
    return 1 + word_encode(w, field_->q());
}

Word IndexCodec::decode(long long index) const {
    if (index < 1 || index > n_) throw Error("index out of range [1, N]");
    return word_decode(index - 1, field_->q(), d_ - 1);
}

long long IndexCodec::pair_to_cell(long long i, long long j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw Error("pair coordinates out of range");
    return n_ * (i - 1) + j;
}

std::pair<long long, long long> IndexCodec::cell_to_pair(long long cell) const {
    if (cell < 1 || cell > n_ * n_) throw Error("cell index out of range [1, N^2]");
    return {(cell - 1) / n_ + 1, (cell - 1) % n_ + 1};
}

long long IndexCodec::config_to_cell(const Word& x) const {
    if (static_cast<int>(x.size()) != 2 * (d_ - 1))
        throw Error("configuration must have length 2(d - 1)");
    const Word left(x.begin(), x.begin() + (d_ - 1));
    const Word right(x.begin() + (d_ - 1), x.end());
    return pair_to_cell(encode(left), encode(right));
}

Word IndexCodec::cell_to_config(long long cell) const {
    const auto [i, j] = cell_to_pair(cell);
    Word x = decode(i);
    const Word right = decode(j);
    x.insert(x.end(), right.begin(), right.end());
    return x;
}

LatinSquare::LatinSquare(long long order, std::vector<int> entries,
                         std::optional<LocalRule> provenance)
    : order_(order), entries_(std::move(entries)), provenance_(std::move(provenance)) {
    if (order < 1) throw Error("square order must be positive");
    if (static_cast<long long>(entries_.size()) != order * order)
        throw Error("square needs exactly N^2 entries");
    for (int e : entries_)
        if (e < 1 || e > order) throw Error("square entry out of range [1, N]");
}

int LatinSquare::at(long long row, long long col) const {
    if (row < 1 || row > order_ || col < 1 || col > order_)
        throw Error("square coordinates out of range");
    return entries_[(row - 1) * order_ + (col - 1)];
}

LatinSquare LatinSquare::transpose() const {
    std::vector<int> out(entries_.size());
    for (long long r = 0; r < order_; ++r)
        for (long long c = 0; c < order_; ++c) out[c * order_ + r] = entries_[r * order_ + c];
    return {order_, std::move(out), provenance_};
}

LatinSquare cayley_table(const LocalRule& rule) {
    if (!is_bipermutive(rule))
        throw Error("Cayley table requires a bipermutive rule (the table would not be Latin)");
    const IndexCodec codec(rule.field(), rule.d());
    const long long n = codec.N();
    if (n > (1 << 12)) throw Error("Cayley table order too large");
    std::vector<int> entries(n * n);
    for (long long i = 1; i <= n; ++i) {
        Word x = codec.decode(i);
        const size_t half = x.size();
        x.resize(2 * half);
        for (long long j = 1; j <= n; ++j) {
            const Word right = codec.decode(j);
            std::copy(right.begin(), right.end(), x.begin() + half);
            const Word y = evaluate(rule, x);
            entries[(i - 1) * n + (j - 1)] = static_cast<int>(1 + word_encode(y, rule.q()));
        }
    }
    return {n, std::move(entries), rule};
}

bool is_latin(const LatinSquare& square) {
    const long long n = square.order();
    for (long long r = 1; r <= n; ++r) {
        std::vector<bool> seen(n + 1, false);
        for (long long c = 1; c <= n; ++c) {
            const int v = square.at(r, c);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    for (long long c = 1; c <= n; ++c) {
        std::vector<bool> seen(n + 1, false);
        for (long long r = 1; r <= n; ++r) {
            const int v = square.at(r, c);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw Error("orthogonality needs squares of equal order");
    const long long n = a.order();
    std::vector<bool> seen(n * n, false);
    for (long long idx = 0; idx < n * n; ++idx) {
        const long long pair = static_cast<long long>(a.entries()[idx] - 1) * n + (b.entries()[idx] - 1);
        if (seen[pair]) return false;
        seen[pair] = true;
    }
    return true;
}

bool orthogonal_by_gcd(const LocalRule& rule_f, const LocalRule& rule_g) {
    if (!rule_f.is_linear() || !rule_g.is_linear())
        throw Error("gcd criterion applies to linear rules only");
    if (!same_field(rule_f.field(), rule_g.field()) || rule_f.d() != rule_g.d())
        throw Error("rules must share alphabet and diameter");
    const auto gcd = poly_gcd(rule_f.associated_polynomial(), rule_g.associated_polynomial());
    return gcd.degree() == 0;
}

MocaFamily MocaFamily::create(FieldPtr field, int d, std::vector<LocalRule> rules) {
    if (!field) throw Error("family needs a field");
    if (d < 2) throw Error("family needs diameter at least 2");
    if (rules.empty()) throw Error("family needs at least one rule");
    for (const auto& rule : rules) {
        if (!same_field(rule.field(), field) || rule.d() != d)
            throw Error("family rules must share alphabet and diameter");
        if (!is_bipermutive(rule)) throw Error("family rules must be bipermutive");
    }

    MocaFamily family;
    family.field_ = std::move(field);
    family.d_ = d;
    family.squares_.reserve(rules.size());
    for (const auto& rule : rules) family.squares_.push_back(cayley_table(rule));

    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = i + 1; j < rules.size(); ++j) {
            const bool ok = (rules[i].is_linear() && rules[j].is_linear())
                                ? orthogonal_by_gcd(rules[i], rules[j])
                                : are_orthogonal(family.squares_[i], family.squares_[j]);
            if (!ok)
                throw Error("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") not orthogonal");
        }
    }
    family.rules_ = std::move(rules);
    return family;
}

namespace {

long long irreducibles_excluding_x(const FieldPtr& field, int r) {
    // X is the only monic irreducible with zero constant term.
    return irreducible_count(field, r) - (r == 1 ? 1 : 0);
}

} // namespace

long long max_family_size(const FieldPtr& field, int k) {
    if (k < 1) throw Error("degree must be at least 1");
    long long total = irreducibles_excluding_x(field, k);
    for (int j = 1; j <= k / 2; ++j) total += irreducibles_excluding_x(field, j);
    return total;
}

long long max_family_size_printed(const FieldPtr& field, int k) {
    if (k < 1) throw Error("degree must be at least 1");
    long long total = irreducible_count(field, k);
    for (int j = 1; j <= k / 2; ++j) total += irreducible_count(field, j);
    return total;
}

namespace {

bool is_x_polynomial(const Polynomial& p) {
    return p.coeffs().size() == 2 && p.coeffs()[0] == 0 && p.coeffs()[1] == 1;
}

Polynomial poly_pow(const Polynomial& base, int exp) {
    Polynomial acc = Polynomial::one(base.field());
    for (int i = 0; i < exp; ++i) acc = poly_mul(acc, base);
    return acc;
}

// Distinct monic irreducible factors, each as a digit string key.
std::set<std::string> support_of(const Polynomial& poly,
                                 const std::vector<std::vector<Polynomial>>& irreducibles_by_degree) {
    std::set<std::string> support;
    Polynomial rest = poly;
    for (const auto& level : irreducibles_by_degree) {
        for (const auto& g : level) {
            while (true) {
                auto [quot, rem] = poly_divmod(rest, g);
                if (!rem.is_zero()) break;
                support.insert(g.to_digits());
                rest = quot;
            }
            if (rest.degree() == 0) return support;
        }
    }
    return support;
}

} // namespace

MocaFamily build_mols(const FieldPtr& field, int d, int m) {
    if (d < 2) throw Error("diameter must be at least 2");
    if (m < 2) throw Error("family size must be at least 2");
    const int k = d - 1;
    const long long cap = max_family_size(field, k);
    if (m > cap)
        throw Error("requested family size " + std::to_string(m) + " exceeds maximum " +
                    std::to_string(cap) + " for degree " + std::to_string(k));

    std::vector<std::vector<Polynomial>> irreducibles_by_degree;
    for (int r = 1; r <= k; ++r)
        irreducibles_by_degree.push_back(enumerate_irreducibles(field, r));

    std::vector<Polynomial> chosen;
    std::set<std::string> used_support;
    auto take = [&](const Polynomial& poly, const std::set<std::string>& support) {
        chosen.push_back(poly);
        used_support.insert(support.begin(), support.end());
    };

    // Irreducibles of degree k (never divisible by X except X itself).
    for (const auto& p : irreducibles_by_degree[k - 1]) {
        if (static_cast<int>(chosen.size()) == m) break;
        if (is_x_polynomial(p)) continue;
        take(p, {p.to_digits()});
    }

    // Prime powers p^(k/j) of lower-degree irreducibles p != X, j | k.
    for (int j = 1; j <= k / 2 && static_cast<int>(chosen.size()) < m; ++j) {
        if (k % j != 0) continue;
        for (const auto& p : irreducibles_by_degree[j - 1]) {
            if (static_cast<int>(chosen.size()) == m) break;
            if (is_x_polynomial(p)) continue;
            take(poly_pow(p, k / j), {p.to_digits()});
        }
    }

    // Backtracking completion over remaining degree-k polynomials with
    // nonzero constant term and pairwise-disjoint irreducible support.
    if (static_cast<int>(chosen.size()) < m) {
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= field->q();
        std::vector<std::pair<Polynomial, std::set<std::string>>> candidates;
        for (long long v = 0; v < total; ++v) {
            std::vector<int> coeffs(k + 1, 0);
            long long rest = v;
            for (int i = 0; i < k; ++i) {
                coeffs[i] = static_cast<int>(rest % field->q());
                rest /= field->q();
            }
            coeffs[k] = 1;
            if (coeffs[0] == 0) continue;
            Polynomial poly(field, std::move(coeffs));
            if (std::find(chosen.begin(), chosen.end(), poly) != chosen.end()) continue;
            auto support = support_of(poly, irreducibles_by_degree);
            bool clash = false;
            for (const auto& s : support)
                if (used_support.count(s)) { clash = true; break; }
            if (!clash) candidates.emplace_back(std::move(poly), std::move(support));
        }

        const int needed = m - static_cast<int>(chosen.size());
        std::vector<int> picked;
        auto disjoint_from_picked = [&](const std::set<std::string>& support) {
            for (int idx : picked)
                for (const auto& s : support)
                    if (candidates[idx].second.count(s)) return false;
            return true;
        };
        std::function<bool(int)> backtrack = [&](int from) -> bool {
            if (static_cast<int>(picked.size()) == needed) return true;
            for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
                if (!disjoint_from_picked(candidates[i].second)) continue;
                picked.push_back(i);
                if (backtrack(i + 1)) return true;
                picked.pop_back();
            }
            return false;
        };
        if (!backtrack(0))
            throw Error("could not assemble a pairwise-coprime family of size " + std::to_string(m));
        for (int idx : picked) chosen.push_back(candidates[idx].first);
    }

    std::vector<LocalRule> rules;
    rules.reserve(chosen.size());
    for (const auto& poly : chosen) {
        std::vector<int> coeffs(d, 0);
        for (int i = 0; i < d; ++i) coeffs[i] = poly.coeff(i);
        rules.push_back(LocalRule::from_coefficients(field, std::move(coeffs)));
    }
    return MocaFamily::create(field, d, std::move(rules));
}

ParallelClassSet::ParallelClassSet(LocalRule rule, std::vector<std::vector<long long>> classes)
    : rule_(std::move(rule)), classes_(std::move(classes)) {}

const std::vector<long long>& ParallelClassSet::class_at(long long e) const {
    if (e < 0 || e >= static_cast<long long>(classes_.size()))
        throw Error("output block encoding out of range");
    return classes_[e];
}

const std::vector<long long>& ParallelClassSet::class_of(const Word& y) const {
    return class_at(word_encode(y, rule_.q()));
}

ParallelClassSet parallel_classes(const LocalRule& rule) {
    if (!is_bipermutive(rule)) throw Error("parallel classes need a bipermutive rule");
    const IndexCodec codec(rule.field(), rule.d());
    const long long n = codec.N();
    std::vector<std::vector<long long>> classes(n);
    std::vector<bool> covered(n * n, false);
    for (long long e = 0; e < n; ++e) {
        const Word y = word_decode(e, rule.q(), rule.d() - 1);
        std::vector<long long> cells;
        cells.reserve(n);
        for (const Word& x : preimages(rule, y)) cells.push_back(codec.config_to_cell(x));
        std::sort(cells.begin(), cells.end());
        for (long long c : cells) {
            if (covered[c - 1]) throw Error("preimage classes do not partition the input space");
            covered[c - 1] = true;
        }
        classes[e] = std::move(cells);
    }
    return {rule, std::move(classes)};
}

std::vector<std::vector<LocalRule>> search_moca(const FieldPtr& field, int d, int target_size,
                                                bool include_nonlinear, bool first_only) {
    if (!field) throw Error("search needs a field");
    if (target_size < 1) throw Error("target size must be at least 1");
    if (field->q() != 2 || (d != 3 && d != 4))
        throw Error("brute-force search is bounded to q = 2 with d in {3, 4}");

    std::vector<LocalRule> rules;
    if (d == 3) {
        // Full scan of every lookup table.
        for (std::uint64_t code = 0; code < 256; ++code) {
            LocalRule rule = LocalRule::from_wolfram(code, 3);
            if (is_bipermutive(rule)) rules.push_back(std::move(rule));
        }
    } else {
        // Bipermutive rules are exactly x_1 xor g(x_2, x_3) xor x_4.
        for (int g = 0; g < 16; ++g) {
            std::vector<int> table(16, 0);
            for (int idx = 0; idx < 16; ++idx) {
                const int x1 = idx & 1, x2 = (idx >> 1) & 1, x3 = (idx >> 2) & 1, x4 = (idx >> 3) & 1;
                const int gv = (g >> (x2 + 2 * x3)) & 1;
                table[idx] = x1 ^ gv ^ x4;
            }
            rules.push_back(LocalRule::from_table(field, 4, std::move(table)));
        }
        std::sort(rules.begin(), rules.end(), [](const LocalRule& a, const LocalRule& b) {
            return a.wolfram_code() < b.wolfram_code();
        });
    }
    if (!include_nonlinear)
        std::erase_if(rules, [](const LocalRule& r) { return !r.is_linear(); });

    std::vector<LatinSquare> squares;
    squares.reserve(rules.size());
    for (const auto& rule : rules) squares.push_back(cayley_table(rule));

    std::vector<std::vector<LocalRule>> families;
    std::vector<int> picked;
    std::function<bool(int)> extend = [&](int from) -> bool {
        if (static_cast<int>(picked.size()) == target_size) {
            std::vector<LocalRule> family;
            for (int idx : picked) family.push_back(rules[idx]);
            families.push_back(std::move(family));
            return first_only;
        }
        for (int i = from; i < static_cast<int>(rules.size()); ++i) {
            bool ok = true;
            for (int idx : picked)
                if (!are_orthogonal(squares[idx], squares[i])) { ok = false; break; }
            if (!ok) continue;
            picked.push_back(i);
            if (extend(i + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    extend(0);
    return families;
}

} // namespace camoca
