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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "camoca/latin.hpp"

using namespace camoca;

namespace {

// Every linear bipermutive rule of the given diameter: both end
// coefficients nonzero, middle ones free.
std::vector<LocalRule> linear_bipermutive_rules(const FieldPtr& field, int d) {
    const int q = field->q();
    std::vector<LocalRule> rules;
    long long middle = 1;
    for (int i = 0; i < d - 2; ++i) middle *= q;
    for (int a1 = 1; a1 < q; ++a1)
        for (int ad = 1; ad < q; ++ad)
            for (long long mid = 0; mid < middle; ++mid) {
                std::vector<int> coeffs(d, 0);
                coeffs[0] = a1;
                coeffs[d - 1] = ad;
                long long rest = mid;
                for (int i = 1; i < d - 1; ++i) {
                    coeffs[i] = static_cast<int>(rest % q);
                    rest /= q;
                }
                rules.push_back(LocalRule::from_coefficients(field, coeffs));
            }
    return rules;
}

// Test-only oracle: maximal pairwise-coprime family size among monic
// degree-k polynomials with nonzero constant term, by full backtracking.
int max_coprime_family_bruteforce(const FieldPtr& field, int k) {
    std::vector<Polynomial> candidates;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= field->q();
    for (long long v = 0; v < total; ++v) {
        std::vector<int> coeffs(k + 1, 0);
        long long rest = v;
        for (int i = 0; i < k; ++i) {
            coeffs[i] = static_cast<int>(rest % field->q());
            rest /= field->q();
        }
        coeffs[k] = 1;
        if (coeffs[0] == 0) continue;
        candidates.emplace_back(field, std::move(coeffs));
    }
    int best = 0;
    std::vector<int> chosen;
    std::function<void(int)> backtrack = [&](int from) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
            bool coprime = true;
            for (int idx : chosen)
                if (poly_gcd(candidates[i], candidates[idx]).degree() != 0) {
                    coprime = false;
                    break;
                }
            if (!coprime) continue;
            chosen.push_back(i);
            backtrack(i + 1);
            chosen.pop_back();
        }
    };
    backtrack(0);
    return best;
}

} // namespace

TEST_CASE("index codec") {
    const IndexCodec codec(Field::make(2, 1), 3);
    CHECK(codec.N() == 4);
    CHECK(codec.encode({0, 0}) == 1);
    CHECK(codec.encode({1, 0}) == 2);
    CHECK(codec.encode({0, 1}) == 3);
    CHECK(codec.encode({1, 1}) == 4);
    for (long long i = 1; i <= 4; ++i) CHECK(codec.encode(codec.decode(i)) == i);

    CHECK(codec.pair_to_cell(3, 4) == 12);
    CHECK(codec.pair_to_cell(1, 1) == 1);
    CHECK(codec.cell_to_pair(12) == std::pair<long long, long long>{3, 4});
    CHECK(codec.config_to_cell({0, 0, 1, 0}) == 2);
    CHECK(codec.cell_to_config(2) == Word{0, 0, 1, 0});
    for (long long cell = 1; cell <= 16; ++cell)
        CHECK(codec.config_to_cell(codec.cell_to_config(cell)) == cell);

    CHECK_THROWS_AS(codec.decode(0), Error);
    CHECK_THROWS_AS(codec.decode(5), Error);
    CHECK_THROWS_AS(codec.pair_to_cell(0, 1), Error);
    CHECK_THROWS_AS(codec.cell_to_pair(17), Error);
}

TEST_CASE("Cayley tables of rules 90 and 150") {
    const auto square90 = cayley_table(LocalRule::from_wolfram(90, 3));
    CHECK(square90.order() == 4);
    CHECK(square90.entries() == std::vector<int>{1, 2, 3, 4,
                                                 2, 1, 4, 3,
                                                 3, 4, 1, 2,
                                                 4, 3, 2, 1});

    const auto square150 = cayley_table(LocalRule::from_wolfram(150, 3));
    CHECK(square150.entries() == std::vector<int>{1, 4, 3, 2,
                                                  2, 3, 4, 1,
                                                  4, 1, 2, 3,
                                                  3, 2, 1, 4});

    CHECK(square90.at(1, 2) == 2);  // F(00||10) = 10, encoded 2
    CHECK(square90.provenance().has_value());
    CHECK(square90.provenance()->wolfram_code() == 90);

    CHECK_THROWS_AS(cayley_table(LocalRule::from_wolfram(0, 3)), Error);
}

TEST_CASE("Latinness predicate") {
    CHECK(is_latin(cayley_table(LocalRule::from_wolfram(90, 3))));
    CHECK_FALSE(is_latin(LatinSquare(4, std::vector<int>(16, 1))));

    // permutation rows, constant columns
    std::vector<int> rows_repeated;
    for (int r = 0; r < 4; ++r)
        for (int c = 1; c <= 4; ++c) rows_repeated.push_back(c);
    CHECK_FALSE(is_latin(LatinSquare(4, rows_repeated)));

    CHECK_THROWS_AS(LatinSquare(4, std::vector<int>(15, 1)), Error);
    CHECK_THROWS_AS(LatinSquare(4, std::vector<int>(16, 5)), Error);
}

TEST_CASE("Cayley tables of bipermutive rules are Latin") {
    for (std::uint64_t code : {90ULL, 105ULL, 150ULL, 165ULL})
        CHECK(is_latin(cayley_table(LocalRule::from_wolfram(code, 3))));
    for (const auto& rule : linear_bipermutive_rules(Field::make(3, 1), 3))
        CHECK(is_latin(cayley_table(rule)));
    for (const auto& rule : linear_bipermutive_rules(Field::make(2, 1), 4))
        CHECK(is_latin(cayley_table(rule)));
}

TEST_CASE("orthogonality by brute force") {
    const auto square90 = cayley_table(LocalRule::from_wolfram(90, 3));
    const auto square150 = cayley_table(LocalRule::from_wolfram(150, 3));
    CHECK(are_orthogonal(square90, square150));
    CHECK_FALSE(are_orthogonal(square90, square90));

    // the rule-90 square is symmetric, so its transpose repeats pairs too
    CHECK(square90.transpose() == square90);
    CHECK_FALSE(are_orthogonal(square90, square90.transpose()));

    CHECK_THROWS_AS(are_orthogonal(square90, LatinSquare(2, {1, 2, 2, 1})), Error);
}

TEST_CASE("orthogonality by polynomial gcd") {
    const auto rule90 = LocalRule::from_wolfram(90, 3);
    const auto rule150 = LocalRule::from_wolfram(150, 3);
    CHECK(orthogonal_by_gcd(rule90, rule150));
    CHECK_FALSE(orthogonal_by_gcd(rule90, rule90));
    // rule 165 is affine, not linear
    CHECK_THROWS_AS(orthogonal_by_gcd(rule90, LocalRule::from_wolfram(165, 3)), Error);
}

TEST_CASE("gcd criterion agrees with brute force on every linear pair") {
    for (auto [p, d] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        const auto rules = linear_bipermutive_rules(Field::make(p, 1), d);
        std::vector<LatinSquare> squares;
        squares.reserve(rules.size());
        for (const auto& rule : rules) squares.push_back(cayley_table(rule));
        for (size_t i = 0; i < rules.size(); ++i)
            for (size_t j = 0; j < rules.size(); ++j) {
                if (i == j) continue;
                CHECK(orthogonal_by_gcd(rules[i], rules[j]) ==
                      are_orthogonal(squares[i], squares[j]));
            }
    }
}

TEST_CASE("family construction for diameter 3") {
    auto f2 = Field::make(2, 1);
    const auto family = build_mols(f2, 3, 2);
    REQUIRE(family.size() == 2);
    // ascending polynomial value: 1 + X + X^2 (rule 150) before (1+X)^2 (rule 90)
    CHECK(family.rules()[0].wolfram_code() == 150);
    CHECK(family.rules()[1].wolfram_code() == 90);
    CHECK(are_orthogonal(family.squares()[0], family.squares()[1]));

    CHECK_THROWS_AS(build_mols(f2, 3, 3), Error);
    CHECK_THROWS_AS(build_mols(f2, 3, 1), Error);
}

TEST_CASE("family construction for diameter 4") {
    auto f2 = Field::make(2, 1);
    const auto family = build_mols(f2, 4, 3);
    REQUIRE(family.size() == 3);
    CHECK(family.rules()[0].associated_polynomial().to_digits() == "1101");  // 1 + X + X^3
    CHECK(family.rules()[1].associated_polynomial().to_digits() == "1011");  // 1 + X^2 + X^3
    CHECK(family.rules()[2].associated_polynomial().to_digits() == "1111");  // (1 + X)^3
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(are_orthogonal(family.squares()[i], family.squares()[j]));
    CHECK_THROWS_AS(build_mols(f2, 4, 4), Error);
}

TEST_CASE("family validation rejects non-orthogonal rules") {
    auto f2 = Field::make(2, 1);
    std::vector<LocalRule> twice = {LocalRule::from_wolfram(90, 3), LocalRule::from_wolfram(90, 3)};
    CHECK_THROWS_WITH_AS(MocaFamily::create(f2, 3, std::move(twice)),
                         "pair (1,2) not orthogonal", Error);

    std::vector<LocalRule> with_constant = {LocalRule::from_wolfram(90, 3),
                                            LocalRule::from_wolfram(0, 3)};
    CHECK_THROWS_AS(MocaFamily::create(f2, 3, std::move(with_constant)), Error);
}

TEST_CASE("maximal family size, adjusted and printed readings") {
    auto f2 = Field::make(2, 1);
    CHECK(max_family_size(f2, 1) == 1);
    CHECK(max_family_size(f2, 2) == 2);
    CHECK(max_family_size(f2, 3) == 3);
    CHECK(max_family_size(f2, 4) == 5);

    CHECK(max_family_size_printed(f2, 1) == 2);
    CHECK(max_family_size_printed(f2, 2) == 3);  // differs from the adjusted value
    CHECK(max_family_size_printed(f2, 3) == 4);
    CHECK(max_family_size_printed(f2, 4) == 6);

    auto f3 = Field::make(3, 1);
    CHECK(max_family_size(f3, 1) == 2);
    CHECK(max_family_size(f3, 2) == 5);
    CHECK(max_family_size_printed(f3, 2) == 6);

    CHECK_THROWS_AS(max_family_size(f2, 0), Error);
}

TEST_CASE("adjusted maximum equals brute-force maximum") {
    auto f2 = Field::make(2, 1);
    for (int k = 1; k <= 4; ++k)
        CHECK(max_family_size(f2, k) == max_coprime_family_bruteforce(f2, k));
    auto f3 = Field::make(3, 1);
    for (int k = 1; k <= 2; ++k)
        CHECK(max_family_size(f3, k) == max_coprime_family_bruteforce(f3, k));
}

TEST_CASE("parallel classes of rules 90 and 150") {
    const auto classes90 = parallel_classes(LocalRule::from_wolfram(90, 3));
    CHECK(classes90.class_of({0, 0}) == std::vector<long long>{1, 6, 11, 16});
    CHECK(classes90.class_of({1, 0}) == std::vector<long long>{2, 5, 12, 15});
    CHECK(classes90.class_of({0, 1}) == std::vector<long long>{3, 8, 9, 14});
    CHECK(classes90.class_of({1, 1}) == std::vector<long long>{4, 7, 10, 13});

    const auto classes150 = parallel_classes(LocalRule::from_wolfram(150, 3));
    CHECK(classes150.class_of({0, 0}) == std::vector<long long>{1, 8, 10, 15});
    CHECK(classes150.class_of({1, 0}) == std::vector<long long>{4, 5, 11, 14});
    CHECK(classes150.class_of({0, 1}) == std::vector<long long>{3, 6, 12, 13});
    CHECK(classes150.class_of({1, 1}) == std::vector<long long>{2, 7, 9, 16});

    CHECK_THROWS_AS(parallel_classes(LocalRule::from_wolfram(0, 3)), Error);
}

TEST_CASE("classes of orthogonal rules meet in at most one cell") {
    const auto classes90 = parallel_classes(LocalRule::from_wolfram(90, 3));
    const auto classes150 = parallel_classes(LocalRule::from_wolfram(150, 3));
    long long total = 0;
    for (const auto& a : classes90.classes()) {
        for (const auto& b : classes150.classes()) {
            std::vector<long long> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            CHECK(common.size() <= 1);
            total += static_cast<long long>(common.size());
        }
    }
    CHECK(total == 16);  // every cell counted exactly once
}

TEST_CASE("parallel classes partition the cell space") {
    for (auto [p, d] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        for (const auto& rule : linear_bipermutive_rules(Field::make(p, 1), d)) {
            const auto classes = parallel_classes(rule);
            const long long n = classes.N();
            std::set<long long> seen;
            for (const auto& cls : classes.classes()) {
                CHECK(static_cast<long long>(cls.size()) == n);
                seen.insert(cls.begin(), cls.end());
            }
            CHECK(static_cast<long long>(seen.size()) == n * n);
            CHECK(*seen.begin() == 1);
            CHECK(*seen.rbegin() == n * n);
        }
    }
}

TEST_CASE("brute-force census of orthogonal families") {
    auto f2 = Field::make(2, 1);

    auto singletons = search_moca(f2, 3, 1, true, false);
    CHECK(singletons.size() == 4);

    const auto pairs = search_moca(f2, 3, 2, true, false);
    CHECK(pairs.size() == 4);
    bool found_90_150 = false;
    for (const auto& family : pairs) {
        REQUIRE(family.size() == 2);
        const auto codes = std::pair{family[0].wolfram_code(), family[1].wolfram_code()};
        if (codes == std::pair<std::uint64_t, std::uint64_t>{90, 150}) found_90_150 = true;
        CHECK(are_orthogonal(cayley_table(family[0]), cayley_table(family[1])));
    }
    CHECK(found_90_150);

    CHECK(search_moca(f2, 3, 3, true, false).empty());
    CHECK(search_moca(f2, 3, 5, true, false).empty());

    // linear members only: the single pair {90, 150}
    const auto linear_pairs = search_moca(f2, 3, 2, false, false);
    REQUIRE(linear_pairs.size() == 1);
    CHECK(linear_pairs[0][0].wolfram_code() == 90);
    CHECK(linear_pairs[0][1].wolfram_code() == 150);

    CHECK(search_moca(f2, 3, 2, true, true).size() == 1);  // first only

    CHECK_THROWS_AS(search_moca(f2, 5, 2, true, false), Error);
    CHECK_THROWS_AS(search_moca(Field::make(3, 1), 3, 2, true, false), Error);
}

TEST_CASE("diameter-4 census sanity") {
    auto f2 = Field::make(2, 1);
    const auto pairs = search_moca(f2, 4, 2, true, false);
    CHECK(!pairs.empty());
    for (const auto& family : pairs)
        CHECK(are_orthogonal(cayley_table(family[0]), cayley_table(family[1])));
    // the linear construction of size 3 appears in the census
    const auto triples = search_moca(f2, 4, 3, true, false);
    bool found_linear_triple = false;
    for (const auto& family : triples) {
        std::set<std::uint64_t> codes;
        for (const auto& rule : family) codes.insert(rule.wolfram_code());
        const auto built = build_mols(f2, 4, 3);
        std::set<std::uint64_t> expected;
        for (const auto& rule : built.rules()) expected.insert(rule.wolfram_code());
        if (codes == expected) found_linear_triple = true;
    }
    CHECK(found_linear_triple);
}
