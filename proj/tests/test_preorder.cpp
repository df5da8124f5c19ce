/*
 * Copyright 2026 the frobstruct authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include "frobstruct/preorder.hpp"
#include "frobstruct/selftest.hpp"

using namespace frobstruct;

TEST_CASE("verify mode accepts a transitive relation and keeps it verbatim") {
    const Preorder p = build_preorder(3, {{0, 1}, {1, 2}, {0, 2}}, BuildMode::Verify);
    CHECK(p.leq(0, 2));
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.comparable_count() == 6);
}

TEST_CASE("verify mode rejects a missing composite with the first witness") {
    try {
        build_preorder(3, {{0, 1}, {1, 2}}, BuildMode::Verify);
        FAIL("expected a transitivity failure");
    } catch (const NotTransitiveError& e) {
        CHECK(e.x() == 0);
        CHECK(e.y() == 1);
        CHECK(e.z() == 2);
    }
}

TEST_CASE("closure mode completes the relation") {
    const Preorder p = build_preorder(4, {{0, 1}, {1, 2}, {2, 3}}, BuildMode::Closure);
    CHECK(p.leq(0, 3));
    CHECK(p.comparable_count() == 10);

    // A directed cycle closes to a single equivalence class.
    const Preorder cyc = build_preorder(3, {{0, 1}, {1, 2}, {2, 0}}, BuildMode::Closure);
    CHECK(cyc.comparable_count() == 9);
    CHECK(equivalence_classes(cyc).count() == 1);
}

TEST_CASE("out-of-range vertices are rejected") {
    CHECK_THROWS_AS(build_preorder(3, {{0, 5}}, BuildMode::Closure), IndexOutOfRangeError);
    const Preorder p = build_preorder(2, {}, BuildMode::Verify);
    CHECK_THROWS_AS(p.leq(2, 0), IndexOutOfRangeError);
}

TEST_CASE("equivalence classes and quotient poset of a condensable preorder") {
    // 0 ~ 1 below 2, with 3 isolated.
    const Preorder p = build_preorder(4, {{0, 1}, {1, 0}, {0, 2}}, BuildMode::Closure);
    const EquivClasses ec = equivalence_classes(p);
    REQUIRE(ec.count() == 3);
    CHECK(ec.classes[0] == std::vector<int>{0, 1});
    CHECK(ec.classes[1] == std::vector<int>{2});
    CHECK(ec.classes[2] == std::vector<int>{3});
    CHECK(ec.representative(0) == 0);
    CHECK(ec.class_of[1] == 0);

    const QuotientPoset q = quotient(p);
    CHECK(q.m == 3);
    CHECK(q.leq(0, 1));
    CHECK_FALSE(q.leq(1, 0));
    CHECK_FALSE(q.leq(0, 2));
    CHECK(q.comparable_count() == 4);

    // The quotient of an already antisymmetric preorder has the same shape.
    const Preorder chain = build_preorder(3, {{0, 1}, {1, 2}}, BuildMode::Closure);
    CHECK(quotient(chain).as_preorder() == chain);
}

TEST_CASE("intervals and interval lengths on a chain with a doubled vertex") {
    // 0 <= {1 ~ 2} <= 3.
    const Preorder p =
        build_preorder(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}, BuildMode::Closure);
    CHECK(interval(p, 0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(interval(p, 1, 2) == std::vector<int>{1, 2});
    CHECK(interval_length(p, 1, 2) == 0);
    CHECK(interval_length(p, 0, 3) == 2);
    CHECK(interval_length(p, 0, 0) == 0);
    CHECK_THROWS_AS(interval(p, 3, 0), NotComparableError);
    CHECK_THROWS_AS(interval_length(p, 3, 0), NotComparableError);
}

TEST_CASE("interval length counts strict steps in the condensation") {
    const Preorder diamond =
        build_preorder(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, BuildMode::Closure);
    CHECK(interval_length(diamond, 0, 3) == 2);
    CHECK(interval_length(diamond, 0, 1) == 1);
}

TEST_CASE("enumeration agrees with the exhaustive transitivity filter") {
    CHECK(brute_force_count(1) == 1);
    CHECK(brute_force_count(2) == 4);
    CHECK(brute_force_count(3) == 29);
    CHECK(brute_force_count(4) == 355);
    for (int n = 1; n <= 4; ++n) CHECK(enumeration_matches_bruteforce(n));
}

TEST_CASE("enumeration order is deterministic and spans equality to full") {
    const auto first_run = enumerate_preorders(3);
    const auto second_run = enumerate_preorders(3);
    REQUIRE(first_run.size() == 29);
    for (std::size_t i = 0; i < first_run.size(); ++i)
        CHECK(first_run[i] == second_run[i]);

    // The stream starts at the equality relation and ends at the full one.
    CHECK(first_run.front().comparable_count() == 3);
    CHECK(first_run.back().comparable_count() == 9);

    std::vector<std::uint64_t> keys;
    for (const auto& p : first_run) keys.push_back(p.mask_key());
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("enumeration bound is enforced and can be raised") {
    CHECK_THROWS_AS(enumerate_preorders(5), BoundExceededError);
    CHECK(enumerate_preorders(5, 5).size() == 6942);
}

TEST_CASE("relabeling by a permutation preserves the relation up to renaming") {
    const Preorder p = build_preorder(3, {{0, 1}, {1, 2}}, BuildMode::Closure);
    const Preorder r = relabel(p, {2, 1, 0});
    CHECK(r.leq(2, 1));
    CHECK(r.leq(1, 0));
    CHECK_FALSE(r.leq(0, 1));
    CHECK_THROWS_AS(relabel(p, {0, 0, 1}), InvalidArgumentError);
}

TEST_CASE("transpose reverses every arrow and is an involution") {
    const Preorder p = build_preorder(3, {{0, 1}, {0, 2}}, BuildMode::Closure);
    const Preorder t = p.transpose();
    CHECK(t.leq(1, 0));
    CHECK(t.leq(2, 0));
    CHECK_FALSE(t.leq(0, 1));
    CHECK(t.transpose() == p);
}

TEST_CASE("the first one-sided pair is the least in lexicographic order") {
    const Preorder p = build_preorder(3, {{1, 2}, {0, 2}}, BuildMode::Closure);
    const auto pair = p.first_one_sided_pair();
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0);
    CHECK(pair->second == 2);

    const Preorder sym = build_preorder(2, {{0, 1}, {1, 0}}, BuildMode::Closure);
    CHECK_FALSE(sym.first_one_sided_pair().has_value());
}

TEST_CASE("random draws stay inside the requested range") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 16294208416658607535ULL);
    SplitMix64 rng2(42);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t v = rng2.uniform(-9, 9);
        CHECK(v >= -9);
        CHECK(v <= 9);
    }
}
