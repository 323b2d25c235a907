// Copyright 2026 The betasurv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"

#include "betasurv/word.hpp"

using betasurv::lex_compare;
using betasurv::PeriodicSeq;
using betasurv::PrimitiveRepresentatives;
using betasurv::Word;

namespace {

Word W(const char* s) { return Word::parse(s); }
PeriodicSeq P(const char* s) { return PeriodicSeq::parse(s); }

} // namespace

TEST_CASE("words reject empty input and non-binary symbols") {
    CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("012"), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::vector<betasurv::Digit>{0, 2}), std::invalid_argument);
    CHECK(W("0110").str() == "0110");
    CHECK(Word::from_bits(0b011, 3) == W("011"));
    CHECK(W("011").to_bits() == 3);
}

TEST_CASE("smallest period") {
    CHECK(betasurv::smallest_period(W("0101")) == 2);
    CHECK(betasurv::smallest_period(W("001")) == 3);
    CHECK(betasurv::smallest_period(W("011011")) == 3);
    CHECK(betasurv::smallest_period(W("0")) == 1);
    CHECK(betasurv::smallest_period(W("0000")) == 1);
    CHECK(betasurv::is_primitive(W("0010")));
    CHECK_FALSE(betasurv::is_primitive(W("1010")));
}

TEST_CASE("shift") {
    CHECK(betasurv::shift(P("(01)")).canonical().str() == "(10)");
    CHECK(betasurv::shift(P("1(0)")).canonical().str() == "(0)");
    PeriodicSeq s = P("(001)");
    for (int i = 0; i < 3; ++i) {
        s = betasurv::shift(s);
    }
    CHECK(s.str() == "(001)");
    CHECK(s == P("(001)"));
}

TEST_CASE("lexicographic comparison of periodic sequences") {
    CHECK(lex_compare(P("(100)"), P("(10)")) == std::strong_ordering::less);
    CHECK(lex_compare(P("(01)"), P("(01)")) == std::strong_ordering::equal);
    CHECK(lex_compare(P("(110)"), P("(10)")) == std::strong_ordering::greater);
    // Differently presented but identical sequences.
    CHECK(lex_compare(P("(0101)"), P("0(10)")) == std::strong_ordering::equal);
    CHECK(lex_compare(P("1(0)"), P("(1)")) == std::strong_ordering::less);
    // The first difference lies beyond both preperiods and one period.
    CHECK(lex_compare(P("00(001)"), P("0(000001)")) == std::strong_ordering::greater);
}

TEST_CASE("canonical form and serialisation") {
    CHECK(P("1(0)").str() == "1(0)");
    CHECK(P("(01)").str() == "(01)");
    CHECK(P("0(10)").canonical().str() == "(01)");
    CHECK(P("11(0101)").canonical().str() == "1(10)");
    CHECK(P("011(011)").canonical().str() == "(011)");
    CHECK(P("0(10)") == P("(01)"));
    CHECK_FALSE(P("1(0)") == P("(1)"));
    CHECK_THROWS_AS(P("01"), std::invalid_argument);
    CHECK_THROWS_AS(P("0()"), std::invalid_argument);
}

TEST_CASE("rotations and the lex-min rotation") {
    CHECK(betasurv::rotations(W("001")) == std::vector<Word>{W("001"), W("010"), W("100")});
    CHECK(betasurv::rotations(W("0")) == std::vector<Word>{W("0")});
    CHECK(betasurv::rotations(W("01")) == std::vector<Word>{W("01"), W("10")});
    CHECK(betasurv::lex_min_rotation(W("110")) == W("011"));
    CHECK(betasurv::lex_min_rotation(W("100")) == W("001"));
    CHECK(betasurv::lex_min_rotation(W("0101")) == W("0101"));
}

TEST_CASE("primitive representatives for small lengths") {
    CHECK(PrimitiveRepresentatives(1).collect() == std::vector<Word>{W("0"), W("1")});
    CHECK(PrimitiveRepresentatives(2).collect() == std::vector<Word>{W("01")});

    // Oracle: group all 64 words by rotation class, keep primitive classes.
    const auto expected = oracle::primitive_classes(6);
    REQUIRE(expected.size() == 9);
    std::set<std::string> got;
    for (const Word& w : PrimitiveRepresentatives(6)) {
        got.insert(w.str());
    }
    CHECK(got == expected);
}

TEST_CASE("enumeration is in increasing integer order and splits disjointly") {
    const PrimitiveRepresentatives all(11);
    const auto words = all.collect();
    for (std::size_t i = 1; i < words.size(); ++i) {
        CHECK(words[i - 1].to_bits() < words[i].to_bits());
    }
    for (std::size_t parts : {1U, 2U, 3U, 7U, 64U}) {
        std::vector<Word> joined;
        for (const auto& window : all.split(parts)) {
            for (const Word& w : window) {
                joined.push_back(w);
            }
        }
        CHECK(joined == words);
    }
    CHECK_THROWS_AS(PrimitiveRepresentatives(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimitiveRepresentatives(4, 3, 2), std::invalid_argument);
}

TEST_CASE("primitive class counts follow the Moebius formula") {
    for (std::size_t p = 1; p <= 12; ++p) {
        CAPTURE(p);
        const std::size_t count = PrimitiveRepresentatives(p).count();
        CHECK(count == oracle::lyndon_count(p));
        CHECK(count == oracle::primitive_classes(p).size());
    }
}

TEST_CASE("lex-min rotation preserves the smallest period") {
    for (std::size_t p = 1; p <= 10; ++p) {
        for (std::uint64_t v = 0; v < (1ULL << p); ++v) {
            const Word w = Word::from_bits(v, p);
            CHECK(betasurv::smallest_period(betasurv::lex_min_rotation(w)) ==
                  betasurv::smallest_period(w));
        }
    }
}

TEST_CASE("a primitive period has exactly p distinct shifts") {
    for (std::size_t p = 1; p <= 9; ++p) {
        for (const Word& w : PrimitiveRepresentatives(p)) {
            std::set<std::string> seen;
            PeriodicSeq s(w);
            for (std::size_t k = 0; k < p; ++k) {
                seen.insert(s.canonical().str());
                s = betasurv::shift(s);
            }
            CHECK(seen.size() == p);
            CHECK(s == PeriodicSeq(w));
        }
    }
}

TEST_CASE("lex_compare is a total order consistent with finite prefixes") {
    std::mt19937_64 rng(20261015);
    auto random_seq = [&] {
        std::uniform_int_distribution<int> len(0, 3);
        std::uniform_int_distribution<int> bit(0, 1);
        std::vector<betasurv::Digit> pre(static_cast<std::size_t>(len(rng)));
        for (auto& d : pre) {
            d = static_cast<betasurv::Digit>(bit(rng));
        }
        std::vector<betasurv::Digit> per(static_cast<std::size_t>(len(rng) + 1));
        for (auto& d : per) {
            d = static_cast<betasurv::Digit>(bit(rng));
        }
        return PeriodicSeq(std::move(pre), Word(std::move(per))).canonical();
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const PeriodicSeq a = random_seq();
        const PeriodicSeq b = random_seq();
        const PeriodicSeq c = random_seq();
        const auto ab = lex_compare(a, b);
        CHECK(lex_compare(b, a) == (0 <=> ab));
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        if (ab < 0 && lex_compare(b, c) < 0) {
            CHECK(lex_compare(a, c) < 0);
        }
        // Agreement with a symbol-by-symbol scan over a long prefix.
        int expected = 0;
        for (std::size_t i = 0; i < 200 && expected == 0; ++i) {
            if (a.at(i) != b.at(i)) {
                expected = a.at(i) < b.at(i) ? -1 : 1;
            }
        }
        CHECK((ab < 0) == (expected < 0));
        CHECK((ab > 0) == (expected > 0));
    }
}
