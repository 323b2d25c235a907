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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betasurv/cli.hpp"
#include "betasurv/expansions.hpp"
#include "betasurv/survivor.hpp"
#include "oracle.hpp"

using namespace betasurv;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ' ' << detail << std::endl;
    if (!pass) {
        ++failures;
    }
}

// |a - q| <= tol, decided exactly.
bool within(const FieldElement& a, const Rational& q, const Rational& tol) {
    const FieldElement d = a - FieldElement(a.context(), q);
    return sign(d - FieldElement(a.context(), tol)) != Sign::Positive &&
           sign(d + FieldElement(a.context(), tol)) != Sign::Negative;
}

std::vector<Word> admissible_words(const BetaContext& ctx, std::size_t max_length) {
    std::vector<Word> words;
    for (std::size_t n = 1; n <= max_length; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Word w = Word::from_bits(v, n);
            if (is_admissible(w, ctx).admissible) {
                words.push_back(std::move(w));
            }
        }
    }
    return words;
}

// "0.38212" -> 38212/100000.
Rational decimal(const std::string& text) {
    const auto dot = text.find('.');
    std::string digits = text;
    std::size_t scale = 0;
    if (dot != std::string::npos) {
        digits.erase(dot, 1);
        scale = text.size() - dot - 1;
    }
    Rational q{mpz_class(digits, 10)};
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, scale);
    q /= ten_power;
    return q;
}

PeriodicSeq periodic(const Word& w) { return PeriodicSeq(w); }

void c1() {
    const auto& ctx = make_context(BetaKind::Base2);
    bool ok = true;
    std::string detail = "base 2, p=1..20: exhaustive search equals (2^(p-1)-1)/(2^p-1), word 01^(p-1)";
    for (std::size_t p = 1; p <= 20; ++p) {
        const auto r = brute_force_S(ctx, p);
        const Rational expected((mpz_class(1) << (p - 1)) - 1, (mpz_class(1) << p) - 1);
        std::string word = "0" + std::string(p - 1, '1');
        if (r.empty || !r.word || r.word->str() != word ||
            r.value != FieldElement(ctx, expected)) {
            ok = false;
            detail += "; p=" + std::to_string(p) + " got " + r.value.str();
        }
    }
    report("C1", ok, detail);
}

void c2() {
    const auto& ctx = make_context(BetaKind::Golden);
    const auto rep = cross_check(BetaKind::Golden, 20);
    bool ok = rep.ok();
    std::string detail = "golden, p=1..20: " + std::to_string(rep.mismatches.size()) + " mismatches";
    for (std::size_t p : {1U, 2U}) {
        const auto r = brute_force_S(ctx, p);
        if (!r.value.is_zero() || (p == 2 && !r.empty)) {
            ok = false;
            detail += "; p=" + std::to_string(p) + " not empty/0";
        }
    }
    const auto s4 = brute_force_S(ctx, 4).value;
    const auto s6 = brute_force_S(ctx, 6).value;
    const bool spot = within(s4, Rational(1708, 10000), Rational(5, 100000)) &&
                      within(s6, Rational(2135, 10000), Rational(5, 100000));
    ok = ok && spot;
    detail += "; S(4)=" + to_float(s4, 6) + " S(6)=" + to_float(s6, 6) + " vs 0.1708, 0.2135";
    report("C2", ok, detail);
}

void c3() {
    const auto rep = cross_check(BetaKind::Tribonacci, 20);
    const std::size_t theorem = rep.count(MismatchKind::Theorem);
    const std::size_t formula = rep.count(MismatchKind::PaperFormula);
    report("C3", theorem == 0,
           "tribonacci, p=1..20: " + std::to_string(theorem) + " theorem mismatches, " +
               std::to_string(formula) + " closed-form mismatches (reported only)");
}

void c4() {
    const std::pair<BetaKind, std::string> printed[] = {
        {BetaKind::Base2, "0.5"}, {BetaKind::Golden, "0.38212"}, {BetaKind::Tribonacci, "0.45626"}};
    bool round_ok = true;
    std::string detail = "limits at 5 significant digits:";
    for (const auto& [kind, expected] : printed) {
        const std::string got = to_float(limit_value(kind), 5);
        const bool match = decimal(got) == decimal(expected);
        detail += ' ' + std::string(name(kind)) + '=' + got + " (expected " + expected +
                  (match ? ", ok)" : ", differs)");
        round_ok = round_ok && match;
    }
    report("C4a", round_ok, detail);

    bool approach_ok = true;
    detail = "each family's last member below 20 is below the limit and closer than its first:";
    for (BetaKind kind : kAllBetaKinds) {
        const FieldElement limit = limit_value(kind);
        const auto& ctx = make_context(kind);
        for (const auto& family : families(kind)) {
            const auto members = family.members(20);
            const auto first = brute_force_S(ctx, members.front()).value;
            const auto last = brute_force_S(ctx, members.back()).value;
            const bool ok = last < limit && (limit - last) < (limit - first);
            approach_ok = approach_ok && ok;
            detail += ' ' + std::string(name(kind)) + ':' + std::string(family.label) + '=' +
                      (ok ? "ok" : "bad");
        }
    }
    report("C4b", approach_ok, detail);
}

void c5() {
    bool commute = true;
    bool order = true;
    std::size_t checked = 0;
    std::size_t pairs = 0;
    for (BetaKind kind : kAllBetaKinds) {
        const auto& ctx = make_context(kind);
        auto words = admissible_words(ctx, 10);
        std::vector<std::pair<PeriodicSeq, FieldElement>> points;
        points.reserve(words.size());
        for (const auto& w : words) {
            const FieldElement x = eval_periodic(w, ctx);
            if (t_beta(x) != eval_periodic(rotate(w, 1), ctx)) {
                commute = false;
            }
            ++checked;
            points.emplace_back(periodic(w), x);
        }
        std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
            return lex_compare(a.first, b.first) < 0;
        });
        for (std::size_t i = 1; i < points.size(); ++i) {
            const auto cmp = lex_compare(points[i - 1].first, points[i].first);
            const bool ok = cmp == 0 ? points[i - 1].second == points[i].second
                                     : points[i - 1].second < points[i].second;
            order = order && ok;
            ++pairs;
        }
    }
    report("C5a", commute,
           "T(x) equals the value of the shifted word for " + std::to_string(checked) +
               " admissible words of length <= 10");
    report("C5b", order,
           "lex order matches value order over " + std::to_string(pairs) + " adjacent pairs");

    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    bool axioms = true;
    for (int i = 0; i < 1000; ++i) {
        const auto& ctx = make_context(kAllBetaKinds[static_cast<std::size_t>(i) % 3]);
        auto random = [&] {
            std::array<Rational, 3> c;
            for (auto& x : c) {
                x = Rational(num(rng), den(rng));
                x.canonicalize();
            }
            return FieldElement(ctx, std::span<const Rational>(c.data(), ctx.degree()));
        };
        const FieldElement a = random();
        const FieldElement b = random();
        const FieldElement c = random();
        bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && a + ctx.zero() == a && a * ctx.one() == a &&
                  a - a == ctx.zero();
        if (!a.is_zero()) {
            ok = ok && a * a.inverse() == ctx.one() && (b / a) * a == b;
        }
        axioms = axioms && ok;
    }
    report("C5c", axioms, "field axioms on 1000 random triples");

    bool counts = true;
    std::string detail = "primitive class counts p=1..12:";
    for (std::size_t p = 1; p <= 12; ++p) {
        const std::size_t got = PrimitiveRepresentatives(p).count();
        counts = counts && got == oracle::lyndon_count(p);
        detail += ' ' + std::to_string(got);
    }
    report("C5d", counts, detail);

    bool attained = true;
    std::size_t records = 0;
    for (BetaKind kind : kAllBetaKinds) {
        const auto& ctx = make_context(kind);
        for (std::size_t p = 1; p <= 20; ++p) {
            const auto r = brute_force_S(ctx, p, 4);
            if (r.empty) {
                continue;
            }
            ++records;
            const FieldElement above = r.value + Rational(1, 1000000);
            attained = attained && survives(*r.word, r.value, ctx) &&
                       !survives(*r.word, above, ctx);
        }
    }
    report("C5e", attained,
           "survives(word, S) and not survives(word, S+1e-6) for " + std::to_string(records) +
               " records");
}

void c6() {
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "2", "8"}) {
        std::ostringstream out;
        std::ostringstream err;
        betasurv::cli::run({"verify", "--pmax", "16", "--workers", workers}, out, err);
        outputs.push_back(out.str());
    }
    const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty();
    report("C6", same,
           "verify --pmax 16 identical for workers 1, 2, 8 (" +
               std::to_string(outputs[0].size()) + " bytes)");
}

} // namespace

int main() {
    const std::function<void()> criteria[] = {c1, c2, c3, c4, c5, c6};
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        criterion();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cout << "       (" << elapsed.count() << " s)" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
