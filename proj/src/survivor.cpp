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

#include "betasurv/survivor.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "betasurv/expansions.hpp"

namespace betasurv {

std::string_view name(Method method) noexcept {
    switch (method) {
    case Method::BruteForce:
        return "brute";
    case Method::TheoremWord:
        return "theorem";
    case Method::ClosedForm:
        return "closed";
    }
    return "?";
}

namespace {

void require_period(std::size_t p) {
    if (p == 0) {
        throw std::invalid_argument("period must be positive");
    }
}

SurvivorRecord empty_record(const BetaContext& ctx, std::size_t p, Method method) {
    return SurvivorRecord{p, std::nullopt, ctx.zero(), "0", method, true, 0};
}

// Best candidate of one enumeration window.
struct Candidate {
    std::optional<Word> word;
    std::optional<FieldElement> value;
    std::size_t ties = 0;
};

// Larger value wins, equal values keep the lex-smaller word and pool the tie
// count. Associative and commutative, so the split does not matter.
Candidate merge(Candidate a, Candidate b) {
    if (!a.value) {
        return b;
    }
    if (!b.value) {
        return a;
    }
    const auto order = *a.value <=> *b.value;
    if (order == std::strong_ordering::greater) {
        return a;
    }
    if (order == std::strong_ordering::less) {
        return b;
    }
    const std::size_t ties = a.ties + b.ties + 1;
    Candidate out = (*a.word <= *b.word) ? std::move(a) : std::move(b);
    out.ties = ties;
    return out;
}

Candidate search(const PrimitiveRepresentatives& window, const BetaContext& ctx) {
    Candidate best;
    for (const Word& rep : window) {
        if (!is_admissible(rep, ctx).admissible) {
            continue;
        }
        OrbitMinimum low = orbit_min(rep, ctx);
        best = merge(std::move(best), Candidate{std::move(low.rotation), std::move(low.value), 0});
    }
    return best;
}

std::string repeat(std::string_view block, std::size_t times) {
    std::string out;
    for (std::size_t i = 0; i < times; ++i) {
        out += block;
    }
    return out;
}

std::optional<Word> golden_word(std::size_t p) {
    if (p <= 2) {
        return std::nullopt;
    }
    if (p % 2 == 1) {
        return Word::parse("0" + repeat("01", (p - 1) / 2));
    }
    if (p == 4) {
        return Word::parse("0001");
    }
    if (p == 6) {
        return Word::parse("00" + repeat("01", 2));
    }
    if (p % 4 == 2) {
        const std::size_t m = (p - 2) / 4;  // m >= 2
        return Word::parse("001" + repeat("01", m - 2) + "001" + repeat("01", m));
    }
    const std::size_t m = (p - 4) / 4;  // m >= 1
    return Word::parse("001" + repeat("01", m - 1) + "001" + repeat("01", m));
}

std::optional<Word> tribonacci_word(std::size_t p) {
    switch (p) {
    case 1:
        return std::nullopt;
    case 3:
        return Word::parse("001");
    case 4:
        return Word::parse("0011");
    case 6:
        return Word::parse("001101");
    default:
        break;
    }
    if (p % 3 == 2) {
        return Word::parse("01" + repeat("011", (p - 2) / 3));
    }
    if (p % 3 == 1) {
        const std::size_t m = (p - 1) / 3;  // m >= 2
        if (m % 2 == 0) {
            const std::size_t z = m / 2;
            return Word::parse("01" + repeat("011", z - 1) + "01" + repeat("011", z));
        }
        const std::size_t z = (m - 1) / 2;
        return Word::parse("01" + repeat("011", z - 1) + "01" + repeat("011", z + 1));
    }
    const std::size_t m = p / 3;  // m >= 3
    const std::size_t z = m / 3;
    const std::string head = "01" + repeat("011", z - 1);
    switch (m % 3) {
    case 0:
        return Word::parse(head + head + "01" + repeat("011", z));
    case 1:
        return Word::parse(head + "01" + repeat("011", z) + "01" + repeat("011", z));
    default:
        return Word::parse(head + "01" + repeat("011", z + 1) + "01" + repeat("011", z));
    }
}

std::optional<FieldElement> golden_closed(std::size_t p) {
    const BetaContext& ctx = make_context(BetaKind::Golden);
    const FieldElement b = ctx.beta();
    const FieldElement one = ctx.one();
    auto pw = [&](std::size_t k) { return b.pow(static_cast<unsigned>(k)); };

    if (p == 4) {
        return one / (pw(4) - one);
    }
    if (p == 6) {
        return (pw(2) + one) / (pw(6) - one);
    }
    if (p % 2 == 1) {
        const std::size_t m = (p - 1) / 2;
        return (one - pw(2 * m)) / ((pw(2 * m + 1) - one) * (one - pw(2)));
    }
    if (p % 4 == 2 && p >= 10) {
        const std::size_t m = (p - 2) / 4;
        return (one + pw(2 * m + 3) - pw(2 * m + 2) - pw(4 * m + 1)) /
               ((pw(4 * m + 2) - one) * (one - pw(2)));
    }
    if (p % 4 == 0 && p >= 8) {
        const std::size_t m = (p - 4) / 4;
        return (one + pw(2 * m + 3) - pw(2 * m + 2) - pw(4 * m + 3)) /
               ((pw(4 * m + 4) - one) * (one - pw(2)));
    }
    return std::nullopt;
}

std::optional<FieldElement> tribonacci_closed(std::size_t p) {
    const BetaContext& ctx = make_context(BetaKind::Tribonacci);
    const FieldElement b = ctx.beta();
    const FieldElement one = ctx.one();
    auto pw = [&](std::size_t k) { return b.pow(static_cast<unsigned>(k)); };
    const FieldElement lead = one - pw(3);

    if (p % 3 == 2) {
        const std::size_t m = (p - 2) / 3;
        return (one + b - pw(3 * m + 1) - pw(3 * m + 3)) / (lead * (pw(3 * m + 2) - one));
    }
    if (p % 3 == 1 && p >= 7) {
        const std::size_t m = (p - 1) / 3;
        if (m % 2 == 0) {
            const std::size_t z = m / 2;
            return (one + b + pw(3 * z + 2) - pw(3 * z + 1) - pw(6 * z) - pw(6 * z + 2)) /
                   (lead * (pw(6 * z + 1) - one));
        }
        const std::size_t z = (m - 1) / 2;
        return (one + b + pw(3 * z + 5) - pw(3 * z + 4) - pw(6 * z + 3) - pw(6 * z + 5)) /
               (lead * (pw(6 * z + 4) - one));
    }
    if (p % 3 == 0 && p >= 9) {
        const std::size_t m = p / 3;
        const std::size_t z = m / 3;
        const FieldElement common = one + b + pw(3 * z + 2) - pw(3 * z + 1);
        switch (m % 3) {
        case 0:
            return (common + pw(6 * z + 1) - pw(6 * z) - pw(9 * z - 1) - pw(9 * z + 1)) /
                   (lead * (pw(9 * z) - one));
        case 1:
            return (common + pw(6 * z + 4) - pw(6 * z + 3) - pw(9 * z + 2) - pw(9 * z + 4)) /
                   (lead * (pw(9 * z + 3) - one));
        default:
            return (common + pw(6 * z + 7) - pw(6 * z + 6) - pw(9 * z + 5) - pw(9 * z + 7)) /
                   (lead * (pw(9 * z + 6) - one));
        }
    }
    return std::nullopt;
}

} // namespace

SurvivorRecord brute_force_S(const BetaContext& ctx, std::size_t p, std::size_t workers, int digits) {
    require_period(p);
    if (workers == 0) {
        throw std::invalid_argument("need at least one worker");
    }
    const PrimitiveRepresentatives all(p);

    Candidate best;
    if (workers == 1) {
        best = search(all, ctx);
    } else {
        const auto windows = all.split(workers);
        std::vector<Candidate> partial(windows.size());
        std::vector<std::exception_ptr> errors(windows.size());
        std::vector<std::thread> threads;
        threads.reserve(windows.size());
        for (std::size_t i = 0; i < windows.size(); ++i) {
            threads.emplace_back([&, i] {
                try {
                    partial[i] = search(windows[i], ctx);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) {
            t.join();
        }
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (errors[i]) {
                std::rethrow_exception(errors[i]);
            }
            best = merge(std::move(best), std::move(partial[i]));
        }
    }

    if (!best.value) {
        return empty_record(ctx, p, Method::BruteForce);
    }
    std::string text = to_float(*best.value, digits);
    return SurvivorRecord{p, std::move(best.word), std::move(*best.value), std::move(text),
                          Method::BruteForce, false, best.ties};
}

std::optional<Word> theorem_word(BetaKind kind, std::size_t p) {
    require_period(p);
    switch (kind) {
    case BetaKind::Base2:
        return Word::parse("0" + std::string(p - 1, '1'));
    case BetaKind::Golden:
        return golden_word(p);
    case BetaKind::Tribonacci:
        return tribonacci_word(p);
    }
    throw std::invalid_argument("unsupported beta kind");
}

SurvivorRecord theorem_record(BetaKind kind, std::size_t p, int digits) {
    const BetaContext& ctx = make_context(kind);
    auto word = theorem_word(kind, p);
    if (!word) {
        return empty_record(ctx, p, Method::TheoremWord);
    }
    FieldElement value = eval_periodic(*word, ctx);
    std::string text = to_float(value, digits);
    return SurvivorRecord{p, std::move(word), std::move(value), std::move(text),
                          Method::TheoremWord, false, 0};
}

std::optional<FieldElement> closed_form(BetaKind kind, std::size_t p) {
    require_period(p);
    switch (kind) {
    case BetaKind::Base2: {
        const BetaContext& ctx = make_context(kind);
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, p);
        return FieldElement(ctx, Rational(pow2 / 2 - 1, pow2 - 1));
    }
    case BetaKind::Golden:
        return golden_closed(p);
    case BetaKind::Tribonacci:
        return tribonacci_closed(p);
    }
    throw std::invalid_argument("unsupported beta kind");
}

std::optional<SurvivorRecord> closed_record(BetaKind kind, std::size_t p, int digits) {
    auto value = closed_form(kind, p);
    if (!value) {
        return std::nullopt;
    }
    std::string text = to_float(*value, digits);
    return SurvivorRecord{p, std::nullopt, std::move(*value), std::move(text),
                          Method::ClosedForm, false, 0};
}

FieldElement limit_value(BetaKind kind) {
    const BetaContext& ctx = make_context(kind);
    const FieldElement b = ctx.beta();
    const FieldElement one = ctx.one();
    switch (kind) {
    case BetaKind::Base2:
        return FieldElement(ctx, Rational(1, 2));
    case BetaKind::Golden:
        return one / (b.pow(3) - b);
    case BetaKind::Tribonacci:
        return (b.pow(2) + one) / (b.pow(4) - b);
    }
    throw std::invalid_argument("unsupported beta kind");
}

std::vector<std::size_t> Family::members(std::size_t p_max) const {
    std::vector<std::size_t> out;
    for (std::size_t p = first; p <= p_max; p += modulus) {
        out.push_back(p);
    }
    return out;
}

std::vector<Family> families(BetaKind kind) {
    switch (kind) {
    case BetaKind::Base2:
        return {{"p>=1", 1, 0, 1}};
    case BetaKind::Golden:
        return {{"p=2m+1", 2, 1, 1}, {"p=4m+2", 4, 2, 6}, {"p=4m+4", 4, 0, 4}};
    case BetaKind::Tribonacci:
        return {{"p=3m+2", 3, 2, 2}, {"p=3m+1", 3, 1, 4}, {"p=3m", 3, 0, 3}};
    }
    return {};
}

std::size_t CrossCheckReport::count(MismatchKind what) const noexcept {
    std::size_t n = 0;
    for (const auto& m : mismatches) {
        n += m.what == what ? 1 : 0;
    }
    return n;
}

std::string CrossCheckReport::csv(bool header) const {
    std::ostringstream out;
    if (header) {
        out << "kind,p,method,word,exact,float,agrees\n";
    }
    for (const auto& row : rows) {
        const SurvivorRecord& r = row.record;
        out << name(row.kind) << ',' << r.p << ',' << name(r.method) << ','
            << (r.word ? r.word->str() : "") << ',' << r.value.str() << ',' << r.value_float << ','
            << (row.agrees ? "yes" : "no") << '\n';
    }
    return out.str();
}

CrossCheckReport cross_check(BetaKind kind, std::size_t p_max, std::size_t workers, int digits) {
    require_period(p_max);
    const BetaContext& ctx = make_context(kind);
    CrossCheckReport report;

    for (std::size_t p = 1; p <= p_max; ++p) {
        SurvivorRecord brute = brute_force_S(ctx, p, workers, digits);
        SurvivorRecord theorem = theorem_record(kind, p, digits);
        std::optional<SurvivorRecord> closed = closed_record(kind, p, digits);

        bool theorem_ok = false;
        std::string detail;
        if (theorem.word) {
            const bool same_value = brute.value == theorem.value;
            const bool same_word = brute.word && *brute.word == lex_min_rotation(*theorem.word);
            theorem_ok = same_value && same_word;
            detail = "brute=" + (brute.word ? brute.word->str() : std::string("empty")) + " [" +
                     brute.value.str() + "] theorem=" + theorem.word->str() + " [" +
                     theorem.value.str() + "]";
        } else {
            theorem_ok = brute.value.is_zero();
            detail = "brute=" + brute.value.str() + " but the critical value is 0";
        }
        if (!theorem_ok) {
            report.mismatches.push_back({kind, p, MismatchKind::Theorem, detail});
        }

        report.rows.push_back({kind, brute, theorem_ok});
        const FieldElement reference = theorem.word ? theorem.value : brute.value;
        report.rows.push_back({kind, std::move(theorem), theorem_ok});

        if (closed) {
            const bool formula_ok = closed->value == reference;
            if (!formula_ok && theorem_ok) {
                report.mismatches.push_back(
                    {kind, p, MismatchKind::PaperFormula,
                     "closed=" + closed->value.str() + " critical=" + reference.str()});
            }
            report.rows.push_back({kind, std::move(*closed), formula_ok});
        }
    }
    return report;
}

} // namespace betasurv
