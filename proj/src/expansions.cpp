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

#include "betasurv/expansions.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace betasurv {

namespace {

void require_unit_interval(const FieldElement& x) {
    if (sign(x) == Sign::Negative || sign(x - Rational(1)) != Sign::Negative) {
        throw std::domain_error("expected 0 <= x < 1, got " + x.str());
    }
}

// One step of the digit recursion for x in [0, 1): returns the digit and
// replaces x by the remainder. Digits are 0 or 1 because b <= 2.
Digit greedy_step(FieldElement& x) {
    FieldElement scaled = x.times_beta();
    if (sign(scaled - Rational(1)) != Sign::Negative) {
        scaled -= Rational(1);
        x = std::move(scaled);
        return 1;
    }
    x = std::move(scaled);
    return 0;
}

} // namespace

FieldElement t_beta(const FieldElement& x) {
    require_unit_interval(x);
    FieldElement r = x;
    greedy_step(r);
    return r;
}

Word greedy_digits(const FieldElement& x, std::size_t n) {
    require_unit_interval(x);
    if (n == 0) {
        throw std::invalid_argument("digit count must be positive");
    }
    std::vector<Digit> digits;
    digits.reserve(n);
    FieldElement r = x;
    for (std::size_t i = 0; i < n; ++i) {
        digits.push_back(greedy_step(r));
    }
    return Word(std::move(digits));
}

QuasiGreedyExpansion quasi_greedy_digits(const FieldElement& x, std::size_t n) {
    require_unit_interval(x);
    if (x.is_zero()) {
        throw std::domain_error("0 has no expansion that avoids ending in 0^inf");
    }
    if (n == 0) {
        throw std::invalid_argument("digit count must be positive");
    }
    const BetaContext& ctx = x.context();

    std::vector<Digit> digits;
    std::map<std::string, std::size_t> seen;  // remainder -> step it was reached at
    std::optional<PeriodicSeq> exact;
    FieldElement r = x;
    for (std::size_t i = 0; i < n && !exact; ++i) {
        seen.emplace(r.str(), i);
        digits.push_back(greedy_step(r));
        if (r.is_zero()) {
            // Finite greedy b_1..b_k 0^inf becomes b_1..(b_k - 1) delta.
            digits.back() -= 1;
            exact = PeriodicSeq(digits, ctx.delta().period());
        } else if (auto it = seen.find(r.str()); it != seen.end()) {
            std::vector<Digit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            std::vector<Digit> period(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            exact = PeriodicSeq(std::move(pre), Word(std::move(period)));
        }
    }

    if (exact) {
        std::vector<Digit> prefix(n);
        for (std::size_t i = 0; i < n; ++i) {
            prefix[i] = exact->at(i);
        }
        return {Word(std::move(prefix)), std::move(exact)};
    }
    return {Word(std::move(digits)), std::nullopt};
}

std::string AdmissibilityReport::str() const {
    std::string out = word.str();
    if (admissible) {
        return out + ": admissible";
    }
    out += ": inadmissible";
    if (failing_offset && failing_comparison) {
        out += " offset=" + std::to_string(*failing_offset) + ": (" +
               failing_comparison->first.str() + ")^∞ ⊀ δ=" + failing_comparison->second.str();
    }
    return out;
}

AdmissibilityReport is_admissible(const Word& w, const BetaContext& ctx) {
    AdmissibilityReport report{w, true, std::nullopt, std::nullopt};
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (lex_compare(PeriodicSeq(r), ctx.delta()) != std::strong_ordering::less) {
            report.admissible = false;
            report.failing_offset = k;
            report.failing_comparison.emplace(std::move(r), ctx.delta());
            break;
        }
    }
    return report;
}

OrbitMinimum orbit_min(const Word& w, const BetaContext& ctx) {
    if (!is_admissible(w, ctx).admissible) {
        throw std::domain_error("orbit_min needs an admissible word, got " + w.str());
    }
    // Walk the orbit with the shift identity [sigma(x)] = b*[x] - x_1.
    FieldElement value = eval_periodic(w, ctx);
    FieldElement best = value;
    std::size_t best_offset = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        value = value.times_beta();
        if (w[k - 1] != 0) {
            value -= Rational(1);
        }
        if (value < best) {
            best = value;
            best_offset = k;
        }
    }
    return {rotate(w, best_offset), best_offset, std::move(best)};
}

bool survives(const Word& w, const FieldElement& t, const BetaContext& ctx) {
    require_unit_interval(t);
    return orbit_min(w, ctx).value >= t;
}

} // namespace betasurv
