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

// Critical hole size S(p): the largest t for which the survivor set of the
// hole [0, t) still holds a point of smallest period p. Computed three ways
// (exhaustive search, critical words, closed forms) and cross-checked.

#ifndef BETASURV_SURVIVOR_HPP
#define BETASURV_SURVIVOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betasurv/field.hpp"
#include "betasurv/word.hpp"

namespace betasurv {

inline constexpr int kDefaultFloatDigits = 10;
/// Largest period the exhaustive search runs by default, and with the
/// explicit opt-in.
inline constexpr std::size_t kDefaultOracleMaxPeriod = 20;
inline constexpr std::size_t kExtendedOracleMaxPeriod = 26;

enum class Method { BruteForce, TheoremWord, ClosedForm };

/// "brute", "theorem", "closed".
std::string_view name(Method method) noexcept;

struct SurvivorRecord {
    std::size_t p;
    /// Lex-min rotation of the critical word; absent for closed forms and
    /// for empty records.
    std::optional<Word> word;
    FieldElement value;
    std::string value_float;
    Method method;
    /// No admissible primitive word of period p (value is then 0).
    bool empty = false;
    /// Extra representatives attaining the maximum (exhaustive search only).
    std::size_t ties = 0;
};

/// Exhaustive search over the primitive necklaces of length p, split over
/// `workers` threads. The result does not depend on `workers`.
SurvivorRecord brute_force_S(const BetaContext& ctx, std::size_t p, std::size_t workers = 1,
                             int digits = kDefaultFloatDigits);

/// The critical word asserted for period p, or nullopt on the branches
/// whose value is 0 (golden p = 1, 2; tribonacci p = 1).
std::optional<Word> theorem_word(BetaKind kind, std::size_t p);
SurvivorRecord theorem_record(BetaKind kind, std::size_t p, int digits = kDefaultFloatDigits);

/// The printed closed-form value, or nullopt where no formula covers p.
std::optional<FieldElement> closed_form(BetaKind kind, std::size_t p);
std::optional<SurvivorRecord> closed_record(BetaKind kind, std::size_t p,
                                            int digits = kDefaultFloatDigits);

/// lim S(p): 1/2, 1/(b^3 - b), (b^2 + 1)/(b^4 - b).
FieldElement limit_value(BetaKind kind);

/// A residue class of periods on which S(p) increases.
struct Family {
    std::string_view label;
    std::size_t modulus;
    std::size_t residue;
    std::size_t first;

    std::vector<std::size_t> members(std::size_t p_max) const;
};

std::vector<Family> families(BetaKind kind);

enum class MismatchKind {
    /// Exhaustive search disagrees with the critical word.
    Theorem,
    /// A closed form disagrees with a critical word that itself checks out.
    PaperFormula,
};

struct Mismatch {
    BetaKind kind;
    std::size_t p;
    MismatchKind what;
    std::string detail;
};

struct CrossCheckRow {
    BetaKind kind;
    SurvivorRecord record;
    bool agrees;
};

struct CrossCheckReport {
    std::vector<CrossCheckRow> rows;
    std::vector<Mismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
    std::size_t count(MismatchKind what) const noexcept;

    /// Rows as `kind,p,method,word,exact,float,agrees`, header first.
    std::string csv(bool header = true) const;
};

CrossCheckReport cross_check(BetaKind kind, std::size_t p_max, std::size_t workers = 1,
                             int digits = kDefaultFloatDigits);

} // namespace betasurv

#endif // BETASURV_SURVIVOR_HPP
