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

// The beta-transformation, greedy and quasi-greedy digits, admissibility of
// cyclic words and survivor membership of periodic points.

#ifndef BETASURV_EXPANSIONS_HPP
#define BETASURV_EXPANSIONS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "betasurv/field.hpp"
#include "betasurv/word.hpp"

namespace betasurv {

/// T(x) = b*x - floor(b*x). Throws std::domain_error unless 0 <= x < 1.
FieldElement t_beta(const FieldElement& x);

/// First n greedy digits of x in [0, 1).
Word greedy_digits(const FieldElement& x, std::size_t n);

struct QuasiGreedyExpansion {
    /// The first n digits.
    Word prefix;
    /// The full expansion, when the greedy recursion terminated or cycled
    /// within the first n steps.
    std::optional<PeriodicSeq> exact;
};

/// Largest expansion of x not ending in 0^inf. Throws std::domain_error
/// for x = 0 (no such expansion) or x outside (0, 1).
QuasiGreedyExpansion quasi_greedy_digits(const FieldElement& x, std::size_t n);

struct AdmissibilityReport {
    Word word;
    bool admissible = true;
    std::optional<std::size_t> failing_offset;
    /// (rotation, delta) at the first failing offset.
    std::optional<std::pair<Word, PeriodicSeq>> failing_comparison;

    /// "001: admissible" or "01: inadmissible offset=1: (10)^∞ ⊀ δ=(10)^∞".
    std::string str() const;
};

/// Every rotation r of w must satisfy r^inf < delta strictly.
AdmissibilityReport is_admissible(const Word& w, const BetaContext& ctx);

struct OrbitMinimum {
    Word rotation;
    std::size_t offset;
    FieldElement value;
};

/// The smallest point of the periodic orbit of [(w)^inf]. Throws
/// std::domain_error for inadmissible w.
OrbitMinimum orbit_min(const Word& w, const BetaContext& ctx);

/// Whether [(w)^inf] lies in the survivor set of the hole [0, t).
bool survives(const Word& w, const FieldElement& t, const BetaContext& ctx);

} // namespace betasurv

#endif // BETASURV_EXPANSIONS_HPP
