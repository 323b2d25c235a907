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

// Exact arithmetic in Q(beta) for the three supported bases, with sign
// determination by interval evaluation over an isolating interval of beta.

#ifndef BETASURV_FIELD_HPP
#define BETASURV_FIELD_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "betasurv/word.hpp"

namespace betasurv {

using Rational = mpq_class;

enum class BetaKind { Base2, Golden, Tribonacci };

inline constexpr std::array<BetaKind, 3> kAllBetaKinds = {BetaKind::Base2, BetaKind::Golden,
                                                          BetaKind::Tribonacci};

/// Command-line spelling: "2", "golden", "tribonacci".
std::string_view name(BetaKind kind) noexcept;
std::optional<BetaKind> parse_beta_kind(std::string_view text) noexcept;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct RootInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
};

class BetaContext;

/// c0 + c1*b + ... + c_{d-1}*b^{d-1}, reduced modulo the minimal polynomial
/// of b. Coefficients past the degree are kept at zero, so equality of
/// coefficient arrays is equality in the field.
class FieldElement {
public:
    explicit FieldElement(const BetaContext& ctx);
    FieldElement(const BetaContext& ctx, Rational constant);
    /// Accepts any number of coefficients; higher powers are reduced.
    FieldElement(const BetaContext& ctx, std::span<const Rational> coefficients);

    const BetaContext& context() const noexcept { return *ctx_; }
    const Rational& coefficient(std::size_t i) const { return c_.at(i); }
    bool is_zero() const noexcept;

    FieldElement times_beta() const;
    FieldElement pow(unsigned exponent) const;
    /// Throws std::domain_error for zero.
    FieldElement inverse() const;

    /// Exact rendering, e.g. "1/2 + 3/7*b - b^2".
    std::string str() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);
    FieldElement& operator+=(const Rational& rhs);
    FieldElement& operator-=(const Rational& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator+(FieldElement a, const Rational& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const Rational& b) { return a -= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    /// Exact order of the real values, via sign(a - b).
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

private:
    void check_same_context(const FieldElement& rhs) const;

    const BetaContext* ctx_;
    std::array<Rational, 3> c_;
};

/// A refinement level of the root interval together with the powers of its
/// endpoints, so interval evaluation costs d multiplications per endpoint.
struct IntervalLevel {
    RootInterval interval;
    std::array<Rational, 3> lo_powers;
    std::array<Rational, 3> hi_powers;
};

/// Immutable description of one base: minimal polynomial, an isolating
/// interval for its root in (1, 2], and the quasi-greedy expansion of 1.
/// Safe to share between threads.
class BetaContext {
public:
    explicit BetaContext(BetaKind kind);
    BetaContext(const BetaContext&) = delete;
    BetaContext& operator=(const BetaContext&) = delete;

    BetaKind kind() const noexcept { return kind_; }
    std::size_t degree() const noexcept { return degree_; }

    /// Monic minimal polynomial, constant term first.
    std::span<const long> minpoly() const noexcept {
        return std::span<const long>(minpoly_.data(), degree_ + 1);
    }
    /// b^d = reduction[0] + reduction[1]*b + ... ; the minimal polynomial
    /// with the leading term moved across.
    std::span<const long> reduction() const noexcept {
        return std::span<const long>(reduction_.data(), degree_);
    }

    const RootInterval& root_interval() const noexcept { return levels_.front().interval; }
    const PeriodicSeq& delta() const noexcept { return delta_; }

    Sign minpoly_sign(const Rational& x) const;
    /// One bisection step; the result still isolates the root.
    RootInterval bisect(const RootInterval& iv) const;
    /// Bisects from `start` until the width is at most `max_width`.
    RootInterval refine(RootInterval start, const Rational& max_width) const;

    /// Precomputed refinements of increasing precision, coarsest first.
    const std::vector<IntervalLevel>& levels() const noexcept { return levels_; }

    FieldElement zero() const { return FieldElement(*this); }
    FieldElement one() const { return FieldElement(*this, Rational(1)); }
    FieldElement beta() const;
    const FieldElement& beta_inverse() const noexcept { return *beta_inverse_; }

    /// 1 / (b^p - 1), cached for small p.
    FieldElement inverse_beta_power_minus_one(std::size_t p) const;

private:
    BetaKind kind_;
    std::size_t degree_;
    std::array<long, 4> minpoly_{};
    std::array<long, 3> reduction_{};
    PeriodicSeq delta_;
    std::vector<IntervalLevel> levels_;
    std::optional<FieldElement> beta_inverse_;
    std::vector<FieldElement> geometric_inverse_;
};

/// Process-wide immutable context for `kind`.
const BetaContext& make_context(BetaKind kind);

IntervalLevel make_level(const RootInterval& iv, std::size_t degree);

/// Enclosure of the real value of `a` over the interval of `level`.
std::pair<Rational, Rational> enclosure(const FieldElement& a, const IntervalLevel& level);

Sign sign(const FieldElement& a);

/// Decimal rendering of `q` rounded half-up to `digits` significant digits.
std::string format_significant(const Rational& q, int digits);

/// Decimal approximation of `a` correct to `digits` significant digits.
std::string to_float(const FieldElement& a, int digits);

/// [(w)^inf]_b = (sum w_i b^{p-i}) / (b^p - 1).
FieldElement eval_periodic(const Word& w, const BetaContext& ctx);

/// sum_{i=1}^{n} d_i b^{-i} for a finite digit string.
FieldElement eval_finite(std::span<const Digit> digits, const BetaContext& ctx);

FieldElement eval_eventually_periodic(const PeriodicSeq& s, const BetaContext& ctx);

} // namespace betasurv

#endif // BETASURV_FIELD_HPP
