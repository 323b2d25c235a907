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

#include "betasurv/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace betasurv {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Quotient and remainder of num / den over Q; den must be nonzero.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    trim(num);
    if (num.size() < den.size()) {
        return {Poly{}, num};
    }
    Poly quot(num.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational factor = num[i + den.size() - 1] / lead;
        quot[i] = factor;
        if (factor == 0) {
            continue;
        }
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[i + j] -= factor * den[j];
        }
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(quot);
    return {quot, num};
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

Poly subtract(Poly a, const Poly& b) {
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

mpz_class pow10(unsigned long k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

Rational pow10_signed(long k) {
    if (k >= 0) {
        return Rational(pow10(static_cast<unsigned long>(k)));
    }
    return Rational(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
}

mpz_class floor_of(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

PeriodicSeq delta_for(BetaKind kind) {
    switch (kind) {
    case BetaKind::Base2:
        return PeriodicSeq(Word::parse("1"));
    case BetaKind::Golden:
        return PeriodicSeq(Word::parse("10"));
    case BetaKind::Tribonacci:
        return PeriodicSeq(Word::parse("110"));
    }
    throw std::invalid_argument("unsupported beta kind");
}

constexpr std::size_t kCachedPeriods = 64;

} // namespace

std::string_view name(BetaKind kind) noexcept {
    switch (kind) {
    case BetaKind::Base2:
        return "2";
    case BetaKind::Golden:
        return "golden";
    case BetaKind::Tribonacci:
        return "tribonacci";
    }
    return "?";
}

std::optional<BetaKind> parse_beta_kind(std::string_view text) noexcept {
    if (text == "2" || text == "base2") {
        return BetaKind::Base2;
    }
    if (text == "golden") {
        return BetaKind::Golden;
    }
    if (text == "tribonacci") {
        return BetaKind::Tribonacci;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const BetaContext& ctx) : ctx_(&ctx) {}

FieldElement::FieldElement(const BetaContext& ctx, Rational constant) : ctx_(&ctx) {
    c_[0] = std::move(constant);
}

FieldElement::FieldElement(const BetaContext& ctx, std::span<const Rational> coefficients)
    : ctx_(&ctx) {
    const std::size_t d = ctx.degree();
    Poly work(coefficients.begin(), coefficients.end());
    const auto red = ctx.reduction();
    for (std::size_t i = work.size(); i-- > d;) {
        if (work[i] == 0) {
            continue;
        }
        const Rational top = work[i];
        work[i] = 0;
        for (std::size_t k = 0; k < d; ++k) {
            work[i - d + k] += top * red[k];
        }
    }
    for (std::size_t i = 0; i < std::min(d, work.size()); ++i) {
        c_[i] = work[i];
    }
}

bool FieldElement::is_zero() const noexcept {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0;
}

void FieldElement::check_same_context(const FieldElement& rhs) const {
    if (ctx_ != rhs.ctx_) {
        throw std::invalid_argument("field elements belong to different bases");
    }
}

FieldElement FieldElement::times_beta() const {
    const std::size_t d = ctx_->degree();
    const auto red = ctx_->reduction();
    FieldElement out(*ctx_);
    const Rational& top = c_[d - 1];
    for (std::size_t k = 0; k < d; ++k) {
        out.c_[k] = top * red[k];
        if (k > 0) {
            out.c_[k] += c_[k - 1];
        }
    }
    return out;
}

FieldElement FieldElement::pow(unsigned exponent) const {
    FieldElement result = ctx_->one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero in Q(beta)");
    }
    const std::size_t d = ctx_->degree();
    Poly r0;
    for (long c : ctx_->minpoly()) {
        r0.emplace_back(c);
    }
    Poly r1(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(d));
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        Poly s2 = subtract(s0, multiply(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // The minimal polynomial is irreducible, so the gcd r0 is a constant.
    if (r0.size() != 1) {
        throw std::logic_error("minimal polynomial is not irreducible");
    }
    for (auto& c : s0) {
        c /= r0[0];
    }
    return FieldElement(*ctx_, s0);
}

std::string FieldElement::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < ctx_->degree(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) {
            out += magnitude.get_str() + "*";
        }
        out += k == 1 ? "b" : "b^" + std::to_string(k);
    }
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_context(rhs);
    for (std::size_t k = 0; k < ctx_->degree(); ++k) {
        c_[k] += rhs.c_[k];
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_context(rhs);
    for (std::size_t k = 0; k < ctx_->degree(); ++k) {
        c_[k] -= rhs.c_[k];
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_context(rhs);
    const std::size_t d = ctx_->degree();
    std::array<Rational, 5> prod;
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            prod[i + j] += c_[i] * rhs.c_[j];
        }
    }
    *this = FieldElement(*ctx_, std::span<const Rational>(prod.data(), 2 * d - 1));
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_context(rhs);
    return *this *= rhs.inverse();
}

FieldElement& FieldElement::operator+=(const Rational& rhs) {
    c_[0] += rhs;
    return *this;
}

FieldElement& FieldElement::operator-=(const Rational& rhs) {
    c_[0] -= rhs;
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(*ctx_);
    for (std::size_t k = 0; k < ctx_->degree(); ++k) {
        out.c_[k] = -c_[k];
    }
    return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    switch (sign(a - b)) {
    case Sign::Negative:
        return std::strong_ordering::less;
    case Sign::Zero:
        return std::strong_ordering::equal;
    case Sign::Positive:
        break;
    }
    return std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// BetaContext

IntervalLevel make_level(const RootInterval& iv, std::size_t degree) {
    IntervalLevel level{iv, {}, {}};
    Rational lo_pow(1);
    Rational hi_pow(1);
    for (std::size_t k = 0; k < degree; ++k) {
        level.lo_powers[k] = lo_pow;
        level.hi_powers[k] = hi_pow;
        lo_pow *= iv.lo;
        hi_pow *= iv.hi;
    }
    return level;
}

BetaContext::BetaContext(BetaKind kind) : kind_(kind), degree_(0), delta_(delta_for(kind)) {
    RootInterval initial;
    switch (kind) {
    case BetaKind::Base2:
        degree_ = 1;
        minpoly_ = {-2, 1, 0, 0};
        initial = {Rational(2), Rational(2)};
        break;
    case BetaKind::Golden:
        degree_ = 2;
        minpoly_ = {-1, -1, 1, 0};
        initial = {Rational(8, 5), Rational(17, 10)};
        break;
    case BetaKind::Tribonacci:
        degree_ = 3;
        minpoly_ = {-1, -1, -1, 1};
        initial = {Rational(9, 5), Rational(19, 10)};
        break;
    }
    for (std::size_t k = 0; k < degree_; ++k) {
        reduction_[k] = -minpoly_[k];
    }

    levels_.push_back(make_level(initial, degree_));
    if (initial.width() > 0) {
        RootInterval iv = initial;
        for (unsigned bits : {12U, 40U, 100U, 200U}) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
            iv = refine(iv, Rational(mpz_class(1), den));
            levels_.push_back(make_level(iv, degree_));
        }
    }

    beta_inverse_ = beta().inverse();
    geometric_inverse_.reserve(kCachedPeriods);
    FieldElement power = beta();
    for (std::size_t p = 1; p <= kCachedPeriods; ++p) {
        geometric_inverse_.push_back((power - Rational(1)).inverse());
        power = power.times_beta();
    }
}

Sign BetaContext::minpoly_sign(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = degree_ + 1; k-- > 0;) {
        acc = acc * x + minpoly_[k];
    }
    return acc > 0 ? Sign::Positive : (acc < 0 ? Sign::Negative : Sign::Zero);
}

RootInterval BetaContext::bisect(const RootInterval& iv) const {
    if (iv.width() == 0) {
        return iv;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    // The polynomial is monic and the root is simple: negative left of it.
    switch (minpoly_sign(mid)) {
    case Sign::Negative:
        return {std::move(mid), iv.hi};
    case Sign::Positive:
        return {iv.lo, std::move(mid)};
    case Sign::Zero:
        break;
    }
    return {mid, mid};
}

RootInterval BetaContext::refine(RootInterval start, const Rational& max_width) const {
    if (max_width <= 0) {
        throw std::invalid_argument("refinement width must be positive");
    }
    while (start.width() > max_width) {
        start = bisect(start);
    }
    return start;
}

FieldElement BetaContext::beta() const {
    const Rational coeffs[2] = {Rational(0), Rational(1)};
    return FieldElement(*this, std::span<const Rational>(coeffs, 2));
}

FieldElement BetaContext::inverse_beta_power_minus_one(std::size_t p) const {
    if (p == 0) {
        throw std::invalid_argument("period must be positive");
    }
    if (p <= geometric_inverse_.size()) {
        return geometric_inverse_[p - 1];
    }
    return (beta().pow(static_cast<unsigned>(p)) - Rational(1)).inverse();
}

const BetaContext& make_context(BetaKind kind) {
    static const BetaContext base2(BetaKind::Base2);
    static const BetaContext golden(BetaKind::Golden);
    static const BetaContext tribonacci(BetaKind::Tribonacci);
    switch (kind) {
    case BetaKind::Base2:
        return base2;
    case BetaKind::Golden:
        return golden;
    case BetaKind::Tribonacci:
        return tribonacci;
    }
    throw std::invalid_argument("unsupported beta kind");
}

// ---------------------------------------------------------------------------
// Sign and decimal output

std::pair<Rational, Rational> enclosure(const FieldElement& a, const IntervalLevel& level) {
    // Every endpoint is positive, so each term c_k x^k is monotone in x.
    Rational lo(0);
    Rational hi(0);
    for (std::size_t k = 0; k < a.context().degree(); ++k) {
        const Rational& c = a.coefficient(k);
        if (c == 0) {
            continue;
        }
        Rational at_lo = c * level.lo_powers[k];
        Rational at_hi = c * level.hi_powers[k];
        if (at_lo <= at_hi) {
            lo += at_lo;
            hi += at_hi;
        } else {
            lo += at_hi;
            hi += at_lo;
        }
    }
    return {lo, hi};
}

Sign sign(const FieldElement& a) {
    if (a.is_zero()) {
        return Sign::Zero;
    }
    const BetaContext& ctx = a.context();
    auto decide = [&](const IntervalLevel& level) -> std::optional<Sign> {
        auto [lo, hi] = enclosure(a, level);
        if (lo > 0) {
            return Sign::Positive;
        }
        if (hi < 0) {
            return Sign::Negative;
        }
        return std::nullopt;
    };
    for (const IntervalLevel& level : ctx.levels()) {
        if (auto s = decide(level)) {
            return *s;
        }
    }
    // A nonzero element of Q(b) has a nonzero value at b, so this ends.
    RootInterval iv = ctx.levels().back().interval;
    for (;;) {
        for (int step = 0; step < 16; ++step) {
            iv = ctx.bisect(iv);
        }
        if (auto s = decide(make_level(iv, ctx.degree()))) {
            return *s;
        }
    }
}

std::string format_significant(const Rational& q, int digits) {
    if (digits < 1) {
        throw std::invalid_argument("significant digits must be at least 1");
    }
    if (q == 0) {
        return "0";
    }
    const bool negative = q < 0;
    const Rational a = abs(q);

    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (a >= pow10_signed(e + 1)) {
        ++e;
    }
    while (a < pow10_signed(e)) {
        --e;
    }

    const Rational scaled = a * pow10_signed(digits - 1 - e);
    mpz_class n = floor_of(scaled + Rational(1, 2));
    if (n == pow10(static_cast<unsigned long>(digits))) {
        n /= 10;
        ++e;
    }
    const std::string ds = n.get_str();
    const auto ndigits = static_cast<long>(ds.size());

    std::string out = negative ? "-" : "";
    if (e >= ndigits - 1) {
        out += ds + std::string(static_cast<std::size_t>(e - ndigits + 1), '0');
    } else if (e >= 0) {
        out += ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
               ds.substr(static_cast<std::size_t>(e + 1));
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return out;
}

std::string to_float(const FieldElement& a, int digits) {
    if (digits < 1) {
        throw std::invalid_argument("significant digits must be at least 1");
    }
    if (a.is_zero()) {
        return "0";
    }
    const BetaContext& ctx = a.context();
    auto attempt = [&](const IntervalLevel& level) -> std::optional<std::string> {
        auto [lo, hi] = enclosure(a, level);
        std::string lo_text = format_significant(lo, digits);
        if (lo_text == format_significant(hi, digits)) {
            return lo_text;
        }
        return std::nullopt;
    };
    for (const IntervalLevel& level : ctx.levels()) {
        if (auto text = attempt(level)) {
            return *text;
        }
    }
    // Irrational values never sit on a rounding boundary; rational ones are
    // evaluated exactly (only c0 is nonzero), so refinement terminates.
    RootInterval iv = ctx.levels().back().interval;
    for (;;) {
        for (int step = 0; step < 16; ++step) {
            iv = ctx.bisect(iv);
        }
        if (auto text = attempt(make_level(iv, ctx.degree()))) {
            return *text;
        }
    }
}

// ---------------------------------------------------------------------------
// Series evaluation

FieldElement eval_periodic(const Word& w, const BetaContext& ctx) {
    FieldElement numerator = ctx.zero();
    for (Digit d : w.digits()) {
        numerator = numerator.times_beta();
        if (d != 0) {
            numerator += Rational(d);
        }
    }
    if (numerator.is_zero()) {
        return numerator;
    }
    return numerator * ctx.inverse_beta_power_minus_one(w.size());
}

FieldElement eval_finite(std::span<const Digit> digits, const BetaContext& ctx) {
    FieldElement acc = ctx.zero();
    for (Digit d : digits) {
        acc = acc.times_beta();
        if (d != 0) {
            acc += Rational(d);
        }
    }
    if (acc.is_zero()) {
        return acc;
    }
    return acc * ctx.beta_inverse().pow(static_cast<unsigned>(digits.size()));
}

FieldElement eval_eventually_periodic(const PeriodicSeq& s, const BetaContext& ctx) {
    const auto pre = s.preperiod();
    FieldElement head = ctx.zero();
    for (Digit d : pre) {
        head = head.times_beta();
        if (d != 0) {
            head += Rational(d);
        }
    }
    FieldElement total = head + eval_periodic(s.period(), ctx);
    if (pre.empty() || total.is_zero()) {
        return total;
    }
    return total * ctx.beta_inverse().pow(static_cast<unsigned>(pre.size()));
}

} // namespace betasurv
