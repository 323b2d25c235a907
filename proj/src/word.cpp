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

#include "betasurv/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace betasurv {

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("word must be nonempty");
    }
    for (Digit d : digits_) {
        if (d > 1) {
            throw std::invalid_argument("word digits must be 0 or 1");
        }
    }
}

Word Word::parse(std::string_view text) {
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("not a binary word: '" + std::string(text) + "'");
        }
        digits.push_back(static_cast<Digit>(c - '0'));
    }
    return Word(std::move(digits));
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
    std::vector<Digit> digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        digits[i] = static_cast<Digit>((bits >> (length - 1 - i)) & 1U);
    }
    return Word(std::move(digits));
}

std::uint64_t Word::to_bits() const noexcept {
    std::uint64_t bits = 0;
    for (Digit d : digits_) {
        bits = (bits << 1) | d;
    }
    return bits;
}

std::string Word::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

Word Word::repeat(std::size_t times) const {
    if (times == 0) {
        throw std::invalid_argument("repeat count must be positive");
    }
    std::vector<Digit> out;
    out.reserve(digits_.size() * times);
    for (std::size_t k = 0; k < times; ++k) {
        out.insert(out.end(), digits_.begin(), digits_.end());
    }
    return Word(std::move(out));
}

Word Word::operator+(const Word& rhs) const {
    std::vector<Digit> out(digits_);
    out.insert(out.end(), rhs.digits_.begin(), rhs.digits_.end());
    return Word(std::move(out));
}

std::size_t smallest_period(const Word& w) {
    const std::size_t p = w.size();
    for (std::size_t q = 1; q < p; ++q) {
        if (p % q != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = q; i < p && repeats; ++i) {
            repeats = w[i] == w[i - q];
        }
        if (repeats) {
            return q;
        }
    }
    return p;
}

Word rotate(const Word& w, std::size_t offset) {
    const std::size_t p = w.size();
    std::vector<Digit> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        out[i] = w[(i + offset) % p];
    }
    return Word(std::move(out));
}

std::vector<Word> rotations(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        out.push_back(rotate(w, k));
    }
    return out;
}

Word lex_min_rotation(const Word& w) {
    // All rotations share the length, so comparing r^inf reduces to
    // comparing the finite words.
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (r < best) {
            best = std::move(r);
        }
    }
    return best;
}

PeriodicSeq::PeriodicSeq(Word period) : period_(std::move(period)) {}

PeriodicSeq::PeriodicSeq(std::vector<Digit> preperiod, Word period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
    for (Digit d : pre_) {
        if (d > 1) {
            throw std::invalid_argument("preperiod digits must be 0 or 1");
        }
    }
}

PeriodicSeq PeriodicSeq::parse(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')') {
        throw std::invalid_argument("expected pre(period) notation: '" + std::string(text) + "'");
    }
    std::vector<Digit> pre;
    for (char c : text.substr(0, open)) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad preperiod in '" + std::string(text) + "'");
        }
        pre.push_back(static_cast<Digit>(c - '0'));
    }
    Word period = Word::parse(text.substr(open + 1, text.size() - open - 2));
    return PeriodicSeq(std::move(pre), std::move(period));
}

Digit PeriodicSeq::at(std::size_t i) const noexcept {
    if (i < pre_.size()) {
        return pre_[i];
    }
    return period_[(i - pre_.size()) % period_.size()];
}

PeriodicSeq PeriodicSeq::canonical() const {
    const std::size_t q = smallest_period(period_);
    std::vector<Digit> period(period_.digits().begin(), period_.digits().begin() + q);
    std::vector<Digit> pre = pre_;
    // Absorb trailing preperiod symbols into the period: x (y..z x)^inf = (x y..z)^inf.
    while (!pre.empty() && pre.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        pre.pop_back();
    }
    return PeriodicSeq(std::move(pre), Word(std::move(period)));
}

std::string PeriodicSeq::str() const {
    std::string out;
    for (Digit d : pre_) {
        out.push_back(static_cast<char>('0' + d));
    }
    out.push_back('(');
    out += period_.str();
    out.push_back(')');
    return out;
}

bool operator==(const PeriodicSeq& a, const PeriodicSeq& b) {
    const PeriodicSeq ca = a.canonical();
    const PeriodicSeq cb = b.canonical();
    return std::ranges::equal(ca.pre_, cb.pre_) && ca.period_ == cb.period_;
}

PeriodicSeq shift(const PeriodicSeq& s) {
    if (!s.purely_periodic()) {
        std::vector<Digit> pre(s.preperiod().begin() + 1, s.preperiod().end());
        return PeriodicSeq(std::move(pre), s.period());
    }
    return PeriodicSeq(rotate(s.period(), 1));
}

std::strong_ordering lex_compare(const PeriodicSeq& a, const PeriodicSeq& b) {
    const std::size_t window = a.preperiod().size() + b.preperiod().size() +
                               std::lcm(a.period().size(), b.period().size());
    for (std::size_t i = 0; i < window; ++i) {
        const Digit x = a.at(i);
        const Digit y = b.at(i);
        if (x != y) {
            return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

bool is_lyndon_bits(std::uint64_t bits, std::size_t length) noexcept {
    const std::uint64_t mask = (length >= 64) ? ~0ULL : ((1ULL << length) - 1);
    for (std::size_t k = 1; k < length; ++k) {
        const std::uint64_t r = ((bits << k) | (bits >> (length - k))) & mask;
        if (r <= bits) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr std::size_t kMaxEnumerationLength = 62;

void check_length(std::size_t length) {
    if (length == 0 || length > kMaxEnumerationLength) {
        throw std::invalid_argument("enumeration length must be in [1, 62]");
    }
}

} // namespace

PrimitiveRepresentatives::PrimitiveRepresentatives(std::size_t length)
    : PrimitiveRepresentatives(length, 0, length <= kMaxEnumerationLength ? (1ULL << length) : 0) {}

PrimitiveRepresentatives::PrimitiveRepresentatives(std::size_t length, std::uint64_t first,
                                                   std::uint64_t last)
    : length_(length), first_(first), last_(last) {
    check_length(length);
    if (first > last || last > (1ULL << length)) {
        throw std::invalid_argument("enumeration window out of range");
    }
}

std::vector<PrimitiveRepresentatives> PrimitiveRepresentatives::split(std::size_t parts) const {
    if (parts == 0) {
        throw std::invalid_argument("split needs at least one part");
    }
    std::vector<PrimitiveRepresentatives> out;
    out.reserve(parts);
    const std::uint64_t span = last_ - first_;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::uint64_t lo = first_ + span / parts * i + std::min<std::uint64_t>(i, span % parts);
        const std::uint64_t hi = lo + span / parts + (i < span % parts ? 1 : 0);
        out.emplace_back(length_, lo, hi);
    }
    return out;
}

PrimitiveRepresentatives::iterator::iterator(const PrimitiveRepresentatives* owner,
                                             std::uint64_t value)
    : owner_(owner), value_(value) {
    settle();
}

PrimitiveRepresentatives::iterator& PrimitiveRepresentatives::iterator::operator++() {
    ++value_;
    settle();
    return *this;
}

void PrimitiveRepresentatives::iterator::settle() {
    while (value_ < owner_->last_ && !is_lyndon_bits(value_, owner_->length_)) {
        ++value_;
    }
}

std::vector<Word> PrimitiveRepresentatives::collect() const {
    return {begin(), end()};
}

std::size_t PrimitiveRepresentatives::count() const {
    std::size_t n = 0;
    for (auto it = begin(); it != end(); ++it) {
        ++n;
    }
    return n;
}

} // namespace betasurv
