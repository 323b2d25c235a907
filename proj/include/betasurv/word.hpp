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

// Finite binary words, eventually periodic sequences and their lexicographic
// order, plus enumeration of primitive necklace representatives.

#ifndef BETASURV_WORD_HPP
#define BETASURV_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betasurv {

using Digit = std::uint8_t;

/// A nonempty finite word over {0,1}.
class Word {
public:
    /// Throws std::invalid_argument if `digits` is empty or holds a symbol > 1.
    explicit Word(std::vector<Digit> digits);

    /// Parses a plain 0/1 string such as "0011".
    static Word parse(std::string_view text);

    /// The `length` low bits of `bits`, most significant first.
    static Word from_bits(std::uint64_t bits, std::size_t length);

    std::size_t size() const noexcept { return digits_.size(); }
    Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
    std::span<const Digit> digits() const noexcept { return digits_; }

    /// The word read as a binary number, most significant digit first.
    /// Only meaningful for size() <= 64.
    std::uint64_t to_bits() const noexcept;

    std::string str() const;

    Word repeat(std::size_t times) const;
    Word operator+(const Word& rhs) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return a.digits_ <=> b.digits_;
    }

private:
    std::vector<Digit> digits_;
};

/// Least q such that w is the (|w|/q)-fold repetition of its q-prefix.
std::size_t smallest_period(const Word& w);

inline bool is_primitive(const Word& w) { return smallest_period(w) == w.size(); }

/// Cyclic rotation by `offset` to the left.
Word rotate(const Word& w, std::size_t offset);

/// All |w| rotations, in order of offset.
std::vector<Word> rotations(const Word& w);

/// The rotation r minimising r^inf; ties (non-primitive w) go to the
/// smallest offset.
Word lex_min_rotation(const Word& w);

/// An eventually periodic binary sequence pre (period)^inf.
///
/// Construction does not canonicalise; `canonical()` does, and equality
/// always compares canonical forms.
class PeriodicSeq {
public:
    explicit PeriodicSeq(Word period);
    PeriodicSeq(std::vector<Digit> preperiod, Word period);

    /// Parses the `pre(period)` notation, e.g. "1(0)" or "(01)".
    static PeriodicSeq parse(std::string_view text);

    std::span<const Digit> preperiod() const noexcept { return pre_; }
    const Word& period() const noexcept { return period_; }
    bool purely_periodic() const noexcept { return pre_.empty(); }

    /// Symbol at zero-based position i of the infinite sequence.
    Digit at(std::size_t i) const noexcept;

    /// Primitive period, shortest preperiod.
    PeriodicSeq canonical() const;

    std::string str() const;

    friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b);

private:
    std::vector<Digit> pre_;
    Word period_;
};

/// Drops the first symbol. Not canonicalised.
PeriodicSeq shift(const PeriodicSeq& s);

/// Lexicographic comparison of the infinite sequences. Decided within
/// |pre_a| + |pre_b| + lcm(|per_a|, |per_b|) symbols.
std::strong_ordering lex_compare(const PeriodicSeq& a, const PeriodicSeq& b);

/// True iff the `length` low bits of `bits` spell a Lyndon word, i.e. a
/// primitive word strictly below all of its proper rotations.
bool is_lyndon_bits(std::uint64_t bits, std::size_t length) noexcept;

/// The lex-min representatives of the primitive cyclic classes of length p,
/// yielded in increasing integer value. A range may be restricted to the
/// half-open value window [first, last) and split into disjoint parts.
class PrimitiveRepresentatives {
public:
    explicit PrimitiveRepresentatives(std::size_t length);
    PrimitiveRepresentatives(std::size_t length, std::uint64_t first, std::uint64_t last);

    std::size_t length() const noexcept { return length_; }
    std::uint64_t first() const noexcept { return first_; }
    std::uint64_t last() const noexcept { return last_; }

    /// `parts` contiguous disjoint windows covering this one, in order.
    std::vector<PrimitiveRepresentatives> split(std::size_t parts) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using reference = Word;
        using pointer = void;

        iterator() = default;
        iterator(const PrimitiveRepresentatives* owner, std::uint64_t value);

        Word operator*() const { return Word::from_bits(value_, owner_->length_); }
        std::uint64_t bits() const noexcept { return value_; }
        iterator& operator++();
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.value_ == b.value_;
        }

    private:
        void settle();

        const PrimitiveRepresentatives* owner_ = nullptr;
        std::uint64_t value_ = 0;
    };

    iterator begin() const { return iterator(this, first_); }
    iterator end() const { return iterator(this, last_); }

    std::vector<Word> collect() const;
    std::size_t count() const;

private:
    std::size_t length_;
    std::uint64_t first_;
    std::uint64_t last_;
};

} // namespace betasurv

#endif // BETASURV_WORD_HPP
