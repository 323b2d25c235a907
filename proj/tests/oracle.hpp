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

// Independent reference computations used only by the tests: plain doubles,
// string rotations and exhaustive grouping. Nothing here calls into the
// library's evaluation or enumeration paths.

#ifndef BETASURV_TESTS_ORACLE_HPP
#define BETASURV_TESTS_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Root in (1, 2] of x^d = x^{d-1} + ... + 1 (d = 1 gives 2) by Newton.
inline double multinacci_root(int degree) {
    if (degree == 1) {
        return 2.0;
    }
    double x = 1.9;
    for (int it = 0; it < 100; ++it) {
        double f = std::pow(x, degree);
        double df = degree * std::pow(x, degree - 1);
        for (int k = 0; k < degree; ++k) {
            f -= std::pow(x, k);
            if (k > 0) {
                df -= k * std::pow(x, k - 1);
            }
        }
        x -= f / df;
    }
    return x;
}

/// Truncated series sum_{i>=1} x_i b^{-i} for (w)^inf.
inline double periodic_value(const std::string& w, double beta) {
    double value = 0.0;
    double scale = 1.0;
    for (int i = 0; i < 4000; ++i) {
        scale /= beta;
        if (scale < 1e-300) {
            break;
        }
        value += (w[static_cast<std::size_t>(i) % w.size()] - '0') * scale;
    }
    return value;
}

inline std::string bits_to_string(std::uint64_t bits, std::size_t length) {
    std::string out(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
        out[i] = static_cast<char>('0' + ((bits >> (length - 1 - i)) & 1U));
    }
    return out;
}

inline bool primitive(const std::string& w) {
    for (std::size_t q = 1; q < w.size(); ++q) {
        if (w.size() % q == 0 && (w.substr(q) + w.substr(0, q)) == w) {
            return false;
        }
    }
    return true;
}

/// Every binary word of length p, grouped by rotation class; returns the
/// minimum of each primitive class.
inline std::set<std::string> primitive_classes(std::size_t p) {
    std::set<std::string> classes;
    for (std::uint64_t v = 0; v < (1ULL << p); ++v) {
        const std::string w = bits_to_string(v, p);
        if (!primitive(w)) {
            continue;
        }
        std::string best = w;
        for (std::size_t k = 1; k < p; ++k) {
            best = std::min(best, w.substr(k) + w.substr(0, k));
        }
        classes.insert(best);
    }
    return classes;
}

inline int moebius(std::size_t n) {
    int result = 1;
    for (std::size_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

/// (1/p) sum_{d | p} mu(d) 2^{p/d}.
inline std::size_t lyndon_count(std::size_t p) {
    long long total = 0;
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d == 0) {
            total += moebius(d) * (1LL << (p / d));
        }
    }
    return static_cast<std::size_t>(total / static_cast<long long>(p));
}

/// Lexicographic comparison of (a)^inf and (b)^inf over a generous window.
inline int compare_periodic(const std::string& a, const std::string& b) {
    const std::size_t n = 2 * a.size() * b.size() + 4;
    for (std::size_t i = 0; i < n; ++i) {
        const char x = a[i % a.size()];
        const char y = b[i % b.size()];
        if (x != y) {
            return x < y ? -1 : 1;
        }
    }
    return 0;
}

/// All rotations of w, extended periodically, strictly below delta^inf.
inline bool admissible(const std::string& w, const std::string& delta) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (compare_periodic(w.substr(k) + w.substr(0, k), delta) >= 0) {
            return false;
        }
    }
    return true;
}

} // namespace oracle

#endif // BETASURV_TESTS_ORACLE_HPP
