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

// Command-line front end: single queries, tables and figure data, and the
// verification sweep.

#ifndef BETASURV_CLI_HPP
#define BETASURV_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betasurv/field.hpp"
#include "betasurv/survivor.hpp"

namespace betasurv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

enum class Format { Text, Csv, Svg };
enum class MethodChoice { Brute, Theorem, Closed, All };

struct RunConfig {
    BetaKind kind = BetaKind::Base2;
    std::size_t p = 1;
    std::size_t p_max = 12;
    MethodChoice method = MethodChoice::All;
    Format format = Format::Text;
    int digits = kDefaultFloatDigits;
    std::size_t workers = 1;
    std::string out_path;
    /// Lets the exhaustive search run up to kExtendedOracleMaxPeriod.
    bool allow_large = false;
    /// Restricts table rows to p = residue (mod modulus).
    std::optional<std::pair<std::size_t, std::size_t>> family;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

int cmd_survivor(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace betasurv::cli

#endif // BETASURV_CLI_HPP
