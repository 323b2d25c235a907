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

// Self-contained SVG scatter/line plot of S(p) against p.

#ifndef BETASURV_SVG_HPP
#define BETASURV_SVG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace betasurv {

struct PlotPoint {
    std::size_t p;
    double value;
};

/// One <circle> per point joined by a polyline; axis ranges come from the
/// data.
std::string render_svg(std::span<const PlotPoint> points, std::string_view title);

} // namespace betasurv

#endif // BETASURV_SVG_HPP
