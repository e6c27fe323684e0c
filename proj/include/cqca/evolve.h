// Copyright 2026 The cqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQCA_EVOLVE_H
#define CQCA_EVOLVE_H

#include <cstdint>
#include <string>
#include <vector>

#include "cqca/sca.h"

namespace cqca {

struct TraceRow {
    std::int64_t t;
    Exponent x;
    std::uint32_t plus;
    std::uint32_t minus;

    bool operator==(const TraceRow &) const = default;
};

/// Orbit xi_t = s^t xi_0 for t = 0..steps, one row per supported site per step, sites ascending.
struct EvolutionTrace {
    std::int64_t steps;
    /// Neighborhood radius of the automaton.
    std::int64_t radius;
    /// Bounding box of supp(xi_0), per coordinate; [0, 0] when xi_0 = 0.
    Exponent lo;
    Exponent hi;
    std::vector<TraceRow> rows;
};

/// Iterates the automaton. With `check_light_cone`, throws std::logic_error if some supp(xi_t) leaves the
/// box [lo - t R, hi + t R].
EvolutionTrace evolve(const ScaMatrix &s, const PhaseVector &xi0, std::int64_t steps, bool check_light_cone = true);

/// "t,x,plus,minus" header then one row per line. In d > 1 the site is written as x1;x2;...
std::string render_csv(const EvolutionTrace &trace);

/// Columns spanned by the ascii and pgm renderings: 2 R T + (hi - lo + 1). One dimension only.
std::int64_t render_width(const EvolutionTrace &trace);

/// Widest light cone the ascii renderer accepts.
inline constexpr std::int64_t kMaxAsciiColumns = 201;

/// One line per step, one glyph per site: ' ' absent, '+' plus only, '-' minus only, '*' both.
/// Throws DomainError in d > 1 or when wider than kMaxAsciiColumns.
std::string render_ascii(const EvolutionTrace &trace);

/// Binary P5 graymap, (T + 1) rows by render_width() columns: absent 0, plus 96, minus 160, both 255.
std::string render_pgm(const EvolutionTrace &trace);

}  // namespace cqca

#endif
