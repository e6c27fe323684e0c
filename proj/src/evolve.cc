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

#include "cqca/evolve.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cqca/errors.h"

namespace cqca {

EvolutionTrace evolve(const ScaMatrix &s, const PhaseVector &xi0, std::int64_t steps, bool check_light_cone) {
    if (steps < 0) {
        throw DomainError("number of steps must be non-negative");
    }
    std::size_t dim = xi0.dim();
    EvolutionTrace trace{steps, neighborhood_radius(s), Exponent(dim, 0), Exponent(dim, 0), {}};
    std::vector<Exponent> initial = xi0.support();
    if (!initial.empty()) {
        trace.lo = initial.front();
        trace.hi = initial.front();
        for (const auto &x : initial) {
            for (std::size_t k = 0; k < dim; k++) {
                trace.lo[k] = std::min(trace.lo[k], x[k]);
                trace.hi[k] = std::max(trace.hi[k], x[k]);
            }
        }
    }

    PhaseVector xi = xi0;
    for (std::int64_t t = 0; t <= steps; t++) {
        if (t > 0) {
            xi = apply(s, xi);
        }
        for (const Exponent &x : xi.support()) {
            if (check_light_cone) {
                for (std::size_t k = 0; k < dim; k++) {
                    if (x[k] < trace.lo[k] - t * trace.radius || x[k] > trace.hi[k] + t * trace.radius) {
                        throw std::logic_error("orbit left its light cone at step " + std::to_string(t));
                    }
                }
            }
            trace.rows.push_back({t, x, xi.plus.coefficient(x).value(), xi.minus.coefficient(x).value()});
        }
    }
    return trace;
}

std::string render_csv(const EvolutionTrace &trace) {
    std::ostringstream out;
    out << "t,x,plus,minus\n";
    for (const auto &row : trace.rows) {
        out << row.t << ',';
        for (std::size_t k = 0; k < row.x.size(); k++) {
            out << (k ? ";" : "") << row.x[k];
        }
        out << ',' << row.plus << ',' << row.minus << '\n';
    }
    return out.str();
}

namespace {

void require_one_dimensional(const EvolutionTrace &trace) {
    if (trace.lo.size() != 1) {
        throw DomainError("image renderings are available in one dimension only");
    }
}

/// Per step, per column: bit 0 plus present, bit 1 minus present.
std::vector<std::vector<std::uint8_t>> occupancy(const EvolutionTrace &trace) {
    std::int64_t width = render_width(trace);
    std::int64_t left = trace.lo[0] - trace.radius * trace.steps;
    std::vector<std::vector<std::uint8_t>> grid(
        static_cast<std::size_t>(trace.steps + 1), std::vector<std::uint8_t>(static_cast<std::size_t>(width), 0));
    for (const auto &row : trace.rows) {
        std::int64_t column = row.x[0] - left;
        if (column < 0 || column >= width) {
            continue;
        }
        grid[static_cast<std::size_t>(row.t)][static_cast<std::size_t>(column)] =
            static_cast<std::uint8_t>((row.plus ? 1 : 0) | (row.minus ? 2 : 0));
    }
    return grid;
}

}  // namespace

std::int64_t render_width(const EvolutionTrace &trace) {
    require_one_dimensional(trace);
    return 2 * trace.radius * trace.steps + (trace.hi[0] - trace.lo[0] + 1);
}

std::string render_ascii(const EvolutionTrace &trace) {
    std::int64_t width = render_width(trace);
    if (width > kMaxAsciiColumns) {
        throw DomainError("light cone is " + std::to_string(width) + " columns wide, more than the ascii limit");
    }
    static constexpr char kGlyphs[] = {' ', '+', '-', '*'};
    std::string out;
    for (const auto &line : occupancy(trace)) {
        for (auto cell : line) {
            out += kGlyphs[cell];
        }
        out += '\n';
    }
    return out;
}

std::string render_pgm(const EvolutionTrace &trace) {
    static constexpr unsigned char kShades[] = {0, 96, 160, 255};
    std::int64_t width = render_width(trace);
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(trace.steps + 1) + "\n255\n";
    for (const auto &line : occupancy(trace)) {
        for (auto cell : line) {
            out += static_cast<char>(kShades[cell]);
        }
    }
    return out;
}

}  // namespace cqca
