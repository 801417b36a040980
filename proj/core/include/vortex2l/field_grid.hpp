// Copyright (c) 2026 the vortex2l developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VORTEX2L_FIELD_GRID_HPP
#define VORTEX2L_FIELD_GRID_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vortex2l/model.hpp"

// Rectangular sampling of a scalar field plus marching-squares level-curve
// extraction.  Out-of-domain samples carry an explicit flag rather than NaN
// so CSV output stays deterministic.

namespace vortex2l {

struct GridSpec {
    double x0, x1;
    double y0, y1;
    int nx, ny;  // sample counts per axis, >= 2
};

struct FieldGrid {
    GridSpec spec{};
    std::vector<double> values;      // row-major, index = j * nx + i
    std::vector<std::uint8_t> in_domain;

    double x_at(int i) const {
        return spec.x0 + (spec.x1 - spec.x0) * i / (spec.nx - 1);
    }
    double y_at(int j) const {
        return spec.y0 + (spec.y1 - spec.y0) * j / (spec.ny - 1);
    }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * spec.nx + i;
    }
};

struct Polyline {
    double level;
    std::vector<Vec2> points;
    bool closed = false;
};

/// Marching squares with linear edge interpolation; cells touching an
/// out-of-domain sample are skipped.  Segments are chained into polylines;
/// a polyline is closed when it returns to its starting grid edge.  Levels
/// outside the field range yield no polylines.
std::vector<Polyline> extract_level_curves(const FieldGrid& field,
                                           const std::vector<double>& levels);

/// CSV with header x,y,value,in_domain (value printed as 0 out of domain).
void write_field_csv(std::ostream& os, const FieldGrid& field);

/// CSV with header level,segment_id,x,y.
void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines);

}  // namespace vortex2l

#endif  // VORTEX2L_FIELD_GRID_HPP
