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

#ifndef VORTEX2L_STREAMLINES_HPP
#define VORTEX2L_STREAMLINES_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "vortex2l/field_grid.hpp"
#include "vortex2l/model.hpp"

// Layer-1 streamfunction fields of four two-vortex configurations and
// location/classification of their stagnation points.  The wall y = 0 is
// itself a streamline (psi1 = 0), so the normal velocity vanishes there
// identically and boundary stagnation points are zeros of the tangential
// velocity -dpsi1/dy alone.

namespace vortex2l {

enum class StreamKind {
    same_sign_horizontal,  // G1 = 1 at (0, beta) L1, G2 = 1 at (alpha, beta) L2
    same_sign_vertical,    // G1 = 1 at (0, alpha) L1, G2 = 1 at (0, beta - alpha) L2
    opposite_horizontal,   // G1 = 1 at (0, beta) L1, G2 = -1 at (alpha, beta) L2
    opposite_vertical,     // G1 = 1 at (0, alpha) L1, G2 = -1 at (0, alpha - beta) L2
};

struct StreamConfig {
    StreamKind kind;
    double alpha;
    double beta;
};

/// Validates the parameter constraints of the kind (e.g. 0 < alpha < beta
/// for the same-sign vertical stack).
StreamConfig make_stream_config(StreamKind kind, double alpha, double beta);

/// The corresponding two-vortex state.
SystemState reconstruct_state(const StreamConfig& config);

/// psi1 at p (p.y >= 0); finite at the cross-layer vortex position, singular
/// (throws) at the layer-1 vortex.
double stream_psi1(const StreamConfig& config, Vec2 p);

/// (dpsi1/dx, dpsi1/dy) at p.
Vec2 stream_psi1_gradient(const StreamConfig& config, Vec2 p);

enum class StagnationClass { saddle, center, boundary, degenerate };

const char* to_string(StagnationClass c);

struct StagnationPoint {
    Vec2 position;                // interior: y > 0; boundary: y = 0
    StagnationClass classification;
    double hessian_det;           // 0 for boundary points
};

struct SearchWindow {
    double x0, x1;
    double y0, y1;
};

/// [-max(3, alpha+3), max(3, alpha+3)] x (1e-3, beta+4]: encloses the
/// vortices and the near field of their images.
SearchWindow default_window(const StreamConfig& config);

/// Interior candidates: 2-D Newton on grad psi1 = 0 seeded from sign-change
/// cells of a grid_seeds x grid_seeds velocity grid.  Boundary candidates:
/// 1-D Newton on dpsi1/dy(x, 0) = 0.  Converged points are deduplicated at
/// 1e-6 and vortex positions excluded.  An empty list is a valid result.
std::vector<StagnationPoint> find_stagnation_points(const StreamConfig& config,
                                                    const SearchWindow& window,
                                                    int grid_seeds = 60);

std::vector<StagnationPoint> find_stagnation_points(const StreamConfig& config,
                                                    int grid_seeds = 60);

/// Classifies an interior stagnation point by the Hessian determinant of
/// psi1 (central differences, h = 1e-5): det < -1e-8 saddle, det > 1e-8
/// center, otherwise degenerate.  Never guesses on a degenerate Hessian.
StagnationClass classify_stagnation(const StreamConfig& config, Vec2 p,
                                    double* hessian_det = nullptr);

/// Same classification applied to an arbitrary gradient field; used for
/// auxiliary fields in tests and shared by classify_stagnation.
StagnationClass classify_from_gradient(
    const std::function<Vec2(Vec2)>& gradient, Vec2 p, double h,
    double* hessian_det = nullptr);

/// psi1 sampled on a grid (all of the upper half plane is in domain).
FieldGrid stream_field(const StreamConfig& config, const GridSpec& spec);

/// CSV with header kind,alpha,beta,x,y,class,hessian_det.
void write_stagnation_csv(std::ostream& os, const StreamConfig& config,
                          const std::vector<StagnationPoint>& points);

}  // namespace vortex2l

#endif  // VORTEX2L_STREAMLINES_HPP
