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

#ifndef VORTEX2L_EQUILIBRIA_HPP
#define VORTEX2L_EQUILIBRIA_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vortex2l/model.hpp"

// Relative equilibria of symmetric three-vortex configurations
// (G1 = G2 = 1 in layer 1, G3 = -alpha in layer 2, momentum level beta with
// y3 = (y1 + y2 - beta)/alpha), plus the two-vortex equilibrium analysis:
// the positivity certificate showing the opposite-sign pair admits no
// relative equilibrium and the stacked same-sign equilibrium check.

namespace vortex2l {

enum class FamilyKind {
    horizontal,  // G1 at (x, y), G2 at (-x, y); unknowns (x, y)
    vertical,    // G1 at (0, Y), G2 at (0, y);  unknowns (Y, y)
};

struct EquilibriumFamily {
    FamilyKind kind;
    double alpha;  // G3 = -alpha
    double beta;   // momentum level
};

struct EquilibriumSolution {
    double c1, c2;         // (x, y) or (Y, y)
    double y3;             // derived height of G3
    double residual_norm;  // Euclidean norm of the residual pair
};

struct Residual2 {
    double r1, r2;
};

/// The three-vortex states behind the residuals.  Throw std::domain_error
/// when any derived height is nonpositive (or Y == y for the vertical kind).
SystemState build_horizontal_state(const EquilibriumFamily& fam, double x, double y);
SystemState build_vertical_state(const EquilibriumFamily& fam, double Y, double y);

/// (r1, r2) = (yd1, xd1 - xd3): the mirror symmetry gives xd1 = xd2 and
/// yd1 = -yd2 identically, so these two conditions freeze the shape.
Residual2 residual_horizontal(double x, double y, const EquilibriumFamily& fam);

/// (r1, r2) = (xd1 - xd3, xd2 - xd3); every ydi vanishes identically for the
/// collinear configuration.
Residual2 residual_vertical(double Y, double y, const EquilibriumFamily& fam);

struct MultistartSpec {
    int grid_per_axis = 16;     // log-spaced starting grid per coordinate
    double coord_min = 0.01;
    double coord_max = 30.0;
    int random_starts = 200;
    std::uint64_t seed = 42;
    double newton_tol = 1e-10;  // convergence on the residual norm
    int max_iterations = 80;
    double dedup_tol = 1e-3;    // Euclidean tolerance in solution space
};

/// Damped Newton (numerically differenced Jacobian, central differences with
/// relative step 1e-6, step halving up to 20 times) from every start;
/// converged, physical (all heights positive), deduplicated roots sorted by
/// coordinates.  Vertical solutions are canonicalized to Y >= y since the
/// two layer-1 vortices are interchangeable.  An empty list is a valid
/// result, not an error.
std::vector<EquilibriumSolution> solve_family(const EquilibriumFamily& fam,
                                              const MultistartSpec& spec = {});

struct RefineResult {
    bool converged = false;
    double c1 = 0.0, c2 = 0.0;
    double residual_norm = 0.0;
    int iterations = 0;
};

/// Newton refinement from a single starting point (no multistart).
RefineResult refine_root(const EquilibriumFamily& fam, double c1, double c2,
                         double tol = 1e-10, int max_iterations = 80);

/// CSV with header family,alpha,beta,c1,c2,y3,residual.
void write_solutions_csv(std::ostream& os, const EquilibriumFamily& fam,
                         const std::vector<EquilibriumSolution>& sols);

struct PositivityCertificate {
    double min_value = 0.0;         // min of xd1 - xd2 over all samples
    double min_geometric_sub = 0.0; // min of the geometric sub-expression
                                    // over non-degenerate samples
    double arg_y1 = 0.0, arg_y2 = 0.0, arg_dx = 0.0;  // where the min occurred
    long samples = 0;
    bool positive = false;
};

/// Samples xd1 - xd2 for the opposite-sign pair (G1 = -G2 = 1, layers 1, 2)
/// over a grid plus random draws of (y1, y2, x1-x2) in (0, y_max]^2 x
/// [0, y_max] and reports the minimum; a strictly positive minimum certifies
/// that no relative equilibrium exists in the sampled range.
PositivityCertificate verify_no_equilibrium_opposite(double y_max, long samples,
                                                     std::uint64_t seed = 42);

struct StackedReport {
    double alpha = 0.0;
    double ydot1 = 0.0, ydot2 = 0.0;
    double xdot_mismatch = 0.0;      // xd1 - xd2
    double translation_speed = 0.0;  // common xdot of the pair
    bool confirmed = false;
};

/// The same-sign pair stacked at (0, alpha/2) in layers 1 and 2: confirms
/// yd1 = yd2 = 0 and xd1 = xd2 and reports the common translation speed.
StackedReport stacked_equilibrium_check(double alpha);

}  // namespace vortex2l

#endif  // VORTEX2L_EQUILIBRIA_HPP
