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

#ifndef VORTEX2L_PHASE_PORTRAITS_HPP
#define VORTEX2L_PHASE_PORTRAITS_HPP

#include "vortex2l/field_grid.hpp"
#include "vortex2l/model.hpp"

// Reduced two-vortex Hamiltonians H(x, y; alpha) in the phase coordinates
// x = |x1 - x2| and y = y1, using the momentum invariant to eliminate y2,
// plus the three one-layer comparison cases.  H is even in x, so grids may
// span negative x to extract closed orbits around the stacked point.

namespace vortex2l {

enum class PhaseKind {
    two_layer_opposite,  // G1 = -G2 = 1, y2 = y - alpha, domain y > max(0, alpha)
    two_layer_same,      // G1 =  G2 = 1, y2 = alpha - y, domain 0 < y < alpha
    one_layer_case1,     // G1 = -G2 = 1, alpha = 0, domain x != 0, y > 0
    one_layer_case2,     // G1 = -G2 = 1, alpha = 1, domain y > 1
    one_layer_case3,     // G1 =  G2 = 1, alpha = 1, domain 0 < y < 1
};

struct PhaseCase {
    PhaseKind kind;
    double alpha;
};

/// Validates the (kind, alpha) combination: one-layer cases carry a fixed
/// alpha, two_layer_same requires alpha > 0.
PhaseCase make_phase_case(PhaseKind kind, double alpha);

bool in_domain(const PhaseCase& c, double x, double y);

/// The closed-form reduced Hamiltonian; throws std::domain_error outside the
/// case domain.  The stacked point of the same-sign case is the finite
/// cross-layer limit, not a singularity.
double phase_hamiltonian(const PhaseCase& c, double x, double y);

/// The two-vortex state with |x1 - x2| = x and y1 = y realizing the reduced
/// coordinates (two-layer kinds only); phase_hamiltonian equals
/// vortex2l::hamiltonian of this state.
SystemState reconstruct_two_vortex(const PhaseCase& c, double x, double y);

/// Dense evaluation with out-of-domain flags; throws for degenerate grids.
FieldGrid grid_evaluate(const PhaseCase& c, const GridSpec& spec);

}  // namespace vortex2l

#endif  // VORTEX2L_PHASE_PORTRAITS_HPP
