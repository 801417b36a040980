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

#ifndef VORTEX2L_MODEL_HPP
#define VORTEX2L_MODEL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Two-layer point vortices on the upper half plane {y > 0} with the wall
// condition psi = 0 on y = 0 enforced by the method of images.  A source in
// the same layer as the field contributes
//     G [ ln r - ln r* - K0(r) + K0(r*) ]
// and a source in the other layer contributes
//     G [ ln r + K0(r) - (ln r* + K0(r*)) ]
// where r is the direct separation and r* the separation from the image
// across the wall.  The cross-layer combination ln r + K0(r) is finite at
// r = 0, so two vortices in *different* layers may sit at the same point.
//
// The deformation radius is fixed to 1 (k = 1); all lengths are measured in
// that unit.  States are immutable values and every function here is pure.

namespace vortex2l {

enum class Layer : int { one = 1, two = 2 };

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vortex {
    Layer layer = Layer::one;
    double gamma = 1.0;  // circulation, finite and nonzero
    double x = 0.0;
    double y = 1.0;  // strictly positive (open upper half plane)
};

struct SystemState {
    std::vector<Vortex> vortices;
    double time = 0.0;
};

/// Direct and image separations of a vortex pair.
struct PairGeometry {
    double r_direct;  // |z_i - z_j|
    double r_image;   // |z_i - conj(z_j)|, conj reflecting y -> -y
};

/// Raised when a configuration hits a genuine singularity of the kernels
/// (two vortices in the same layer at the same point, or evaluation of a
/// field at such a vortex).
class SingularityError : public std::domain_error {
  public:
    explicit SingularityError(const std::string& what)
        : std::domain_error(what) {}
};

/// Throws std::domain_error / SingularityError if the state violates its
/// invariants: at least one vortex, finite nonzero strengths, y > 0, and no
/// same-layer coincident pair.
void validate(const SystemState& state);

PairGeometry pair_geometry(Vec2 a, Vec2 b);

/// Streamfunction of the given layer at p (p.y >= 0), superposed over all
/// vortices.  When exclude_direct_of is set, that vortex's *direct* field
/// (the singular part) is omitted while its image field is kept; this is
/// exactly the field that advects the vortex itself.  Identically zero on
/// the wall y = 0.
double streamfunction(Layer layer, const SystemState& state, Vec2 p,
                      std::optional<std::size_t> exclude_direct_of = {});

/// Gradient (d/dx, d/dy) of the same superposition, assembled from the
/// closed-form kernel derivatives h_same and h_cross.
Vec2 streamfunction_gradient(Layer layer, const SystemState& state, Vec2 p,
                             std::optional<std::size_t> exclude_direct_of = {});

/// Velocity (xdot, ydot) = (-dpsi/dy, +dpsi/dx) of vortex i, advected by all
/// other vortices and by every image including its own.
Vec2 velocity(const SystemState& state, std::size_t i);

std::vector<Vec2> velocities(const SystemState& state);

/// The invariant H.  Self terms G_i^2 [K0(2 y_i) - ln 2 y_i], pair terms
/// 2 G_i G_j [ln r - ln r* -+ K0(r) +- K0(r*)] with the upper signs for a
/// same-layer pair and the lower signs for a cross-layer pair.  Stacked
/// cross-layer pairs use the finite limit of ln r + K0(r).
double hamiltonian(const SystemState& state);

/// The invariant sum_i G_i y_i.
double y_momentum(const SystemState& state);

/// d(r_12^2)/dt for a two-vortex state:
/// (x1-x2)(xd1-xd2) + (y1-y2)(yd1-yd2).
double separation_rate_squared(const SystemState& state);

/// Smallest direct separation over all vortex pairs (+infinity for a single
/// vortex).
double min_pair_separation(const SystemState& state);

/// JSON round trip:  {"time": t, "vortices": [{"layer": 1|2, "gamma": g,
/// "x": x, "y": y}, ...]}.
std::string to_json(const SystemState& state);
SystemState state_from_json(const std::string& text);

}  // namespace vortex2l

#endif  // VORTEX2L_MODEL_HPP
