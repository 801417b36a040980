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

#include "vortex2l/phase_portraits.hpp"

#include <cmath>

#include "vortex2l/special_functions.hpp"

namespace vortex2l {

PhaseCase make_phase_case(PhaseKind kind, double alpha) {
    switch (kind) {
        case PhaseKind::two_layer_opposite:
            break;
        case PhaseKind::two_layer_same:
            if (!(alpha > 0.0))
                throw std::domain_error("phase case: same-sign case needs alpha > 0");
            break;
        case PhaseKind::one_layer_case1:
            if (alpha != 0.0)
                throw std::domain_error("phase case: one-layer case 1 has alpha = 0");
            break;
        case PhaseKind::one_layer_case2:
        case PhaseKind::one_layer_case3:
            if (alpha != 1.0)
                throw std::domain_error("phase case: one-layer cases 2 and 3 have alpha = 1");
            break;
    }
    return {kind, alpha};
}

bool in_domain(const PhaseCase& c, double x, double y) {
    (void)x;
    switch (c.kind) {
        case PhaseKind::two_layer_opposite:
            return y > 0.0 && y - c.alpha > 0.0;
        case PhaseKind::two_layer_same:
            return y > 0.0 && y < c.alpha;
        case PhaseKind::one_layer_case1:
            return y > 0.0 && x != 0.0;
        case PhaseKind::one_layer_case2:
            return y > 1.0;
        case PhaseKind::one_layer_case3:
            return y > 0.0 && y < 1.0;
    }
    return false;
}

double phase_hamiltonian(const PhaseCase& c, double x, double y) {
    if (!in_domain(c, x, y))
        throw std::domain_error("phase_hamiltonian: point outside case domain");
    const double x2 = x * x;
    switch (c.kind) {
        case PhaseKind::two_layer_opposite: {
            // G1 = -G2 = 1, y1 = y, y2 = y - alpha
            const double y2v = y - c.alpha;
            const double r12 = std::sqrt(x2 + c.alpha * c.alpha);
            const double r12s = std::sqrt(x2 + (2.0 * y - c.alpha) * (2.0 * y - c.alpha));
            return k0(2.0 * y) - std::log(2.0 * y) + k0(2.0 * y2v) -
                   std::log(2.0 * y2v) -
                   2.0 * (log_plus_k0(r12) - log_plus_k0(r12s));
        }
        case PhaseKind::two_layer_same: {
            // G1 = G2 = 1, y1 = y, y2 = alpha - y; finite at the stacked point
            const double y2v = c.alpha - y;
            const double r12 = std::sqrt(x2 + (2.0 * y - c.alpha) * (2.0 * y - c.alpha));
            const double r12s = std::sqrt(x2 + c.alpha * c.alpha);
            return k0(2.0 * y) - std::log(2.0 * y) + k0(2.0 * y2v) -
                   std::log(2.0 * y2v) +
                   2.0 * (log_plus_k0(r12) - log_plus_k0(r12s));
        }
        case PhaseKind::one_layer_case1:
            // unscreened pair, y1 = y2 = y; scale covariant:
            // H(sx, sy) = H(x, y) - ln s
            return std::log(std::sqrt(x2 + 4.0 * y * y) / (2.0 * y * std::abs(x)));
        case PhaseKind::one_layer_case2:
            return -std::log(4.0 * y * (y - 1.0)) +
                   std::log((x2 + (2.0 * y - 1.0) * (2.0 * y - 1.0)) / (x2 + 1.0));
        case PhaseKind::one_layer_case3:
            return -std::log(4.0 * y * (1.0 - y)) +
                   std::log((x2 + (2.0 * y - 1.0) * (2.0 * y - 1.0)) / (x2 + 1.0));
    }
    throw std::domain_error("phase_hamiltonian: unknown case");
}

SystemState reconstruct_two_vortex(const PhaseCase& c, double x, double y) {
    if (!in_domain(c, x, y))
        throw std::domain_error("reconstruct_two_vortex: point outside case domain");
    const double dx = std::abs(x);
    SystemState s;
    switch (c.kind) {
        case PhaseKind::two_layer_opposite:
            s.vortices = {{Layer::one, 1.0, 0.0, y}, {Layer::two, -1.0, dx, y - c.alpha}};
            return s;
        case PhaseKind::two_layer_same:
            s.vortices = {{Layer::one, 1.0, 0.0, y}, {Layer::two, 1.0, dx, c.alpha - y}};
            return s;
        default:
            throw std::domain_error(
                "reconstruct_two_vortex: one-layer comparison cases have no "
                "two-layer state");
    }
}

FieldGrid grid_evaluate(const PhaseCase& c, const GridSpec& spec) {
    if (spec.nx < 2 || spec.ny < 2)
        throw std::domain_error("grid_evaluate: need nx, ny >= 2");
    FieldGrid f;
    f.spec = spec;
    f.values.assign(static_cast<std::size_t>(spec.nx) * spec.ny, 0.0);
    f.in_domain.assign(f.values.size(), 0);
    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            const double x = f.x_at(i);
            const double y = f.y_at(j);
            const std::size_t k = f.index(i, j);
            if (in_domain(c, x, y)) {
                f.values[k] = phase_hamiltonian(c, x, y);
                f.in_domain[k] = 1;
            }
        }
    }
    return f;
}

}  // namespace vortex2l
