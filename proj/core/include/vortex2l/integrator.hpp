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

#ifndef VORTEX2L_INTEGRATOR_HPP
#define VORTEX2L_INTEGRATOR_HPP

#include <iosfwd>
#include <vector>

#include "vortex2l/model.hpp"

// Fixed-step classical RK4 on the vortex velocity field, with invariant
// monitoring (H and the y-momentum are recorded, not enforced) and clean
// truncation when a trajectory approaches a kernel singularity.

namespace vortex2l {

struct IntegratorConfig {
    double dt = 1e-3;
    long steps = 1000;
    long record_every = 1;
    // truncation guards: abort (with a flag, not an exception) if any vortex
    // height or same-layer separation falls below these floors
    double y_floor = 1e-9;
    double separation_floor = 1e-9;
};

struct TrajectorySample {
    double time;
    SystemState state;
    double hamiltonian;
    double y_momentum;
    double min_pair_separation;
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;  // strictly increasing in time
    bool truncated = false;                 // hit a floor before finishing
    long steps_taken = 0;
};

TrajectoryRecord integrate(const SystemState& initial, const IntegratorConfig& cfg);

/// CSV with header t,idx,layer,gamma,x,y,H,M; one row per vortex per sample,
/// samples in time order, vortices in state order, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& record);

struct CollapseReport {
    std::vector<double> times;
    std::vector<double> separations;  // r_12(t)
    bool monotone_decreasing = false;
    bool reached_zero = false;  // separation hit 0 (or a floor) within the horizon
    double min_separation = 0.0;
    // least-squares fits over the final half of the horizon; both are
    // reported, neither is asserted
    double exponential_rate = 0.0;      // -slope of ln r vs t
    double exponential_r_squared = 0.0;
    double algebraic_exponent = 0.0;    // slope of ln r vs ln(t_end - t)
    double algebraic_r_squared = 0.0;
    bool truncated = false;
};

/// Two-vortex separation diagnostic for (near-)collapsing trajectories.
CollapseReport collapse_diagnostic(const SystemState& initial,
                                   const IntegratorConfig& cfg);

}  // namespace vortex2l

#endif  // VORTEX2L_INTEGRATOR_HPP
