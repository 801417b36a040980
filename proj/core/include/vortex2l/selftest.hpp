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

#ifndef VORTEX2L_SELFTEST_HPP
#define VORTEX2L_SELFTEST_HPP

#include <iosfwd>
#include <string>

// The end-to-end verification suite: eleven numbered criteria covering
// kernel accuracy against the shipped reference table, the velocity/
// streamfunction consistency oracle, invariant conservation, reproduction
// of the tabulated relative equilibria and their bifurcation counts, the
// no-equilibrium positivity certificate, stacked-equilibrium behavior,
// stagnation-point topology, the collapse diagnostic, and reduced/full
// Hamiltonian agreement.  One PASS/FAIL line is printed per criterion.

namespace vortex2l {

struct SelftestOptions {
    // directory holding bessel_reference.csv and equilibria_reference.csv
    std::string fixtures_dir = ".";
};

/// Runs every criterion, writes one line each to `out`, and returns the
/// number of failures (0 means the build reproduces all reference results).
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace vortex2l

#endif  // VORTEX2L_SELFTEST_HPP
