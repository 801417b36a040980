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

#ifndef VORTEX2L_SPECIAL_FUNCTIONS_HPP
#define VORTEX2L_SPECIAL_FUNCTIONS_HPP

// Modified Bessel functions of the second kind, K0 and K1, and the
// interaction kernels built from them.  Separations are nondimensional
// (units of the deformation radius, k = 1).  All functions are pure and
// thread-safe.

namespace vortex2l {

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// K0(x) for x > 0.  Throws std::domain_error for x <= 0 (logarithmic
/// singularity at the origin).
double k0(double x);

/// K1(x) for x > 0.  Throws std::domain_error for x <= 0 (diverges as 1/x).
double k1(double x);

/// Same-layer interaction kernel 1/r + K1(r), the radial derivative of
/// -(ln r - K0(r)) up to sign.  Strictly positive and strictly decreasing.
/// Throws std::domain_error for r <= 0.
double h_same(double r);

/// Cross-layer interaction kernel 1/r - K1(r), extended continuously by
/// h_cross(0) = 0.  Evaluated by a small-argument series below r = 0.1 to
/// avoid catastrophic cancellation.  Throws std::domain_error for r < 0.
double h_cross(double r);

/// ln r + K0(r), extended continuously by its limit ln 2 - euler_gamma at
/// r = 0.  This is the screened cross-layer kernel that stays finite when
/// two vortices in different layers coincide.  Throws std::domain_error
/// for r < 0.
double log_plus_k0(double r);

}  // namespace vortex2l

#endif  // VORTEX2L_SPECIAL_FUNCTIONS_HPP
