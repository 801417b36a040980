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

#include "vortex2l/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vortex2l/detail/bessel_series.hpp"

namespace vortex2l {

namespace {

[[noreturn]] void throw_domain(const char* fn, double x) {
    throw std::domain_error(std::string(fn) + ": argument " +
                            std::to_string(x) + " outside domain");
}

}  // namespace

double k0(double x) {
    if (!(x > 0.0)) throw_domain("k0", x);
    return detail::k01(x).k0;
}

double k1(double x) {
    if (!(x > 0.0)) throw_domain("k1", x);
    return detail::k01(x).k1;
}

double h_same(double r) {
    if (!(r > 0.0)) throw_domain("h_same", r);
    return 1.0 / r + detail::k01(r).k1;
}

double h_cross(double r) {
    if (!(r >= 0.0)) throw_domain("h_cross", r);
    if (r == 0.0) return 0.0;
    if (r < 0.1) return detail::h_cross_series(r);
    return 1.0 / r - detail::k01(r).k1;
}

double log_plus_k0(double r) {
    if (!(r >= 0.0)) throw_domain("log_plus_k0", r);
    if (r == 0.0) return 0.69314718055994530942 - euler_gamma;  // ln 2 - gamma
    if (r <= 2.0) return detail::log_plus_k0_series(r);
    return std::log(r) + detail::k01_cf2(r).k0;
}

}  // namespace vortex2l
