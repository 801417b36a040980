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

#ifndef VORTEX2L_DETAIL_CSV_HPP
#define VORTEX2L_DETAIL_CSV_HPP

#include <cstdio>
#include <string>

namespace vortex2l::detail {

// 17 significant digits: enough to round-trip a double, so identical inputs
// produce byte-identical CSV bodies.
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace vortex2l::detail

#endif  // VORTEX2L_DETAIL_CSV_HPP
