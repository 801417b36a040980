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

#include <cstring>
#include <iostream>

#include "vortex2l/selftest.hpp"

int main(int argc, char** argv) {
    vortex2l::SelftestOptions opt;
    opt.fixtures_dir = VORTEX2L_DATA_DIR;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--fixtures") == 0) opt.fixtures_dir = argv[i + 1];
    const int failures = vortex2l::run_selftest(opt, std::cout);
    return failures == 0 ? 0 : 1;
}
