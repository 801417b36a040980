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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vortex2l/integrator.hpp"
#include "vortex2l/phase_portraits.hpp"

using namespace vortex2l;

namespace {

SystemState near_stacked_pair() {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.1, 0.6}, {Layer::two, 1.0, 0.0, 0.4}};
    return s;
}

double terminal_diff(const TrajectoryRecord& a, const TrajectoryRecord& b) {
    double d = 0.0;
    const SystemState& sa = a.samples.back().state;
    const SystemState& sb = b.samples.back().state;
    for (std::size_t i = 0; i < sa.vortices.size(); ++i) {
        d = std::max(d, std::abs(sa.vortices[i].x - sb.vortices[i].x));
        d = std::max(d, std::abs(sa.vortices[i].y - sb.vortices[i].y));
    }
    return d;
}

}  // namespace

TEST_CASE("single vortex translates parallel to the wall") {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 1.0}};
    IntegratorConfig cfg{1e-2, 1000, 10};
    const TrajectoryRecord rec = integrate(s, cfg);
    REQUIRE(!rec.truncated);
    for (std::size_t i = 0; i < rec.samples.size(); ++i) {
        CHECK(std::abs(rec.samples[i].state.vortices[0].y - 1.0) <= 1e-14);
        if (i > 0)
            CHECK(rec.samples[i].state.vortices[0].x >
                  rec.samples[i - 1].state.vortices[0].x);
    }
    CHECK(rec.samples.front().time == 0.0);
    CHECK(rec.samples.back().time == doctest::Approx(10.0));
}

TEST_CASE("invariant drift stays within tolerance near the stacked point") {
    IntegratorConfig cfg{1e-3, 5000, 100};
    const TrajectoryRecord rec = integrate(near_stacked_pair(), cfg);
    REQUIRE(!rec.truncated);
    const double h0 = rec.samples.front().hamiltonian;
    const double m0 = rec.samples.front().y_momentum;
    for (const auto& smp : rec.samples) {
        CHECK(std::abs(smp.hamiltonian - h0) / std::abs(h0) <= 1e-8);
        CHECK(std::abs(smp.y_momentum - m0) <= 1e-12);
    }
}

TEST_CASE("opposite pair keeps y1 - y2 frozen") {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 2.0}, {Layer::two, -1.0, 1.0, 2.0}};
    IntegratorConfig cfg{1e-3, 4000, 100};
    const TrajectoryRecord rec = integrate(s, cfg);
    REQUIRE(!rec.truncated);
    for (const auto& smp : rec.samples) {
        const auto& v = smp.state.vortices;
        CHECK(std::abs(v[0].y - v[1].y) <= 1e-12);
    }
}

TEST_CASE("fourth-order convergence on a smooth orbit") {
    const SystemState s = near_stacked_pair();
    auto run = [&](double dt) {
        IntegratorConfig cfg{dt, static_cast<long>(std::lround(2.0 / dt)), 1000000};
        IntegratorConfig c = cfg;
        c.record_every = c.steps;
        return integrate(s, c);
    };
    const TrajectoryRecord ref = run(0.0025);
    const double err_coarse = terminal_diff(run(0.02), ref);
    const double err_fine = terminal_diff(run(0.01), ref);
    CHECK(err_coarse / err_fine >= 12.0);
}

TEST_CASE("orbit samples stay on one level of the reduced Hamiltonian") {
    const SystemState s = near_stacked_pair();
    IntegratorConfig cfg{1e-3, 8000, 200};
    const TrajectoryRecord rec = integrate(s, cfg);
    REQUIRE(!rec.truncated);
    const PhaseCase pc = make_phase_case(PhaseKind::two_layer_same, y_momentum(s));
    const auto& v0 = rec.samples.front().state.vortices;
    const double level =
        phase_hamiltonian(pc, std::abs(v0[0].x - v0[1].x), v0[0].y);
    for (const auto& smp : rec.samples) {
        const auto& v = smp.state.vortices;
        const double h = phase_hamiltonian(pc, std::abs(v[0].x - v[1].x), v[0].y);
        CHECK(std::abs(h - level) / std::abs(level) <= 1e-6);
    }
}

TEST_CASE("separation_rate_squared matches the differentiated trajectory") {
    // (x1-x2)(xd1-xd2) + (y1-y2)(yd1-yd2) is half of d(r12^2)/dt
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.2, 0.9}, {Layer::two, -0.6, 1.1, 1.7}};
    IntegratorConfig cfg{1e-4, 2000, 1};
    const TrajectoryRecord rec = integrate(s, cfg);
    REQUIRE(!rec.truncated);
    auto r2 = [](const SystemState& st) {
        const auto& v = st.vortices;
        const double dx = v[0].x - v[1].x;
        const double dy = v[0].y - v[1].y;
        return dx * dx + dy * dy;
    };
    for (std::size_t i = 1; i + 1 < rec.samples.size(); i += 100) {
        const double fd = (r2(rec.samples[i + 1].state) - r2(rec.samples[i - 1].state)) /
                          (2.0 * cfg.dt);
        const double closed = separation_rate_squared(rec.samples[i].state);
        CHECK(std::abs(0.5 * fd - closed) <= 1e-6 * std::abs(closed) + 1e-10);
    }
}

TEST_CASE("floor breaches truncate cleanly") {
    SystemState low;
    low.vortices = {{Layer::one, 1.0, 0.0, 5e-10}};
    IntegratorConfig cfg{1e-3, 100, 10};
    const TrajectoryRecord rec = integrate(low, cfg);
    CHECK(rec.truncated);
    CHECK(rec.samples.size() == 1);

    SystemState close;
    close.vortices = {{Layer::one, 1.0, 0.0, 1.0}, {Layer::one, 1.0, 5e-10, 1.0}};
    const TrajectoryRecord rec2 = integrate(close, cfg);
    CHECK(rec2.truncated);
}

TEST_CASE("config validation") {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 1.0}};
    CHECK_THROWS_AS(integrate(s, {0.0, 10, 1}), std::domain_error);
    CHECK_THROWS_AS(integrate(s, {1e-3, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(integrate(s, {1e-3, 10, 11}), std::domain_error);
    SystemState invalid;
    CHECK_THROWS_AS(integrate(invalid, {1e-3, 10, 1}), std::domain_error);
}

TEST_CASE("trajectory csv layout") {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 1.0}, {Layer::two, -0.5, 1.0, 2.0}};
    IntegratorConfig cfg{1e-3, 10, 5};
    const TrajectoryRecord rec = integrate(s, cfg);
    std::ostringstream os;
    write_trajectory_csv(os, rec);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,idx,layer,gamma,x,y,H,M");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == static_cast<int>(2 * rec.samples.size()));
}

TEST_CASE("collapse diagnostic: stacked pair stays collapsed, periodic orbit does not") {
    SystemState stacked;
    stacked.vortices = {{Layer::one, 1.0, 0.0, 1.0}, {Layer::two, 1.0, 0.0, 1.0}};
    IntegratorConfig cfg{1e-3, 2000, 50};
    const CollapseReport rep = collapse_diagnostic(stacked, cfg);
    REQUIRE(!rep.truncated);
    for (double r : rep.separations) CHECK(r == 0.0);

    const CollapseReport periodic = collapse_diagnostic(near_stacked_pair(), cfg);
    CHECK(periodic.min_separation > 0.05);
    CHECK(!periodic.monotone_decreasing);
}

TEST_CASE("collapse diagnostic: opposite pair contracts monotonically while approaching") {
    // the approach phase: r12 falls from 1 to ~1e-2 by t = 10
    SystemState s;
    s.vortices = {{Layer::one, 1.0, -0.5, 1.0}, {Layer::two, -1.0, 0.5, 1.0}};
    IntegratorConfig cfg{1e-3, 10000, 100};
    const CollapseReport rep = collapse_diagnostic(s, cfg);
    REQUIRE(!rep.truncated);
    CHECK(rep.monotone_decreasing);
    CHECK(!rep.reached_zero);
    CHECK(rep.min_separation > 0.0);
    CHECK(rep.min_separation < 0.02);
    CHECK(rep.exponential_rate > 0.0);
}

TEST_CASE("the x = 0 crossing happens at finite time and the pair passes through") {
    // By symmetry x2 = -x1 and y1 = y2 for all time, and the relative speed
    // at coincidence is 4 K1(2y) > 0, so |x1 - x2| reaches zero transversally
    // near t = 10.8 and the vortices separate afterward.  The crossing is
    // step-size converged.
    SystemState s;
    s.vortices = {{Layer::one, 1.0, -0.5, 1.0}, {Layer::two, -1.0, 0.5, 1.0}};
    double crossing_time[2] = {0.0, 0.0};
    double terminal_sep[2] = {0.0, 0.0};
    int k = 0;
    for (double dt : {1e-3, 5e-4}) {
        IntegratorConfig cfg{dt, static_cast<long>(15.0 / dt), 1};
        const TrajectoryRecord rec = integrate(s, cfg);
        REQUIRE(!rec.truncated);
        for (std::size_t i = 1; i < rec.samples.size(); ++i) {
            const double a = rec.samples[i - 1].state.vortices[0].x;
            const double b = rec.samples[i].state.vortices[0].x;
            if (a < 0.0 && b >= 0.0) {
                crossing_time[k] = rec.samples[i].time;
                break;
            }
        }
        terminal_sep[k] = rec.samples.back().min_pair_separation;
        // the symmetry is preserved by the integrator
        const auto& v = rec.samples.back().state.vortices;
        CHECK(std::abs(v[0].x + v[1].x) <= 1e-12);
        CHECK(std::abs(v[0].y - v[1].y) <= 1e-12);
        ++k;
    }
    CHECK(crossing_time[0] > 10.0);
    CHECK(crossing_time[0] < 12.0);
    CHECK(std::abs(crossing_time[0] - crossing_time[1]) <= 1e-2);
    CHECK(terminal_sep[0] > 0.05);  // separated again after the crossing
}
