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
#include <random>

#include "vortex2l/model.hpp"
#include "vortex2l/special_functions.hpp"
#include "vortex2l/streamlines.hpp"

using namespace vortex2l;

namespace {

// The four fields written out literally, kernel by kernel, as printed on the
// configuration diagrams; the production path must reproduce them exactly.
double literal_psi1(const StreamConfig& c, double x, double y) {
    const auto r = [](double dx, double dy) { return std::sqrt(dx * dx + dy * dy); };
    switch (c.kind) {
        case StreamKind::same_sign_horizontal: {
            const double a = c.alpha, b = c.beta;
            return std::log(r(x, y - b)) - k0(r(x, y - b)) + k0(r(x, y + b)) -
                   std::log(r(x, y + b)) + std::log(r(x - a, y - b)) +
                   k0(r(x - a, y - b)) - k0(r(x - a, y + b)) -
                   std::log(r(x - a, y + b));
        }
        case StreamKind::same_sign_vertical: {
            const double a = c.alpha, b = c.beta;
            return std::log(r(x, y - a)) - k0(r(x, y - a)) + k0(r(x, y + a)) -
                   std::log(r(x, y + a)) + std::log(r(x, y + a - b)) +
                   k0(r(x, y + a - b)) - k0(r(x, y + b - a)) -
                   std::log(r(x, y + b - a));
        }
        case StreamKind::opposite_horizontal: {
            const double a = c.alpha, b = c.beta;
            return std::log(r(x, y - b)) - k0(r(x, y - b)) + k0(r(x, y + b)) -
                   std::log(r(x, y + b)) - std::log(r(x - a, y - b)) -
                   k0(r(x - a, y - b)) + k0(r(x - a, y + b)) +
                   std::log(r(x - a, y + b));
        }
        case StreamKind::opposite_vertical: {
            const double a = c.alpha, b = c.beta;
            return std::log(r(x, y - a)) - k0(r(x, y - a)) + k0(r(x, y + a)) -
                   std::log(r(x, y + a)) - std::log(r(x, y - (a - b))) -
                   k0(r(x, y - (a - b))) + k0(r(x, y + (a - b))) +
                   std::log(r(x, y + (a - b)));
        }
    }
    return 0.0;
}

int count_class(const std::vector<StagnationPoint>& pts, StagnationClass cls) {
    int n = 0;
    for (const auto& p : pts)
        if (p.classification == cls) ++n;
    return n;
}

int count_interior(const std::vector<StagnationPoint>& pts) {
    int n = 0;
    for (const auto& p : pts)
        if (p.classification != StagnationClass::boundary) ++n;
    return n;
}

}  // namespace

TEST_CASE("configuration validation") {
    CHECK_NOTHROW(make_stream_config(StreamKind::same_sign_horizontal, 1.0, 0.5));
    CHECK_THROWS_AS(make_stream_config(StreamKind::same_sign_horizontal, 1.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(make_stream_config(StreamKind::same_sign_vertical, 2.0, 2.0),
                    std::domain_error);
    CHECK_NOTHROW(make_stream_config(StreamKind::same_sign_vertical, 0.1, 2.0));
    CHECK_THROWS_AS(make_stream_config(StreamKind::opposite_vertical, 2.0, 3.0),
                    std::domain_error);
    CHECK_NOTHROW(make_stream_config(StreamKind::opposite_vertical, 5.0, 3.0));
}

TEST_CASE("psi1 agrees with the literal field formulas") {
    const StreamConfig configs[] = {
        make_stream_config(StreamKind::same_sign_horizontal, 1.0, 0.5),
        make_stream_config(StreamKind::same_sign_vertical, 0.7, 2.0),
        make_stream_config(StreamKind::opposite_horizontal, 2.0, 1.5),
        make_stream_config(StreamKind::opposite_vertical, 5.0, 3.0),
    };
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ux(-4.0, 6.0);
    std::uniform_real_distribution<double> uy(0.0, 6.0);
    for (const auto& c : configs) {
        const SystemState s = reconstruct_state(c);
        int done = 0;
        while (done < 250) {
            const double x = ux(rng), y = uy(rng);
            bool near = false;
            for (const auto& v : s.vortices)
                if (std::hypot(x - v.x, y - v.y) < 1e-3) near = true;
            if (near) continue;
            CHECK(std::abs(stream_psi1(c, {x, y}) - literal_psi1(c, x, y)) <= 1e-13);
            ++done;
        }
    }
}

TEST_CASE("spot value: same_sign_horizontal at (0.5, 0.5)") {
    const StreamConfig c = make_stream_config(StreamKind::same_sign_horizontal, 1.0, 0.5);
    const SystemState s = reconstruct_state(c);
    CHECK(std::abs(stream_psi1(c, {0.5, 0.5}) -
                   streamfunction(Layer::one, s, {0.5, 0.5})) <= 1e-14);
}

TEST_CASE("psi1 is zero on the wall and finite at the cross-layer vortex") {
    const StreamConfig c = make_stream_config(StreamKind::opposite_horizontal, 2.0, 1.0);
    for (int i = 0; i <= 100; ++i) {
        const double x = -5.0 + 10.0 * i / 100.0;
        CHECK(std::abs(stream_psi1(c, {x, 0.0})) <= 1e-14);
        // the wall is a streamline: the tangential derivative vanishes exactly
        CHECK(stream_psi1_gradient(c, {x, 0.0}).x == 0.0);
    }
    const double at_vortex = stream_psi1(c, {2.0, 1.0});
    CHECK(std::isfinite(at_vortex));
    // the -G2 source contributes its regularized limit -(ln 2 - gamma) there
    const double expected = std::log(2.0) - k0(2.0) + k0(2.0 * std::sqrt(2.0)) -
                            std::log(2.0 * std::sqrt(2.0)) -
                            0.11593151565841244881 + std::log(2.0) + k0(2.0);
    CHECK(std::abs(at_vortex - expected) <= 1e-13);
    // singular at the same-layer vortex
    CHECK_THROWS_AS(stream_psi1(c, {0.0, 1.0}), SingularityError);
}

TEST_CASE("default search window") {
    const StreamConfig c = make_stream_config(StreamKind::same_sign_horizontal, 5.0, 2.0);
    const SearchWindow w = default_window(c);
    CHECK(w.x0 == -9.0);
    CHECK(w.x1 == 9.0);
    CHECK(w.y0 == 1e-3);
    CHECK(w.y1 == 6.0);
    const StreamConfig c2 = make_stream_config(StreamKind::opposite_horizontal, 0.1, 2.0);
    CHECK(default_window(c2).x1 == 6.0);
}

TEST_CASE("saddle appears in the wide same-sign horizontal configuration") {
    const auto pts = find_stagnation_points(
        make_stream_config(StreamKind::same_sign_horizontal, 5.0, 2.0));
    CHECK(count_class(pts, StagnationClass::saddle) >= 1);
    for (const auto& p : pts) {
        if (p.classification == StagnationClass::boundary) continue;
        const StreamConfig c = make_stream_config(StreamKind::same_sign_horizontal, 5.0, 2.0);
        const Vec2 g = stream_psi1_gradient(c, p.position);
        CHECK(std::hypot(g.x, g.y) <= 1e-10);
    }
}

TEST_CASE("no interior stagnation point in the narrow same-sign configuration") {
    const auto pts = find_stagnation_points(
        make_stream_config(StreamKind::same_sign_horizontal, 0.6, 2.0));
    CHECK(count_interior(pts) == 0);
}

TEST_CASE("stagnation count is stable across the compact beta = 0.5 family") {
    int counts[3];
    int i = 0;
    for (double alpha : {0.6, 1.0, 2.0}) {
        const auto pts = find_stagnation_points(
            make_stream_config(StreamKind::same_sign_horizontal, alpha, 0.5));
        counts[i++] = static_cast<int>(pts.size());
    }
    CHECK(counts[0] == counts[1]);
    CHECK(counts[1] == counts[2]);
}

TEST_CASE("vertical same-sign: saddle when far apart, none when near the wall") {
    for (const auto& [alpha, beta] : {std::pair{0.1, 2.0}, std::pair{1.0, 10.0}}) {
        const auto far = find_stagnation_points(
            make_stream_config(StreamKind::same_sign_vertical, alpha, beta));
        CHECK(count_class(far, StagnationClass::saddle) >= 1);
    }
    const auto near = find_stagnation_points(
        make_stream_config(StreamKind::same_sign_vertical, 9.0, 10.0));
    CHECK(count_interior(near) == 0);
}

TEST_CASE("vertical same-sign: the intermediate separations have no stagnation points") {
    for (const auto& [alpha, beta] :
         {std::pair{0.5, 1.0}, std::pair{1.0, 2.0}, std::pair{6.0, 10.0}}) {
        const auto pts = find_stagnation_points(
            make_stream_config(StreamKind::same_sign_vertical, alpha, beta));
        CHECK(pts.empty());
    }
}

TEST_CASE("opposite vertical: a pair of boundary stagnation points flanks the axis") {
    const auto pts = find_stagnation_points(
        make_stream_config(StreamKind::opposite_vertical, 5.0, 3.0));
    std::vector<double> xs;
    for (const auto& p : pts)
        if (p.classification == StagnationClass::boundary) xs.push_back(p.position.x);
    REQUIRE(xs.size() == 2);
    // the configuration is even in x, so the boundary zeros come mirrored
    CHECK(std::abs(xs[0] + xs[1]) <= 1e-9);
    CHECK(std::abs(xs[1]) > 1.0);
}

TEST_CASE("opposite horizontal: a stagnation point sits on the boundary") {
    for (double alpha : {0.1, 10.0}) {
        const auto pts = find_stagnation_points(
            make_stream_config(StreamKind::opposite_horizontal, alpha, 2.0));
        REQUIRE(count_class(pts, StagnationClass::boundary) >= 1);
        const StreamConfig c =
            make_stream_config(StreamKind::opposite_horizontal, alpha, 2.0);
        for (const auto& p : pts) {
            if (p.classification != StagnationClass::boundary) continue;
            CHECK(p.position.y == 0.0);
            CHECK(std::abs(stream_psi1_gradient(c, p.position).y) <= 1e-10);
        }
    }
    // and across heights: the boundary point persists for beta in {0.5, 10}
    for (double beta : {0.5, 10.0}) {
        const auto pts = find_stagnation_points(
            make_stream_config(StreamKind::opposite_horizontal, 2.0, beta));
        CHECK(count_class(pts, StagnationClass::boundary) >= 1);
    }
}

TEST_CASE("classification: synthetic quadratic fields") {
    double det = 0.0;
    const auto center = classify_from_gradient(
        [](Vec2 p) { return Vec2{2.0 * p.x, 2.0 * p.y}; }, {0.0, 0.0}, 1e-5, &det);
    CHECK(center == StagnationClass::center);
    CHECK(det > 1e-8);
    const auto saddle = classify_from_gradient(
        [](Vec2 p) { return Vec2{2.0 * p.x, -2.0 * p.y}; }, {0.0, 0.0}, 1e-5, &det);
    CHECK(saddle == StagnationClass::saddle);
    CHECK(det < -1e-8);
    const auto degen = classify_from_gradient(
        [](Vec2 p) { return Vec2{2.0 * p.x, 0.0}; }, {0.0, 0.0}, 1e-5, &det);
    CHECK(degen == StagnationClass::degenerate);
}

TEST_CASE("midpoint of a far-from-wall co-rotating same-layer pair is a saddle") {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.5, 50.0}, {Layer::one, 1.0, -0.5, 50.0}};
    auto grad = [&s](Vec2 p) { return streamfunction_gradient(Layer::one, s, p); };
    // small Newton polish from the geometric midpoint
    Vec2 p{0.0, 50.0};
    for (int it = 0; it < 40; ++it) {
        const Vec2 f = grad(p);
        const double h = 1e-6;
        const Vec2 gxp = grad({p.x + h, p.y}), gxm = grad({p.x - h, p.y});
        const Vec2 gyp = grad({p.x, p.y + h}), gym = grad({p.x, p.y - h});
        const double j11 = (gxp.x - gxm.x) / (2 * h), j12 = (gyp.x - gym.x) / (2 * h);
        const double j21 = (gxp.y - gxm.y) / (2 * h), j22 = (gyp.y - gym.y) / (2 * h);
        const double det = j11 * j22 - j12 * j21;
        p.x -= (j22 * f.x - j12 * f.y) / det;
        p.y -= (j11 * f.y - j21 * f.x) / det;
    }
    const Vec2 g = grad(p);
    REQUIRE(std::hypot(g.x, g.y) <= 1e-10);
    CHECK(std::abs(p.x) < 0.1);
    CHECK(std::abs(p.y - 50.0) < 0.5);
    CHECK(classify_from_gradient(grad, p, 1e-5) == StagnationClass::saddle);
}

TEST_CASE("stream_field flags only the singular node") {
    const StreamConfig c = make_stream_config(StreamKind::same_sign_horizontal, 1.0, 1.0);
    // 3x3 grid with the center node exactly on the layer-1 vortex (0, 1)
    const FieldGrid f = stream_field(c, {-1.0, 1.0, 0.0, 2.0, 3, 3});
    CHECK(!f.in_domain[f.index(1, 1)]);
    int flagged = 0;
    for (auto b : f.in_domain)
        if (!b) ++flagged;
    CHECK(flagged == 1);
}
