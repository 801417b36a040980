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

#include "vortex2l/streamlines.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "vortex2l/detail/csv.hpp"

namespace vortex2l {

namespace {

constexpr double kGradTol = 1e-12;   // Newton convergence on ||grad psi||
constexpr double kDedupTol = 1e-6;

bool near_vortex(const SystemState& s, Vec2 p, double tol) {
    for (const auto& v : s.vortices)
        if (std::hypot(p.x - v.x, p.y - v.y) < tol) return true;
    return false;
}

}  // namespace

StreamConfig make_stream_config(StreamKind kind, double alpha, double beta) {
    switch (kind) {
        case StreamKind::same_sign_horizontal:
        case StreamKind::opposite_horizontal:
            if (!(beta > 0.0))
                throw std::domain_error("stream config: horizontal kinds need beta > 0");
            break;
        case StreamKind::same_sign_vertical:
            if (!(alpha > 0.0) || !(beta > alpha))
                throw std::domain_error(
                    "stream config: same-sign vertical needs 0 < alpha < beta");
            break;
        case StreamKind::opposite_vertical:
            if (!(beta > 0.0) || !(alpha > beta))
                throw std::domain_error(
                    "stream config: opposite vertical needs 0 < beta < alpha");
            break;
    }
    return {kind, alpha, beta};
}

SystemState reconstruct_state(const StreamConfig& c) {
    SystemState s;
    switch (c.kind) {
        case StreamKind::same_sign_horizontal:
            s.vortices = {{Layer::one, 1.0, 0.0, c.beta},
                          {Layer::two, 1.0, c.alpha, c.beta}};
            break;
        case StreamKind::same_sign_vertical:
            s.vortices = {{Layer::one, 1.0, 0.0, c.alpha},
                          {Layer::two, 1.0, 0.0, c.beta - c.alpha}};
            break;
        case StreamKind::opposite_horizontal:
            s.vortices = {{Layer::one, 1.0, 0.0, c.beta},
                          {Layer::two, -1.0, c.alpha, c.beta}};
            break;
        case StreamKind::opposite_vertical:
            s.vortices = {{Layer::one, 1.0, 0.0, c.alpha},
                          {Layer::two, -1.0, 0.0, c.alpha - c.beta}};
            break;
    }
    return s;
}

double stream_psi1(const StreamConfig& c, Vec2 p) {
    return streamfunction(Layer::one, reconstruct_state(c), p);
}

Vec2 stream_psi1_gradient(const StreamConfig& c, Vec2 p) {
    return streamfunction_gradient(Layer::one, reconstruct_state(c), p);
}

const char* to_string(StagnationClass c) {
    switch (c) {
        case StagnationClass::saddle: return "saddle";
        case StagnationClass::center: return "center";
        case StagnationClass::boundary: return "boundary";
        case StagnationClass::degenerate: return "degenerate";
    }
    return "?";
}

SearchWindow default_window(const StreamConfig& c) {
    // wide enough for the far-field boundary stagnation points of the
    // opposite-sign configurations, which sit where the screened kernels
    // have already decayed (x ~ 5 for vortices at height 2)
    const double xr = std::max(6.0, c.alpha + 4.0);
    return {-xr, xr, 1e-3, c.beta + 4.0};
}

StagnationClass classify_from_gradient(const std::function<Vec2(Vec2)>& gradient,
                                       Vec2 p, double h, double* hessian_det) {
    const Vec2 gxp = gradient({p.x + h, p.y});
    const Vec2 gxm = gradient({p.x - h, p.y});
    const Vec2 gyp = gradient({p.x, p.y + h});
    const Vec2 gym = gradient({p.x, p.y - h});
    const double hxx = (gxp.x - gxm.x) / (2.0 * h);
    const double hyy = (gyp.y - gym.y) / (2.0 * h);
    const double hxy = 0.5 * ((gyp.x - gym.x) + (gxp.y - gxm.y)) / (2.0 * h);
    const double det = hxx * hyy - hxy * hxy;
    if (hessian_det) *hessian_det = det;
    if (det < -1e-8) return StagnationClass::saddle;
    if (det > 1e-8) return StagnationClass::center;
    return StagnationClass::degenerate;
}

StagnationClass classify_stagnation(const StreamConfig& c, Vec2 p,
                                    double* hessian_det) {
    const SystemState state = reconstruct_state(c);
    return classify_from_gradient(
        [&state](Vec2 q) { return streamfunction_gradient(Layer::one, state, q); }, p,
        1e-5, hessian_det);
}

namespace {

// 2-D damped Newton on grad psi1 = 0
bool newton_interior(const SystemState& state, Vec2& p) {
    auto grad = [&state](Vec2 q) {
        return streamfunction_gradient(Layer::one, state, q);
    };
    auto norm = [](Vec2 g) { return std::hypot(g.x, g.y); };

    Vec2 f;
    try {
        f = grad(p);
    } catch (const std::domain_error&) {
        return false;
    }
    double fn = norm(f);
    for (int it = 0; it < 60; ++it) {
        if (fn <= kGradTol) return true;
        const double hx = 1e-6 * std::max(1.0, std::abs(p.x));
        const double hy = 1e-6 * std::max(1.0, std::abs(p.y));
        if (p.y - hy <= 0.0) return false;
        Vec2 gxp, gxm, gyp, gym;
        try {
            gxp = grad({p.x + hx, p.y});
            gxm = grad({p.x - hx, p.y});
            gyp = grad({p.x, p.y + hy});
            gym = grad({p.x, p.y - hy});
        } catch (const std::domain_error&) {
            return false;
        }
        const double j11 = (gxp.x - gxm.x) / (2.0 * hx);
        const double j12 = (gyp.x - gym.x) / (2.0 * hy);
        const double j21 = (gxp.y - gxm.y) / (2.0 * hx);
        const double j22 = (gyp.y - gym.y) / (2.0 * hy);
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) return false;
        const double dx = (j22 * f.x - j12 * f.y) / det;
        const double dy = (j11 * f.y - j21 * f.x) / det;

        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half <= 20; ++half) {
            const Vec2 trial{p.x - lambda * dx, p.y - lambda * dy};
            if (trial.y > 0.0) {
                try {
                    const Vec2 ft = grad(trial);
                    const double ftn = norm(ft);
                    if (ftn < fn) {
                        p = trial;
                        f = ft;
                        fn = ftn;
                        accepted = true;
                        break;
                    }
                } catch (const std::domain_error&) {
                }
            }
            lambda *= 0.5;
        }
        if (!accepted) return false;
    }
    return fn <= kGradTol;
}

// Newton iterations started near a flat far field can run away to infinity,
// where the gradient is trivially small; only in-window roots count.
bool inside_window(Vec2 p, const SearchWindow& w) {
    const double mx = 0.02 * (w.x1 - w.x0);
    const double my = 0.02 * (w.y1 - w.y0);
    return p.x >= w.x0 - mx && p.x <= w.x1 + mx && p.y <= w.y1 + my && p.y > 0.0;
}

// 1-D Newton on the boundary tangential condition dpsi1/dy(x, 0) = 0
bool newton_boundary(const SystemState& state, double& x) {
    auto g = [&state](double xx) {
        return streamfunction_gradient(Layer::one, state, {xx, 0.0}).y;
    };
    double f = g(x);
    for (int it = 0; it < 60; ++it) {
        if (std::abs(f) <= kGradTol) return true;
        const double h = 1e-6 * std::max(1.0, std::abs(x));
        const double d = (g(x + h) - g(x - h)) / (2.0 * h);
        if (d == 0.0 || !std::isfinite(d)) return false;
        const double step = f / d;
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half <= 20; ++half) {
            const double trial = x - lambda * step;
            const double ft = g(trial);
            if (std::abs(ft) < std::abs(f)) {
                x = trial;
                f = ft;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) return false;
    }
    return std::abs(f) <= kGradTol;
}

}  // namespace

std::vector<StagnationPoint> find_stagnation_points(const StreamConfig& c,
                                                    const SearchWindow& w,
                                                    int grid_seeds) {
    if (grid_seeds < 2)
        throw std::domain_error("find_stagnation_points: need at least 2 seeds per axis");
    if (!(w.y0 >= 0.0) || !(w.y1 > w.y0) || !(w.x1 > w.x0))
        throw std::domain_error("find_stagnation_points: bad window");

    const SystemState state = reconstruct_state(c);
    const int n = grid_seeds;
    std::vector<double> u(static_cast<std::size_t>(n) * n),
        v(static_cast<std::size_t>(n) * n);
    std::vector<std::uint8_t> ok(static_cast<std::size_t>(n) * n, 0);
    auto xs = [&](int i) { return w.x0 + (w.x1 - w.x0) * i / (n - 1); };
    auto ys = [&](int j) { return std::max(w.y0, 1e-9) + (w.y1 - std::max(w.y0, 1e-9)) * j / (n - 1); };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * n + i;
            try {
                const Vec2 g = streamfunction_gradient(Layer::one, state, {xs(i), ys(j)});
                u[k] = -g.y;
                v[k] = g.x;
                ok[k] = 1;
            } catch (const std::domain_error&) {
            }
        }

    std::vector<StagnationPoint> found;
    auto push_unique = [&](Vec2 p, StagnationClass cls, double det) {
        if (near_vortex(state, p, kDedupTol)) return;
        for (const auto& q : found)
            if (std::hypot(q.position.x - p.x, q.position.y - p.y) < kDedupTol) return;
        found.push_back({p, cls, det});
    };

    // interior: cells where both velocity components change sign
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i + 1 < n; ++i) {
            const std::size_t k00 = static_cast<std::size_t>(j) * n + i;
            const std::size_t k10 = k00 + 1;
            const std::size_t k01 = k00 + n;
            const std::size_t k11 = k01 + 1;
            if (!(ok[k00] && ok[k10] && ok[k01] && ok[k11])) continue;
            auto straddles = [&](const std::vector<double>& f) {
                const double lo = std::min(std::min(f[k00], f[k10]), std::min(f[k01], f[k11]));
                const double hi = std::max(std::max(f[k00], f[k10]), std::max(f[k01], f[k11]));
                return lo <= 0.0 && hi >= 0.0;
            };
            if (!straddles(u) || !straddles(v)) continue;
            Vec2 p{0.5 * (xs(i) + xs(i + 1)), 0.5 * (ys(j) + ys(j + 1))};
            if (!newton_interior(state, p)) continue;
            if (!inside_window(p, w)) continue;
            if (p.y < 1e-6) continue;  // boundary pass will catch it
            double det = 0.0;
            const StagnationClass cls = classify_from_gradient(
                [&state](Vec2 q) { return streamfunction_gradient(Layer::one, state, q); },
                p, 1e-5, &det);
            push_unique(p, cls, det);
        }
    }

    // boundary: sign changes of dpsi1/dy along y = 0
    std::vector<double> gb(n);
    std::vector<std::uint8_t> okb(n, 0);
    for (int i = 0; i < n; ++i) {
        try {
            gb[i] = streamfunction_gradient(Layer::one, state, {xs(i), 0.0}).y;
            okb[i] = 1;
        } catch (const std::domain_error&) {
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (!(okb[i] && okb[i + 1])) continue;
        if (gb[i] == 0.0 || gb[i] * gb[i + 1] < 0.0) {
            double x = 0.5 * (xs(i) + xs(i + 1));
            if (!newton_boundary(state, x)) continue;
            if (x < w.x0 - 0.02 * (w.x1 - w.x0) || x > w.x1 + 0.02 * (w.x1 - w.x0))
                continue;
            push_unique({x, 0.0}, StagnationClass::boundary, 0.0);
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.position.x != b.position.x) return a.position.x < b.position.x;
        return a.position.y < b.position.y;
    });
    return found;
}

std::vector<StagnationPoint> find_stagnation_points(const StreamConfig& c,
                                                    int grid_seeds) {
    return find_stagnation_points(c, default_window(c), grid_seeds);
}

FieldGrid stream_field(const StreamConfig& c, const GridSpec& spec) {
    if (spec.nx < 2 || spec.ny < 2)
        throw std::domain_error("stream_field: need nx, ny >= 2");
    const SystemState state = reconstruct_state(c);
    FieldGrid f;
    f.spec = spec;
    f.values.assign(static_cast<std::size_t>(spec.nx) * spec.ny, 0.0);
    f.in_domain.assign(f.values.size(), 0);
    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            const double x = f.x_at(i);
            const double y = f.y_at(j);
            const std::size_t k = f.index(i, j);
            if (y < 0.0) continue;
            try {
                f.values[k] = streamfunction(Layer::one, state, {x, y});
                f.in_domain[k] = 1;
            } catch (const SingularityError&) {
                // grid node exactly on the layer-1 vortex stays flagged out
            }
        }
    }
    return f;
}

void write_stagnation_csv(std::ostream& os, const StreamConfig& c,
                          const std::vector<StagnationPoint>& points) {
    static const char* names[] = {"same_sign_horizontal", "same_sign_vertical",
                                  "opposite_horizontal", "opposite_vertical"};
    os << "kind,alpha,beta,x,y,class,hessian_det\n";
    for (const auto& p : points) {
        os << names[static_cast<int>(c.kind)] << ',' << detail::g17(c.alpha) << ','
           << detail::g17(c.beta) << ',' << detail::g17(p.position.x) << ','
           << detail::g17(p.position.y) << ',' << to_string(p.classification) << ','
           << detail::g17(p.hessian_det) << '\n';
    }
}

}  // namespace vortex2l
