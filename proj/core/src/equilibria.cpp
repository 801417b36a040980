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

#include "vortex2l/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "vortex2l/detail/csv.hpp"
#include "vortex2l/special_functions.hpp"

namespace vortex2l {

namespace {

double y3_of(const EquilibriumFamily& fam, double sum_y) {
    return (sum_y - fam.beta) / fam.alpha;
}

// Coordinates are capped: far outside the multistart box every velocity
// difference decays algebraically, so an unbounded Newton can "converge"
// to spurious zeros at infinity.
constexpr double kCoordCap = 100.0;

bool in_domain(const EquilibriumFamily& fam, double c1, double c2) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) return false;
    if (c1 > kCoordCap || c2 > kCoordCap) return false;
    if (fam.kind == FamilyKind::vertical && c1 == c2) return false;
    const double sum_y = fam.kind == FamilyKind::horizontal ? 2.0 * c2 : c1 + c2;
    const double y3 = y3_of(fam, sum_y);
    return y3 > 0.0 && y3 <= kCoordCap;
}

Residual2 residual(const EquilibriumFamily& fam, double c1, double c2) {
    return fam.kind == FamilyKind::horizontal ? residual_horizontal(c1, c2, fam)
                                              : residual_vertical(c1, c2, fam);
}

double norm2(const Residual2& r) { return std::sqrt(r.r1 * r.r1 + r.r2 * r.r2); }

struct NewtonOutcome {
    bool converged = false;
    double c1 = 0.0, c2 = 0.0, rnorm = 0.0;
    int iterations = 0;
};

NewtonOutcome newton_from(const EquilibriumFamily& fam, double c1, double c2,
                          double tol, int max_iterations) {
    NewtonOutcome out;
    if (!in_domain(fam, c1, c2)) return out;
    Residual2 f = residual(fam, c1, c2);
    double fn = norm2(f);
    for (int it = 0; it < max_iterations; ++it) {
        out.iterations = it;
        if (fn <= tol) {
            out.converged = true;
            out.c1 = c1;
            out.c2 = c2;
            out.rnorm = fn;
            return out;
        }
        // central-difference Jacobian, relative step 1e-6
        const double h1 = 1e-6 * std::max(std::abs(c1), 1e-3);
        const double h2 = 1e-6 * std::max(std::abs(c2), 1e-3);
        if (!in_domain(fam, c1 + h1, c2) || !in_domain(fam, c1 - h1, c2) ||
            !in_domain(fam, c1, c2 + h2) || !in_domain(fam, c1, c2 - h2))
            return out;
        const Residual2 fp1 = residual(fam, c1 + h1, c2);
        const Residual2 fm1 = residual(fam, c1 - h1, c2);
        const Residual2 fp2 = residual(fam, c1, c2 + h2);
        const Residual2 fm2 = residual(fam, c1, c2 - h2);
        const double j11 = (fp1.r1 - fm1.r1) / (2.0 * h1);
        const double j21 = (fp1.r2 - fm1.r2) / (2.0 * h1);
        const double j12 = (fp2.r1 - fm2.r1) / (2.0 * h2);
        const double j22 = (fp2.r2 - fm2.r2) / (2.0 * h2);
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) return out;
        const double dx1 = (j22 * f.r1 - j12 * f.r2) / det;
        const double dx2 = (j11 * f.r2 - j21 * f.r1) / det;

        // step halving on residual increase (or domain exit)
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half <= 20; ++half) {
            const double t1 = c1 - lambda * dx1;
            const double t2 = c2 - lambda * dx2;
            if (in_domain(fam, t1, t2)) {
                const Residual2 ft = residual(fam, t1, t2);
                const double ftn = norm2(ft);
                if (ftn < fn) {
                    c1 = t1;
                    c2 = t2;
                    f = ft;
                    fn = ftn;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!accepted) return out;  // stalled
    }
    if (fn <= tol) {
        out.converged = true;
        out.c1 = c1;
        out.c2 = c2;
        out.rnorm = fn;
    }
    return out;
}

}  // namespace

SystemState build_horizontal_state(const EquilibriumFamily& fam, double x, double y) {
    if (fam.kind != FamilyKind::horizontal)
        throw std::domain_error("build_horizontal_state: family kind mismatch");
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("build_horizontal_state: need x > 0 and y > 0");
    const double y3 = y3_of(fam, 2.0 * y);
    if (!(y3 > 0.0))
        throw std::domain_error("build_horizontal_state: derived y3 must be positive");
    SystemState s;
    s.vortices = {{Layer::one, 1.0, x, y},
                  {Layer::one, 1.0, -x, y},
                  {Layer::two, -fam.alpha, 0.0, y3}};
    return s;
}

SystemState build_vertical_state(const EquilibriumFamily& fam, double Y, double y) {
    if (fam.kind != FamilyKind::vertical)
        throw std::domain_error("build_vertical_state: family kind mismatch");
    if (!(Y > 0.0) || !(y > 0.0) || Y == y)
        throw std::domain_error("build_vertical_state: need distinct positive heights");
    const double y3 = y3_of(fam, Y + y);
    if (!(y3 > 0.0))
        throw std::domain_error("build_vertical_state: derived y3 must be positive");
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, Y},
                  {Layer::one, 1.0, 0.0, y},
                  {Layer::two, -fam.alpha, 0.0, y3}};
    return s;
}

Residual2 residual_horizontal(double x, double y, const EquilibriumFamily& fam) {
    const SystemState s = build_horizontal_state(fam, x, y);
    const Vec2 v1 = velocity(s, 0);
    const Vec2 v3 = velocity(s, 2);
    return {v1.y, v1.x - v3.x};
}

Residual2 residual_vertical(double Y, double y, const EquilibriumFamily& fam) {
    const SystemState s = build_vertical_state(fam, Y, y);
    const Vec2 v1 = velocity(s, 0);
    const Vec2 v2 = velocity(s, 1);
    const Vec2 v3 = velocity(s, 2);
    return {v1.x - v3.x, v2.x - v3.x};
}

std::vector<EquilibriumSolution> solve_family(const EquilibriumFamily& fam,
                                              const MultistartSpec& spec) {
    std::vector<std::pair<double, double>> starts;
    const double lmin = std::log(spec.coord_min);
    const double lmax = std::log(spec.coord_max);
    for (int i = 0; i < spec.grid_per_axis; ++i) {
        for (int j = 0; j < spec.grid_per_axis; ++j) {
            const double c1 =
                std::exp(lmin + (lmax - lmin) * i / (spec.grid_per_axis - 1));
            const double c2 =
                std::exp(lmin + (lmax - lmin) * j / (spec.grid_per_axis - 1));
            starts.emplace_back(c1, c2);
        }
    }
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> uni(spec.coord_min, spec.coord_max);
    for (int k = 0; k < spec.random_starts; ++k) {
        const double c1 = uni(rng);
        const double c2 = uni(rng);
        starts.emplace_back(c1, c2);
    }

    std::vector<EquilibriumSolution> roots;
    for (const auto& [s1, s2] : starts) {
        const NewtonOutcome res =
            newton_from(fam, s1, s2, spec.newton_tol, spec.max_iterations);
        if (!res.converged) continue;
        double c1 = res.c1;
        double c2 = res.c2;
        // the two layer-1 vortices of the vertical kind are interchangeable
        if (fam.kind == FamilyKind::vertical && c1 < c2) std::swap(c1, c2);
        if (!in_domain(fam, c1, c2)) continue;
        bool duplicate = false;
        for (const auto& r : roots) {
            const double d = std::hypot(r.c1 - c1, r.c2 - c2);
            if (d < spec.dedup_tol) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        const double sum_y = fam.kind == FamilyKind::horizontal ? 2.0 * c2 : c1 + c2;
        roots.push_back({c1, c2, y3_of(fam, sum_y), res.rnorm});
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c2 < b.c2;
    });
    return roots;
}

RefineResult refine_root(const EquilibriumFamily& fam, double c1, double c2,
                         double tol, int max_iterations) {
    const NewtonOutcome res = newton_from(fam, c1, c2, tol, max_iterations);
    return {res.converged, res.c1, res.c2, res.rnorm, res.iterations};
}

void write_solutions_csv(std::ostream& os, const EquilibriumFamily& fam,
                         const std::vector<EquilibriumSolution>& sols) {
    os << "family,alpha,beta,c1,c2,y3,residual\n";
    const char* name = fam.kind == FamilyKind::horizontal ? "horizontal" : "vertical";
    for (const auto& s : sols) {
        os << name << ',' << detail::g17(fam.alpha) << ',' << detail::g17(fam.beta)
           << ',' << detail::g17(s.c1) << ',' << detail::g17(s.c2) << ','
           << detail::g17(s.y3) << ',' << detail::g17(s.residual_norm) << '\n';
    }
}

PositivityCertificate verify_no_equilibrium_opposite(double y_max, long samples,
                                                     std::uint64_t seed) {
    if (!(y_max > 0.0) || samples < 1)
        throw std::domain_error("verify_no_equilibrium_opposite: bad arguments");

    PositivityCertificate cert;
    cert.min_value = std::numeric_limits<double>::infinity();
    cert.min_geometric_sub = std::numeric_limits<double>::infinity();

    auto eval = [&](double y1, double y2, double dx) {
        const double rs = std::sqrt(dx * dx + (y1 + y2) * (y1 + y2));
        const double expr = k1(2.0 * y1) + k1(2.0 * y2) +
                            2.0 * (y1 + y2) * k1(rs) / rs + 0.5 / y1 + 0.5 / y2 -
                            2.0 * (y1 + y2) / (rs * rs);
        if (expr < cert.min_value) {
            cert.min_value = expr;
            cert.arg_y1 = y1;
            cert.arg_y2 = y2;
            cert.arg_dx = dx;
        }
        // the geometric sub-inequality is an equality only at the degenerate
        // point y1 = y2, dx = 0
        if (dx != 0.0 || y1 != y2) {
            const double sub = 0.5 / y1 + 0.5 / y2 - 2.0 * (y1 + y2) / (rs * rs);
            cert.min_geometric_sub = std::min(cert.min_geometric_sub, sub);
        }
        ++cert.samples;
    };

    // deterministic grid (log-spaced heights, linear separations), then
    // random fill up to the requested sample count
    const int g = std::max(2, static_cast<int>(std::cbrt(double(samples) / 4.0)));
    for (int i = 0; i < g; ++i) {
        const double y1 = y_max * std::pow(1e-3, 1.0 - double(i) / (g - 1));
        for (int j = 0; j < g; ++j) {
            const double y2 = y_max * std::pow(1e-3, 1.0 - double(j) / (g - 1));
            for (int k = 0; k < g; ++k) {
                const double dx = y_max * k / (g - 1);
                eval(y1, y2, dx);
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uy(0.0, y_max);
    while (cert.samples < samples) {
        double y1 = uy(rng);
        double y2 = uy(rng);
        if (y1 <= 0.0 || y2 <= 0.0) continue;
        eval(y1, y2, uy(rng));
    }
    cert.positive = cert.min_value > 0.0;
    return cert;
}

StackedReport stacked_equilibrium_check(double alpha) {
    if (!(alpha > 0.0))
        throw std::domain_error("stacked_equilibrium_check: alpha must be positive");
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 0.5 * alpha},
                  {Layer::two, 1.0, 0.0, 0.5 * alpha}};
    const Vec2 v1 = velocity(s, 0);
    const Vec2 v2 = velocity(s, 1);
    StackedReport rep;
    rep.alpha = alpha;
    rep.ydot1 = v1.y;
    rep.ydot2 = v2.y;
    rep.xdot_mismatch = v1.x - v2.x;
    rep.translation_speed = v1.x;
    rep.confirmed = std::abs(rep.ydot1) <= 1e-12 && std::abs(rep.ydot2) <= 1e-12 &&
                    std::abs(rep.xdot_mismatch) <= 1e-12;
    return rep;
}

}  // namespace vortex2l
