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

#include "vortex2l/integrator.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "vortex2l/detail/csv.hpp"

namespace vortex2l {

namespace {

void eval_derivative(const SystemState& state, std::vector<double>& dq) {
    const std::size_t n = state.vortices.size();
    dq.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 v = velocity(state, i);
        dq[2 * i] = v.x;
        dq[2 * i + 1] = v.y;
    }
}

void apply(SystemState& s, const SystemState& base, const std::vector<double>& k,
           double scale) {
    for (std::size_t i = 0; i < s.vortices.size(); ++i) {
        s.vortices[i].x = base.vortices[i].x + scale * k[2 * i];
        s.vortices[i].y = base.vortices[i].y + scale * k[2 * i + 1];
    }
}

bool breaches_floor(const SystemState& s, const IntegratorConfig& cfg) {
    const std::size_t n = s.vortices.size();
    for (const auto& v : s.vortices)
        if (v.y <= cfg.y_floor) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vortex& a = s.vortices[i];
            const Vortex& b = s.vortices[j];
            if (a.layer != b.layer) continue;
            const double dx = a.x - b.x;
            const double dy = a.y - b.y;
            if (std::sqrt(dx * dx + dy * dy) < cfg.separation_floor) return true;
        }
    return false;
}

TrajectorySample make_sample(const SystemState& s) {
    return {s.time, s, hamiltonian(s), y_momentum(s), min_pair_separation(s)};
}

struct LineFit {
    double slope = 0.0;
    double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2) return {};
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) return {};
    LineFit f;
    f.slope = sxy / sxx;
    f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

}  // namespace

TrajectoryRecord integrate(const SystemState& initial, const IntegratorConfig& cfg) {
    validate(initial);
    if (!(cfg.dt > 0.0)) throw std::domain_error("integrate: dt must be positive");
    if (cfg.steps < 1) throw std::domain_error("integrate: steps must be positive");
    if (cfg.record_every < 1 || cfg.record_every > cfg.steps)
        throw std::domain_error("integrate: record_every must be in [1, steps]");

    TrajectoryRecord rec;
    SystemState q = initial;
    rec.samples.push_back(make_sample(q));
    if (breaches_floor(q, cfg)) {
        rec.truncated = true;
        return rec;
    }

    std::vector<double> k1, k2, k3, k4;
    SystemState work = q;
    for (long step = 1; step <= cfg.steps; ++step) {
        try {
            eval_derivative(q, k1);
            apply(work, q, k1, 0.5 * cfg.dt);
            eval_derivative(work, k2);
            apply(work, q, k2, 0.5 * cfg.dt);
            eval_derivative(work, k3);
            apply(work, q, k3, cfg.dt);
            eval_derivative(work, k4);
        } catch (const SingularityError&) {
            rec.truncated = true;
            break;
        }
        for (std::size_t i = 0; i < q.vortices.size(); ++i) {
            q.vortices[i].x += cfg.dt / 6.0 *
                               (k1[2 * i] + 2.0 * (k2[2 * i] + k3[2 * i]) + k4[2 * i]);
            q.vortices[i].y +=
                cfg.dt / 6.0 *
                (k1[2 * i + 1] + 2.0 * (k2[2 * i + 1] + k3[2 * i + 1]) + k4[2 * i + 1]);
        }
        q.time = initial.time + step * cfg.dt;
        rec.steps_taken = step;
        if (breaches_floor(q, cfg)) {
            rec.truncated = true;
            break;
        }
        if (step % cfg.record_every == 0 || step == cfg.steps)
            rec.samples.push_back(make_sample(q));
    }
    return rec;
}

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& record) {
    os << "t,idx,layer,gamma,x,y,H,M\n";
    for (const auto& s : record.samples) {
        for (std::size_t i = 0; i < s.state.vortices.size(); ++i) {
            const Vortex& v = s.state.vortices[i];
            os << detail::g17(s.time) << ',' << i << ','
               << static_cast<int>(v.layer) << ',' << detail::g17(v.gamma) << ','
               << detail::g17(v.x) << ',' << detail::g17(v.y) << ','
               << detail::g17(s.hamiltonian) << ',' << detail::g17(s.y_momentum)
               << '\n';
        }
    }
}

CollapseReport collapse_diagnostic(const SystemState& initial,
                                   const IntegratorConfig& cfg) {
    if (initial.vortices.size() != 2)
        throw std::domain_error("collapse_diagnostic: needs exactly two vortices");

    const TrajectoryRecord rec = integrate(initial, cfg);
    CollapseReport rep;
    rep.truncated = rec.truncated;
    rep.min_separation = std::numeric_limits<double>::infinity();
    for (const auto& s : rec.samples) {
        rep.times.push_back(s.time);
        rep.separations.push_back(s.min_pair_separation);
        rep.min_separation = std::min(rep.min_separation, s.min_pair_separation);
    }
    rep.reached_zero = rec.truncated || rep.min_separation == 0.0;

    rep.monotone_decreasing = true;
    for (std::size_t i = 1; i < rep.separations.size(); ++i) {
        if (rep.separations[i] > rep.separations[i - 1] * (1.0 + 1e-12)) {
            rep.monotone_decreasing = false;
            break;
        }
    }

    // fits over the final half of the horizon (skip any zero separations)
    const double t0 = rep.times.front();
    const double t_end = rep.times.back();
    const double t_half = 0.5 * (t0 + t_end);
    std::vector<double> ts, lnr, lntau;
    const double tau_end = t_end + cfg.dt;  // keeps ln(t_end - t) finite
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        if (rep.times[i] < t_half || rep.separations[i] <= 0.0) continue;
        ts.push_back(rep.times[i]);
        lnr.push_back(std::log(rep.separations[i]));
        lntau.push_back(std::log(tau_end - rep.times[i]));
    }
    const LineFit fe = fit_line(ts, lnr);
    rep.exponential_rate = -fe.slope;
    rep.exponential_r_squared = fe.r_squared;
    const LineFit fa = fit_line(lntau, lnr);
    rep.algebraic_exponent = fa.slope;
    rep.algebraic_r_squared = fa.r_squared;
    return rep;
}

}  // namespace vortex2l
