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

#include "vortex2l/model.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "vortex2l/special_functions.hpp"

namespace vortex2l {

namespace {

double dist(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

void validate(const SystemState& state) {
    if (state.vortices.empty())
        throw std::domain_error("state: needs at least one vortex");
    for (const auto& v : state.vortices) {
        if (!std::isfinite(v.gamma) || v.gamma == 0.0)
            throw std::domain_error("state: vortex strength must be finite and nonzero");
        if (!(v.y > 0.0) || !std::isfinite(v.y) || !std::isfinite(v.x))
            throw std::domain_error("state: vortex position must lie in the open upper half plane");
    }
    const std::size_t n = state.vortices.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vortex& a = state.vortices[i];
            const Vortex& b = state.vortices[j];
            if (a.layer == b.layer && a.x == b.x && a.y == b.y)
                throw SingularityError("state: coincident vortices in the same layer");
        }
    }
}

PairGeometry pair_geometry(Vec2 a, Vec2 b) {
    if (!(a.y > 0.0) || !(b.y > 0.0))
        throw std::domain_error("pair_geometry: positions must have y > 0");
    return {dist(a.x, a.y, b.x, b.y), dist(a.x, a.y, b.x, -b.y)};
}

double streamfunction(Layer layer, const SystemState& state, Vec2 p,
                      std::optional<std::size_t> exclude_direct_of) {
    if (!(p.y >= 0.0))
        throw std::domain_error("streamfunction: evaluation point below the wall");
    if (exclude_direct_of && *exclude_direct_of >= state.vortices.size())
        throw std::domain_error("streamfunction: excluded index out of range");

    double psi = 0.0;
    for (std::size_t j = 0; j < state.vortices.size(); ++j) {
        const Vortex& v = state.vortices[j];
        const double r = dist(p.x, p.y, v.x, v.y);
        const double rs = dist(p.x, p.y, v.x, -v.y);
        const bool same = (v.layer == layer);
        const bool skip_direct = exclude_direct_of && *exclude_direct_of == j;
        if (same) {
            if (!skip_direct) {
                if (r == 0.0)
                    throw SingularityError("streamfunction: point coincides with a same-layer vortex");
                psi += v.gamma * (std::log(r) - k0(r));
            }
            psi += v.gamma * (k0(rs) - std::log(rs));
        } else {
            // ln r + K0(r) is finite at r = 0 (stacked cross-layer source).
            if (!skip_direct) psi += v.gamma * log_plus_k0(r);
            psi -= v.gamma * log_plus_k0(rs);
        }
    }
    return psi;
}

Vec2 streamfunction_gradient(Layer layer, const SystemState& state, Vec2 p,
                             std::optional<std::size_t> exclude_direct_of) {
    if (!(p.y >= 0.0))
        throw std::domain_error("streamfunction_gradient: evaluation point below the wall");
    if (exclude_direct_of && *exclude_direct_of >= state.vortices.size())
        throw std::domain_error("streamfunction_gradient: excluded index out of range");

    double gx = 0.0;
    double gy = 0.0;
    for (std::size_t j = 0; j < state.vortices.size(); ++j) {
        const Vortex& v = state.vortices[j];
        const bool same = (v.layer == layer);
        const bool skip_direct = exclude_direct_of && *exclude_direct_of == j;
        const double dx = p.x - v.x;

        if (!skip_direct) {
            const double r = dist(p.x, p.y, v.x, v.y);
            if (r == 0.0) {
                if (same)
                    throw SingularityError(
                        "streamfunction_gradient: point coincides with a same-layer vortex");
                // cross-layer: (d/dr)(ln r + K0) * unit vector -> 0 as r -> 0
            } else {
                const double g = same ? h_same(r) : h_cross(r);
                gx += v.gamma * dx * g / r;
                gy += v.gamma * (p.y - v.y) * g / r;
            }
        }
        const double rs = dist(p.x, p.y, v.x, -v.y);
        const double gs = same ? h_same(rs) : h_cross(rs);
        gx -= v.gamma * dx * gs / rs;
        gy -= v.gamma * (p.y + v.y) * gs / rs;
    }
    return {gx, gy};
}

Vec2 velocity(const SystemState& state, std::size_t i) {
    if (i >= state.vortices.size())
        throw std::domain_error("velocity: vortex index out of range");
    const Vortex& v = state.vortices[i];
    const Vec2 grad = streamfunction_gradient(v.layer, state, {v.x, v.y}, i);
    return {-grad.y, grad.x};
}

std::vector<Vec2> velocities(const SystemState& state) {
    std::vector<Vec2> out(state.vortices.size());
    for (std::size_t i = 0; i < state.vortices.size(); ++i) out[i] = velocity(state, i);
    return out;
}

double hamiltonian(const SystemState& state) {
    const std::size_t n = state.vortices.size();
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vortex& a = state.vortices[i];
        h += a.gamma * a.gamma * (k0(2.0 * a.y) - std::log(2.0 * a.y));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vortex& b = state.vortices[j];
            const double r = dist(a.x, a.y, b.x, b.y);
            const double rs = dist(a.x, a.y, b.x, -b.y);
            if (a.layer == b.layer) {
                if (r == 0.0)
                    throw SingularityError("hamiltonian: coincident same-layer pair");
                h += 2.0 * a.gamma * b.gamma *
                     (std::log(r) - std::log(rs) - k0(r) + k0(rs));
            } else {
                h += 2.0 * a.gamma * b.gamma * (log_plus_k0(r) - log_plus_k0(rs));
            }
        }
    }
    return h;
}

double y_momentum(const SystemState& state) {
    double m = 0.0;
    for (const auto& v : state.vortices) m += v.gamma * v.y;
    return m;
}

double separation_rate_squared(const SystemState& state) {
    if (state.vortices.size() != 2)
        throw std::domain_error("separation_rate_squared: needs exactly two vortices");
    const Vortex& a = state.vortices[0];
    const Vortex& b = state.vortices[1];
    const Vec2 va = velocity(state, 0);
    const Vec2 vb = velocity(state, 1);
    return (a.x - b.x) * (va.x - vb.x) + (a.y - b.y) * (va.y - vb.y);
}

double min_pair_separation(const SystemState& state) {
    double m = std::numeric_limits<double>::infinity();
    const std::size_t n = state.vortices.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vortex& a = state.vortices[i];
            const Vortex& b = state.vortices[j];
            m = std::min(m, dist(a.x, a.y, b.x, b.y));
        }
    return m;
}

std::string to_json(const SystemState& state) {
    nlohmann::json j;
    j["time"] = state.time;
    j["vortices"] = nlohmann::json::array();
    for (const auto& v : state.vortices) {
        j["vortices"].push_back({{"layer", static_cast<int>(v.layer)},
                                 {"gamma", v.gamma},
                                 {"x", v.x},
                                 {"y", v.y}});
    }
    return j.dump(2) + "\n";
}

SystemState state_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SystemState state;
    state.time = j.value("time", 0.0);
    for (const auto& jv : j.at("vortices")) {
        const int layer = jv.at("layer").get<int>();
        if (layer != 1 && layer != 2)
            throw std::domain_error("state_from_json: layer must be 1 or 2");
        Vortex v;
        v.layer = layer == 1 ? Layer::one : Layer::two;
        v.gamma = jv.at("gamma").get<double>();
        v.x = jv.at("x").get<double>();
        v.y = jv.at("y").get<double>();
        state.vortices.push_back(v);
    }
    validate(state);
    return state;
}

}  // namespace vortex2l
