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

#include "vortex2l/field_grid.hpp"

#include <array>
#include <map>
#include <ostream>

#include "vortex2l/detail/csv.hpp"

namespace vortex2l {

namespace {

// Grid edges are the natural identity for marching-squares vertices: a
// crossing lies on exactly one edge, so segments from adjacent cells chain
// without any floating-point coordinate matching.
using EdgeId = std::int64_t;

struct Extractor {
    const FieldGrid& f;
    double level;
    std::map<EdgeId, Vec2> points;                  // crossing per edge
    std::vector<std::array<EdgeId, 2>> segments;    // pairs of edges

    EdgeId h_edge(int i, int j) const {
        return static_cast<EdgeId>(j) * (f.spec.nx - 1) + i;
    }
    EdgeId v_edge(int i, int j) const {
        const EdgeId nh = static_cast<EdgeId>(f.spec.nx - 1) * f.spec.ny;
        return nh + static_cast<EdgeId>(j) * f.spec.nx + i;
    }

    Vec2 interp(int i0, int j0, int i1, int j1) const {
        const double v0 = f.values[f.index(i0, j0)];
        const double v1 = f.values[f.index(i1, j1)];
        const double t = (level - v0) / (v1 - v0);
        return {f.x_at(i0) + t * (f.x_at(i1) - f.x_at(i0)),
                f.y_at(j0) + t * (f.y_at(j1) - f.y_at(j0))};
    }

    void add_segment(EdgeId a, Vec2 pa, EdgeId b, Vec2 pb) {
        points.emplace(a, pa);
        points.emplace(b, pb);
        segments.push_back({a, b});
    }

    void cell(int i, int j) {
        const double v00 = f.values[f.index(i, j)];
        const double v10 = f.values[f.index(i + 1, j)];
        const double v11 = f.values[f.index(i + 1, j + 1)];
        const double v01 = f.values[f.index(i, j + 1)];
        int c = 0;
        if (v00 > level) c |= 1;
        if (v10 > level) c |= 2;
        if (v11 > level) c |= 4;
        if (v01 > level) c |= 8;
        if (c == 0 || c == 15) return;

        const EdgeId bottom = h_edge(i, j);
        const EdgeId top = h_edge(i, j + 1);
        const EdgeId left = v_edge(i, j);
        const EdgeId right = v_edge(i + 1, j);
        const auto p_bottom = [&] { return interp(i, j, i + 1, j); };
        const auto p_top = [&] { return interp(i, j + 1, i + 1, j + 1); };
        const auto p_left = [&] { return interp(i, j, i, j + 1); };
        const auto p_right = [&] { return interp(i + 1, j, i + 1, j + 1); };

        switch (c) {
            case 1:
            case 14:
                add_segment(bottom, p_bottom(), left, p_left());
                break;
            case 2:
            case 13:
                add_segment(bottom, p_bottom(), right, p_right());
                break;
            case 3:
            case 12:
                add_segment(left, p_left(), right, p_right());
                break;
            case 4:
            case 11:
                add_segment(right, p_right(), top, p_top());
                break;
            case 6:
            case 9:
                add_segment(bottom, p_bottom(), top, p_top());
                break;
            case 7:
            case 8:
                add_segment(top, p_top(), left, p_left());
                break;
            case 5: {  // saddle, resolved by the cell-average rule
                const bool center_above = 0.25 * (v00 + v10 + v11 + v01) > level;
                if (center_above) {
                    add_segment(bottom, p_bottom(), right, p_right());
                    add_segment(top, p_top(), left, p_left());
                } else {
                    add_segment(bottom, p_bottom(), left, p_left());
                    add_segment(right, p_right(), top, p_top());
                }
                break;
            }
            case 10: {
                const bool center_above = 0.25 * (v00 + v10 + v11 + v01) > level;
                if (center_above) {
                    add_segment(bottom, p_bottom(), left, p_left());
                    add_segment(right, p_right(), top, p_top());
                } else {
                    add_segment(bottom, p_bottom(), right, p_right());
                    add_segment(top, p_top(), left, p_left());
                }
                break;
            }
            default:
                break;
        }
    }
};

std::vector<Polyline> chain_segments(const Extractor& ex, double level) {
    // edge -> indices of the (at most two) segments touching it
    std::map<EdgeId, std::vector<std::size_t>> by_edge;
    for (std::size_t s = 0; s < ex.segments.size(); ++s) {
        by_edge[ex.segments[s][0]].push_back(s);
        by_edge[ex.segments[s][1]].push_back(s);
    }
    std::vector<bool> used(ex.segments.size(), false);
    std::vector<Polyline> out;

    auto walk = [&](std::size_t start, std::vector<EdgeId>& path) {
        // extend from the path's last edge while an unused segment continues it
        while (true) {
            const EdgeId tail = path.back();
            const auto& cands = by_edge.at(tail);
            std::size_t next = ex.segments.size();
            for (std::size_t s : cands)
                if (!used[s]) {
                    next = s;
                    break;
                }
            if (next == ex.segments.size()) return;
            used[next] = true;
            const EdgeId other =
                ex.segments[next][0] == tail ? ex.segments[next][1] : ex.segments[next][0];
            if (other == path.front()) {  // loop closed
                path.push_back(other);
                return;
            }
            path.push_back(other);
        }
        (void)start;
    };

    for (std::size_t s = 0; s < ex.segments.size(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        std::vector<EdgeId> path{ex.segments[s][0], ex.segments[s][1]};
        walk(s, path);
        const bool closed = path.size() > 2 && path.front() == path.back();
        if (!closed) {
            // extend the other direction
            std::vector<EdgeId> rev(path.rbegin(), path.rend());
            walk(s, rev);
            path.assign(rev.rbegin(), rev.rend());
        }
        Polyline line;
        line.level = level;
        line.closed = closed;
        line.points.reserve(path.size());
        for (EdgeId e : path) line.points.push_back(ex.points.at(e));
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace

std::vector<Polyline> extract_level_curves(const FieldGrid& field,
                                           const std::vector<double>& levels) {
    if (field.spec.nx < 2 || field.spec.ny < 2)
        throw std::domain_error("extract_level_curves: grid too small");
    std::vector<Polyline> out;
    for (double level : levels) {
        Extractor ex{field, level, {}, {}};
        for (int j = 0; j + 1 < field.spec.ny; ++j) {
            for (int i = 0; i + 1 < field.spec.nx; ++i) {
                if (!field.in_domain[field.index(i, j)] ||
                    !field.in_domain[field.index(i + 1, j)] ||
                    !field.in_domain[field.index(i, j + 1)] ||
                    !field.in_domain[field.index(i + 1, j + 1)])
                    continue;
                ex.cell(i, j);
            }
        }
        auto lines = chain_segments(ex, level);
        for (auto& l : lines) out.push_back(std::move(l));
    }
    return out;
}

void write_field_csv(std::ostream& os, const FieldGrid& field) {
    os << "x,y,value,in_domain\n";
    for (int j = 0; j < field.spec.ny; ++j) {
        for (int i = 0; i < field.spec.nx; ++i) {
            const std::size_t k = field.index(i, j);
            os << detail::g17(field.x_at(i)) << ',' << detail::g17(field.y_at(j))
               << ',' << detail::g17(field.in_domain[k] ? field.values[k] : 0.0)
               << ',' << int(field.in_domain[k]) << '\n';
        }
    }
}

void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines) {
    os << "level,segment_id,x,y\n";
    for (std::size_t s = 0; s < lines.size(); ++s) {
        for (const Vec2& p : lines[s].points) {
            os << detail::g17(lines[s].level) << ',' << s << ',' << detail::g17(p.x)
               << ',' << detail::g17(p.y) << '\n';
        }
    }
}

}  // namespace vortex2l
