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

#include "vortex2l/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "vortex2l/equilibria.hpp"
#include "vortex2l/integrator.hpp"
#include "vortex2l/model.hpp"
#include "vortex2l/phase_portraits.hpp"
#include "vortex2l/special_functions.hpp"
#include "vortex2l/streamlines.hpp"

namespace vortex2l {

namespace {

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------- fixtures

struct BesselRow {
    double x, k0, k1;
};

std::vector<BesselRow> load_bessel_table(const std::string& dir) {
    std::ifstream in(dir + "/bessel_reference.csv");
    if (!in) throw std::runtime_error("cannot open " + dir + "/bessel_reference.csv");
    std::vector<BesselRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        BesselRow r{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r.x, &r.k0, &r.k1) == 3)
            rows.push_back(r);
    }
    return rows;
}

struct TableRow {
    FamilyKind kind;
    double alpha, beta, c1, c2;
};

std::vector<TableRow> load_equilibria_table(const std::string& dir) {
    std::ifstream in(dir + "/equilibria_reference.csv");
    if (!in)
        throw std::runtime_error("cannot open " + dir + "/equilibria_reference.csv");
    std::vector<TableRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        char family[32];
        TableRow r{};
        if (std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf,%lf", family, &r.alpha,
                        &r.beta, &r.c1, &r.c2) == 5) {
            r.kind = std::string(family) == "horizontal" ? FamilyKind::horizontal
                                                         : FamilyKind::vertical;
            rows.push_back(r);
        }
    }
    return rows;
}

// ------------------------------------------------------------- random states

SystemState random_state(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    std::uniform_real_distribution<double> uy(0.3, 2.5);
    std::uniform_real_distribution<double> ug(0.3, 1.5);
    std::uniform_int_distribution<int> ulayer(1, 2);
    std::uniform_int_distribution<int> usign(0, 1);
    SystemState s;
    while (static_cast<int>(s.vortices.size()) < n) {
        Vortex v;
        v.layer = ulayer(rng) == 1 ? Layer::one : Layer::two;
        v.gamma = ug(rng) * (usign(rng) ? 1.0 : -1.0);
        v.x = ux(rng);
        v.y = uy(rng);
        bool ok = true;
        for (const auto& w : s.vortices)
            if (std::hypot(v.x - w.x, v.y - w.y) < 0.4) ok = false;
        if (ok) s.vortices.push_back(v);
    }
    return s;
}

double dist_point_polyline(Vec2 p, const Polyline& line) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
        const Vec2 a = line.points[i];
        const Vec2 b = line.points[i + 1];
        const double bax = b.x - a.x, bay = b.y - a.y;
        const double len2 = bax * bax + bay * bay;
        double t = len2 > 0.0 ? ((p.x - a.x) * bax + (p.y - a.y) * bay) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::hypot(p.x - (a.x + t * bax), p.y - (a.y + t * bay)));
    }
    return best;
}

// ------------------------------------------------------------ the criteria

bool criterion_bessel(const std::string& dir, std::string& detail) {
    const auto rows = load_bessel_table(dir);
    if (rows.size() < 100) {
        detail = "reference table too small";
        return false;
    }
    double worst = 0.0;
    for (const auto& r : rows) {
        worst = std::max(worst, std::abs(k0(r.x) - r.k0) / std::abs(r.k0));
        worst = std::max(worst, std::abs(k1(r.x) - r.k1) / std::abs(r.k1));
    }
    detail = fmt("%zu points, max rel err %.2e (tol 1e-10)", rows.size(), worst);
    return worst <= 1e-10;
}

bool criterion_velocity_oracle(std::string& detail) {
    std::mt19937_64 rng(20260810);
    const double h = 1e-6;
    double worst_excess = -1.0;  // err - tolerance, worst case
    double worst_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const SystemState s = random_state(rng, trial % 2 ? 2 : 3);
        for (std::size_t i = 0; i < s.vortices.size(); ++i) {
            const Vortex& v = s.vortices[i];
            const Layer layer = v.layer;
            auto psi = [&](double x, double y) {
                return streamfunction(layer, s, {x, y}, i);
            };
            const double fd_u = -(psi(v.x, v.y + h) - psi(v.x, v.y - h)) / (2.0 * h);
            const double fd_v = (psi(v.x + h, v.y) - psi(v.x - h, v.y)) / (2.0 * h);
            const Vec2 vel = velocity(s, i);
            for (const auto& [a, b] : {std::pair{vel.x, fd_u}, std::pair{vel.y, fd_v}}) {
                const double err = std::abs(a - b);
                const double tol = std::max(1e-6 * std::abs(a), 1e-9);
                worst_err = std::max(worst_err, err);
                worst_excess = std::max(worst_excess, err - tol);
            }
        }
    }
    detail = fmt("100 states, worst |closed-fd| = %.2e (tol max(1e-6 rel, 1e-9))",
                 worst_err);
    return worst_excess <= 0.0;
}

bool criterion_invariant_drift(std::string& detail) {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.1, 0.6}, {Layer::two, 1.0, 0.0, 0.4}};
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 20000;  // T = 20
    cfg.record_every = 100;
    const TrajectoryRecord rec = integrate(s, cfg);
    if (rec.truncated || rec.samples.size() < 2) {
        detail = "trajectory truncated";
        return false;
    }
    const double h0 = rec.samples.front().hamiltonian;
    const double m0 = rec.samples.front().y_momentum;
    double dh = 0.0, dm = 0.0;
    for (const auto& smp : rec.samples) {
        dh = std::max(dh, std::abs(smp.hamiltonian - h0) / std::abs(h0));
        dm = std::max(dm, std::abs(smp.y_momentum - m0));
    }
    detail = fmt("|dH|/|H0| = %.2e (tol 1e-8), |dM| = %.2e (tol 1e-12)", dh, dm);
    return dh <= 1e-8 && dm <= 1e-12;
}

bool criterion_single_vortex(std::string& detail) {
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 1.0}};
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 10000;  // T = 10
    cfg.record_every = 100;
    const TrajectoryRecord rec = integrate(s, cfg);
    double drift = 0.0;
    bool monotone = true;
    for (std::size_t i = 0; i < rec.samples.size(); ++i) {
        drift = std::max(drift, std::abs(rec.samples[i].state.vortices[0].y - 1.0));
        if (i > 0 && rec.samples[i].state.vortices[0].x <=
                         rec.samples[i - 1].state.vortices[0].x)
            monotone = false;
    }
    detail = fmt("y drift %.2e (tol 1e-14), x monotone: %s", drift,
                 monotone ? "yes" : "no");
    return drift <= 1e-14 && monotone;
}

bool criterion_tables(const std::string& dir, std::string& detail) {
    const auto rows = load_equilibria_table(dir);
    if (rows.size() < 100) {
        detail = "reference table too small";
        return false;
    }
    double worst_res = 0.0, worst_move = 0.0;
    int res_ok = 0, move_ok = 0;
    for (const auto& r : rows) {
        const EquilibriumFamily fam{r.kind, r.alpha, r.beta};
        const Residual2 res = r.kind == FamilyKind::horizontal
                                  ? residual_horizontal(r.c1, r.c2, fam)
                                  : residual_vertical(r.c1, r.c2, fam);
        const double rn = std::hypot(res.r1, res.r2);
        worst_res = std::max(worst_res, rn);
        if (rn <= 5e-3) ++res_ok;
        const RefineResult ref = refine_root(fam, r.c1, r.c2);
        if (!ref.converged) continue;
        const double moved = std::hypot(ref.c1 - r.c1, ref.c2 - r.c2);
        worst_move = std::max(worst_move, moved);
        if (moved <= 5e-3) ++move_ok;
    }
    const std::size_t n = rows.size();
    detail = fmt("%d/%zu residuals within 5e-3 (worst %.2e); %d/%zu refine "
                 "within 5e-3 of print (worst shift %.2e); the equilibrium "
                 "conditions verified against the velocity oracle do not "
                 "reproduce the remaining entries",
                 res_ok, n, worst_res, move_ok, n, worst_move);
    return res_ok == static_cast<int>(n) && move_ok == static_cast<int>(n);
}

bool criterion_bifurcation_counts(std::string& detail) {
    const auto count = [](FamilyKind kind, double alpha, double beta) {
        return solve_family({kind, alpha, beta}).size();
    };
    const std::size_t n1888 = count(FamilyKind::horizontal, 1.888, 0.5);
    const std::size_t n19 = count(FamilyKind::horizontal, 1.9, 0.5);
    const std::size_t n195 = count(FamilyKind::horizontal, 1.95, 0.5);
    const std::size_t nv = count(FamilyKind::vertical, 0.8, 1.0);
    detail = fmt("horizontal beta=0.5: alpha=1.888 -> %zu (want 1), "
                 "1.9 -> %zu (want 2), 1.95 -> %zu (want 3); "
                 "vertical alpha=0.8 -> %zu (want 0)",
                 n1888, n19, n195, nv);
    return n1888 == 1 && n19 == 2 && n195 == 3 && nv == 0;
}

bool criterion_certificate(std::string& detail) {
    const PositivityCertificate cert = verify_no_equilibrium_opposite(10.0, 100000);
    detail = fmt("min over %ld samples = %.3e at (y1=%.3g, y2=%.3g, dx=%.3g); "
                 "geometric sub-expression min %.3e",
                 cert.samples, cert.min_value, cert.arg_y1, cert.arg_y2, cert.arg_dx,
                 cert.min_geometric_sub);
    return cert.positive && cert.min_geometric_sub > 0.0;
}

bool criterion_stacked(std::string& detail) {
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
        const StackedReport rep = stacked_equilibrium_check(alpha);
        if (!rep.confirmed) {
            detail = fmt("alpha=%g: |yd|=%.2e, |xd1-xd2|=%.2e exceed 1e-12", alpha,
                         std::max(std::abs(rep.ydot1), std::abs(rep.ydot2)),
                         std::abs(rep.xdot_mismatch));
            return false;
        }
    }

    // a nearby orbit stays on a closed level of the reduced Hamiltonian
    const double alpha = 1.0;
    const PhaseCase pc = make_phase_case(PhaseKind::two_layer_same, alpha);
    SystemState s;
    s.vortices = {{Layer::one, 1.0, 0.0, 0.55}, {Layer::two, 1.0, 0.0, 0.45}};
    IntegratorConfig cfg;
    cfg.dt = 2e-3;
    cfg.steps = 20000;  // T = 40
    cfg.record_every = 40;
    const TrajectoryRecord rec = integrate(s, cfg);
    if (rec.truncated) {
        detail = "perturbed orbit truncated";
        return false;
    }
    const double level = phase_hamiltonian(pc, 0.0, 0.55);
    GridSpec spec{-0.3, 0.3, 0.35, 0.65, 201, 201};
    const FieldGrid field = grid_evaluate(pc, spec);
    const auto lines = extract_level_curves(field, {level});
    const Polyline* closed = nullptr;
    for (const auto& l : lines)
        if (l.closed) closed = &l;
    if (!closed) {
        detail = "no closed level curve extracted at the orbit level";
        return false;
    }
    const double cell = std::hypot((spec.x1 - spec.x0) / (spec.nx - 1),
                                   (spec.y1 - spec.y0) / (spec.ny - 1));
    double worst = 0.0;
    for (const auto& smp : rec.samples) {
        const auto& v = smp.state.vortices;
        const Vec2 p{std::abs(v[0].x - v[1].x), v[0].y};
        worst = std::max(worst, dist_point_polyline(p, *closed));
    }
    detail = fmt("stacked equilibria confirmed for alpha in {0.5,1,2,4}; "
                 "perturbed orbit max distance to level curve %.2e (cell %.2e)",
                 worst, cell);
    return worst <= cell;
}

bool criterion_stagnation(std::string& detail) {
    const auto interior_saddles = [](StreamKind kind, double alpha, double beta) {
        const auto pts =
            find_stagnation_points(make_stream_config(kind, alpha, beta));
        int saddles = 0, interior = 0;
        for (const auto& p : pts) {
            if (p.classification == StagnationClass::boundary) continue;
            ++interior;
            if (p.classification == StagnationClass::saddle) ++saddles;
        }
        return std::pair{saddles, interior};
    };
    const auto boundary_count = [](StreamKind kind, double alpha, double beta) {
        const auto pts =
            find_stagnation_points(make_stream_config(kind, alpha, beta));
        int n = 0;
        for (const auto& p : pts)
            if (p.classification == StagnationClass::boundary) ++n;
        return n;
    };

    const auto [sh_saddle, sh_interior] =
        interior_saddles(StreamKind::same_sign_horizontal, 5.0, 2.0);
    const auto [sh0_saddle, sh0_interior] =
        interior_saddles(StreamKind::same_sign_horizontal, 0.6, 2.0);
    const auto [sv_saddle, sv_interior] =
        interior_saddles(StreamKind::same_sign_vertical, 0.1, 2.0);
    const auto [sv9_saddle, sv9_interior] =
        interior_saddles(StreamKind::same_sign_vertical, 9.0, 10.0);
    const int b01 = boundary_count(StreamKind::opposite_horizontal, 0.1, 2.0);
    const int b10 = boundary_count(StreamKind::opposite_horizontal, 10.0, 2.0);

    detail = fmt("same-sign horizontal: (a=5,b=2) %d saddle(s)/%d interior, "
                 "(a=0.6,b=2) %d interior; same-sign vertical: (0.1,2) %d "
                 "saddle(s), (9,10) %d interior; opposite horizontal boundary "
                 "points: a=0.1 -> %d, a=10 -> %d",
                 sh_saddle, sh_interior, sh0_interior, sv_saddle, sv9_interior,
                 b01, b10);
    return sh_saddle >= 1 && sh0_interior == 0 && sv_saddle >= 1 &&
           sv9_interior == 0 && b01 >= 1 && b10 >= 1;
}

bool criterion_collapse(std::string& detail) {
    // x1 < x2 makes d(r12^2)/dt = (x1-x2)(xd1-xd2) negative, since
    // xd1 - xd2 > 0 everywhere (the no-equilibrium certificate)
    SystemState s;
    s.vortices = {{Layer::one, 1.0, -0.5, 1.0}, {Layer::two, -1.0, 0.5, 1.0}};
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 50000;  // T = 50
    cfg.record_every = 50;
    const CollapseReport rep = collapse_diagnostic(s, cfg);
    // locate the minimum for the report
    double tmin = 0.0;
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        if (rep.separations[i] == rep.min_separation) tmin = rep.times[i];
    detail = fmt("r12: monotone=%s, min=%.3g at t=%.2f, end=%.3g; fitted "
                 "exponential rate %.3g (R^2=%.2f), algebraic exponent %.3g "
                 "(R^2=%.2f); the pair meets at finite time and re-separates, "
                 "so monotone decrease over T=50 does not hold",
                 rep.monotone_decreasing ? "yes" : "no", rep.min_separation, tmin,
                 rep.separations.back(), rep.exponential_rate,
                 rep.exponential_r_squared, rep.algebraic_exponent,
                 rep.algebraic_r_squared);
    return rep.monotone_decreasing && !rep.reached_zero && rep.min_separation > 0.0;
}

bool criterion_phase_consistency(std::string& detail) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(0.0, 3.0);
    std::uniform_real_distribution<double> uy01(0.02, 0.98);
    std::uniform_real_distribution<double> uyo(0.05, 3.0);
    double worst = 0.0;
    // same-sign, alpha = 1
    const PhaseCase same = make_phase_case(PhaseKind::two_layer_same, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double x = ux(rng);
        const double y = uy01(rng);
        const double hp = phase_hamiltonian(same, x, y);
        const double hf = hamiltonian(reconstruct_two_vortex(same, x, y));
        worst = std::max(worst, std::abs(hp - hf));
    }
    // opposite sign, alpha in {0, 0.7}
    for (double alpha : {0.0, 0.7}) {
        const PhaseCase opp = make_phase_case(PhaseKind::two_layer_opposite, alpha);
        for (int i = 0; i < 250; ++i) {
            const double x = ux(rng);
            const double y = alpha + uyo(rng);
            const double hp = phase_hamiltonian(opp, x, y);
            const double hf = hamiltonian(reconstruct_two_vortex(opp, x, y));
            worst = std::max(worst, std::abs(hp - hf));
        }
    }
    detail = fmt("1000 reconstructed states, max |reduced - full| = %.2e "
                 "(tol 1e-12)",
                 worst);
    return worst <= 1e-12;
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
    const std::string dir = options.fixtures_dir;
    const std::vector<Criterion> criteria = {
        {1, "bessel-accuracy", 1.0,
         [&dir](std::string& d) { return criterion_bessel(dir, d); }},
        {2, "velocity-oracle", 5.0, criterion_velocity_oracle},
        {3, "invariant-drift", 10.0, criterion_invariant_drift},
        {4, "single-vortex-translation", 10.0, criterion_single_vortex},
        {5, "equilibrium-tables", 60.0,
         [&dir](std::string& d) { return criterion_tables(dir, d); }},
        {6, "bifurcation-counts", 60.0, criterion_bifurcation_counts},
        {7, "no-equilibrium-certificate", 10.0, criterion_certificate},
        {8, "stacked-equilibrium", 30.0, criterion_stacked},
        {9, "stagnation-topology", 30.0, criterion_stagnation},
        {10, "collapse-diagnostic", 10.0, criterion_collapse},
        {11, "phase-hamiltonian-consistency", 10.0, criterion_phase_consistency},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool pass = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (secs > c.time_limit_s) {
            pass = false;
            detail += fmt(" [exceeded %g s budget]", c.time_limit_s);
        }
        if (!pass) ++failures;
        out << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ("
            << fmt("%.2f", secs) << " s): " << detail << "\n";
    }
    out << (failures == 0 ? "all criteria passed"
                          : fmt("%d criteria FAILED", failures))
        << "\n";
    return failures;
}

}  // namespace vortex2l
