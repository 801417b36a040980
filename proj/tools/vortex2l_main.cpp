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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vortex2l/equilibria.hpp"
#include "vortex2l/integrator.hpp"
#include "vortex2l/model.hpp"
#include "vortex2l/phase_portraits.hpp"
#include "vortex2l/selftest.hpp"
#include "vortex2l/streamlines.hpp"
#include "vortex2l/version.hpp"

namespace {

using nlohmann::json;
using namespace vortex2l;

// exit status contract: 0 success, 1 domain/runtime diagnostics, 2 usage
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

void write_manifest(const std::string& subcommand, const json& params,
                    const std::vector<std::string>& outputs,
                    const std::string& prefix) {
    json m;
    m["subcommand"] = subcommand;
    m["params"] = params;
    m["outputs"] = outputs;
    m["version"] = version;
    write_file(prefix + "_manifest.json", m.dump(2) + "\n");
}

SystemState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file " + path);
    std::stringstream body;
    body << in.rdbuf();
    return state_from_json(body.str());
}

int cmd_simulate(const std::string& state_path, double dt, long steps,
                 long record_every, bool collapse, bool emit_final,
                 const std::string& prefix) {
    const SystemState initial = load_state(state_path);
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.steps = steps;
    cfg.record_every = record_every;

    std::vector<std::string> outputs;
    const TrajectoryRecord rec = integrate(initial, cfg);
    {
        std::ostringstream csv;
        write_trajectory_csv(csv, rec);
        write_file(prefix + "_trajectory.csv", csv.str());
        outputs.push_back(prefix + "_trajectory.csv");
    }
    if (collapse) {
        const CollapseReport rep = collapse_diagnostic(initial, cfg);
        json j;
        j["monotone_decreasing"] = rep.monotone_decreasing;
        j["reached_zero"] = rep.reached_zero;
        j["min_separation"] = rep.min_separation;
        j["exponential_rate"] = rep.exponential_rate;
        j["exponential_r_squared"] = rep.exponential_r_squared;
        j["algebraic_exponent"] = rep.algebraic_exponent;
        j["algebraic_r_squared"] = rep.algebraic_r_squared;
        j["truncated"] = rep.truncated;
        write_file(prefix + "_collapse.json", j.dump(2) + "\n");
        outputs.push_back(prefix + "_collapse.json");
    }
    if (emit_final) {
        write_file(prefix + "_final.json", to_json(rec.samples.back().state));
        outputs.push_back(prefix + "_final.json");
    }
    if (rec.truncated)
        std::cerr << "note: trajectory truncated at t = "
                  << rec.samples.back().time << " (floor breach)\n";

    json params{{"state", state_path}, {"dt", dt},
                {"steps", steps},      {"record_every", record_every},
                {"collapse", collapse}, {"emit_final", emit_final}};
    write_manifest("simulate", params, outputs, prefix);
    return kExitOk;
}

PhaseKind parse_phase_kind(const std::string& name) {
    if (name == "two_layer_opposite") return PhaseKind::two_layer_opposite;
    if (name == "two_layer_same") return PhaseKind::two_layer_same;
    if (name == "one_layer_case1") return PhaseKind::one_layer_case1;
    if (name == "one_layer_case2") return PhaseKind::one_layer_case2;
    if (name == "one_layer_case3") return PhaseKind::one_layer_case3;
    throw CLI::ValidationError("--case", "unknown phase case " + name);
}

int cmd_phase(const std::string& case_name, double alpha,
              const std::vector<double>& grid, std::vector<double> levels,
              const std::string& prefix) {
    if (grid.size() != 6)
        throw std::domain_error("--grid needs x0,x1,y0,y1,nx,ny");
    const PhaseCase pc = make_phase_case(parse_phase_kind(case_name), alpha);
    GridSpec spec{grid[0], grid[1], grid[2], grid[3], static_cast<int>(grid[4]),
                  static_cast<int>(grid[5])};
    const FieldGrid field = grid_evaluate(pc, spec);

    if (levels.empty()) {
        // default: 9 levels evenly spaced through the in-domain value range
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t k = 0; k < field.values.size(); ++k)
            if (field.in_domain[k]) {
                lo = std::min(lo, field.values[k]);
                hi = std::max(hi, field.values[k]);
            }
        for (int i = 1; i <= 9; ++i) levels.push_back(lo + (hi - lo) * i / 10.0);
    }
    const auto lines = extract_level_curves(field, levels);

    std::vector<std::string> outputs;
    {
        std::ostringstream csv;
        write_field_csv(csv, field);
        write_file(prefix + "_field.csv", csv.str());
        outputs.push_back(prefix + "_field.csv");
    }
    {
        std::ostringstream csv;
        write_polylines_csv(csv, lines);
        write_file(prefix + "_levels.csv", csv.str());
        outputs.push_back(prefix + "_levels.csv");
    }
    json params{{"case", case_name}, {"alpha", alpha}, {"grid", grid},
                {"levels", levels}};
    write_manifest("phase", params, outputs, prefix);
    return kExitOk;
}

int cmd_equilibria(const std::string& family, double alpha, double beta,
                   int multistart, std::uint64_t seed, const std::string& prefix) {
    EquilibriumFamily fam;
    if (family == "horizontal")
        fam.kind = FamilyKind::horizontal;
    else if (family == "vertical")
        fam.kind = FamilyKind::vertical;
    else
        throw CLI::ValidationError("--family", "unknown family " + family);
    fam.alpha = alpha;
    fam.beta = beta;

    MultistartSpec spec;
    spec.random_starts = multistart;
    spec.seed = seed;
    const auto sols = solve_family(fam, spec);

    std::ostringstream csv;
    write_solutions_csv(csv, fam, sols);
    write_file(prefix + "_solutions.csv", csv.str());
    std::cout << sols.size() << " solution(s) found\n";

    json params{{"family", family},       {"alpha", alpha}, {"beta", beta},
                {"multistart", multistart}, {"seed", seed}};
    write_manifest("equilibria", params, {prefix + "_solutions.csv"}, prefix);
    return kExitOk;
}

StreamKind parse_stream_kind(const std::string& name) {
    if (name == "same_sign_horizontal") return StreamKind::same_sign_horizontal;
    if (name == "same_sign_vertical") return StreamKind::same_sign_vertical;
    if (name == "opposite_horizontal") return StreamKind::opposite_horizontal;
    if (name == "opposite_vertical") return StreamKind::opposite_vertical;
    throw CLI::ValidationError("--config", "unknown configuration " + name);
}

int cmd_streamlines(const std::string& config_name, double alpha, double beta,
                    const std::vector<double>& window, int seeds, int grid_n,
                    const std::string& prefix) {
    const StreamConfig config =
        make_stream_config(parse_stream_kind(config_name), alpha, beta);
    SearchWindow w = default_window(config);
    if (!window.empty()) {
        if (window.size() != 4)
            throw std::domain_error("--window needs x0,x1,y0,y1");
        w = {window[0], window[1], window[2], window[3]};
    }
    const auto points = find_stagnation_points(config, w, seeds);
    const FieldGrid field =
        stream_field(config, {w.x0, w.x1, w.y0, w.y1, grid_n, grid_n});

    std::vector<std::string> outputs;
    {
        std::ostringstream csv;
        write_field_csv(csv, field);
        write_file(prefix + "_field.csv", csv.str());
        outputs.push_back(prefix + "_field.csv");
    }
    {
        std::ostringstream csv;
        write_stagnation_csv(csv, config, points);
        write_file(prefix + "_stagnation.csv", csv.str());
        outputs.push_back(prefix + "_stagnation.csv");
    }
    std::cout << points.size() << " stagnation point(s) found\n";

    json params{{"config", config_name}, {"alpha", alpha}, {"beta", beta},
                {"window", std::vector<double>{w.x0, w.x1, w.y0, w.y1}},
                {"seeds", seeds},        {"grid", grid_n}};
    write_manifest("streamlines", params, outputs, prefix);
    return kExitOk;
}

int cmd_certify(double ymax, long samples, const std::vector<double>& alphas,
                const std::string& prefix) {
    const PositivityCertificate cert = verify_no_equilibrium_opposite(ymax, samples);
    json j;
    j["no_equilibrium_opposite"] = {{"y_max", ymax},
                                    {"samples", cert.samples},
                                    {"min_value", cert.min_value},
                                    {"min_geometric_sub", cert.min_geometric_sub},
                                    {"arg", {cert.arg_y1, cert.arg_y2, cert.arg_dx}},
                                    {"positive", cert.positive}};
    std::cout << "opposite-sign pair: min(xd1 - xd2) = " << cert.min_value
              << " over " << cert.samples << " samples -> "
              << (cert.positive ? "positive (no equilibrium)" : "NOT positive")
              << "\n";
    bool all_ok = cert.positive;
    j["stacked"] = json::array();
    for (double alpha : alphas) {
        const StackedReport rep = stacked_equilibrium_check(alpha);
        j["stacked"].push_back({{"alpha", alpha},
                                {"ydot1", rep.ydot1},
                                {"ydot2", rep.ydot2},
                                {"xdot_mismatch", rep.xdot_mismatch},
                                {"translation_speed", rep.translation_speed},
                                {"confirmed", rep.confirmed}});
        std::cout << "stacked pair alpha = " << alpha << ": "
                  << (rep.confirmed ? "relative equilibrium confirmed" : "FAILED")
                  << ", translation speed " << rep.translation_speed << "\n";
        all_ok = all_ok && rep.confirmed;
    }
    write_file(prefix + "_certificate.json", j.dump(2) + "\n");
    json params{{"ymax", ymax}, {"samples", samples}, {"alpha_list", alphas}};
    write_manifest("certify", params, {prefix + "_certificate.json"}, prefix);
    return all_ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-layer point-vortex dynamics on the upper half plane"};
    app.set_version_flag("--version", vortex2l::version);
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "integrate a vortex state (RK4)");
    std::string sim_state;
    double sim_dt = 1e-3;
    long sim_steps = 1000, sim_record = 10;
    bool sim_collapse = false, sim_final = false;
    std::string sim_out = "simulate";
    sim->add_option("--state", sim_state, "state JSON file")->required();
    sim->add_option("--dt", sim_dt, "time step");
    sim->add_option("--steps", sim_steps, "number of steps");
    sim->add_option("--record-every", sim_record, "sample stride");
    sim->add_flag("--collapse-diagnostic", sim_collapse,
                  "fit separation decay (two-vortex states)");
    sim->add_flag("--emit-final", sim_final, "write the final state JSON");
    sim->add_option("--out", sim_out, "output prefix");

    // phase
    auto* ph = app.add_subcommand("phase", "reduced Hamiltonian field and level curves");
    std::string ph_case = "two_layer_same";
    double ph_alpha = 1.0;
    std::vector<double> ph_grid{-2.0, 2.0, 0.02, 0.98, 201, 201};
    std::vector<double> ph_levels;
    std::string ph_out = "phase";
    ph->add_option("--case", ph_case,
                   "two_layer_opposite|two_layer_same|one_layer_case1|"
                   "one_layer_case2|one_layer_case3");
    ph->add_option("--alpha", ph_alpha, "invariant parameter");
    ph->add_option("--grid", ph_grid, "x0,x1,y0,y1,nx,ny")->delimiter(',')->expected(6);
    ph->add_option("--levels", ph_levels, "level values")->delimiter(',');
    ph->add_option("--out", ph_out, "output prefix");

    // equilibria
    auto* eq = app.add_subcommand("equilibria", "solve a symmetric 3-vortex family");
    std::string eq_family = "horizontal";
    double eq_alpha = 2.0, eq_beta = 0.5;
    int eq_multistart = 200;
    std::uint64_t eq_seed = 42;
    std::string eq_out = "equilibria";
    eq->add_option("--family", eq_family, "horizontal|vertical");
    eq->add_option("--alpha", eq_alpha, "G3 = -alpha")->required();
    eq->add_option("--beta", eq_beta, "momentum level")->required();
    eq->add_option("--multistart", eq_multistart, "number of random starts");
    eq->add_option("--seed", eq_seed, "random-start seed");
    eq->add_option("--out", eq_out, "output prefix");

    // streamlines
    auto* st = app.add_subcommand("streamlines",
                                  "layer-1 field and stagnation points");
    std::string st_config = "same_sign_horizontal";
    double st_alpha = 1.0, st_beta = 0.5;
    std::vector<double> st_window;
    int st_seeds = 60, st_grid = 200;
    std::string st_out = "streamlines";
    st->add_option("--config", st_config,
                   "same_sign_horizontal|same_sign_vertical|opposite_horizontal|"
                   "opposite_vertical");
    st->add_option("--alpha", st_alpha, "configuration parameter")->required();
    st->add_option("--beta", st_beta, "configuration parameter")->required();
    st->add_option("--window", st_window, "x0,x1,y0,y1")->delimiter(',')->expected(4);
    st->add_option("--seeds", st_seeds, "seed-grid resolution per axis");
    st->add_option("--grid", st_grid, "field sampling resolution per axis");
    st->add_option("--out", st_out, "output prefix");

    // certify
    auto* ce = app.add_subcommand(
        "certify", "no-equilibrium certificate and stacked-equilibrium check");
    double ce_ymax = 10.0;
    long ce_samples = 100000;
    std::vector<double> ce_alphas{0.5, 1.0, 2.0, 4.0};
    std::string ce_out = "certify";
    ce->add_option("--ymax", ce_ymax, "height bound for the sample region");
    ce->add_option("--samples", ce_samples, "number of samples");
    ce->add_option("--alpha-list", ce_alphas, "stacked-pair momentum levels")
        ->delimiter(',');
    ce->add_option("--out", ce_out, "output prefix");

    // selftest
    auto* se = app.add_subcommand("selftest", "run the verification suite");
    std::string se_fixtures = VORTEX2L_DEFAULT_DATA_DIR;
    se->add_option("--fixtures", se_fixtures,
                   "directory with the reference tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(sim_state, sim_dt, sim_steps, sim_record,
                                sim_collapse, sim_final, sim_out);
        if (ph->parsed())
            return cmd_phase(ph_case, ph_alpha, ph_grid, ph_levels, ph_out);
        if (eq->parsed())
            return cmd_equilibria(eq_family, eq_alpha, eq_beta, eq_multistart,
                                  eq_seed, eq_out);
        if (st->parsed())
            return cmd_streamlines(st_config, st_alpha, st_beta, st_window,
                                   st_seeds, st_grid, st_out);
        if (ce->parsed()) return cmd_certify(ce_ymax, ce_samples, ce_alphas, ce_out);
        if (se->parsed()) {
            vortex2l::SelftestOptions opt;
            opt.fixtures_dir = se_fixtures;
            return vortex2l::run_selftest(opt, std::cout) == 0 ? kExitOk
                                                               : kExitError;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
