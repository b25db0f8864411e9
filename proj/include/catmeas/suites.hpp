// Copyright 2026 The catmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Named verification suites over seeded random instances. Each suite
 * exercises one family of checks (functor laws, naturality squares,
 * xi well-definedness, generalized-measure additivity, injectivity
 * witnesses, reconstruction round-trips, negative controls) and reports
 * pass/fail with the worst deviation and a counterexample payload.
 *
 * Reports are deterministic for a fixed (seed, config) pair; wall-clock
 * time is the only field that varies between runs.
 */

#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "catmeas/born.hpp"
#include "catmeas/generate.hpp"
#include "catmeas/json_io.hpp"

namespace catmeas {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    json counterexample; // null when the check passed
};

struct SuiteReport {
    std::string suite;
    bool pass = true;
    std::uint64_t seed = 0;
    json config_echo;
    double wall_clock_ms = 0.0;
    std::vector<CheckResult> checks;

    void add(CheckResult check) {
        pass = pass && check.pass;
        checks.push_back(std::move(check));
    }

    json to_json() const {
        json j;
        j["suite"] = suite;
        j["pass"] = pass;
        j["seed"] = seed;
        j["config"] = config_echo;
        j["wall_clock_ms"] = wall_clock_ms;
        json arr = json::array();
        for (const auto &c : checks) {
            json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["max_deviation"] = c.max_deviation;
            cj["counterexample"] = c.counterexample;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "suite " << suite << "  seed " << seed << "\n";
        for (const auto &c : checks) {
            out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name
                << "  (max deviation " << c.max_deviation << ")";
            if (!c.pass && !c.counterexample.is_null())
                out << "\n         counterexample: " << c.counterexample.dump();
            out << "\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
        return out.str();
    }
};

namespace suites {

inline json config_echo(const RunConfig &cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["dim"] = cfg.dim;
    j["max_atoms"] = cfg.max_atoms;
    j["trials"] = cfg.trials;
    j["tol"] = cfg.tol;
    j["fault_inject"] = cfg.fault_inject;
    return j;
}

/// Identity and composition preservation on random 3-map chains.
inline CheckResult functor_laws(const RunConfig &cfg) {
    CheckResult result{"functor-laws", true, 0.0, nullptr};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x100000 + trial);
        const MapChain chain = random_chain(rng, cfg.max_atoms, 3);
        std::vector<Povm> povms;
        std::vector<ProbabilityMeasure> probs;
        for (const auto &space : chain.spaces) {
            povms.push_back(random_povm(rng, space, cfg.dim));
            probs.push_back(random_measure(rng, space));
        }
        const LawReport report =
            check_functor_laws(chain.spaces, chain.maps, povms, probs, cfg.tol, cfg.fault_inject);
        const double dev = std::max(report.max_identity_dev, report.max_composition_dev);
        result.max_deviation = std::max(result.max_deviation, dev);
        if (!report.pass && result.pass) {
            result.pass = false;
            result.counterexample = {{"trial", trial}, {"detail", report.counterexample}};
        }
    }
    return result;
}

/// Naturality squares of the Born transformation on random instances,
/// including the composed square of a 2-map chain.
inline CheckResult naturality(const RunConfig &cfg) {
    CheckResult result{"naturality", true, 0.0, nullptr};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x200000 + trial);
        const MapChain chain = random_chain(rng, cfg.max_atoms, 2);
        const CandidateTransformation t = born_transformation(random_density(rng, cfg.dim));
        const Povm mu = random_povm(rng, chain.spaces.front(), cfg.dim);
        for (const MeasurableMap &f :
             {chain.maps[0], compose(chain.maps[1], chain.maps[0])}) {
            const SquareReport square = check_square(t, f, mu, cfg.tol);
            result.max_deviation = std::max(result.max_deviation, square.max_deviation);
            if (!square.commutes && result.pass) {
                result.pass = false;
                result.counterexample = {{"trial", trial}, {"atom", square.worst_atom}};
            }
        }
    }
    return result;
}

/// The same effect embedded into two structurally different POVM/space
/// pairs must receive the same value.
inline CheckResult xi_well_defined(const RunConfig &cfg) {
    CheckResult result{"xi-well-defined", true, 0.0, nullptr};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x300000 + trial);
        const int d = cfg.dim;
        const CandidateTransformation t = born_transformation(random_density(rng, d));
        const Effect m = random_effect(rng, d);

        // embedding 1: the canonical two-point POVM, event {z1}
        const SpacePtr two = make_space({"z1", "z0"}, {{"z1"}, {"z0"}});
        const Povm povm1(two, {m, m.complement()});
        const double v1 = measure_value(apply(t, povm1), Event(two, {0}));

        // embedding 2: m split in half across two atoms of a four-atom
        // space, event = their union
        const SpacePtr four =
            make_space({"q0", "q1", "q2", "q3"}, {{"q0"}, {"q1"}, {"q2"}, {"q3"}});
        const double r = rng.uniform(0.1, 0.9);
        const HermitianOperator rest = identity_operator(d) - m.op();
        const Povm povm2(four, {Effect(m.op().scaled(0.5)), Effect(m.op().scaled(0.5)),
                                Effect(rest.scaled(r)), Effect(rest.scaled(1.0 - r))});
        const double v2 = measure_value(apply(t, povm2), Event(four, {0, 1}));

        const double dev = std::abs(v1 - v2);
        result.max_deviation = std::max(result.max_deviation, dev);
        if (dev > cfg.tol && result.pass) {
            result.pass = false;
            result.counterexample = {{"trial", trial}, {"deviation", dev}};
        }
    }
    return result;
}

/// Additivity of extracted xi over effect families of several sizes, via
/// the direct route and the explicit pushforward construction.
inline CheckResult gpm_additivity(const RunConfig &cfg, double direct_tol = 1e-9,
                                  double route_tol = 1e-10) {
    CheckResult result{"gpm-additivity", true, 0.0, nullptr};
    const std::vector<int> sizes{2, 5, 16, 64};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x400000 + trial);
        const CandidateTransformation t = born_transformation(random_density(rng, cfg.dim));
        std::vector<std::vector<Effect>> families;
        for (int k : sizes) {
            std::vector<Effect> family = random_effect_resolution(rng, cfg.dim, k);
            if (trial % 2 == 1) // strictly sub-unital variant
                for (auto &e : family)
                    e = Effect(e.op().scaled(0.8));
            families.push_back(std::move(family));
        }
        const GPMReport report = check_generalized_measure(t, families, direct_tol);
        result.max_deviation =
            std::max({result.max_deviation, report.max_defect, report.max_route_gap});
        const bool ok = report.pass && report.max_route_gap <= route_tol;
        if (!ok && result.pass) {
            result.pass = false;
            result.counterexample = {{"trial", trial},
                                     {"max_defect", report.max_defect},
                                     {"max_route_gap", report.max_route_gap}};
        }
    }
    return result;
}

/// Witness construction separates random distinct state pairs; the gap
/// matches the spectral cross-check and the Born-measure difference.
inline CheckResult injectivity(const RunConfig &cfg) {
    CheckResult result{"injectivity", true, 0.0, nullptr};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x500000 + trial);
        DensityOperator rho = random_density(rng, cfg.dim);
        DensityOperator sigma = random_density(rng, cfg.dim);
        while ((rho.op().matrix() - sigma.op().matrix()).norm() < 1e-3)
            sigma = random_density(rng, cfg.dim);

        const WitnessResult w = injectivity_witness(rho, sigma);
        const double cross = std::abs(w.gap - w.eigenvalue_sum);
        const double measure_gap =
            max_deviation(born_measure(rho, w.povm), born_measure(sigma, w.povm));
        const double measure_dev = std::abs(measure_gap - w.gap);

        result.max_deviation = std::max({result.max_deviation, cross, measure_dev});
        const bool ok = w.gap > 0.0 && cross <= 1e-10 && measure_dev <= 1e-12;
        if (!ok && result.pass) {
            result.pass = false;
            result.counterexample = {{"trial", trial}, {"gap", w.gap}, {"cross", cross}};
        }
    }
    return result;
}

/// reconstruct(born_transformation(rho)) must return rho.
inline CheckResult roundtrip(const RunConfig &cfg, double frobenius_tol = 1e-8) {
    CheckResult result{"roundtrip", true, 0.0, nullptr};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, 0x600000 + trial);
        const DensityOperator rho =
            trial % 4 == 0 ? random_pure_state(rng, cfg.dim) : random_density(rng, cfg.dim);
        const DensityOperator back = reconstruct(born_transformation(rho), cfg.dim);
        const double err = (back.op().matrix() - rho.op().matrix()).norm();
        result.max_deviation = std::max(result.max_deviation, err);
        if (err > frobenius_tol && result.pass) {
            result.pass = false;
            result.counterexample = {{"trial", trial}, {"frobenius_error", err}};
        }
    }
    return result;
}

/// Deliberately broken candidates must be caught: a non-additive
/// effectwise functional, a faulted Born candidate, and a corrupted
/// pushforward. The suite passes when every control is detected.
inline CheckResult negative_controls(const RunConfig &cfg) {
    CheckResult result{"negative-controls", true, 0.0, nullptr};
    const int d = cfg.dim;
    json caught = json::object();

    // non-additive functional: Tr[rho m]^k with the maximally mixed weight
    EffectFunctional power{EffectFunctional::Form::power, maximally_mixed(d).op(), 3};
    const CandidateTransformation t = CandidateTransformation::effectwise(power, d);

    const SpacePtr three = make_space({"u0", "u1", "u2"}, {{"u0"}, {"u1"}, {"u2"}});
    const Effect third(identity_operator(d).scaled(1.0 / 3.0));
    const Povm uniform3(three, {third, third, third});
    bool detected = false;
    try {
        apply(t, uniform3);
    } catch (const NotAMeasure &) {
        detected = true;
    }
    caught["power_apply_not_a_measure"] = detected;
    result.pass = result.pass && detected;

    const Effect half(identity_operator(d).scaled(0.5));
    const GPMReport gpm = check_generalized_measure(t, {{half, half}}, 1e-12);
    caught["power_gpm_additivity_fails"] = !gpm.pass;
    caught["power_gpm_defect"] = gpm.max_defect;
    result.pass = result.pass && !gpm.pass;
    result.max_deviation = std::max(result.max_deviation, gpm.max_defect);

    detected = false;
    try {
        reconstruct(t, d);
    } catch (const NotAState &) {
        detected = true;
    }
    caught["power_reconstruct_not_a_state"] = detected;
    result.pass = result.pass && detected;

    // faulted Born candidate: the square on the faulted space must break
    Rng rng(cfg.seed, 0x700000);
    const SpacePtr faulty_space =
        make_space({"v0", "v1", "v2"}, {{"v0"}, {"v1"}, {"v2"}});
    const CandidateTransformation faulted = CandidateTransformation::faulted(
        born_transformation(random_density(rng, d)), {faulty_space, 0, 0.01});
    const Povm mu = random_povm(rng, faulty_space, d);
    const SpacePtr coarse = make_space({"w0", "w1"}, {{"w0"}, {"w1"}});
    const MeasurableMap collapse(faulty_space, coarse, {0, 1, 1});
    const SquareReport square = check_square(faulted, collapse, mu, cfg.tol);
    caught["faulted_square_fails"] = !square.commutes;
    caught["faulted_square_deviation"] = square.max_deviation;
    result.pass = result.pass && !square.commutes;

    // corrupted pushforward must fail the law check
    RunConfig law_cfg = cfg;
    law_cfg.trials = std::min(cfg.trials, 10);
    law_cfg.fault_inject = true;
    const CheckResult law = functor_laws(law_cfg);
    caught["fault_injected_laws_fail"] = !law.pass;
    result.pass = result.pass && !law.pass;

    result.counterexample = caught;
    return result;
}

} // namespace suites

inline SuiteReport run_suite(const RunConfig &cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    SuiteReport report;
    report.suite = cfg.suite;
    report.seed = cfg.seed;
    report.config_echo = suites::config_echo(cfg);

    const std::string &s = cfg.suite;
    const bool all = s == "all";
    if (all || s == "functor-laws")
        report.add(suites::functor_laws(cfg));
    if (all || s == "naturality")
        report.add(suites::naturality(cfg));
    if (all || s == "xi-well-defined")
        report.add(suites::xi_well_defined(cfg));
    if (all || s == "gpm-additivity")
        report.add(suites::gpm_additivity(cfg));
    if (all || s == "injectivity")
        report.add(suites::injectivity(cfg));
    if (all || s == "roundtrip")
        report.add(suites::roundtrip(cfg));
    if (all || s == "negative-controls")
        report.add(suites::negative_controls(cfg));
    if (report.checks.empty())
        throw ConfigInvalid("unknown suite '" + s + "'");

    report.wall_clock_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return report;
}

/// Deterministic bundle of generated instances, for the `gen` subcommand.
inline json gen_instances(const RunConfig &cfg) {
    cfg.validate();
    json bundle;
    bundle["seed"] = cfg.seed;
    bundle["dim"] = cfg.dim;

    json spaces = json::array();
    json maps = json::array();
    json povms = json::array();
    json densities = json::array();
    for (int i = 0; i < cfg.trials; ++i) {
        Rng rng(cfg.seed, 0x800000 + i);
        const MapChain chain = random_chain(rng, cfg.max_atoms, 1);
        spaces.push_back(to_json(chain.spaces[0]));
        maps.push_back(to_json(chain.maps[0]));
        povms.push_back(to_json(random_povm(rng, chain.spaces[0], cfg.dim)));
        densities.push_back(to_json(random_density(rng, cfg.dim).op()));
    }
    bundle["spaces"] = spaces;
    bundle["maps"] = maps;
    bundle["povms"] = povms;
    bundle["densities"] = densities;
    return bundle;
}

} // namespace catmeas
