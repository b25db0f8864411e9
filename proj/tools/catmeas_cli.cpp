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

// Command-line front end. Subcommands:
//
//   gen          emit a deterministic bundle of random instances
//   verify       run a verification suite; exit 0 iff all checks pass
//   extract-xi   evaluate a candidate's xi on an effect
//   witness      build the separating POVM for two states
//   reconstruct  invert a candidate to the density operator inducing it
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "catmeas/json_io.hpp"
#include "catmeas/suites.hpp"

namespace {

catmeas::json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw catmeas::ConfigInvalid("cannot open '" + path + "'");
    return catmeas::json::parse(in);
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw catmeas::ConfigInvalid("cannot write '" + out_path + "'");
        out << text;
        if (text.empty() || text.back() != '\n')
            out << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"verification toolkit for measurement/probability functors and the Born rule"};
    app.require_subcommand(1);

    catmeas::RunConfig cfg;
    if (const char *env_tol = std::getenv("CATMEAS_TOL"))
        cfg.tol = std::atof(env_tol);

    std::string out_path;
    std::string candidate_path, effect_path, rho_path, sigma_path;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--seed", cfg.seed, "master seed");
        cmd->add_option("--dim", cfg.dim, "Hilbert space dimension")->check(CLI::Range(2, 16));
        cmd->add_option("--max-atoms", cfg.max_atoms, "largest atom count for generated spaces")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--trials", cfg.trials, "number of random trials")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol", cfg.tol, "check tolerance");
        cmd->add_option("--format", cfg.format, "output format: json or text");
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App *gen = app.add_subcommand("gen", "generate a deterministic instance bundle");
    add_common(gen);

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", cfg.suite,
                       "functor-laws | naturality | xi-well-defined | gpm-additivity | "
                       "injectivity | roundtrip | negative-controls | all");
    verify->add_flag("--fault-inject", cfg.fault_inject,
                     "corrupt one pushforward to confirm the checks can fail");

    CLI::App *xi = app.add_subcommand("extract-xi", "evaluate a candidate's xi on an effect");
    add_common(xi);
    xi->add_option("--candidate", candidate_path, "candidate JSON file")->required();
    xi->add_option("--effect", effect_path, "effect operator JSON file")->required();

    CLI::App *witness = app.add_subcommand("witness", "separating POVM for two states");
    add_common(witness);
    witness->add_option("--rho", rho_path, "first density operator JSON file")->required();
    witness->add_option("--sigma", sigma_path, "second density operator JSON file")->required();

    CLI::App *rec = app.add_subcommand("reconstruct", "invert a candidate to a density operator");
    add_common(rec);
    rec->add_option("--candidate", candidate_path, "candidate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            emit(catmeas::gen_instances(cfg).dump(2), out_path);
            return 0;
        }
        if (verify->parsed()) {
            const catmeas::SuiteReport report = catmeas::run_suite(cfg);
            const std::string payload =
                cfg.format == "json" ? report.to_json().dump(2) : report.to_text();
            emit(payload, out_path);
            // negative-control runs pass when every control is detected,
            // which run_suite already folds into report.pass
            return report.pass ? 0 : 1;
        }
        if (xi->parsed()) {
            const auto t = catmeas::candidate_from_json(load_json(candidate_path));
            const catmeas::Effect m(catmeas::operator_from_json(load_json(effect_path)));
            catmeas::json j;
            j["xi"] = catmeas::extract_xi(t, m);
            emit(cfg.format == "text" ? std::to_string(j["xi"].get<double>()) : j.dump(2),
                 out_path);
            return 0;
        }
        if (witness->parsed()) {
            const catmeas::DensityOperator rho(catmeas::operator_from_json(load_json(rho_path)));
            const catmeas::DensityOperator sigma(
                catmeas::operator_from_json(load_json(sigma_path)));
            const auto w = catmeas::injectivity_witness(rho, sigma);
            emit(catmeas::to_json(w).dump(2), out_path);
            return 0;
        }
        if (rec->parsed()) {
            const auto t = catmeas::candidate_from_json(load_json(candidate_path));
            const auto rho = catmeas::reconstruct(t, t.dim());
            emit(catmeas::to_json(rho.op()).dump(2), out_path);
            return 0;
        }
    } catch (const catmeas::ConfigInvalid &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const catmeas::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const catmeas::json::exception &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
