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

// End-to-end acceptance run. Each numbered criterion prints one pass/fail
// line; the process exits nonzero if any fails. Tolerances are pinned
// here, not configurable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "catmeas/json_io.hpp"
#include "catmeas/suites.hpp"

using namespace catmeas;

namespace {

int failures = 0;

void criterion(int number, const std::string &label, const std::function<bool(std::string &)> &fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception &e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

RunConfig base_config(std::uint64_t seed, int dim, int trials) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.dim = dim;
    cfg.max_atoms = 8;
    cfg.trials = trials;
    cfg.tol = 1e-10;
    return cfg;
}

} // namespace

int main() {
    criterion(1, "functor laws: identity and composition on 3-map chains, 1000+ instances",
              [](std::string &detail) {
                  double worst = 0.0;
                  bool ok = true;
                  for (int dim : {2, 3, 4}) {
                      const CheckResult r = suites::functor_laws(base_config(101, dim, 334));
                      worst = std::max(worst, r.max_deviation);
                      ok = ok && r.pass;
                  }
                  detail = "max deviation " + std::to_string(worst);
                  return ok && worst <= 1e-10;
              });

    criterion(2, "naturality of the Born transformation, 500+ squares", [](std::string &detail) {
        double worst = 0.0;
        bool ok = true;
        for (int dim : {2, 3, 4}) {
            const CheckResult r = suites::naturality(base_config(202, dim, 170));
            worst = std::max(worst, r.max_deviation);
            ok = ok && r.pass;
        }
        detail = "max deviation " + std::to_string(worst);
        return ok && worst <= 1e-10;
    });

    criterion(3, "xi well-definedness across embeddings, 200+ effects", [](std::string &detail) {
        double worst = 0.0;
        bool ok = true;
        for (int dim : {2, 3, 4}) {
            const CheckResult r = suites::xi_well_defined(base_config(303, dim, 70));
            worst = std::max(worst, r.max_deviation);
            ok = ok && r.pass;
        }
        detail = "max deviation " + std::to_string(worst);
        return ok && worst <= 1e-10;
    });

    criterion(4, "generalized-measure additivity over |family| in {2,5,16,64}, both routes",
              [](std::string &detail) {
                  bool ok = true;
                  double worst = 0.0;
                  for (int dim : {2, 3}) {
                      const CheckResult r =
                          suites::gpm_additivity(base_config(404, dim, 20), 1e-9, 1e-10);
                      worst = std::max(worst, r.max_deviation);
                      ok = ok && r.pass;
                  }
                  detail = "max defect/route gap " + std::to_string(worst);
                  return ok;
              });

    criterion(5, "injectivity witnesses: positive gap, spectral cross-check, measure gap",
              [](std::string &detail) {
                  bool ok = true;
                  double worst = 0.0;
                  for (int dim : {2, 3, 4}) {
                      const CheckResult r = suites::injectivity(base_config(505, dim, 70));
                      worst = std::max(worst, r.max_deviation);
                      ok = ok && r.pass;
                  }
                  detail = "max cross-check deviation " + std::to_string(worst);
                  return ok;
              });

    criterion(6, "bijection round-trip at d in {2,3,4}, 100 states each", [](std::string &detail) {
        bool ok = true;
        double worst = 0.0;
        for (int dim : {2, 3, 4}) {
            const CheckResult r = suites::roundtrip(base_config(606, dim, 100), 1e-8);
            worst = std::max(worst, r.max_deviation);
            ok = ok && r.pass;
        }
        detail = "max Frobenius error " + std::to_string(worst);
        return ok;
    });

    criterion(7, "negative control: the power candidate normalizes yet is rejected everywhere",
              [](std::string &detail) {
                  bool ok = true;
                  const CandidateTransformation t = CandidateTransformation::effectwise(
                      {EffectFunctional::Form::power, maximally_mixed(2).op(), 3}, 2);

                  const double xi_one = catmeas::detail::raw_xi(t, Effect(identity_operator(2)));
                  ok = ok && std::abs(xi_one - 1.0) <= 1e-12;

                  const SpacePtr three = make_space({"u0", "u1", "u2"}, {{"u0"}, {"u1"}, {"u2"}});
                  const Effect third(identity_operator(2).scaled(1.0 / 3.0));
                  bool not_a_measure = false;
                  try {
                      apply(t, Povm(three, {third, third, third}));
                  } catch (const NotAMeasure &) {
                      not_a_measure = true;
                  }
                  ok = ok && not_a_measure;

                  const Effect half(identity_operator(2).scaled(0.5));
                  const GPMReport gpm = check_generalized_measure(t, {{half, half}}, 1e-12);
                  ok = ok && !gpm.pass && std::abs(gpm.max_defect - 0.75) <= 1e-12;

                  for (int dim : {2, 3, 4}) {
                      const CandidateTransformation td = CandidateTransformation::effectwise(
                          {EffectFunctional::Form::power, maximally_mixed(dim).op(), 3}, dim);
                      bool not_a_state = false;
                      try {
                          reconstruct(td, dim);
                      } catch (const NotAState &) {
                          not_a_state = true;
                      }
                      ok = ok && not_a_state;
                  }
                  detail = "xi(1) = " + std::to_string(xi_one) + ", additivity defect " +
                           std::to_string(gpm.max_defect);
                  return ok;
              });

    criterion(8, "hand anchor: diag(3/4,1/4) vs diag(1/4,3/4) gives P = diag(1,0), gap 1/2",
              [](std::string &detail) {
                  const auto w = injectivity_witness(as_density(make_hermitian(diag2(0.75, 0.25))),
                                                     as_density(make_hermitian(diag2(0.25, 0.75))));
                  const double proj_dev =
                      (w.projector.matrix() - diag2(1, 0)).cwiseAbs().maxCoeff();
                  const double gap_dev = std::abs(w.gap - 0.5);
                  detail = "projector deviation " + std::to_string(proj_dev) + ", gap deviation " +
                           std::to_string(gap_dev);
                  return proj_dev <= 1e-14 && gap_dev <= 1e-14;
              });

    criterion(9, "determinism: two `verify --suite all` runs give byte-identical JSON reports",
              [](std::string &detail) {
#ifndef CATMEAS_CLI_PATH
                  detail = "CLI path not configured";
                  return false;
#else
                  const std::string cli = CATMEAS_CLI_PATH;
                  const std::string args =
                      " verify --suite all --seed 7 --dim 2 --trials 15 --max-atoms 5 "
                      "--format json --out ";
                  for (const char *out : {"acceptance_run1.json", "acceptance_run2.json"}) {
                      const int rc = std::system((cli + args + out).c_str());
                      if (rc != 0) {
                          detail = std::string("CLI run failed for ") + out;
                          return false;
                      }
                  }
                  auto load = [](const char *path) {
                      std::ifstream in(path);
                      json j = json::parse(in);
                      j.erase("wall_clock_ms");
                      return j.dump();
                  };
                  const std::string a = load("acceptance_run1.json");
                  const std::string b = load("acceptance_run2.json");
                  detail = a == b ? "reports identical" : "reports differ";
                  return a == b;
#endif
              });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
