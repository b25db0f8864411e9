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
 * JSON wire formats. Spaces list atoms as point-index lists; operators are
 * row-major with [re, im] entry pairs; candidates carry their descriptor.
 */

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "catmeas/born.hpp"
#include "catmeas/functors.hpp"
#include "catmeas/measurable.hpp"
#include "catmeas/naturality.hpp"
#include "catmeas/operators.hpp"

namespace catmeas {

using json = nlohmann::ordered_json;

inline json to_json(const SpacePtr &space) {
    json j;
    j["points"] = space->points();
    j["atoms"] = space->atoms();
    return j;
}

inline SpacePtr space_from_json(const json &j) {
    return make_space_indexed(j.at("points").get<std::vector<std::string>>(),
                              j.at("atoms").get<std::vector<std::vector<int>>>());
}

inline json to_json(const MeasurableMap &map) {
    json j;
    j["domain"] = to_json(map.domain());
    j["codomain"] = to_json(map.codomain());
    j["assignment"] = map.assignment();
    return j;
}

inline MeasurableMap map_from_json(const json &j) {
    return MeasurableMap(space_from_json(j.at("domain")), space_from_json(j.at("codomain")),
                         j.at("assignment").get<std::vector<int>>());
}

inline json to_json(const HermitianOperator &op) {
    json entries = json::array();
    for (int i = 0; i < op.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < op.dim(); ++j) {
            const auto v = op.matrix()(i, j);
            row.push_back({v.real(), v.imag()});
        }
        entries.push_back(row);
    }
    json j;
    j["dim"] = op.dim();
    j["entries"] = entries;
    return j;
}

inline HermitianOperator operator_from_json(const json &j,
                                            const Tolerances &tol = default_tolerances()) {
    const int d = j.at("dim").get<int>();
    Matrix m(d, d);
    const auto &entries = j.at("entries");
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m(r, c) = std::complex<double>(entries.at(r).at(c).at(0).get<double>(),
                                           entries.at(r).at(c).at(1).get<double>());
    return HermitianOperator(m, tol);
}

inline json to_json(const Povm &povm) {
    json effects = json::array();
    for (const auto &e : povm.atom_effects())
        effects.push_back(to_json(e.op()));
    json j;
    j["space"] = to_json(povm.space());
    j["atom_effects"] = effects;
    return j;
}

inline Povm povm_from_json(const json &j, const Tolerances &tol = default_tolerances()) {
    std::vector<Effect> effects;
    for (const auto &e : j.at("atom_effects"))
        effects.emplace_back(operator_from_json(e, tol), tol);
    return Povm(space_from_json(j.at("space")), std::move(effects), tol);
}

inline json to_json(const ProbabilityMeasure &p) {
    json j;
    j["space"] = to_json(p.space());
    j["atom_probs"] = p.atom_probs();
    return j;
}

inline ProbabilityMeasure measure_from_json(const json &j,
                                            const Tolerances &tol = default_tolerances()) {
    return ProbabilityMeasure(space_from_json(j.at("space")),
                              j.at("atom_probs").get<std::vector<double>>(), tol);
}

inline json to_json(const CandidateTransformation &t) {
    json j;
    switch (t.kind()) {
    case CandidateTransformation::Kind::born:
        j["kind"] = "born";
        j["rho"] = to_json(t.born_state().op());
        break;
    case CandidateTransformation::Kind::effectwise: {
        j["kind"] = "effectwise";
        const auto &xi = t.functional();
        switch (xi.form) {
        case EffectFunctional::Form::linear:
            j["form"] = "linear";
            break;
        case EffectFunctional::Form::power:
            j["form"] = "power";
            j["exponent"] = xi.exponent;
            break;
        case EffectFunctional::Form::affine:
            j["form"] = "affine";
            j["scale"] = xi.scale;
            j["offset"] = xi.offset;
            break;
        }
        j["weight"] = to_json(xi.weight);
        j["dim"] = t.dim();
        break;
    }
    case CandidateTransformation::Kind::faulted:
        j["kind"] = "faulted";
        j["base"] = to_json(t.fault_base());
        j["space"] = to_json(t.fault().space);
        j["atom"] = t.fault().atom;
        j["delta"] = t.fault().delta;
        break;
    }
    return j;
}

inline CandidateTransformation candidate_from_json(const json &j,
                                                   const Tolerances &tol = default_tolerances()) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "born")
        return CandidateTransformation::born(
            DensityOperator(operator_from_json(j.at("rho"), tol), tol));
    if (kind == "effectwise") {
        EffectFunctional xi{EffectFunctional::Form::linear, operator_from_json(j.at("weight"), tol)};
        const std::string form = j.at("form").get<std::string>();
        if (form == "power") {
            xi.form = EffectFunctional::Form::power;
            xi.exponent = j.at("exponent").get<int>();
        } else if (form == "affine") {
            xi.form = EffectFunctional::Form::affine;
            xi.scale = j.at("scale").get<double>();
            xi.offset = j.at("offset").get<double>();
        } else if (form != "linear") {
            throw ConfigInvalid("unknown effectwise form '" + form + "'");
        }
        return CandidateTransformation::effectwise(std::move(xi), j.at("dim").get<int>());
    }
    if (kind == "faulted") {
        CandidateTransformation::Fault fault{space_from_json(j.at("space")),
                                             j.at("atom").get<int>(), j.at("delta").get<double>()};
        return CandidateTransformation::faulted(candidate_from_json(j.at("base"), tol),
                                                std::move(fault));
    }
    throw ConfigInvalid("unknown candidate kind '" + kind + "'");
}

inline json to_json(const WitnessResult &w) {
    json j;
    j["povm"] = to_json(w.povm);
    j["projector"] = to_json(w.projector);
    j["gap"] = w.gap;
    j["eigenvalue_sum"] = w.eigenvalue_sum;
    j["projector_rank"] = w.projector_rank;
    return j;
}

} // namespace catmeas
