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
 * Candidate natural transformations from the measurement functor to the
 * probability functor, represented by finite descriptors:
 *
 *  - effectwise: a closed-form functional xi on effects, applied atomwise;
 *  - born: Tr[rho .] for a density operator rho;
 *  - faulted: a base candidate with a deliberate perturbation on one
 *    space, used as a negative control.
 *
 * xi-extraction goes through the canonical two-point construction: given
 * an effect M, build the POVM {M, 1-M} on {z1, z0} and read off the z1
 * value. check_square evaluates both paths around a naturality square;
 * check_generalized_measure tests additivity of the extracted xi both
 * directly and through the explicit {0} ⊔ Λ pushforward construction.
 */

#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "catmeas/errors.hpp"
#include "catmeas/functors.hpp"
#include "catmeas/measurable.hpp"
#include "catmeas/operators.hpp"

namespace catmeas {

/// Closed-form functional on effects. `weight` is a Hermitian operator,
/// not necessarily a density; non-linear forms exist to be caught.
struct EffectFunctional {
    enum class Form { linear, power, affine };

    Form form = Form::linear;
    HermitianOperator weight;
    int exponent = 2;    // power form: Tr[weight m]^exponent
    double scale = 1.0;  // affine form: scale * Tr[weight m] + offset
    double offset = 0.0;

    double operator()(const Effect &m) const {
        const double t = trace_pair(weight, m.op());
        switch (form) {
        case Form::linear:
            return t;
        case Form::power:
            return std::pow(t, exponent);
        case Form::affine:
            return scale * t + offset;
        }
        return t;
    }
};

class CandidateTransformation {
  public:
    enum class Kind { born, effectwise, faulted };

    struct Fault {
        SpacePtr space; ///< perturbation fires only on this space
        int atom = 0;
        double delta = 0.01;
    };

    static CandidateTransformation born(DensityOperator rho) {
        CandidateTransformation t;
        t.dim_ = rho.dim();
        t.payload_ = std::move(rho);
        return t;
    }

    static CandidateTransformation effectwise(EffectFunctional xi, int dim) {
        CandidateTransformation t;
        t.dim_ = dim;
        t.payload_ = std::move(xi);
        return t;
    }

    static CandidateTransformation faulted(CandidateTransformation base, Fault fault) {
        CandidateTransformation t;
        t.dim_ = base.dim();
        t.payload_ = FaultedPayload{std::make_shared<CandidateTransformation>(std::move(base)),
                                    std::move(fault)};
        return t;
    }

    int dim() const { return dim_; }

    Kind kind() const {
        if (std::holds_alternative<DensityOperator>(payload_))
            return Kind::born;
        if (std::holds_alternative<EffectFunctional>(payload_))
            return Kind::effectwise;
        return Kind::faulted;
    }

    const DensityOperator &born_state() const { return std::get<DensityOperator>(payload_); }
    const EffectFunctional &functional() const { return std::get<EffectFunctional>(payload_); }
    const CandidateTransformation &fault_base() const {
        return *std::get<FaultedPayload>(payload_).base;
    }
    const Fault &fault() const { return std::get<FaultedPayload>(payload_).fault; }

    /// Per-atom values on a POVM, with no probability-measure validation.
    std::vector<double> raw_values(const Povm &povm) const {
        if (povm.dim() != dim_)
            throw DimMismatch("candidate dimension " + std::to_string(dim_) +
                              " vs POVM dimension " + std::to_string(povm.dim()));
        std::vector<double> vals;
        vals.reserve(povm.atom_effects().size());
        if (const auto *rho = std::get_if<DensityOperator>(&payload_)) {
            for (const auto &e : povm.atom_effects())
                vals.push_back(trace_pair(rho->op(), e.op()));
        } else if (const auto *xi = std::get_if<EffectFunctional>(&payload_)) {
            for (const auto &e : povm.atom_effects())
                vals.push_back((*xi)(e));
        } else {
            const auto &fp = std::get<FaultedPayload>(payload_);
            vals = fp.base->raw_values(povm);
            if (same_space(povm.space(), fp.fault.space) &&
                fp.fault.atom < static_cast<int>(vals.size())) {
                vals[fp.fault.atom] += fp.fault.delta;
                // move the mass from another atom so the sum stays 1 and
                // the corruption surfaces as a naturality failure
                if (vals.size() > 1)
                    vals[(fp.fault.atom + 1) % vals.size()] -= fp.fault.delta;
            }
        }
        return vals;
    }

  private:
    struct FaultedPayload {
        std::shared_ptr<CandidateTransformation> base;
        Fault fault;
    };

    CandidateTransformation()
        : payload_(EffectFunctional{EffectFunctional::Form::linear,
                                    HermitianOperator(Matrix::Zero(1, 1))}) {}

    int dim_ = 0;
    std::variant<DensityOperator, EffectFunctional, FaultedPayload> payload_;
};

/// Applies the candidate to a POVM and validates the result as a
/// probability measure; failure to validate is the detection channel for
/// non-additive functionals.
inline ProbabilityMeasure apply(const CandidateTransformation &t, const Povm &povm,
                                const Tolerances &tol = default_tolerances()) {
    std::vector<double> vals = t.raw_values(povm);
    double min_val = 0.0;
    for (double v : vals)
        min_val = std::min(min_val, v);
    if (min_val < -tol.measure_atom)
        throw NotAMeasure("atom value " + std::to_string(min_val) + " is negative");
    const double sum = detail::kahan_sum(vals);
    if (std::abs(sum - 1.0) > tol.measure_sum)
        throw NotAMeasure("atom values sum to " + std::to_string(sum));
    for (double &v : vals)
        if (v < 0.0)
            v = 0.0; // within measure_atom of zero, checked above
    return ProbabilityMeasure(povm.space(), std::move(vals), tol);
}

namespace detail {

inline SpacePtr two_point_space(const std::string &one = "z1", const std::string &zero = "z0") {
    return make_space({one, zero}, {{one}, {zero}});
}

inline Povm two_outcome_povm(const Effect &m, const SpacePtr &space,
                             const Tolerances &tol = default_tolerances()) {
    std::vector<Effect> effects{m, m.complement(tol)};
    return Povm(space, std::move(effects), tol);
}

/// xi(M) with no measure validation; what check_generalized_measure and
/// reconstruction probe with, so that non-additive candidates can be
/// evaluated rather than rejected outright.
inline double raw_xi(const CandidateTransformation &t, const Effect &m,
                     const Tolerances &tol = default_tolerances()) {
    const auto space = two_point_space();
    return t.raw_values(two_outcome_povm(m, space, tol)).front();
}

} // namespace detail

/// xi(M) through the canonical two-point POVM {M, 1-M}; the z1 value of
/// the applied (and validated) measure.
inline double extract_xi(const CandidateTransformation &t, const Effect &m,
                         const Tolerances &tol = default_tolerances()) {
    const auto space = detail::two_point_space();
    return apply(t, detail::two_outcome_povm(m, space, tol), tol).atom_probs().front();
}

struct SquareReport {
    bool commutes = false;
    double max_deviation = 0.0;
    int worst_atom = -1;
    std::string push_then_apply_error; // NotAMeasure text, per path
    std::string apply_then_push_error;
};

/// Evaluates both ways around the naturality square for a candidate, a
/// measurable map, and a POVM on its domain.
inline SquareReport check_square(const CandidateTransformation &t, const MeasurableMap &f,
                                 const Povm &povm, double tol,
                                 const Tolerances &vt = default_tolerances()) {
    if (!same_space(povm.space(), f.domain()))
        throw SpaceMismatch("POVM does not live on the map domain");
    SquareReport report;

    std::vector<double> path_a; // apply after pushforward of the POVM
    std::vector<double> path_b; // pushforward of the applied measure
    try {
        path_a = apply(t, pushforward_povm(f, povm), vt).atom_probs();
    } catch (const NotAMeasure &e) {
        report.push_then_apply_error = e.what();
    }
    try {
        path_b = pushforward_prob(f, apply(t, povm, vt)).atom_probs();
    } catch (const NotAMeasure &e) {
        report.apply_then_push_error = e.what();
    }
    if (path_a.empty() || path_b.empty())
        return report; // commutes stays false, errors carry the reason

    for (std::size_t i = 0; i < path_a.size(); ++i) {
        const double dev = std::abs(path_a[i] - path_b[i]);
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_atom = static_cast<int>(i);
        }
    }
    report.commutes = report.max_deviation <= tol;
    return report;
}

struct DecompositionCheck {
    bool additive = false;
    double defect = 0.0;    ///< |xi(sum) - sum of xi values|
    double route_gap = 0.0; ///< direct route vs the {0} ⊔ Λ construction
    std::size_t size = 0;
};

struct GPMReport {
    bool pass = false;
    double xi_identity = 0.0;
    double max_defect = 0.0;
    double max_route_gap = 0.0;
    std::vector<DecompositionCheck> decompositions;
};

/// Additivity of the extracted xi over sub-unital effect families. Each
/// decomposition is checked directly and through the explicit construction
/// on Z = {0} ⊔ Λ pushed along the indicator map onto {y1, y0}; the two
/// routes must agree.
inline GPMReport check_generalized_measure(const CandidateTransformation &t,
                                           const std::vector<std::vector<Effect>> &decompositions,
                                           double tol,
                                           const Tolerances &vt = default_tolerances()) {
    GPMReport report;
    const int d = t.dim();
    report.xi_identity = detail::raw_xi(t, Effect(identity_operator(d)), vt);

    for (const auto &family : decompositions) {
        DecompositionCheck check;
        check.size = family.size();

        Matrix sum = Matrix::Zero(d, d);
        for (const auto &m : family)
            sum += m.op().matrix();
        Effect total = [&] {
            try {
                return Effect(HermitianOperator(sum), vt);
            } catch (const NotAnEffect &e) {
                throw DecompositionNotSubunital(std::string("effect family sums beyond identity: ") +
                                                e.what());
            }
        }();

        // direct route
        const double direct_lhs = detail::raw_xi(t, total, vt);
        std::vector<double> parts;
        parts.reserve(family.size());
        for (const auto &m : family)
            parts.push_back(detail::raw_xi(t, m, vt));
        const double direct_rhs = detail::kahan_sum(parts);

        // explicit construction: Z = {0} ⊔ Λ, atom 0 carries 1 - sum,
        // atom λ carries M_λ; push along the indicator map onto {y1, y0}
        std::vector<std::string> z_points{"o0"};
        std::vector<std::vector<std::string>> z_atoms{{"o0"}};
        for (std::size_t l = 0; l < family.size(); ++l) {
            z_points.push_back("l" + std::to_string(l));
            z_atoms.push_back({z_points.back()});
        }
        const SpacePtr z_space = make_space(z_points, z_atoms);
        std::vector<Effect> z_effects;
        z_effects.emplace_back(identity_operator(d) - HermitianOperator(sum), vt);
        for (const auto &m : family)
            z_effects.push_back(m);
        const Povm mu(z_space, std::move(z_effects), vt);

        const SpacePtr y_space = make_space({"y1", "y0"}, {{"y1"}, {"y0"}});
        std::vector<int> assignment(z_space->num_points(), 0); // everything to y1 ...
        assignment[0] = 1;                                     // ... except the remainder point
        const MeasurableMap indicator(z_space, y_space, assignment);

        const double route_lhs =
            t.raw_values(pushforward_povm(indicator, mu)).front(); // xi(nu({y1}))
        std::vector<double> z_vals = t.raw_values(mu);
        z_vals.erase(z_vals.begin());
        const double route_rhs = detail::kahan_sum(z_vals);

        check.defect = std::abs(direct_lhs - direct_rhs);
        check.route_gap =
            std::max(std::abs(route_lhs - direct_lhs), std::abs(route_rhs - direct_rhs));
        check.additive = check.defect <= tol;

        report.max_defect = std::max(report.max_defect, check.defect);
        report.max_route_gap = std::max(report.max_route_gap, check.route_gap);
        report.decompositions.push_back(check);
    }

    bool all_additive = true;
    for (const auto &c : report.decompositions)
        all_additive = all_additive && c.additive;
    report.pass = all_additive && std::abs(report.xi_identity - 1.0) <= tol;
    return report;
}

} // namespace catmeas
