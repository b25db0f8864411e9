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

#include <doctest.h>

#include "catmeas/born.hpp"
#include "catmeas/generate.hpp"

using namespace catmeas;

namespace {

Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

SpacePtr singleton_space(int n, const std::string &prefix = "s") {
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> atoms;
    for (int i = 0; i < n; ++i) {
        points.push_back(prefix + std::to_string(i));
        atoms.push_back({points.back()});
    }
    return make_space(points, atoms);
}

/// Trace distance via the eigenvalues of the difference; independent of
/// the witness construction it cross-checks.
double trace_distance(const DensityOperator &rho, const DensityOperator &sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.op().matrix() - sigma.op().matrix());
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace

TEST_CASE("born_measure: hand values on the projective qubit POVM") {
    const DensityOperator rho = as_density(make_hermitian(diag2(0.75, 0.25)));
    const SpacePtr space = singleton_space(2);
    const Povm povm(space,
                    {Effect(make_hermitian(diag2(1, 0))), Effect(make_hermitian(diag2(0, 1)))});
    const ProbabilityMeasure p = born_measure(rho, povm);
    CHECK(p.atom_probs()[0] == doctest::Approx(0.75));
    CHECK(p.atom_probs()[1] == doctest::Approx(0.25));
}

TEST_CASE("born_measure: one-point POVM always receives probability one") {
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(109, trial);
        const int d = rng.uniform_int(2, 5);
        const Povm point(singleton_space(1), {Effect(identity_operator(d))});
        CHECK(born_measure(random_density(rng, d), point).atom_probs()[0] ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("born_measure: maximally mixed qubit gives Tr[M]/2") {
    Rng rng(113, 0);
    const Effect m = random_effect(rng, 2);
    const Povm povm(singleton_space(2), {m, m.complement()});
    const ProbabilityMeasure p = born_measure(maximally_mixed(2), povm);
    CHECK(p.atom_probs()[0] == doctest::Approx(m.op().matrix().trace().real() / 2));
}

TEST_CASE("born_transformation: extracted xi equals the trace pairing") {
    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(127, trial);
        const int d = rng.uniform_int(2, 5);
        const DensityOperator rho = random_density(rng, d);
        const Effect m = random_effect(rng, d);
        CHECK(extract_xi(born_transformation(rho), m) ==
              doctest::Approx(trace_pair(rho.op(), m.op())).epsilon(1e-12));
    }
}

TEST_CASE("born_transformation: the maximally mixed state is uniform on projective POVMs") {
    const int d = 4;
    std::vector<Effect> projectors;
    for (int i = 0; i < d; ++i) {
        Matrix p = Matrix::Zero(d, d);
        p(i, i) = 1.0;
        projectors.emplace_back(HermitianOperator(p));
    }
    const ProbabilityMeasure p =
        apply(born_transformation(maximally_mixed(d)), Povm(singleton_space(d), projectors));
    for (double v : p.atom_probs())
        CHECK(v == doctest::Approx(1.0 / d).epsilon(1e-12));
}

TEST_CASE("injectivity_witness: hand-checkable qubit anchor") {
    const auto w = injectivity_witness(as_density(make_hermitian(diag2(0.75, 0.25))),
                                       as_density(make_hermitian(diag2(0.25, 0.75))));
    CHECK(w.projector.approx_equal(make_hermitian(diag2(1, 0)), 1e-14));
    CHECK(w.gap == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.projector_rank == 1);
}

TEST_CASE("injectivity_witness: equal states admit no witness") {
    const DensityOperator rho = maximally_mixed(3);
    CHECK_THROWS_AS(injectivity_witness(rho, rho), StatesEqual);
}

TEST_CASE("injectivity_witness: qutrit gaps are positive and bounded by trace distance") {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng(131, trial);
        const DensityOperator rho = random_density(rng, 3);
        const DensityOperator sigma = random_density(rng, 3);
        if ((rho.op().matrix() - sigma.op().matrix()).norm() < 1e-3)
            continue;
        const auto w = injectivity_witness(rho, sigma);
        CHECK(w.gap > 0.0);
        CHECK(w.gap <= trace_distance(rho, sigma) + 1e-12);
        CHECK(w.gap == doctest::Approx(w.eigenvalue_sum).epsilon(1e-12));
    }
}

TEST_CASE("ic_effect_basis: counts, validity, and frame spanning") {
    const EffectBasis qubit = ic_effect_basis(2);
    CHECK(qubit.effects.size() == 4);
    // frame 1, S01, A01, diag(1,-1): Gram is diag(2, 2, 2, 2), determinant 16
    Eigen::Matrix4d gram;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gram(i, j) = trace_pair(qubit.frame_operators[i], qubit.frame_operators[j]);
    CHECK(gram.determinant() == doctest::Approx(16.0).epsilon(1e-12));

    CHECK(ic_effect_basis(3).effects.size() == 9);
    for (int d = 2; d <= 5; ++d)
        for (const auto &e : ic_effect_basis(d).effects)
            CHECK_NOTHROW(as_effect(e.op()));
    CHECK_THROWS_AS(ic_effect_basis(1), ConfigInvalid);
}

TEST_CASE("reconstruct: round-trips hand and random states") {
    const DensityOperator rho = as_density(make_hermitian(diag2(0.75, 0.25)));
    const DensityOperator back = reconstruct(born_transformation(rho), 2);
    CHECK((back.op().matrix() - rho.op().matrix()).norm() <= 1e-10);

    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(137, trial);
        const DensityOperator pure = random_pure_state(rng, 3);
        const DensityOperator rt = reconstruct(born_transformation(pure), 3);
        CHECK((rt.op().matrix() - pure.op().matrix()).norm() <= 1e-8);
    }
}

TEST_CASE("reconstruct: linear effectwise candidates with a density payload round-trip too") {
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(139, trial);
        const DensityOperator rho = random_density(rng, 3);
        const CandidateTransformation t = CandidateTransformation::effectwise(
            {EffectFunctional::Form::linear, rho.op()}, 3);
        const DensityOperator back = reconstruct(t, 3);
        CHECK((back.op().matrix() - rho.op().matrix()).norm() <= 1e-10);
    }
}

TEST_CASE("reconstruct: non-additive candidates surface as NotAState") {
    for (int d = 2; d <= 4; ++d) {
        const CandidateTransformation t = CandidateTransformation::effectwise(
            {EffectFunctional::Form::power, maximally_mixed(d).op(), 3}, d);
        CHECK_THROWS_AS(reconstruct(t, d), NotAState);
    }
}

TEST_CASE("reconstruct: extracted xi of the round-trip matches the original") {
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(149, trial);
        const CandidateTransformation t = born_transformation(random_density(rng, 2));
        const CandidateTransformation back = born_transformation(reconstruct(t, 2));
        for (int k = 0; k < 5; ++k) {
            const Effect m = random_effect(rng, 2);
            CHECK(extract_xi(back, m) == doctest::Approx(extract_xi(t, m)).epsilon(1e-8));
        }
    }
}

TEST_CASE("naturality of the Born transformation across composed squares") {
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(151, trial);
        const MapChain chain = random_chain(rng, 6, 2);
        const CandidateTransformation t = born_transformation(random_density(rng, 3));
        const Povm mu = random_povm(rng, chain.spaces[0], 3);
        const Povm mid = pushforward_povm(chain.maps[0], mu);
        CHECK(check_square(t, chain.maps[0], mu, 1e-10).commutes);
        CHECK(check_square(t, chain.maps[1], mid, 1e-10).commutes);
        CHECK(check_square(t, compose(chain.maps[1], chain.maps[0]), mu, 1e-10).commutes);
    }
}

TEST_CASE("injectivity, operational form: the witness separates Born measures by the gap") {
    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(157, trial);
        const int d = rng.uniform_int(2, 5);
        const DensityOperator rho = random_density(rng, d);
        const DensityOperator sigma = random_density(rng, d);
        if ((rho.op().matrix() - sigma.op().matrix()).norm() < 1e-3)
            continue;
        const auto w = injectivity_witness(rho, sigma);
        const double diff =
            max_deviation(born_measure(rho, w.povm), born_measure(sigma, w.povm));
        CHECK(diff == doctest::Approx(w.gap).epsilon(1e-12));
    }
}
