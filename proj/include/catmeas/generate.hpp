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
 * Seeded random instance generation: spaces, measurable maps, POVMs,
 * densities, effects. Per-instance seeds derive from the master seed via
 * splitmix64 over a stream counter, so counterexamples reproduce across
 * runs and trial order does not matter.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catmeas/errors.hpp"
#include "catmeas/functors.hpp"
#include "catmeas/measurable.hpp"
#include "catmeas/operators.hpp"

namespace catmeas {

struct RunConfig {
    std::uint64_t seed = 0;
    int dim = 2;
    int max_atoms = 6;
    int trials = 100;
    double tol = 1e-10;
    std::string format = "text"; // "text" or "json"
    std::string suite = "all";
    bool fault_inject = false;

    void validate() const {
        if (trials < 1)
            throw ConfigInvalid("trials must be >= 1");
        if (dim < 2 || dim > 16)
            throw ConfigInvalid("dim must lie in [2, 16]");
        if (max_atoms < 1 || max_atoms > 64)
            throw ConfigInvalid("max_atoms must lie in [1, 64]");
        if (format != "text" && format != "json")
            throw ConfigInvalid("format must be 'text' or 'json'");
    }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// One deterministic stream per (master seed, stream index) pair.
class Rng {
  public:
    Rng(std::uint64_t master, std::uint64_t stream)
        : engine_(splitmix64(master ^ splitmix64(stream))) {}

    int uniform_int(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }
    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Random partitioned space with up to max_atoms atoms. The first k
/// points pin one atom each so none comes out empty.
inline SpacePtr random_space(Rng &rng, int max_atoms, const std::string &prefix = "p") {
    const int k = rng.uniform_int(1, max_atoms);
    const int n = rng.uniform_int(k, 2 * k);
    std::vector<std::string> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i)
        points.push_back(prefix + std::to_string(i));
    std::vector<std::vector<int>> atoms(k);
    for (int i = 0; i < n; ++i)
        atoms[i < k ? i : rng.uniform_int(0, k - 1)].push_back(i);
    return make_space_indexed(std::move(points), std::move(atoms));
}

/// Random measurable map: each domain atom lands in one codomain atom and
/// its points scatter over that atom's points.
inline MeasurableMap random_map(Rng &rng, const SpacePtr &domain, const SpacePtr &codomain) {
    std::vector<int> assignment(domain->num_points());
    for (int a = 0; a < domain->num_atoms(); ++a) {
        const auto &target = codomain->atoms()[rng.uniform_int(0, codomain->num_atoms() - 1)];
        for (int p : domain->atoms()[a])
            assignment[p] = target[rng.uniform_int(0, static_cast<int>(target.size()) - 1)];
    }
    return MeasurableMap(domain, codomain, std::move(assignment));
}

namespace detail {

inline Matrix random_complex(Rng &rng, int dim) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
    return m;
}

inline Matrix random_psd(Rng &rng, int dim) {
    const Matrix a = random_complex(rng, dim);
    return a * a.adjoint();
}

inline Matrix inverse_sqrt(const Matrix &psd) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(psd);
    Eigen::VectorXd inv = solver.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace detail

inline DensityOperator random_density(Rng &rng, int dim) {
    const Matrix g = detail::random_psd(rng, dim);
    return DensityOperator(HermitianOperator(g / g.trace().real()));
}

inline DensityOperator random_pure_state(Rng &rng, int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i)
        v(i) = std::complex<double>(rng.gaussian(), rng.gaussian());
    v.normalize();
    return DensityOperator(HermitianOperator(v * v.adjoint()));
}

inline Effect random_effect(Rng &rng, int dim) {
    const Matrix g = detail::random_psd(rng, dim);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(g);
    const double top = solver.eigenvalues().maxCoeff();
    const double scale = rng.uniform(0.2, 1.0) / std::max(top, 1e-12);
    return Effect(HermitianOperator(g * scale));
}

/// k PSD operators whitened so they sum exactly to the identity.
inline std::vector<Effect> random_effect_resolution(Rng &rng, int dim, int k) {
    std::vector<Matrix> gs;
    gs.reserve(k);
    Matrix total = Matrix::Zero(dim, dim);
    for (int i = 0; i < k; ++i) {
        gs.push_back(detail::random_psd(rng, dim));
        total += gs.back();
    }
    const Matrix w = detail::inverse_sqrt(total);
    std::vector<Effect> effects;
    effects.reserve(k);
    for (const auto &g : gs)
        effects.emplace_back(HermitianOperator(w * g * w));
    return effects;
}

inline Povm random_povm(Rng &rng, const SpacePtr &space, int dim) {
    return Povm(space, random_effect_resolution(rng, dim, space->num_atoms()));
}

inline ProbabilityMeasure random_measure(Rng &rng, const SpacePtr &space) {
    std::vector<double> probs(space->num_atoms());
    double sum = 0.0;
    for (double &p : probs)
        sum += (p = rng.uniform(1e-3, 1.0));
    for (double &p : probs)
        p /= sum;
    return ProbabilityMeasure(space, std::move(probs),
                              Tolerances{.measure_sum = 1e-6});
}

/// A chain X0 -> X1 -> ... with num_maps maps, later spaces no finer than
/// earlier ones.
struct MapChain {
    std::vector<SpacePtr> spaces;
    std::vector<MeasurableMap> maps;
};

inline MapChain random_chain(Rng &rng, int max_atoms, int num_maps) {
    MapChain chain;
    int atoms = std::max(1, rng.uniform_int(std::min(2, max_atoms), max_atoms));
    chain.spaces.push_back(random_space(rng, atoms, "a"));
    static const char *prefixes[] = {"b", "c", "d", "e", "f", "g"};
    for (int i = 0; i < num_maps; ++i) {
        atoms = rng.uniform_int(1, std::max(1, chain.spaces.back()->num_atoms()));
        chain.spaces.push_back(
            random_space(rng, atoms, prefixes[i % (sizeof(prefixes) / sizeof(prefixes[0]))]));
        chain.maps.push_back(random_map(rng, chain.spaces[i], chain.spaces[i + 1]));
    }
    return chain;
}

} // namespace catmeas
