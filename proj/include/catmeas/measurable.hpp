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
 * Finite measurable spaces, events, and measurability-checked maps.
 *
 * A sigma-algebra on a finite carrier is generated by a unique partition;
 * we store that partition (the "atoms") and derive every event as a union
 * of atoms. Events canonicalize to sorted atom-index sets, so equality is
 * syntactic. All values are immutable after construction.
 */

#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "catmeas/errors.hpp"

namespace catmeas {

class FiniteMeasurableSpace;
using SpacePtr = std::shared_ptr<const FiniteMeasurableSpace>;

class FiniteMeasurableSpace {
  public:
    /// Point identifiers in canonical order plus the generating partition,
    /// atoms given as lists of point indices.
    FiniteMeasurableSpace(std::vector<std::string> points, std::vector<std::vector<int>> atoms)
        : points_(std::move(points)), atoms_(std::move(atoms)), atom_of_(points_.size(), -1) {
        std::set<std::string> seen;
        for (const auto &p : points_) {
            if (!seen.insert(p).second)
                throw Error("duplicate point identifier '" + p + "'");
        }
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            auto &atom = atoms_[a];
            if (atom.empty())
                throw EmptyAtom("atom " + std::to_string(a) + " is empty");
            std::sort(atom.begin(), atom.end());
            for (int p : atom) {
                if (p < 0 || p >= static_cast<int>(points_.size()))
                    throw Error("atom " + std::to_string(a) + " references unknown point index " +
                                std::to_string(p));
                if (atom_of_[p] != -1)
                    throw OverlappingAtoms("point '" + points_[p] + "' lies in atoms " +
                                           std::to_string(atom_of_[p]) + " and " + std::to_string(a));
                atom_of_[p] = static_cast<int>(a);
            }
        }
        for (std::size_t p = 0; p < points_.size(); ++p)
            if (atom_of_[p] == -1)
                throw UncoveredPoint("point '" + points_[p] + "' is covered by no atom");
    }

    const std::vector<std::string> &points() const { return points_; }
    const std::vector<std::vector<int>> &atoms() const { return atoms_; }
    int num_points() const { return static_cast<int>(points_.size()); }
    int num_atoms() const { return static_cast<int>(atoms_.size()); }
    int atom_of(int point_index) const { return atom_of_[point_index]; }

    int point_index(const std::string &id) const {
        auto it = std::find(points_.begin(), points_.end(), id);
        if (it == points_.end())
            throw Error("unknown point identifier '" + id + "'");
        return static_cast<int>(it - points_.begin());
    }

    bool operator==(const FiniteMeasurableSpace &other) const {
        return points_ == other.points_ && atoms_ == other.atoms_;
    }

  private:
    std::vector<std::string> points_;
    std::vector<std::vector<int>> atoms_;
    std::vector<int> atom_of_;
};

inline bool same_space(const SpacePtr &a, const SpacePtr &b) {
    return a == b || (a && b && *a == *b);
}

/// Constructor taking atoms as subsets of point identifiers.
inline SpacePtr make_space(const std::vector<std::string> &points,
                           const std::vector<std::vector<std::string>> &atoms) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < points.size(); ++i)
        index.emplace(points[i], static_cast<int>(i));
    std::vector<std::vector<int>> atom_indices;
    atom_indices.reserve(atoms.size());
    for (const auto &atom : atoms) {
        std::vector<int> ids;
        ids.reserve(atom.size());
        for (const auto &p : atom) {
            auto it = index.find(p);
            if (it == index.end())
                throw Error("atom references unknown point '" + p + "'");
            ids.push_back(it->second);
        }
        atom_indices.push_back(std::move(ids));
    }
    return std::make_shared<FiniteMeasurableSpace>(points, std::move(atom_indices));
}

inline SpacePtr make_space_indexed(std::vector<std::string> points,
                                   std::vector<std::vector<int>> atoms) {
    return std::make_shared<FiniteMeasurableSpace>(std::move(points), std::move(atoms));
}

/// An event is a union of atoms, held as the sorted set of atom indices.
class Event {
  public:
    Event(SpacePtr space, std::vector<int> atom_indices)
        : space_(std::move(space)), atoms_(std::move(atom_indices)) {
        std::sort(atoms_.begin(), atoms_.end());
        atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
        for (int a : atoms_)
            if (a < 0 || a >= space_->num_atoms())
                throw Error("event references unknown atom index " + std::to_string(a));
    }

    const SpacePtr &space() const { return space_; }
    const std::vector<int> &atom_indices() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    bool is_full() const { return static_cast<int>(atoms_.size()) == space_->num_atoms(); }

    /// Sorted point indices belonging to the event.
    std::vector<int> members() const {
        std::vector<int> out;
        for (int a : atoms_)
            out.insert(out.end(), space_->atoms()[a].begin(), space_->atoms()[a].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains_atom(int atom_index) const {
        return std::binary_search(atoms_.begin(), atoms_.end(), atom_index);
    }

    Event complement() const {
        std::vector<int> rest;
        for (int a = 0; a < space_->num_atoms(); ++a)
            if (!contains_atom(a))
                rest.push_back(a);
        return Event(space_, std::move(rest));
    }

    Event unite(const Event &other) const {
        if (!same_space(space_, other.space_))
            throw SpaceMismatch("union of events on different spaces");
        std::vector<int> all = atoms_;
        all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
        return Event(space_, std::move(all));
    }

    bool operator==(const Event &other) const {
        return same_space(space_, other.space_) && atoms_ == other.atoms_;
    }

  private:
    SpacePtr space_;
    std::vector<int> atoms_;
};

inline Event empty_event(const SpacePtr &space) { return Event(space, {}); }

inline Event full_event(const SpacePtr &space) {
    std::vector<int> all(space->num_atoms());
    for (int a = 0; a < space->num_atoms(); ++a)
        all[a] = a;
    return Event(space, std::move(all));
}

/// True iff the subset (given as point indices) is a union of atoms.
inline bool is_event(const SpacePtr &space, const std::vector<int> &subset) {
    std::vector<bool> in(space->num_points(), false);
    for (int p : subset) {
        if (p < 0 || p >= space->num_points())
            throw Error("subset references unknown point index " + std::to_string(p));
        in[p] = true;
    }
    for (const auto &atom : space->atoms()) {
        bool any = false, all = true;
        for (int p : atom) {
            any = any || in[p];
            all = all && in[p];
        }
        if (any && !all)
            return false;
    }
    return true;
}

/// Builds the event spanned by the given point indices; throws if the
/// subset splits an atom.
inline Event event_from_points(const SpacePtr &space, const std::vector<int> &subset) {
    if (!is_event(space, subset))
        throw Error("subset is not a union of atoms");
    std::vector<bool> in(space->num_points(), false);
    for (int p : subset)
        in[p] = true;
    std::vector<int> atoms;
    for (int a = 0; a < space->num_atoms(); ++a)
        if (in[space->atoms()[a].front()])
            atoms.push_back(a);
    return Event(space, std::move(atoms));
}

/// All 2^k events of a space, ordered by atom-subset bitmask. Only
/// sensible for small spaces; callers gate on num_atoms().
inline std::vector<Event> all_events(const SpacePtr &space) {
    const int k = space->num_atoms();
    std::vector<Event> events;
    events.reserve(std::size_t(1) << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> atoms;
        for (int a = 0; a < k; ++a)
            if (mask & (1u << a))
                atoms.push_back(a);
        events.emplace_back(space, std::move(atoms));
    }
    return events;
}

/// A total function between spaces whose atom preimages are unions of
/// domain atoms; preimages of all events are then events automatically.
class MeasurableMap {
  public:
    MeasurableMap(SpacePtr domain, SpacePtr codomain, std::vector<int> assignment)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          assignment_(std::move(assignment)) {
        if (static_cast<int>(assignment_.size()) != domain_->num_points())
            throw Error("assignment must cover every domain point");
        for (int v : assignment_)
            if (v < 0 || v >= codomain_->num_points())
                throw Error("assignment target out of range");
        // each domain atom must land inside a single codomain atom
        for (int a = 0; a < domain_->num_atoms(); ++a) {
            const auto &atom = domain_->atoms()[a];
            const int target = codomain_->atom_of(assignment_[atom.front()]);
            for (int p : atom) {
                if (codomain_->atom_of(assignment_[p]) != target)
                    throw NotMeasurable("preimage of codomain atom " +
                                        std::to_string(codomain_->atom_of(assignment_[p])) +
                                        " splits domain atom " + std::to_string(a));
            }
        }
    }

    const SpacePtr &domain() const { return domain_; }
    const SpacePtr &codomain() const { return codomain_; }
    const std::vector<int> &assignment() const { return assignment_; }
    int operator()(int point_index) const { return assignment_[point_index]; }

    /// Codomain atom that the given domain atom lands in.
    int atom_target(int domain_atom) const {
        return codomain_->atom_of(assignment_[domain_->atoms()[domain_atom].front()]);
    }

    bool operator==(const MeasurableMap &other) const {
        return same_space(domain_, other.domain_) && same_space(codomain_, other.codomain_) &&
               assignment_ == other.assignment_;
    }

  private:
    SpacePtr domain_;
    SpacePtr codomain_;
    std::vector<int> assignment_;
};

inline MeasurableMap make_map(SpacePtr domain, SpacePtr codomain, std::vector<int> assignment) {
    return MeasurableMap(std::move(domain), std::move(codomain), std::move(assignment));
}

inline MeasurableMap identity_map(const SpacePtr &space) {
    std::vector<int> assignment(space->num_points());
    for (int p = 0; p < space->num_points(); ++p)
        assignment[p] = p;
    return MeasurableMap(space, space, std::move(assignment));
}

inline Event preimage(const MeasurableMap &map, const Event &event) {
    if (!same_space(map.codomain(), event.space()))
        throw SpaceMismatch("event does not live on the map codomain");
    std::vector<int> atoms;
    for (int a = 0; a < map.domain()->num_atoms(); ++a)
        if (event.contains_atom(map.atom_target(a)))
            atoms.push_back(a);
    return Event(map.domain(), std::move(atoms));
}

inline MeasurableMap compose(const MeasurableMap &g, const MeasurableMap &f) {
    if (!same_space(f.codomain(), g.domain()))
        throw SpaceMismatch("codomain of inner map differs from domain of outer map");
    std::vector<int> assignment(f.domain()->num_points());
    for (int p = 0; p < f.domain()->num_points(); ++p)
        assignment[p] = g(f(p));
    return MeasurableMap(f.domain(), g.codomain(), std::move(assignment));
}

} // namespace catmeas
