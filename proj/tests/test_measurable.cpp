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

#include "catmeas/generate.hpp"
#include "catmeas/measurable.hpp"

using namespace catmeas;

TEST_CASE("make_space: one-point space has the two trivial events") {
    const SpacePtr space = make_space({"a"}, {{"a"}});
    CHECK(space->num_points() == 1);
    CHECK(space->num_atoms() == 1);
    CHECK(all_events(space).size() == 2);
}

TEST_CASE("make_space: atoms {a},{b,c} generate exactly four events") {
    const SpacePtr space = make_space({"a", "b", "c"}, {{"a"}, {"b", "c"}});
    const auto events = all_events(space);
    CHECK(events.size() == 4);
    // the four events are exactly the unions of atoms, enumerated by mask
    CHECK(events[0].members().empty());
    CHECK(events[1].members() == std::vector<int>{0});
    CHECK(events[2].members() == std::vector<int>{1, 2});
    CHECK(events[3].members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("make_space: validation failures name the offender") {
    CHECK_THROWS_AS(make_space({"a", "b"}, {{"a", "b"}, {"b"}}), OverlappingAtoms);
    CHECK_THROWS_AS(make_space({"a", "b"}, {{"a"}}), UncoveredPoint);
    CHECK_THROWS_AS(make_space({"a"}, {{"a"}, {}}), EmptyAtom);
    CHECK_THROWS_AS(make_space({"a", "a"}, {{"a"}}), Error);
}

TEST_CASE("is_event distinguishes unions of atoms from atom-splitting subsets") {
    const SpacePtr space = make_space({"a", "b", "c"}, {{"a"}, {"b", "c"}});
    CHECK(is_event(space, {1, 2}));
    CHECK_FALSE(is_event(space, {1}));
    CHECK(is_event(space, {}));
    CHECK(is_event(space, {0, 1, 2}));
}

TEST_CASE("make_map: identity is measurable on any space") {
    const SpacePtr space = make_space({"a", "b", "c"}, {{"a"}, {"b", "c"}});
    const MeasurableMap id = identity_map(space);
    for (int p = 0; p < space->num_points(); ++p)
        CHECK(id(p) == p);
}

TEST_CASE("make_map: indicator-style map onto the two-point space") {
    const SpacePtr x = make_space({"x1", "x0"}, {{"x1"}, {"x0"}});
    const SpacePtr z = make_space({"z1", "z0"}, {{"z1"}, {"z0"}});
    const MeasurableMap f = make_map(x, z, {0, 1});
    CHECK(f.atom_target(0) == 0);
    CHECK(f.atom_target(1) == 1);
}

TEST_CASE("make_map: rejects assignments that split a domain atom") {
    const SpacePtr dom = make_space({"a", "b"}, {{"a", "b"}});
    const SpacePtr cod = make_space({"u", "v"}, {{"u"}, {"v"}});
    CHECK_THROWS_AS(make_map(dom, cod, {0, 1}), NotMeasurable);
}

TEST_CASE("preimage: identity, indicator map, and collapse to a point") {
    const SpacePtr x = make_space({"p", "q", "r"}, {{"p"}, {"q"}, {"r"}});
    const MeasurableMap id = identity_map(x);
    const Event e(x, {0, 2});
    CHECK(preimage(id, e) == e);

    // indicator of E = {p, q}: preimage of {z1} recovers E
    const SpacePtr z = make_space({"z1", "z0"}, {{"z1"}, {"z0"}});
    const MeasurableMap f = make_map(x, z, {0, 0, 1});
    CHECK(preimage(f, Event(z, {0})) == Event(x, {0, 1}));

    const SpacePtr pt = make_space({"s"}, {{"s"}});
    const MeasurableMap collapse = make_map(x, pt, {0, 0, 0});
    CHECK(preimage(collapse, full_event(pt)) == full_event(x));
}

TEST_CASE("preimage: rejects events on a foreign space") {
    const SpacePtr x = make_space({"p"}, {{"p"}});
    const SpacePtr y = make_space({"q", "r"}, {{"q"}, {"r"}});
    const MeasurableMap f = make_map(y, x, {0, 0});
    CHECK_THROWS_AS(preimage(f, full_event(y)), SpaceMismatch);
}

TEST_CASE("compose: identity laws and domain checking") {
    const SpacePtr x = make_space({"a", "b"}, {{"a"}, {"b"}});
    const SpacePtr y = make_space({"u"}, {{"u"}});
    const MeasurableMap f = make_map(x, y, {0, 0});
    CHECK(compose(f, identity_map(x)) == f);
    CHECK(compose(identity_map(y), f) == f);
    CHECK_THROWS_AS(compose(f, f), SpaceMismatch);
}

TEST_CASE("compose: associativity pointwise on random 3-map chains") {
    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(2024, trial);
        const MapChain chain = random_chain(rng, 6, 3);
        const MeasurableMap left =
            compose(compose(chain.maps[2], chain.maps[1]), chain.maps[0]);
        const MeasurableMap right =
            compose(chain.maps[2], compose(chain.maps[1], chain.maps[0]));
        CHECK(left == right);
    }
}

TEST_CASE("property: enumerated event sets are closed under complement and union") {
    for (int trial = 0; trial < 25; ++trial) {
        Rng rng(7, trial);
        const SpacePtr space = random_space(rng, 6);
        const auto events = all_events(space);
        auto contains = [&](const Event &e) {
            return std::any_of(events.begin(), events.end(),
                               [&](const Event &f) { return f == e; });
        };
        for (const auto &e : events) {
            CHECK(contains(e.complement()));
            for (const auto &f : events)
                CHECK(contains(e.unite(f)));
        }
    }
}

TEST_CASE("property: preimages of events are events") {
    for (int trial = 0; trial < 25; ++trial) {
        Rng rng(11, trial);
        const MapChain chain = random_chain(rng, 5, 1);
        const MeasurableMap &f = chain.maps[0];
        for (const auto &event : all_events(f.codomain())) {
            const Event pre = preimage(f, event);
            CHECK(is_event(f.domain(), pre.members()));
        }
    }
}

TEST_CASE("property: preimage respects composition") {
    for (int trial = 0; trial < 25; ++trial) {
        Rng rng(13, trial);
        const MapChain chain = random_chain(rng, 5, 2);
        const MeasurableMap &f = chain.maps[0];
        const MeasurableMap &g = chain.maps[1];
        const MeasurableMap gf = compose(g, f);
        for (const auto &event : all_events(g.codomain()))
            CHECK(preimage(gf, event) == preimage(f, preimage(g, event)));
    }
}
