#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "surfdiag/canonical_code.hpp"
#include "surfdiag/combinatorial_map.hpp"
#include "surfdiag/diagram.hpp"
#include "surfdiag/equivalence.hpp"
#include "surfdiag/fixtures.hpp"

using namespace surfdiag;

namespace {

CombinatorialMap sphere_map() {
    return build_map({{0, 1}}, {{0}, {1}});
}

CombinatorialMap theta_map() {
    // two vertices, three parallel edges
    return build_map({{0, 1}, {2, 3}, {4, 5}}, {{0, 2, 4}, {1, 5, 3}});
}

CombinatorialMap torus_map() {
    // one vertex, rotation (a, b, a~, b~)
    return build_map({{0, 2}, {1, 3}}, {{0, 1, 2, 3}});
}

CombinatorialMap genus_polygon(int g) {
    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<Dart> ring;
    for (int h = 0; h < g; ++h) {
        edges.push_back({4 * h, 4 * h + 2});
        edges.push_back({4 * h + 1, 4 * h + 3});
        for (int t = 0; t < 4; ++t) ring.push_back(4 * h + t);
    }
    return build_map(edges, {ring});
}

std::vector<Dart> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Dart> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

}  // namespace

TEST_CASE("single-edge sphere map") {
    auto m = sphere_map();
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 1);
    CHECK(m.face_count() == 1);
    CHECK(euler_characteristic(m) == 2);
    CHECK(m.genus() == 0);
}

TEST_CASE("theta graph on the sphere") {
    auto m = theta_map();
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 3);
    CHECK(m.face_count() == 3);
    CHECK(euler_characteristic(m) == 2);
}

TEST_CASE("one-vertex torus map") {
    auto m = torus_map();
    CHECK(m.vertex_count() == 1);
    CHECK(m.edge_count() == 2);
    CHECK(m.face_count() == 1);
    CHECK(euler_characteristic(m) == 0);
    CHECK(m.genus() == 1);
    CHECK(m.face_walk(0).size() == 4);
}

TEST_CASE("standard genus-3 polygon map") {
    auto m = genus_polygon(3);
    CHECK(euler_characteristic(m) == -4);
    CHECK(m.genus() == 3);
}

TEST_CASE("build_map rejects bad input") {
    CHECK_THROWS_AS(build_map({{0, 0}}, {{0}}), MapError);
    CHECK_THROWS_AS(build_map({{0, 1}, {1, 2}}, {{0}, {1}, {2}}), MapError);
    // two disjoint spheres
    try {
        build_map({{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}});
        FAIL("expected Disconnected");
    } catch (const MapError& e) {
        CHECK(e.kind == MapErrorKind::Disconnected);
        CHECK(e.darts.size() == 2);
    }
}

TEST_CASE("face walks partition the darts") {
    for (auto m : {sphere_map(), theta_map(), torus_map(), genus_polygon(2)}) {
        std::vector<char> seen(m.dart_count(), 0);
        int total = 0;
        for (Dart d = 0; d < m.dart_count(); ++d) {
            if (seen[d]) continue;
            for (Dart x : m.face_walk(d)) {
                CHECK(!seen[x]);
                seen[x] = 1;
                ++total;
            }
        }
        CHECK(total == m.dart_count());
    }
}

TEST_CASE("canonical code is relabeling-invariant") {
    std::mt19937_64 rng(20240817);
    for (auto m : {theta_map(), torus_map(), genus_polygon(2)}) {
        auto base = canonical_code(m);
        for (int trial = 0; trial < 100; ++trial) {
            auto pi = random_permutation(m.dart_count(), rng);
            CHECK(canonical_code(m.relabeled(pi)) == base);
        }
    }
}

TEST_CASE("canonical code distinguishes maps") {
    CHECK(canonical_code(torus_map()) != canonical_code(theta_map()));
    // genus-2 one-vertex map vs a two-vertex refinement of it: codes differ
    auto one_vertex = genus_polygon(2);
    // refine: subdivide edge {0,2} into {0,8},{9,2} with a new 2-valent vertex
    auto refined = build_map({{0, 8}, {9, 2}, {1, 3}, {4, 6}, {5, 7}},
                             {{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9}});
    CHECK(refined.genus() == 2);
    CHECK(canonical_code(one_vertex) != canonical_code(refined));
}

TEST_CASE("colors enter the code") {
    auto m = torus_map();
    CodeColors a, b;
    a.dart_color = {0, 1, 0, 1};
    b.dart_color = {1, 0, 1, 0};
    CHECK(canonical_code(m, a) == canonical_code(m, b));  // isomorphic coloring
    CodeColors c;
    c.dart_color = {0, 0, 0, 1};
    CHECK(canonical_code(m, a) != canonical_code(m, c));
}

TEST_CASE("fixtures validate structurally") {
    for (int g = 3; g <= 5; ++g) {
        auto d = blank_diagram(g);
        CHECK(d.genus() == g);
        auto rep = validate(d, false);
        CHECK(rep.ok);
    }
    for (int g = 3; g <= 4; ++g) {
        auto d = pair_diagram(g);
        CHECK(d.genus() == g);
        CHECK(d.k == 2);
        auto rep = validate(d, false);
        INFO(describe(rep));
        CHECK(rep.ok);
        CHECK(crossing_count(d, 0, 1) == 1);
    }
    for (int k = 3; k <= 7; ++k) {
        auto d = chain_diagram(3, k);
        CHECK(d.genus() == 3);
        CHECK(d.k == k);
        auto rep = validate(d, false);
        INFO("k=", k, " ", describe(rep));
        CHECK(rep.ok);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int expect = (j - i == 1 || (i == 0 && j == k - 1)) ? 1 : 0;
                CHECK(crossing_count(d, i, j) == expect);
            }
    }
}

TEST_CASE("pair fixture normal code is stable under relabeling and rotation") {
    auto d = pair_diagram(3);
    auto base = normal_code(d);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto pi = random_permutation(d.dart_count(), rng);
        CHECK(normal_code(relabel_darts(d, pi)) == base);
    }
    CHECK(normal_code(rotate_indices(d, 1)) == base);
    CHECK(equivalent(d, rotate_indices(d, 1)));
    CHECK_FALSE(equivalent(d, pair_diagram(4)));
    CHECK_FALSE(equivalent(d, blank_diagram(3)));
}
