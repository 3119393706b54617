#include "doctest.h"
#include "surfdiag/equivalence.hpp"
#include "surfdiag/fixtures.hpp"
#include "surfdiag/reduce.hpp"

using namespace surfdiag;

namespace {

// Appends g interleaved scaffold handle pairs to a rotation slot list.
void append_handles(std::vector<Dart>& rotation, std::vector<std::pair<Dart, Dart>>& edges,
                    std::vector<Label>& labels, int handles) {
    for (int h = 0; h < handles; ++h) {
        Dart x = static_cast<Dart>(labels.size());
        for (int t = 0; t < 4; ++t) labels.push_back(scaffold_label());
        edges.push_back({x, x + 2});
        edges.push_back({x + 1, x + 3});
        rotation.insert(rotation.end(), {x, x + 1, x + 2, x + 3});
    }
}

// Two curves meeting twice on a genus-g surface: both crossings cancel, so
// reduce_pair must end with disjoint curves.
SurfaceDiagram twice_crossing_pair(int g) {
    // necklace with two beads: crossings x0, x1
    // curve i darts: u,up,v,vp = 4i..4i+3 as in chain_diagram
    std::vector<std::pair<Dart, Dart>> edges{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    std::vector<Label> labels(8);
    for (int i = 0; i < 2; ++i)
        for (int t = 0; t < 4; ++t) labels[4 * i + t] = curve_label(i);
    std::vector<std::vector<Dart>> rotations{{1, 4, 2, 7}, {5, 0, 6, 3}};
    std::vector<std::vector<Dart>> curves{{0, 2}, {4, 6}};
    // park extra genus on an anchor on curve 0's first arc
    SurfaceDiagram base;
    if (g > 0) {
        Dart p = 8, q = 9;
        labels.push_back(curve_label(0));
        labels.push_back(curve_label(0));
        edges[0] = {0, p};
        edges.push_back({q, 1});
        std::vector<Dart> w{p};
        append_handles(w, edges, labels, g);
        w.push_back(q);
        rotations.push_back(w);
        curves[0] = {0, q, 2};
    }
    base.map = build_map(edges, rotations);
    base.labels = labels;
    base.k = 2;
    base.curves = curves;
    return base;
}

// Two curves crossing three times with one cancelling pair; geometric
// intersection number 1. Verified by hand: faces are one octagon and two
// bigons.
SurfaceDiagram thrice_crossing_pair(int extra_genus) {
    // crossings c1, c2, c0; curve a darts p0..p2', curve b darts q0..q2'
    const Dart p0 = 0, p0r = 1, p1 = 2, p1r = 3, p2 = 4, p2r = 5;
    const Dart q0 = 6, q0r = 7, q1 = 8, q1r = 9, q2 = 10, q2r = 11;
    std::vector<std::pair<Dart, Dart>> edges{{p0, p0r}, {p1, p1r}, {p2, p2r},
                                             {q0, q0r}, {q1, q1r}, {q2, q2r}};
    std::vector<std::vector<Dart>> rotations{
        {p1, q1, p0r, q0r},   // c1
        {p2, q1r, p1r, q2},   // c2
        {p0, q0, p2r, q2r},   // c0
    };
    std::vector<Label> labels(12);
    for (Dart d = 0; d < 6; ++d) labels[d] = curve_label(0);
    for (Dart d = 6; d < 12; ++d) labels[d] = curve_label(1);
    std::vector<std::vector<Dart>> curves{{p0, p1, p2}, {q0, q1, q2}};
    if (extra_genus > 0) {
        // anchor on the p0 edge (arc c0 -> c1) holding the handles
        Dart pp = 12, qq = 13;
        labels.push_back(curve_label(0));
        labels.push_back(curve_label(0));
        edges[0] = {p0, pp};
        edges.push_back({qq, p0r});
        std::vector<Dart> w{pp};
        append_handles(w, edges, labels, extra_genus);
        w.push_back(qq);
        rotations.push_back(w);
        curves[0] = {p0, qq, p1, p2};
    }
    SurfaceDiagram d;
    d.map = build_map(edges, rotations);
    d.labels = labels;
    d.k = 2;
    d.curves = curves;
    return d;
}

}  // namespace

TEST_CASE("strict validation accepts the corpus fixtures") {
    for (int g = 3; g <= 4; ++g) {
        auto rep = validate(pair_diagram(g), true);
        INFO(describe(rep));
        CHECK(rep.ok);
    }
    for (int k = 3; k <= 7; ++k) {
        auto rep = validate(chain_diagram(3, k), true);
        INFO("k=", k, " ", describe(rep));
        CHECK(rep.ok);
    }
    // blanks are strict-valid apart from having no curves to check
    auto rep = validate(blank_diagram(3), true);
    CHECK(rep.ok);
}

TEST_CASE("already-minimal pairs are untouched") {
    auto d = pair_diagram(3);
    CHECK_FALSE(find_bigon(d, 0, 1).has_value());
    auto r = reduce_pair(d, 0, 1);
    CHECK(r == d);
    CHECK(reduced_crossing_count(d, 0, 1) == 1);
}

TEST_CASE("cancelling pair reduces to disjoint curves") {
    for (int g : {0, 3}) {
        auto d = twice_crossing_pair(g);
        REQUIRE(validate(d, false).ok);
        CHECK(d.genus() == g);
        CHECK(crossing_count(d, 0, 1) == 2);
        auto r = reduce_pair(d, 0, 1);
        INFO(describe(validate(r, false)));
        CHECK(validate(r, false).ok);
        CHECK(crossing_count(r, 0, 1) == 0);
        CHECK(r.genus() == g);
        CHECK(r.k == 2);
    }
}

TEST_CASE("three crossings with a cancelling pair reduce to one") {
    for (int g : {1, 3}) {
        auto d = thrice_crossing_pair(g - 1);
        REQUIRE(validate(d, false).ok);
        CHECK(d.genus() == g);
        CHECK(crossing_count(d, 0, 1) == 3);
        auto r = reduce_pair(d, 0, 1);
        INFO(describe(validate(r, false)));
        CHECK(validate(r, false).ok);
        CHECK(crossing_count(r, 0, 1) == 1);
        CHECK(r.genus() == g);
        // the reduced diagram is the once-crossing pair
        CHECK(reduced_crossing_count(d, 0, 1) == 1);
        if (g == 3) CHECK(equivalent(r, pair_diagram(3)));
    }
}

TEST_CASE("reduction keeps the equivalence class") {
    auto d = thrice_crossing_pair(2);
    auto r = reduce_pair(d, 0, 1);
    CHECK(normal_code(d) == normal_code(r));
}

TEST_CASE("strict validation flags a broken consecutive pair") {
    // delete curve 2 from a chain: pair (1, 3 -> new 2) becomes consecutive
    // with zero crossings
    auto d = chain_diagram(3, 4);
    auto broken = delete_curve(d, 2);
    CHECK(broken.k == 3);
    auto rep = validate(broken, true);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has_rule("intersection-condition"));
}
