#include <set>

#include "doctest.h"
#include "surfdiag/equivalence.hpp"
#include "surfdiag/fixtures.hpp"
#include "surfdiag/moves.hpp"
#include "surfdiag/reduce.hpp"
#include "surfdiag/rewrite.hpp"

using namespace surfdiag;

namespace {

// A loop crossing curve 0 once and curve 1 twice on PAIR(g); the single face
// of the fixture makes some side assignment embeddable, found by search.
std::pair<SurfaceDiagram, int> embed_mixed_loop(const SurfaceDiagram& d) {
    Dart a_edge = d.curves[0][0];
    Dart c_edge = d.curves[1][0];
    for (int mask = 0; mask < 8; ++mask) {
        OverlayPath p;
        p.closed = true;
        p.steps = {{(mask & 1) ? a_edge : d.map.edge(a_edge), 0},
                   {(mask & 2) ? c_edge : d.map.edge(c_edge), 0},
                   {(mask & 4) ? c_edge : d.map.edge(c_edge), 1}};
        try {
            return embed_overlay(d, p);
        } catch (const OverlayError&) {
            continue;
        }
    }
    FAIL("no embeddable mixed loop found");
    return {d, -1};
}

OverlayPath empty_band(Dart from, Dart to) {
    OverlayPath band;
    band.closed = false;
    band.start_edge = from;
    band.start_position = 0;
    band.start_side = true;
    band.end_edge = to;
    band.end_position = 0;
    band.end_side = true;
    return band;
}

// Finds some inverse handleslide returning to `target`'s class.
bool inverse_slide_recovers(const SurfaceDiagram& slid, int b, int e, const SurfaceDiagram& target) {
    for (Dart x : slid.curves[b]) {
        for (Dart y : slid.curves[e]) {
            for (bool sx : {true, false}) {
                for (bool sy : {true, false}) {
                    int fx = sx ? slid.map.face_at(x) : slid.map.face_at(slid.map.edge(x));
                    int fy = sy ? slid.map.face_at(y) : slid.map.face_at(slid.map.edge(y));
                    if (fx != fy) continue;
                    for (bool plus : {false, true}) {
                        OverlayPath band = empty_band(x, y);
                        band.start_side = sx;
                        band.end_side = sy;
                        try {
                            auto res = handleslide(slid, b, e, band, plus);
                            if (equivalent(res.diagram, target)) return true;
                        } catch (const MoveError&) {
                        } catch (const OverlayError&) {
                        }
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("embed and drop an overlay restores the diagram") {
    auto d = pair_diagram(3);
    // a loop crossing curve 1 twice
    OverlayPath p;
    p.closed = true;
    p.steps = {{d.curves[1][0], 0}, {d.map.edge(d.curves[1][0]), 1}};
    SurfaceDiagram with;
    int id;
    try {
        std::tie(with, id) = embed_overlay(d, p);
    } catch (const OverlayError&) {
        p.steps = {{d.curves[1][0], 0}, {d.curves[1][0], 1}};
        std::tie(with, id) = embed_overlay(d, p);
    }
    CHECK(validate(with, false).ok);
    CHECK(with.genus() == 3);
    auto back = drop_overlay(with, id);
    CHECK(equivalent(back, d));
}

TEST_CASE("zero-step loop floats in a face and drops cleanly") {
    auto d = pair_diagram(3);
    OverlayPath p;
    p.closed = true;
    p.host = 0;
    auto [with, id] = embed_overlay(d, p);
    INFO(describe(validate(with, false)));
    CHECK(validate(with, false).ok);
    CHECK(with.genus() == 3);
    auto back = drop_overlay(with, id);
    CHECK(equivalent(back, d));
}

TEST_CASE("twist along an untouched loop is the identity") {
    auto d = pair_diagram(3);
    auto [with, id] = embed_mixed_loop(d);
    CHECK(dehn_twist(with, {0, 1}, id, 0) == with);
    // no mover: S empty of crossing curves
    OverlayPath p;
    p.closed = true;
    p.host = 0;
    auto [w2, id2] = embed_overlay(d, p);
    auto t = dehn_twist(w2, {0, 1}, id2, 1);
    CHECK(equivalent(drop_overlay(t, id2), d));
}

TEST_CASE("twist crossing counts before reduction") {
    auto d = pair_diagram(3);
    auto [with, id] = embed_mixed_loop(d);
    // the loop meets curve 0 once and curve 1 twice
    auto counts = [&](const SurfaceDiagram& dd) {
        int c0 = 0, c1 = 0;
        const Overlay& ov = dd.overlays.at(id);
        for (Dart w : ov.walk) {
            Dart germ = dd.map.rot(dd.map.edge(w));
            if (dd.labels[germ] == curve_label(0)) ++c0;
            if (dd.labels[germ] == curve_label(1)) ++c1;
        }
        return std::pair{c0, c1};
    };
    auto [c0, c1] = counts(with);
    REQUIRE(c0 == 1);
    REQUIRE(c1 == 2);

    auto t = dehn_twist(with, {0}, id, 1);
    INFO(describe(validate(t, false)));
    CHECK(validate(t, false).ok);
    CHECK(t.genus() == 3);
    CHECK(crossing_count(t, 0, 1) == 3);
    CHECK(reduced_crossing_count(t, 0, 1) == 1);

    // the loop survives and still meets the twisted curve once
    auto [tc0, tc1] = counts(t);
    CHECK(tc0 == 1);
    CHECK(tc1 == 2);

    auto back = dehn_twist(t, {0}, id, -1);
    CHECK(equivalent(drop_overlay(back, id), d));
}

TEST_CASE("twisting every curve preserves raw crossing counts") {
    auto d = chain_diagram(3, 4);
    // loop = one boundary circle of curve 1's ribbon: crosses curves 0 and 2
    auto circles = ribbon_boundaries(d, [&](const Label& l) { return l == curve_label(1); });
    REQUIRE(circles.size() == 2);
    auto [with, id] = embed_overlay(d, circles[0].path);
    std::set<int> all{0, 1, 2, 3};
    auto t = dehn_twist(with, all, id, 1);
    INFO(describe(validate(t, false)));
    CHECK(validate(t, false).ok);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(crossing_count(t, i, j) == crossing_count(d, i, j));
    CHECK(equivalent(drop_overlay(t, id), d));
}

TEST_CASE("handleslide over a disjoint guide") {
    auto d = chain_diagram(3, 6);
    // curves 1 and 4 share the face walked by the u-darts
    Dart from = d.curves[1][0];
    Dart to = d.curves[4][0];
    REQUIRE(d.map.face_at(from) == d.map.face_at(to));
    auto res = handleslide(d, 1, 4, empty_band(from, to), true);
    const auto& out = res.diagram;
    CHECK(validate(out, true).ok);
    CHECK(out.genus() == 3);
    CHECK(out.k == 6);
    CHECK(crossing_count(out, 1, 0) == 1);
    CHECK(crossing_count(out, 1, 2) == 1);
    CHECK(crossing_count(out, 1, 3) == 1);
    CHECK(crossing_count(out, 1, 5) == 1);
    CHECK(crossing_count(out, 1, 4) == 0);
    CHECK_FALSE(equivalent(out, d));
    CHECK(inverse_slide_recovers(out, 1, 4, d));
}

TEST_CASE("handleslide rejects bad guides") {
    auto d = chain_diagram(3, 6);
    CHECK_THROWS_AS(handleslide(d, 1, 2, empty_band(d.curves[1][0], d.curves[2][0]), true), MoveError);
    try {
        handleslide(d, 1, 3, empty_band(d.curves[1][0], d.curves[3][0]), true);
        FAIL("guide 3 meets curve 2, expected GuideNotDisjoint");
    } catch (const MoveError& e) {
        CHECK(e.kind == MoveErrorKind::GuideNotDisjoint);
    }
}

TEST_CASE("stabilize and destabilize round trip") {
    for (auto base : {pair_diagram(3), chain_diagram(3, 4)}) {
        auto res = stabilize(base, base.curves[0][0], 0, 0);
        const auto& up = res.diagram;
        INFO(describe(validate(up, true)));
        CHECK(validate(up, true).ok);
        CHECK(up.genus() == base.genus() + 1);
        CHECK(up.k == base.k + 4);
        GadgetCertificate cert{1, 0};
        auto down = destabilize(up, cert);
        CHECK(down.diagram.genus() == base.genus());
        CHECK(down.diagram.k == base.k);
        CHECK(equivalent(down.diagram, base));
    }
}

TEST_CASE("destabilize rejects a mismatched certificate") {
    auto d = pair_diagram(3);
    CHECK_THROWS_AS(destabilize(d, GadgetCertificate{1, 0}), MoveError);
    auto up = stabilize(chain_diagram(3, 4), chain_diagram(3, 4).curves[0][0], 0, 0).diagram;
    try {
        destabilize(up, GadgetCertificate{2, 0});  // shifted by one curve index
        FAIL("expected CertificateMismatch");
    } catch (const MoveError& e) {
        CHECK(e.kind == MoveErrorKind::CertificateMismatch);
    }
}

TEST_CASE("twisted stabilizations differ") {
    auto base = pair_diagram(3);
    auto s0 = stabilize(base, base.curves[0][0], 0, 0).diagram;
    auto s2 = stabilize(base, base.curves[0][0], 0, 2).diagram;
    INFO(describe(validate(s2, true)));
    CHECK(validate(s2, true).ok);
    CHECK(s2.genus() == 4);
    CHECK(s2.k == 6);
    CHECK_FALSE(equivalent(s0, s2));
}

TEST_CASE("birth raises a blank diagram") {
    auto b3 = birth(blank_diagram(3));
    CHECK(b3.diagram.genus() == 4);
    CHECK(b3.diagram.k == 2);
    CHECK(equivalent(b3.diagram, pair_diagram(4)));
    auto b2 = birth(blank_diagram(2));
    CHECK(validate(b2.diagram, true).ok);
    CHECK_THROWS_AS(birth(pair_diagram(3)), MoveError);
}
