#include "surfdiag/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "surfdiag/routing.hpp"

namespace surfdiag {

namespace {

[[noreturn]] void rerr(RewriteErrorKind k, const std::string& msg) { throw RewriteError(k, msg); }

void check_curve(const SurfaceDiagram& d, int i) {
    if (i < 0 || i >= d.k) rerr(RewriteErrorKind::UnknownCurve, "unknown curve " + std::to_string(i));
}

// ---------------------------------------------------------------------------
// Dehn twist: one unit twist of every S-strand crossing the realized loop.
// Wound paths hug one side of the loop in one travel direction, cross the
// side germ of every other loop crossing in lane order (paths nearer their
// dive run nearer the loop), dive through the loop edge just before their own
// crossing and reattach on the far germ. Crossings with doomed strands of
// other movers dissolve when those strands are retired.
// ---------------------------------------------------------------------------
SurfaceDiagram twist_once(const SurfaceDiagram& d, const std::set<int>& S, int loop_id, int sign) {
    const Overlay& ov = d.overlays.at(loop_id);
    if (!ov.closed) rerr(RewriteErrorKind::BadLoop, "twist loop overlay must be closed");
    const int n = static_cast<int>(ov.walk.size());
    const int dir = sign > 0 ? 1 : -1;
    auto at = [&](int p) { return ((p % n) + n) % n; };

    std::vector<Dart> arrive(n), depart(n);  // loop darts at crossing p
    for (int p = 0; p < n; ++p) {
        arrive[p] = d.map.edge(ov.walk[at(p - 1)]);
        depart[p] = ov.walk[p];
    }
    std::vector<int> mover_curve(n, -1);
    std::vector<int> movers;
    for (int p = 0; p < n; ++p) {
        Dart germ = d.map.rot(arrive[p]);
        const Label& l = d.labels[germ];
        if (l.is_curve() && S.count(l.index)) {
            mover_curve[p] = l.index;
            movers.push_back(p);
        }
    }
    if (movers.empty()) return d;

    Workspace w(d);
    // wound lanes hug the right side of the loop either way; the unit twist
    // and its inverse differ by the travel direction along it
    std::vector<Dart> germ(n), other_germ(n);
    for (int p = 0; p < n; ++p) {
        germ[p] = w.rot(arrive[p]);
        other_germ[p] = w.rot(depart[p]);
    }

    // lane key: zones left until the wound path dives, after crossing germ q
    auto lane = [&](int p, int q) { return at(dir * (p - q) - 1); };

    using TokenPair = std::pair<Dart, Dart>;  // (r toward the vertex, s outward)
    std::map<Dart, Dart> next_seg;
    std::map<std::pair<int, int>, TokenPair> tok;
    std::map<int, TokenPair> stub, reattach, dive;
    for (int q = 0; q < n; ++q) {
        std::vector<int> here;
        for (int p : movers)
            if (p != q) here.push_back(p);
        std::sort(here.begin(), here.end(), [&](int a, int b) { return lane(a, q) < lane(b, q); });
        for (int p : here) tok[{p, q}] = stack_cut(w, next_seg, germ[q]);
        if (mover_curve[q] >= 0) stub[q] = stack_cut(w, next_seg, germ[q]);
    }
    for (int p : movers) {
        reattach[p] = stack_cut(w, next_seg, other_germ[p]);
        Dart loop_edge = dir > 0 ? ov.walk[at(p - 1)] : ov.walk[p];
        dive[p] = w.subdivide(loop_edge);
    }

    // Entry sides are structural; traveling with the loop (dir > 0) the path
    // sweeps out of the germ-face side of each lane cut, traveling against it
    // the sides flip, and the dive always enters from the right of the loop.
    std::map<int, std::vector<Dart>> route;
    for (int p : movers) {
        Router rt(w, curve_label(mover_curve[p]));
        rt.begin(dir > 0 ? stub[p].first : stub[p].second);
        for (int t = 1; t < n; ++t) {
            int q = at(p + dir * t);
            if (dir > 0)
                rt.cross_fixed(tok[{p, q}].second, tok[{p, q}].first);
            else
                rt.cross_fixed(tok[{p, q}].first, tok[{p, q}].second);
        }
        rt.cross_fixed(dive[p].second, dive[p].first);
        rt.end_fixed(dir > 0 ? reattach[p].first : reattach[p].second);
        route[p] = rt.travel;
    }

    // rewire cycles and retire the doomed passages
    for (int p : movers) {
        Dart g = germ[p];
        Dart gO = other_germ[p];
        std::vector<Dart> doomed;
        Dart u = stub[p].first;
        for (;;) {
            doomed.push_back(u);
            doomed.push_back(w.edge(u));
            if (w.edge(u) == g) break;
            u = w.rot(w.rot(w.edge(u)));
        }
        doomed.push_back(gO);
        doomed.push_back(w.edge(gO));
        const std::size_t travel_len = doomed.size() / 2;

        auto& cyc = w.curves()[mover_curve[p]];
        auto it = std::find(cyc.begin(), cyc.end(), stub[p].first);
        bool forward = it != cyc.end();
        if (!forward) {
            it = std::find(cyc.begin(), cyc.end(), reattach[p].first);
            if (it == cyc.end()) throw std::logic_error("twist: passage not on the mover cycle");
        }
        std::rotate(cyc.begin(), it, cyc.end());
        std::vector<Dart> replacement = route[p];
        if (!forward) {
            std::reverse(replacement.begin(), replacement.end());
            for (Dart& x : replacement) x = w.edge(x);
        }
        std::vector<Dart> rebuilt = replacement;
        rebuilt.insert(rebuilt.end(), cyc.begin() + travel_len, cyc.end());
        w.set_curve_cycle(mover_curve[p], std::move(rebuilt));
        w.retire(doomed);
    }
    return w.normalize();
}

}  // namespace

SurfaceDiagram dehn_twist(const SurfaceDiagram& d, const std::set<int>& curves, int loop_overlay,
                          int power) {
    for (int i : curves) check_curve(d, i);
    if (!d.overlays.count(loop_overlay))
        rerr(RewriteErrorKind::BadLoop, "unknown loop overlay " + std::to_string(loop_overlay));
    SurfaceDiagram cur = d;
    for (int t = 0; t < std::abs(power); ++t) cur = twist_once(cur, curves, loop_overlay, power);
    return cur;
}

SurfaceDiagram dehn_twist(const SurfaceDiagram& d, const std::set<int>& curves,
                          const OverlayPath& loop, int power) {
    if (!loop.closed) rerr(RewriteErrorKind::BadLoop, "twist loop must be closed");
    auto [with_loop, id] = embed_overlay(d, loop);
    SurfaceDiagram twisted = dehn_twist(with_loop, curves, id, power);
    return drop_overlay(twisted, id);
}

// ---------------------------------------------------------------------------
// Band sum: b' is the long boundary circle of a regular neighborhood of
// b, the band and e, so b, b' and e bound an embedded pair of pants by
// construction. Flipping `plus` re-attaches the band on the other side of b,
// which toggles the relative orientation of the sum.
// ---------------------------------------------------------------------------
SurfaceDiagram band_sum(const SurfaceDiagram& d, int b, int e, const OverlayPath& band, bool plus) {
    check_curve(d, b);
    check_curve(d, e);
    if (b == e) rerr(RewriteErrorKind::BandEndpointOnWrongCurve, "band sum needs two distinct curves");
    if (band.closed) rerr(RewriteErrorKind::BandEndpointOnWrongCurve, "the band is an arc, not a loop");
    auto lbl = [&](Dart x) { return d.labels[x]; };
    if (band.start_edge < 0 || band.start_edge >= d.dart_count() ||
        !(lbl(band.start_edge) == curve_label(b)))
        rerr(RewriteErrorKind::BandEndpointOnWrongCurve, "band must start on curve " + std::to_string(b));
    if (band.end_edge < 0 || band.end_edge >= d.dart_count() || !(lbl(band.end_edge) == curve_label(e)))
        rerr(RewriteErrorKind::BandEndpointOnWrongCurve, "band must end on curve " + std::to_string(e));
    for (const auto& st : band.steps) {
        if (st.through < 0 || st.through >= d.dart_count())
            rerr(RewriteErrorKind::BandCrossesOperand, "band step out of range");
        const Label& l = d.labels[st.through];
        if (l.is_curve() && (l.index == b || l.index == e))
            rerr(RewriteErrorKind::BandCrossesOperand, "band interior crosses an operand curve");
    }
    if (crossing_count(d, b, e) != 0)
        rerr(RewriteErrorKind::GuideNotDisjoint,
             "curves " + std::to_string(b) + " and " + std::to_string(e) +
                 " intersect in this representative");

    OverlayPath arc = band;
    arc.closed = false;
    if (!plus) arc.start_side = !arc.start_side;
    auto [d1, band_id] = embed_overlay(d, arc);

    auto circles = ribbon_boundaries(d1, [&](const Label& l) {
        return (l.is_curve() && (l.index == b || l.index == e)) ||
               (l.is_overlay() && l.index == band_id);
    });
    const RibbonCircle* big = nullptr;
    for (const auto& c : circles) {
        bool has_b = false, has_e = false;
        for (Dart x : c.hugged) {
            const Label& l = d1.labels[x];
            if (l == curve_label(b)) has_b = true;
            if (l == curve_label(e)) has_e = true;
        }
        if (has_b && has_e) {
            if (big) throw std::logic_error("band_sum: ambiguous pants boundary");
            big = &c;
        }
    }
    if (!big) throw std::logic_error("band_sum: pants boundary not found");

    // realize the long boundary circle and make it the new curve b
    auto [d2, route_id] = embed_overlay(d1, big->path);
    Workspace w(d2);
    std::vector<Dart> new_cycle = w.overlays().at(route_id).walk;
    w.overlays().erase(route_id);
    for (Dart x : new_cycle) {
        w.set_label(x, curve_label(b));
        w.set_label(w.edge(x), curve_label(b));
    }
    std::vector<Dart> doomed;
    for (Dart x = 0; x < d2.dart_count(); ++x) {
        const Label& l = d2.labels[x];
        if (l == curve_label(b) || (l.is_overlay() && l.index == band_id)) doomed.push_back(x);
    }
    w.overlays().erase(band_id);
    w.set_curve_cycle(b, std::move(new_cycle));
    w.retire(doomed);
    return w.normalize();
}

// ---------------------------------------------------------------------------
// Ribbon boundaries: hugging walks along the right of the selected strands.
// At each head vertex the walk crosses every transverse germ until the next
// selected dart, then hugs that one; the orbits of this rule are exactly the
// boundary circles of a regular neighborhood of the selected sub-complex.
// ---------------------------------------------------------------------------
std::vector<RibbonCircle> ribbon_boundaries(const SurfaceDiagram& d,
                                            const std::function<bool(const Label&)>& in_set) {
    std::vector<RibbonCircle> out;
    std::set<Dart> pending;
    for (Dart x = 0; x < d.dart_count(); ++x)
        if (in_set(d.labels[x])) pending.insert(x);
    std::map<Dart, int> edge_hits;  // position counter per canonical edge end
    while (!pending.empty()) {
        Dart start = *pending.begin();
        RibbonCircle circle;
        circle.path.closed = true;
        Dart cur = start;
        int guard = 0;
        do {
            if (++guard > 8 * d.dart_count())
                throw std::logic_error("ribbon boundary walk did not close");
            circle.hugged.push_back(cur);
            pending.erase(cur);
            Dart r = d.map.edge(cur);
            Dart x = d.map.rot(r);
            while (!in_set(d.labels[x])) {
                OverlayStep st;
                st.through = x;
                Dart canon = std::min(x, d.map.edge(x));
                // crossings stack outward from each end of the germ edge
                st.position =
                    (x == canon) ? -(++edge_hits[canon]) : (1 << 10) + (++edge_hits[canon]);
                circle.path.steps.push_back(st);
                x = d.map.rot(x);
            }
            cur = x;
        } while (cur != start);
        out.push_back(std::move(circle));
    }
    return out;
}

OverlayPath neighborhood_boundary(const SurfaceDiagram& d, int i, int j) {
    check_curve(d, i);
    check_curve(d, j);
    if (crossing_count(d, i, j) != 1)
        rerr(RewriteErrorKind::BadLoop, "neighborhood boundary needs a once-crossing pair");
    auto circles = ribbon_boundaries(d, [&](const Label& l) {
        return l.is_curve() && (l.index == i || l.index == j);
    });
    if (circles.size() != 1)
        rerr(RewriteErrorKind::BadLoop,
             "once-crossing pair neighborhood should have one boundary circle");
    return circles.front().path;
}

// ---------------------------------------------------------------------------
// Torus gadget
// ---------------------------------------------------------------------------
std::pair<SurfaceDiagram, GadgetCertificate> splice_gadget(const SurfaceDiagram& d, Dart site,
                                                           int site_position, const TorusGadget& g) {
    (void)site_position;
    if (site < 0 || site >= d.dart_count() || !d.labels[site].is_curve())
        rerr(RewriteErrorKind::BadSite, "gadget site must sit on a curve edge");
    const int c = d.labels[site].index;

    Workspace w(d);
    Dart site_dart = site;
    if (std::find(d.curves[c].begin(), d.curves[c].end(), site_dart) == d.curves[c].end())
        site_dart = d.map.edge(site);

    // travel order along the site edge: site_dart -> P_B -> Q -> P_A -> ...
    auto [rq, sq] = w.subdivide(site_dart);  // Q: replaced by the gadget
    auto [ra, sa] = w.subdivide(sq);         // P_A, after Q
    auto [rb, sb] = w.subdivide(site_dart);  // P_B, before Q
    (void)ra;
    (void)rb;

    // guide for the new parallel curve: the rest of c's cycle from P_A back
    // around to the site edge
    std::vector<Dart> guide;
    {
        const auto& cyc = w.curves()[c];
        auto itc = std::find(cyc.begin(), cyc.end(), sa);
        if (itc == cyc.end()) throw std::logic_error("splice: site cuts missing from the cycle");
        std::size_t pos = static_cast<std::size_t>(itc - cyc.begin());
        for (std::size_t t = 0; t < cyc.size(); ++t) guide.push_back(cyc[(pos + t) % cyc.size()]);
        if (guide.size() < 3 || guide[guide.size() - 1] != sq || guide[guide.size() - 2] != sb)
            throw std::logic_error("splice: unexpected cycle layout at the site");
        guide.pop_back();
        guide.pop_back();
    }

    // route the parallel copy on the right of travel, P_A around to P_B
    Router rt(w, curve_label(c));
    rt.begin(sa);  // face(sa): the right side of travel at P_A
    for (std::size_t t = 0; t + 1 < guide.size(); ++t) {
        Dart r = w.edge(guide[t]);
        Dart dep = guide[t + 1];
        for (Dart gm : side_germs(w, r, dep, true)) {
            auto [entry, exit] = germ_cut(w, gm, true);
            rt.cross_fixed(entry, exit);
        }
    }
    rt.end_fixed(sb);  // face(sb): the right side of travel at P_B

    // raw template: rotations counterclockwise (east, north, west, south);
    // the through-curve runs east through A2 then A1, the copy through B2
    // then B1, the middles m1/m2 south-north, the top curve east along C.
    w.raw_begin();
    auto nd = [&]() { return w.raw_new_dart(curve_label(c)); };
    Dart A1e = nd(), A1n = nd(), A1w = nd(), A1s = nd();
    Dart A2e = nd(), A2n = nd(), A2w = nd(), A2s = nd();
    Dart C1e = nd(), C1n = nd(), C1w = nd(), C1s = nd();
    Dart C2e = nd(), C2n = nd(), C2w = nd(), C2s = nd();
    Dart B1n = nd(), B1w = nd(), B1s = nd();
    Dart B2e = nd(), B2n = nd(), B2s = nd();
    w.raw_set_edge(A1w, A2e);
    w.raw_set_edge(A1n, C1s);
    w.raw_set_edge(C1n, B1s);
    w.raw_set_edge(B1n, A1s);
    w.raw_set_edge(A2n, C2s);
    w.raw_set_edge(C2n, B2s);
    w.raw_set_edge(B2n, A2s);
    w.raw_set_edge(C1e, C2w);
    w.raw_set_edge(C2e, C1w);
    w.raw_set_edge(B1w, B2e);

    // the copy's end chords become the missing B-row east/west darts
    Dart x_first = rt.travel.front();
    Dart x_last = w.edge(rt.travel.back());
    w.raw_detach_from_vertex(x_first);
    w.raw_detach_from_vertex(x_last);

    w.raw_set_rotation_cycle({A1e, A1n, A1w, A1s});
    w.raw_set_rotation_cycle({A2e, A2n, A2w, A2s});
    w.raw_set_rotation_cycle({C1e, C1n, C1w, C1s});
    w.raw_set_rotation_cycle({C2e, C2n, C2w, C2s});
    w.raw_set_rotation_cycle({x_first, B1n, B1w, B1s});
    w.raw_set_rotation_cycle({B2e, B2n, x_last, B2s});

    // fuse the through-curve into the A row, dropping the Q vertex
    w.raw_set_edge(sb, A2w);
    w.raw_set_edge(ra, A1e);
    w.raw_kill(rq);
    w.raw_kill(sq);
    w.raw_commit(-2);

    // cycles: the through-curve passes A2 then A1; the copy closes via B2, B1
    {
        auto cyc = w.curves()[c];  // sq already dropped by raw_kill
        auto itc = std::find(cyc.begin(), cyc.end(), sb);
        if (itc == cyc.end()) throw std::logic_error("splice: P_B segment missing from the cycle");
        std::size_t pos = static_cast<std::size_t>(itc - cyc.begin());
        std::vector<Dart> rebuilt(cyc.begin(), cyc.begin() + pos + 1);
        rebuilt.push_back(A2e);
        rebuilt.push_back(A1e);
        rebuilt.insert(rebuilt.end(), cyc.begin() + pos + 1, cyc.end());
        w.set_curve_cycle(c, rebuilt);
    }
    std::vector<Dart> cp_cycle = rt.travel;
    cp_cycle.push_back(B2e);
    w.insert_curve(c + 1, {A1n, C1n, B1n});
    w.insert_curve(c + 2, {C1e, C2e});
    w.insert_curve(c + 3, {A2n, C2n, B2n});
    w.insert_curve(c + 4, cp_cycle);

    GadgetCertificate cert;
    cert.first_new = c + 1;
    cert.twists = g.twists;
    SurfaceDiagram out = w.normalize();

    if (g.twists != 0) {
        // Twist one middle curve about a loop parallel to the top curve.
        // Twisting both by the same power is a homeomorphism of the whole
        // surface, so only the relative twist of the middles survives.
        const auto& tcyc = out.curves[c + 2];
        OverlayPath loop;
        loop.closed = true;
        for (Dart td : tcyc) {
            OverlayStep st;
            st.through = out.map.rot(out.map.edge(td));  // right-side germ
            st.position = 0;
            loop.steps.push_back(st);
        }
        out = dehn_twist(out, std::set<int>{c + 3}, loop, g.twists);
    }
    return {out, cert};
}

SurfaceDiagram excise_gadget(const SurfaceDiagram& d, const GadgetCertificate& cert) {
    const int f = cert.first_new;
    if (f - 1 < 0 || f + 3 >= d.k)
        rerr(RewriteErrorKind::CertificateMismatch, "certificate indices out of range");
    const int c = f - 1, m1 = f, t = f + 1, m2 = f + 2, cpar = f + 3;
    auto cnt = [&](int a, int b) { return crossing_count(d, a, b); };
    if (cnt(c, m1) != 1 || cnt(m1, t) != 1 || cnt(t, m2) != 1 || cnt(m2, cpar) != 1)
        rerr(RewriteErrorKind::CertificateMismatch, "gadget chain pattern missing");
    if (cnt(c, t) != 0 || cnt(cpar, t) != 0)
        rerr(RewriteErrorKind::CertificateMismatch, "top curve touches the through curves");
    for (int other = 0; other < d.k; ++other) {
        if (other == c || other == m1 || other == t || other == m2 || other == cpar) continue;
        if (cnt(other, m1) || cnt(other, t) || cnt(other, m2))
            rerr(RewriteErrorKind::CertificateMismatch, "gadget interior curves are not local");
        if (cnt(other, cpar) != cnt(other, c))
            rerr(RewriteErrorKind::CertificateMismatch, "bottom curves are not parallel");
    }

    Workspace w(d);
    std::vector<Dart> doomed;
    for (Dart x = 0; x < d.dart_count(); ++x) {
        const Label& l = d.labels[x];
        if (l.is_curve() && (l.index == m1 || l.index == t || l.index == m2 || l.index == cpar))
            doomed.push_back(x);
    }
    w.retire(doomed);
    w.erase_curve(cpar);
    w.erase_curve(m2);
    w.erase_curve(t);
    w.erase_curve(m1);
    try {
        return w.excise_handle_and_normalize();
    } catch (const std::logic_error& ex) {
        rerr(RewriteErrorKind::CertificateMismatch, ex.what());
    }
}

}  // namespace surfdiag
