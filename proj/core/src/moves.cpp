#include "surfdiag/moves.hpp"

#include <algorithm>
#include <sstream>

#include "surfdiag/fixtures.hpp"
#include "surfdiag/reduce.hpp"

namespace surfdiag {

namespace {

[[noreturn]] void merr(MoveErrorKind k, const std::string& msg, int entry = -1) {
    throw MoveError(k, msg, entry);
}

void check_index(const SurfaceDiagram& d, int i) {
    if (i < 0 || i >= d.k) merr(MoveErrorKind::UnknownIndex, "unknown curve index " + std::to_string(i));
}

MoveRecord make_record(const std::string& name, const std::string& params,
                       const SurfaceDiagram& pre, const SurfaceDiagram& post) {
    MoveRecord r;
    r.name = name;
    r.params = params;
    r.pre_genus = pre.genus();
    r.pre_k = pre.k;
    r.post_genus = post.genus();
    r.post_k = post.k;
    return r;
}

void check_ledger(const MoveRecord& r, int dg, int dk) {
    if (r.post_genus - r.pre_genus != dg || r.post_k - r.pre_k != dk)
        throw std::logic_error("move " + r.name + " broke its (genus, k) ledger");
}

void check_strict(const SurfaceDiagram& d, const std::string& who) {
    auto rep = validate(d, true);
    if (!rep.ok) throw std::logic_error(who + " produced a non-strict diagram: " + describe(rep));
}

bool cyclically_adjacent(int k, int i, int j) {
    return (i + 1) % k == j || (j + 1) % k == i;
}

}  // namespace

std::vector<int> partition_indices(int k, int i, int j, PartitionSide side) {
    std::vector<int> out;
    if (side == PartitionSide::Inner) {
        for (int t = (i + 1) % k; t != j; t = (t + 1) % k) out.push_back(t);
    } else {
        for (int t = (j + 1) % k; t != i; t = (t + 1) % k) out.push_back(t);
    }
    return out;
}

MoveResult stabilize(const SurfaceDiagram& d, Dart site, int site_position, int twists) {
    auto pre = validate(d, true);
    if (!pre.ok) merr(MoveErrorKind::InvalidSite, "stabilize requires a strict-valid diagram");
    if (site < 0 || site >= d.dart_count() || !d.labels[site].is_curve())
        merr(MoveErrorKind::InvalidSite, "stabilization site must lie on a curve edge");
    TorusGadget g;
    g.twists = twists;
    auto [out, cert] = splice_gadget(d, site, site_position, g);
    std::ostringstream params;
    params << "c=" << d.labels[site].index << " at=edge:" << site << "@" << site_position
           << " twists=" << twists;
    MoveResult res{out, make_record("stabilize", params.str(), d, out)};
    check_ledger(res.record, +1, +4);
    check_strict(out, "stabilize");
    (void)cert;
    return res;
}

MoveResult destabilize(const SurfaceDiagram& d, const GadgetCertificate& cert, bool enforce_gate) {
    SurfaceDiagram out;
    try {
        out = excise_gadget(d, cert);
    } catch (const RewriteError& e) {
        merr(MoveErrorKind::CertificateMismatch, e.what());
    }
    if (enforce_gate && out.genus() < 3)
        merr(MoveErrorKind::WouldViolateGenusGate,
             "destabilization would leave genus " + std::to_string(out.genus()));
    std::ostringstream params;
    params << "cert=(" << cert.first_new << ";" << cert.twists << ")";
    MoveResult res{out, make_record("destabilize", params.str(), d, out)};
    check_ledger(res.record, -1, -4);
    if (enforce_gate) check_strict(out, "destabilize");
    return res;
}

MoveResult birth(const SurfaceDiagram& d) {
    if (d.k != 0) merr(MoveErrorKind::NotBlank, "birth applies to blank diagrams only");
    // Any two once-crossing curves on the stabilized surface give the same
    // diagram up to orientation-preserving diffeomorphism, so the canonical
    // once-crossing pair serves as the result.
    SurfaceDiagram out = pair_diagram(d.genus() + 1);
    MoveResult res{out, make_record("birth", "", d, out)};
    check_ledger(res.record, +1, +2);
    return res;
}

MoveResult handleslide(const SurfaceDiagram& d, int b, int e, const OverlayPath& band, bool plus) {
    check_index(d, b);
    check_index(d, e);
    const int k = d.k;
    const int a = ((b - 1) % k + k) % k;
    const int c = (b + 1) % k;
    if (e == a || e == b || e == c)
        merr(MoveErrorKind::GuideIsNeighbor,
             "guide " + std::to_string(e) + " is b or a cyclic neighbor of b");
    // pair-reduce the guide against b and both neighbors, then demand
    // disjointness
    SurfaceDiagram cur = d;
    for (int other : {a, b, c}) {
        if (other == e) continue;
        cur = reduce_pair(cur, e, other);
    }
    for (int other : {a, b, c}) {
        if (crossing_count(cur, e, other) != 0)
            merr(MoveErrorKind::GuideNotDisjoint,
                 "guide " + std::to_string(e) + " meets curve " + std::to_string(other) +
                     " after reduction");
    }
    for (const auto& st : band.steps) {
        if (st.through < 0 || st.through >= cur.dart_count())
            merr(MoveErrorKind::BandCrossesNeighbor, "band step out of range");
        const Label& l = cur.labels[st.through];
        if (l.is_curve() && (l.index == a || l.index == c))
            merr(MoveErrorKind::BandCrossesNeighbor, "band crosses a cyclic neighbor of b");
    }
    SurfaceDiagram out;
    try {
        out = band_sum(cur, b, e, band, plus);
    } catch (const RewriteError& ex) {
        switch (ex.kind) {
            case RewriteErrorKind::GuideNotDisjoint:
                merr(MoveErrorKind::GuideNotDisjoint, ex.what());
            default:
                throw;
        }
    }
    std::ostringstream params;
    params << "b=" << b << " e=" << e << " band=" << to_text(band) << " orient="
           << (plus ? "+" : "-");
    MoveResult res{out, make_record("handleslide", params.str(), d, out)};
    check_ledger(res.record, 0, 0);
    check_strict(out, "handleslide");
    return res;
}

MoveResult multislide(const SurfaceDiagram& d, int i, int j, PartitionSide side,
                      const OverlayPath& delta, const OverlayPath& tau, int framing) {
    check_index(d, i);
    check_index(d, j);
    if (i == j || cyclically_adjacent(d.k, i, j))
        merr(MoveErrorKind::PairConsecutive, "multislide needs a nonconsecutive pair");
    SurfaceDiagram base = reduce_pair(d, i, j);
    if (crossing_count(base, i, j) != 1)
        merr(MoveErrorKind::PairNotOnce, "pair meets " +
                                             std::to_string(crossing_count(base, i, j)) +
                                             " times after reduction, expected 1");
    // the loop must avoid the pair and the faces at their crossing
    std::set<int> banned_faces;
    for (Dart x = 0; x < base.dart_count(); ++x) {
        auto darts = base.map.vertex_darts(x);
        if (darts.size() != 4) continue;
        bool hi = false, hj = false, other = false;
        for (Dart y : darts) {
            const Label& l = base.labels[y];
            if (l.is_curve() && l.index == i) hi = true;
            else if (l.is_curve() && l.index == j) hj = true;
            else other = true;
        }
        if (hi && hj && !other)
            for (Dart y : darts) banned_faces.insert(base.map.face_at(y));
    }
    if (!delta.closed) merr(MoveErrorKind::LoopTouchesPair, "delta must be a loop");
    for (const auto& st : delta.steps) {
        if (st.through < 0 || st.through >= base.dart_count())
            merr(MoveErrorKind::LoopTouchesPair, "delta step out of range");
        const Label& l = base.labels[st.through];
        if (l.is_curve() && (l.index == i || l.index == j))
            merr(MoveErrorKind::LoopTouchesPair, "delta crosses the chosen pair");
        if (banned_faces.count(base.map.face_at(st.through)) ||
            banned_faces.count(base.map.face_at(base.map.edge(st.through))))
            merr(MoveErrorKind::LoopTouchesPair, "delta enters a face at the pair's crossing");
    }

    // realize the three construction loops
    auto [d_T, idT] = embed_overlay(base, neighborhood_boundary(base, i, j));
    auto [d_D, idD] = embed_overlay(d_T, delta);

    // anchor tau from the delta strand to the neighborhood boundary strand
    OverlayPath tau_arc = tau;
    tau_arc.closed = false;
    {
        auto strand_dart_on_face = [&](const SurfaceDiagram& dd, int overlay_id, int face) -> Dart {
            Dart best = kNoDart;
            for (Dart x = 0; x < dd.dart_count(); ++x) {
                if (!dd.labels[x].is_overlay() || dd.labels[x].index != overlay_id) continue;
                if (dd.map.face_at(x) == face || dd.map.face_at(dd.map.edge(x)) == face)
                    if (best == kNoDart || x < best) best = x;
            }
            return best;
        };
        int start_face, end_face;
        if (tau_arc.steps.empty()) {
            // delta and the boundary must share a face; pick the smallest
            Dart found_d = kNoDart, found_t = kNoDart;
            for (int f = 0; f < d_D.map.face_count() && found_d == kNoDart; ++f) {
                Dart a = strand_dart_on_face(d_D, idD, f);
                Dart b = strand_dart_on_face(d_D, idT, f);
                if (a != kNoDart && b != kNoDart) {
                    found_d = a;
                    found_t = b;
                }
            }
            if (found_d == kNoDart)
                merr(MoveErrorKind::LoopTouchesPair, "tau is empty but delta and the pair neighborhood share no face");
            tau_arc.start_edge = found_d;
            tau_arc.end_edge = found_t;
        } else {
            start_face = d_D.map.face_at(tau_arc.steps.front().through);
            end_face = d_D.map.face_at(d_D.map.edge(tau_arc.steps.back().through));
            Dart a = strand_dart_on_face(d_D, idD, start_face);
            Dart b = strand_dart_on_face(d_D, idT, end_face);
            if (a == kNoDart || b == kNoDart)
                merr(MoveErrorKind::LoopTouchesPair, "tau does not run from delta to the pair neighborhood");
            tau_arc.start_edge = a;
            tau_arc.end_edge = b;
        }
        tau_arc.start_position = 1 << 20;
        tau_arc.end_position = 1 << 20;
        tau_arc.start_side = true;
        tau_arc.end_side = true;
    }
    auto [d_Tau, idTau] = embed_overlay(d_D, tau_arc);

    // boundary circles of the dumbbell delta-tau-boundary
    auto circles = ribbon_boundaries(d_Tau, [&](const Label& l) {
        return l.is_overlay() && (l.index == idT || l.index == idD || l.index == idTau);
    });
    const OverlayPath* delta1 = nullptr;
    const OverlayPath* delta2 = nullptr;
    for (const auto& c : circles) {
        bool only_T = true, only_D = true;
        for (Dart x : c.hugged) {
            int id = d_Tau.labels[x].index;
            if (id != idT) only_T = false;
            if (id != idD) only_D = false;
        }
        if (only_T)
            delta2 = &c.path;
        else if (!only_D)
            delta1 = &c.path;
    }
    if (!delta1 || !delta2 || circles.size() != 3)
        merr(MoveErrorKind::LoopTouchesPair, "could not split the push neighborhood into its three boundary circles");

    auto [d_1, id1] = embed_overlay(d_Tau, *delta1);
    auto [d_2, id2] = embed_overlay(d_1, *delta2);

    std::set<int> movers;
    for (int t : partition_indices(d.k, i, j, side)) movers.insert(t);

    SurfaceDiagram cur = d_2;
    cur = dehn_twist(cur, movers, id1, +1);
    cur = dehn_twist(cur, movers, id2, -1);
    if (framing != 0) cur = dehn_twist(cur, movers, idT, framing);
    for (int id : {id1, id2, idTau, idD, idT}) cur = drop_overlay(cur, id);

    std::ostringstream params;
    params << "i=" << i << " j=" << j << " side=" << (side == PartitionSide::Inner ? "inner" : "outer")
           << " loop=" << to_text(delta) << " tau=" << to_text(tau) << " m=" << framing;
    MoveResult res{cur, make_record("multislide", params.str(), d, cur)};
    check_ledger(res.record, 0, 0);
    check_strict(cur, "multislide");
    return res;
}

MoveResult shift(const SurfaceDiagram& d, int i, int j, PartitionSide side,
                 const HandleslideScript& script) {
    check_index(d, i);
    check_index(d, j);
    if (i == j) merr(MoveErrorKind::PairNotOnce, "shift needs two distinct curves");
    SurfaceDiagram base = reduce_pair(d, i, j);
    if (crossing_count(base, i, j) != 1)
        merr(MoveErrorKind::PairNotOnce, "pair meets " +
                                             std::to_string(crossing_count(base, i, j)) +
                                             " times after reduction, expected 1");
    auto part = partition_indices(d.k, i, j, side);
    SurfaceDiagram cur = base;
    for (std::size_t t = 0; t < script.size(); ++t) {
        const SlideInstruction& ins = script[t];
        if (std::find(part.begin(), part.end(), ins.b) == part.end())
            merr(MoveErrorKind::ScriptEntry,
                 "entry " + std::to_string(t) + ": curve " + std::to_string(ins.b) +
                     " is outside the chosen partition",
                 static_cast<int>(t));
        try {
            cur = handleslide(cur, ins.b, ins.e, ins.band, ins.plus).diagram;
        } catch (const MoveError& ex) {
            merr(ex.kind, "entry " + std::to_string(t) + ": " + ex.what(), static_cast<int>(t));
        }
    }
    std::ostringstream params;
    params << "i=" << i << " j=" << j << " side=" << (side == PartitionSide::Inner ? "inner" : "outer")
           << " script=[" << script.size() << " entries]";
    MoveResult res{cur, make_record("shift", params.str(), d, cur)};
    check_ledger(res.record, 0, 0);
    check_strict(cur, "shift");
    return res;
}

}  // namespace surfdiag
