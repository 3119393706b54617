#include "surfdiag/overlay.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "surfdiag/routing.hpp"

namespace surfdiag {

namespace {

[[noreturn]] void oerr(OverlayErrorKind k, const std::string& msg) { throw OverlayError(k, msg); }

}  // namespace

std::pair<SurfaceDiagram, int> embed_overlay(const SurfaceDiagram& d, const OverlayPath& p) {
    for (const auto& st : p.steps) {
        if (st.through < 0 || st.through >= d.dart_count())
            oerr(OverlayErrorKind::BadPosition, "step dart out of range");
    }
    Workspace w(d);
    const int id = w.take_overlay_id();
    const Label lab = overlay_label(id);
    Overlay ov;
    ov.closed = p.closed;

    if (p.closed && p.steps.empty()) {
        if (p.host < 0 || p.host >= d.dart_count())
            oerr(OverlayErrorKind::BadAnchor, "zero-step loop needs a host corner");
        Dart corner = p.host;
        if (!d.labels[corner].is_scaffold()) {
            // tether onto a fresh anchor so strand vertices stay typed
            auto [r, s] = w.subdivide(corner);
            (void)r;
            corner = s;
        }
        auto [l1, l2] = w.add_floating_loop(corner, lab);
        (void)l2;
        ov.walk = {l1};
        w.overlays().emplace(id, std::move(ov));
        return {w.finish(), id};
    }

    PositionCutter pc(w, [&d](Dart x) { return d.map.edge(x); });
    auto cut = [&](Dart through, int position) {
        try {
            return pc.cut(through, position);
        } catch (const std::logic_error& e) {
            oerr(OverlayErrorKind::BadPosition, e.what());
        }
    };
    // original-face cofaciality reference for the NotEmbedded distinction
    auto orig_face = [&](Dart x) { return d.map.face_at(x); };

    struct Point {
        Dart entry;
        Dart exit;
        int orig_entry_face;
        int orig_exit_face;
    };
    std::vector<Point> pts;

    if (!p.closed) {
        if (p.start_edge < 0 || p.start_edge >= d.dart_count() || !d.labels[p.start_edge].is_strand())
            oerr(OverlayErrorKind::BadAnchor, "arc start must sit on a strand edge");
        if (p.end_edge < 0 || p.end_edge >= d.dart_count() || !d.labels[p.end_edge].is_strand())
            oerr(OverlayErrorKind::BadAnchor, "arc end must sit on a strand edge");
        auto c = cut(p.start_edge, p.start_position);
        Point pt;
        pt.entry = p.start_side ? c.entry : c.exit;   // departure corner
        pt.exit = pt.entry;
        pt.orig_entry_face = orig_face(p.start_side ? p.start_edge : d.map.edge(p.start_edge));
        pt.orig_exit_face = pt.orig_entry_face;
        pts.push_back(pt);
    }
    for (const auto& st : p.steps) {
        auto c = cut(st.through, st.position);
        Point pt;
        pt.entry = c.entry;
        pt.exit = c.exit;
        pt.orig_entry_face = orig_face(st.through);
        pt.orig_exit_face = orig_face(d.map.edge(st.through));
        pts.push_back(pt);
    }
    if (!p.closed) {
        auto c = cut(p.end_edge, p.end_position);
        Point pt;
        pt.entry = p.end_side ? c.entry : c.exit;  // arrival corner
        pt.exit = pt.entry;
        pt.orig_entry_face = orig_face(p.end_side ? p.end_edge : d.map.edge(p.end_edge));
        pt.orig_exit_face = pt.orig_entry_face;
        pts.push_back(pt);
    }
    std::vector<Dart> walk;
    const std::size_t n = pts.size();
    const std::size_t chords = p.closed ? n : n - 1;
    for (std::size_t t = 0; t < chords; ++t) {
        const Point& a = pts[t];
        const Point& b = pts[(t + 1) % n];
        if (w.face_of(a.exit) != w.face_of(b.entry)) {
            if (a.orig_exit_face == b.orig_entry_face)
                oerr(OverlayErrorKind::NotEmbedded,
                     "path arcs cross inside a face (step " + std::to_string(t) + ")");
            oerr(OverlayErrorKind::NotCofacial,
                 "consecutive crossings not on a common face (step " + std::to_string(t) + ")");
        }
        auto [c1, c2] = w.add_chord(a.exit, b.entry, lab);
        (void)c2;
        walk.push_back(c1);
    }
    ov.walk = std::move(walk);
    w.overlays().emplace(id, std::move(ov));
    return {w.finish(), id};
}

SurfaceDiagram drop_overlay(const SurfaceDiagram& d, int overlay_id) {
    auto it = d.overlays.find(overlay_id);
    if (it == d.overlays.end())
        throw DiagramError(DiagramErrorKind::UnknownIndex, "unknown overlay id");
    Workspace w(d);
    std::vector<Dart> doomed;
    for (Dart x = 0; x < d.dart_count(); ++x)
        if (d.labels[x].is_overlay() && d.labels[x].index == overlay_id) doomed.push_back(x);
    w.overlays().erase(overlay_id);
    w.retire(doomed);
    return w.normalize();
}

SurfaceDiagram drop_all_overlays(const SurfaceDiagram& d) {
    SurfaceDiagram cur = d;
    while (!cur.overlays.empty()) cur = drop_overlay(cur, cur.overlays.begin()->first);
    return cur;
}

std::string to_text(const OverlayPath& p) {
    std::ostringstream os;
    os << (p.closed ? "loop:(" : "path:(");
    bool first = true;
    if (!p.closed) {
        os << "from " << p.start_edge << "@" << p.start_position << (p.start_side ? "+" : "-");
        first = false;
    }
    if (p.closed && p.steps.empty()) {
        os << "~" << p.host;
        first = false;
    }
    for (const auto& st : p.steps) {
        if (!first) os << ",";
        os << st.through << "@" << st.position;
        first = false;
    }
    if (!p.closed) os << ",to " << p.end_edge << "@" << p.end_position << (p.end_side ? "+" : "-");
    os << ")";
    return os.str();
}

OverlayPath parse_overlay_path(const std::string& text) {
    OverlayPath p;
    std::string body;
    if (text.rfind("loop:(", 0) == 0) {
        p.closed = true;
        body = text.substr(6);
    } else if (text.rfind("path:(", 0) == 0) {
        p.closed = false;
        body = text.substr(6);
    } else {
        oerr(OverlayErrorKind::BadPosition, "path must start with loop:( or path:(");
    }
    if (body.empty() || body.back() != ')')
        oerr(OverlayErrorKind::BadPosition, "unterminated path");
    body.pop_back();
    std::stringstream ss(body);
    std::string tok;
    auto parse_at = [&](const std::string& s, Dart& dart, int& pos, bool* side) {
        std::size_t at = s.find('@');
        if (at == std::string::npos) oerr(OverlayErrorKind::BadPosition, "missing @ in '" + s + "'");
        dart = std::stoi(s.substr(0, at));
        std::string rest = s.substr(at + 1);
        if (side) {
            if (rest.empty()) oerr(OverlayErrorKind::BadPosition, "missing side in '" + s + "'");
            char c = rest.back();
            if (c == '+' || c == '-') {
                *side = c == '+';
                rest.pop_back();
            } else {
                *side = true;
            }
        }
        pos = std::stoi(rest);
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.rfind("from ", 0) == 0) {
            parse_at(tok.substr(5), p.start_edge, p.start_position, &p.start_side);
        } else if (tok.rfind("to ", 0) == 0) {
            parse_at(tok.substr(3), p.end_edge, p.end_position, &p.end_side);
        } else if (tok[0] == '~') {
            p.host = std::stoi(tok.substr(1));
        } else {
            OverlayStep st;
            parse_at(tok, st.through, st.position, nullptr);
            p.steps.push_back(st);
        }
    }
    return p;
}

}  // namespace surfdiag
