#pragma once
#include <functional>
#include <map>
#include <vector>

#include "surfdiag/workspace.hpp"

namespace surfdiag {

/// Chord router for rerouted strands. Entry corners are determined
/// structurally by the caller; every chord checks co-faciality and fails
/// loudly when a derivation (or the requested path) is wrong.
struct Router {
    Workspace& w;
    Label lab;
    Dart cur = kNoDart;        // current corner token
    Dart cur_alt = kNoDart;    // unresolved second candidate for the start
    std::vector<Dart> travel;  // chord darts in travel order

    Router(Workspace& ws, Label l) : w(ws), lab(l) {}

    void begin(Dart corner_token) { cur = corner_token; }

    /// Start from whichever of two corners turns out co-facial with the
    /// first step (lanes of earlier routes may fence one side off).
    void begin_pair(Dart corner_a, Dart corner_b) {
        cur = corner_a;
        cur_alt = corner_b;
    }

    void resolve_start(Dart entry) {
        if (cur_alt == kNoDart) return;
        if (w.face_of(cur) != w.face_of(entry)) std::swap(cur, cur_alt);
        cur_alt = kNoDart;
    }

    void cross_fixed(Dart entry, Dart exit) {
        resolve_start(entry);
        if (w.face_of(entry) != w.face_of(cur))
            throw std::logic_error("router: step not co-facial");
        auto [c1, c2] = w.add_chord(cur, entry, lab);
        (void)c2;
        travel.push_back(c1);
        cur = exit;
    }

    void end_fixed(Dart entry) {
        resolve_start(entry);
        if (w.face_of(entry) != w.face_of(cur))
            throw std::logic_error("router: end corner not co-facial");
        auto [c1, c2] = w.add_chord(cur, entry, lab);
        (void)c2;
        travel.push_back(c1);
        cur = kNoDart;
    }
};

/// Subdivides the edge of `germ` in the segment adjacent to germ's vertex;
/// repeated calls stack outward. Returns the corner token pair (r, s): r is
/// the new partner of the segment toward the vertex, s extends that
/// segment's face side.
inline std::pair<Dart, Dart> stack_cut(Workspace& w, std::map<Dart, Dart>& next_seg, Dart germ) {
    auto it = next_seg.find(germ);
    Dart seg = it == next_seg.end() ? germ : it->second;
    auto [r, s] = w.subdivide(seg);
    if (it == next_seg.end())
        next_seg.emplace(germ, s);
    else
        it->second = s;
    return {r, s};
}

/// Subdivides the edge of germ `m` at its current segment and returns the
/// (entry, exit) tokens for a path sweeping past m's vertex: ccw sweeps
/// (hugging the right of travel) enter on face(m)'s side, cw sweeps on the
/// other.
inline std::pair<Dart, Dart> germ_cut(Workspace& w, Dart m, bool ccw) {
    auto [r, s] = w.subdivide(m);
    return ccw ? std::pair<Dart, Dart>{s, r} : std::pair<Dart, Dart>{r, s};
}

/// Darts strictly between the arrival partner and the departure dart going
/// counterclockwise (the right-hand side of travel) or clockwise (left).
inline std::vector<Dart> side_germs(const Workspace& w, Dart arrival_partner, Dart departure,
                                    bool right_side) {
    std::vector<Dart> out;
    if (right_side) {
        for (Dart x = w.rot(arrival_partner); x != departure; x = w.rot(x)) out.push_back(x);
    } else {
        for (Dart x = w.rot_inv(arrival_partner); x != departure; x = w.rot_inv(x)) out.push_back(x);
    }
    return out;
}

/// Subdivides, next to an existing cut vertex holding strand dart `at`, the
/// strand segment whose side face is `face`. Returns (entry on that face's
/// side, exit).
inline std::pair<Dart, Dart> cut_beside(Workspace& w, Dart at, int face) {
    std::vector<Dart> candidates;
    Dart x = at;
    do {
        if (w.label(x).is_strand()) {
            candidates.push_back(x);
            candidates.push_back(w.edge(x));
        }
        x = w.rot(x);
    } while (x != at);
    for (Dart c : candidates) {
        if (w.face_of(c) == face) {
            auto [r, s] = w.subdivide(c);
            return {s, r};
        }
    }
    throw std::logic_error("cut_beside: face does not flank the strand");
}

/// Position-ordered cuts along original edges, as the overlay grammar
/// specifies them: each (edge, position) crossing enters from the named side.
struct PositionCutter {
    struct Chain {
        std::vector<std::pair<int, Dart>> cuts;  // sorted (position, vertex r-token)
        std::vector<Dart> segments;              // forward darts, tail to head
    };
    Workspace& w;
    std::function<Dart(Dart)> orig_partner;
    std::map<Dart, Chain> chains;

    PositionCutter(Workspace& ws, std::function<Dart(Dart)> partner)
        : w(ws), orig_partner(std::move(partner)) {}

    struct Cut {
        Dart entry;   // corner token on face(through)'s side
        Dart exit;
        Dart vertex;  // one dart at the cut vertex
    };

    Cut cut(Dart through, int position) {
        Dart canon = std::min(through, orig_partner(through));
        auto [it, fresh] = chains.try_emplace(canon);
        Chain& ch = it->second;
        if (fresh) ch.segments = {canon};
        std::size_t idx = 0;
        for (const auto& [p, v] : ch.cuts) {
            if (p == position) throw std::logic_error("duplicate position on edge");
            if (p < position) ++idx;
        }
        Dart seg = ch.segments[idx];
        auto [r, s] = w.subdivide(seg);
        ch.segments.insert(ch.segments.begin() + idx + 1, s);
        ch.cuts.insert(ch.cuts.begin() + idx, {position, r});
        // face(s) extends the canonical side; before-r lands on the partner side
        Cut c;
        if (through == canon) {
            c.entry = s;
            c.exit = r;
        } else {
            c.entry = r;
            c.exit = s;
        }
        c.vertex = r;
        return c;
    }
};

}  // namespace surfdiag
