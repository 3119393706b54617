#include "surfdiag/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "surfdiag/routing.hpp"

namespace surfdiag {

namespace {

bool is_pair_crossing(const SurfaceDiagram& d, Dart at, int i, int j) {
    auto darts = d.map.vertex_darts(at);
    if (darts.size() != 4) return false;
    bool has_i = false, has_j = false;
    for (Dart x : darts) {
        const Label& l = d.labels[x];
        if (!l.is_curve()) return false;
        if (l.index == i)
            has_i = true;
        else if (l.index == j)
            has_j = true;
        else
            return false;
    }
    return has_i && has_j;
}

struct Arc {
    std::vector<Dart> darts;  // oriented along the curve
    int tail_vertex;          // face-independent vertex ids via map.vertex_at
    int head_vertex;
};

// Arcs of curve c between consecutive (i,j)-crossings along its orientation.
std::vector<Arc> arcs_between(const SurfaceDiagram& d, int c, int i, int j) {
    const auto& cycle = d.curves[c];
    const int m = static_cast<int>(cycle.size());
    std::vector<int> stops;  // positions whose tail vertex is an (i,j) crossing
    for (int t = 0; t < m; ++t)
        if (is_pair_crossing(d, cycle[t], i, j)) stops.push_back(t);
    std::vector<Arc> arcs;
    const int s = static_cast<int>(stops.size());
    for (int a = 0; a < s; ++a) {
        int from = stops[a];
        int to = stops[(a + 1) % s];
        Arc arc;
        arc.tail_vertex = d.map.vertex_at(cycle[from]);
        for (int t = from; t != to; t = (t + 1) % m) arc.darts.push_back(cycle[t]);
        if (arc.darts.empty())  // single stop: the whole cycle returns to it
            for (int t = 0; t < m; ++t) arc.darts.push_back(cycle[(from + t) % m]);
        arc.head_vertex = d.map.vertex_at(cycle[to]);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

std::vector<Dart> reversed_walk(const SurfaceDiagram& d, const std::vector<Dart>& w) {
    std::vector<Dart> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(d.map.edge(*it));
    return out;
}

struct Fill {
    std::set<int> faces;
    int cells_chi = 0;
    bool ok = false;
};

// Floods one side of the closed walk and disk-tests it: the region must meet
// curves i and j only along the walk itself and have Euler characteristic 1.
Fill probe_side(const SurfaceDiagram& d, const std::vector<Dart>& walk, int i, int j) {
    Fill fill;
    const int L = static_cast<int>(walk.size());
    std::set<Dart> wall_darts(walk.begin(), walk.end());
    std::set<Dart> wall_edges;
    for (Dart x : walk) wall_edges.insert(std::min(x, d.map.edge(x)));
    if (static_cast<int>(wall_edges.size()) != L) return fill;  // walk reuses an edge

    auto is_wall_edge = [&](Dart x) { return wall_edges.count(std::min(x, d.map.edge(x))) > 0; };

    // Seed the chosen side: at each junction, the sectors swept from the
    // arrival reversal counterclockwise to the departure dart.
    std::set<int> faces;
    std::vector<int> queue;
    auto push_face = [&](int f) {
        if (faces.insert(f).second) queue.push_back(f);
    };
    for (int t = 0; t < L; ++t) {
        Dart r = d.map.edge(walk[t]);
        Dart dep = walk[(t + 1) % L];
        // sectors from r counterclockwise to dep; sector (a, rot a) lies on
        // face(rot a), so the last one contributes face(dep) itself.
        Dart x = r;
        do {
            x = d.map.rot(x);
            push_face(d.map.face_at(x));
        } while (x != dep);
    }

    const auto& face_of = d.map.face_of();
    std::vector<std::vector<Dart>> members(d.map.face_count());
    for (Dart x = 0; x < d.dart_count(); ++x) members[face_of[x]].push_back(x);

    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (Dart x : members[f]) {
            if (is_wall_edge(x)) continue;
            push_face(d.map.face_at(d.map.edge(x)));
        }
    }

    // Interior free of the two curves; every wall edge touched from one side.
    for (int f : faces) {
        for (Dart x : members[f]) {
            const Label& l = d.labels[x];
            if (l.is_curve() && (l.index == i || l.index == j) && !wall_darts.count(x)) return fill;
        }
    }
    for (Dart x : walk) {
        if (!faces.count(d.map.face_at(x))) return fill;
        if (faces.count(d.map.face_at(d.map.edge(x)))) return fill;
    }

    // Euler characteristic of the filled region via corner classes.
    int interior_edges = 0;
    std::set<Dart> counted;
    for (int f : faces)
        for (Dart x : members[f]) {
            Dart e = d.map.edge(x);
            if (is_wall_edge(x)) continue;
            Dart lo = std::min(x, e);
            if (counted.count(lo)) continue;
            counted.insert(lo);
            ++interior_edges;  // both sides are in the fill or flooding would have left
        }

    // sector(x) spans from x to rot(x) and lies on face(rot(x)); sectors
    // adjacent across a non-wall dart belong to one 0-cell.
    std::map<Dart, int> sector_class;
    int classes = 0;
    std::vector<Dart> in_fill_sectors;
    for (Dart x = 0; x < d.dart_count(); ++x)
        if (faces.count(d.map.face_at(d.map.rot(x)))) in_fill_sectors.push_back(x);
    std::map<Dart, Dart> parent;
    std::function<Dart(Dart)> find = [&](Dart a) -> Dart {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (Dart x : in_fill_sectors) parent[x] = x;
    for (Dart x : in_fill_sectors) {
        Dart m = d.map.rot(x);  // dart between sector(x) and sector(rot(x))
        if (is_wall_edge(m)) continue;
        if (!parent.count(m)) continue;  // adjacent sector outside the fill
        Dart a = find(x), b = find(m);
        if (a != b) parent[a] = b;
    }
    std::set<Dart> roots;
    for (Dart x : in_fill_sectors) roots.insert(find(x));
    classes = static_cast<int>(roots.size());

    fill.cells_chi = classes - (interior_edges + L) + static_cast<int>(faces.size());
    if (fill.cells_chi != 1) return fill;
    fill.faces = std::move(faces);
    fill.ok = true;
    return fill;
}

}  // namespace

std::optional<BigonSite> find_bigon(const SurfaceDiagram& d, int i, int j) {
    if (i == j) return std::nullopt;
    auto arcs_i = arcs_between(d, i, i, j);
    auto arcs_j = arcs_between(d, j, i, j);
    std::optional<BigonSite> best;
    std::size_t best_size = 0;
    Dart best_tie = 0;
    for (const auto& ai : arcs_i) {
        if (ai.tail_vertex == ai.head_vertex) continue;
        for (const auto& aj : arcs_j) {
            bool fwd = aj.tail_vertex == ai.tail_vertex && aj.head_vertex == ai.head_vertex;
            bool bwd = aj.tail_vertex == ai.head_vertex && aj.head_vertex == ai.tail_vertex;
            if (!fwd && !bwd) continue;
            std::vector<Dart> beta = aj.darts;
            if (bwd) beta = reversed_walk(d, beta);
            // closed walk: alpha from v to w, then beta reversed from w to v
            std::vector<Dart> walk = ai.darts;
            auto back = reversed_walk(d, beta);
            walk.insert(walk.end(), back.begin(), back.end());
            for (int side = 0; side < 2; ++side) {
                std::vector<Dart> w2 = side == 0 ? walk : reversed_walk(d, walk);
                Fill f = probe_side(d, w2, i, j);
                if (!f.ok) continue;
                Dart tie = *std::min_element(w2.begin(), w2.end());
                if (!best || f.faces.size() < best_size ||
                    (f.faces.size() == best_size && tie < best_tie)) {
                    BigonSite site;
                    site.curve_i = i;
                    site.curve_j = j;
                    site.arc_i = ai.darts;
                    site.arc_j = beta;
                    site.fill_faces.assign(f.faces.begin(), f.faces.end());
                    site.wall_side = w2;
                    best = std::move(site);
                    best_size = f.faces.size();
                    best_tie = tie;
                }
            }
        }
    }
    return best;
}

namespace {

// Slides the i-arc of the bigon across its disk: the curve is rerouted
// parallel to the j-arc on the far side, crossing exactly the strands that
// cross the j-arc, and the old arc with its two corner crossings dissolves.
SurfaceDiagram slide_bigon(const SurfaceDiagram& d, const BigonSite& site) {
    Workspace w(d);
    const int i = site.curve_i;
    std::set<int> fill(site.fill_faces.begin(), site.fill_faces.end());
    auto in_fill = [&](Dart x) { return fill.count(d.map.face_at(x)) > 0; };

    const auto& alpha = site.arc_i;
    const auto& beta = site.arc_j;
    // stubs: o_v continues curve i backwards at v, y continues forward at w
    Dart a_first = alpha.front();
    Dart o_v = d.map.rot(d.map.rot(a_first));
    Dart y = d.map.rot(d.map.rot(d.map.edge(alpha.back())));

    auto [r0, s0] = w.subdivide(o_v);
    auto [r1, s1] = w.subdivide(y);
    (void)s1;

    // Crossing events: the non-fill germs at each interior vertex of beta,
    // with the sweep direction recorded (it fixes the entry side).
    struct Event {
        Dart germ;  // dart at the beta vertex whose edge the route crosses
        bool ccw;   // swept counterclockwise from the arrival partner?
    };
    std::vector<Event> events;
    for (std::size_t t = 0; t + 1 < beta.size(); ++t) {
        Dart r = d.map.edge(beta[t]);
        Dart dep = beta[t + 1];
        bool ccw_in_fill = fill.count(d.map.face_at(d.map.rot(r))) > 0;
        if (ccw_in_fill) {
            for (Dart x = d.map.rot_inv(r); x != dep; x = d.map.rot_inv(x))
                events.push_back({x, false});
        } else {
            for (Dart x = d.map.rot(r); x != dep; x = d.map.rot(x)) events.push_back({x, true});
        }
    }
    (void)in_fill;

    // The route departs p0 into the sector of v between the outgoing stub
    // o_v and beta's first dart, and lands at p1 from the sector of w between
    // beta's final arrival and y. Both pin the tokens structurally:
    // subdividing x puts the s-token on face(x)'s side.
    Dart b_first = beta.front();
    Dart r_w = d.map.edge(beta.back());
    Router rt(w, curve_label(i));
    if (w.rot(b_first) == o_v)
        rt.begin(s0);  // sector (b_first, o_v) lies on face(o_v)'s side
    else if (w.rot(o_v) == b_first)
        rt.begin(r0);  // sector (o_v, b_first) lies on the other side
    else
        throw std::logic_error("bigon slide: stub and beta not rotation-adjacent at v");

    for (const Event& ev : events) {
        auto [entry, exit] = germ_cut(w, ev.germ, ev.ccw);
        rt.cross_fixed(entry, exit);
    }
    if (w.rot(r_w) == y)
        rt.end_fixed(s1);  // arriving through sector (r_w, y): face(y)'s side
    else if (w.rot(y) == r_w)
        rt.end_fixed(r1);
    else
        throw std::logic_error("bigon slide: stub and beta not rotation-adjacent at w");
    std::vector<Dart> route = rt.travel;

    // Rebuild curve i's cycle: the old passage r0, alpha..., y is replaced by
    // the route. Rotate the cycle so the passage sits at the front.
    std::vector<Dart> cycle = w.curves()[i];
    std::vector<Dart> doomed{r0};
    for (Dart x : alpha) doomed.push_back(x);
    doomed.push_back(y);
    auto it = std::find(cycle.begin(), cycle.end(), r0);
    if (it == cycle.end()) throw std::logic_error("bigon slide: stub not on the curve");
    std::rotate(cycle.begin(), it, cycle.end());
    std::size_t old_len = 2 + alpha.size();
    for (std::size_t t = 0; t < old_len; ++t)
        if (cycle[t] != doomed[t]) throw std::logic_error("bigon slide: passage mismatch");
    std::vector<Dart> rebuilt = route;
    rebuilt.insert(rebuilt.end(), cycle.begin() + old_len, cycle.end());
    w.set_curve_cycle(i, rebuilt);

    // retire the old passage and both corner crossings' pairings
    std::vector<Dart> junk;
    for (Dart x : doomed) {
        junk.push_back(x);
        junk.push_back(w.edge(x));
    }
    w.retire(junk);
    return w.normalize();
}

}  // namespace

SurfaceDiagram reduce_pair(const SurfaceDiagram& d, int i, int j) {
    if (i < 0 || i >= d.k || j < 0 || j >= d.k)
        throw DiagramError(DiagramErrorKind::UnknownIndex, "reduce_pair: unknown curve index");
    SurfaceDiagram cur = d;
    while (auto site = find_bigon(cur, i, j)) cur = slide_bigon(cur, *site);
    return cur;
}

SurfaceDiagram reduce_all_pairs(const SurfaceDiagram& d) {
    SurfaceDiagram cur = d;
    // Pairwise reduction can reopen other pairs; sweep in lexicographic order
    // until a full pass finds nothing. The pass bound guards against cycling
    // configurations, which do not arise at fixture scale.
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (int i = 0; i < cur.k; ++i)
            for (int j = i + 1; j < cur.k; ++j)
                while (find_bigon(cur, i, j)) {
                    cur = reduce_pair(cur, i, j);
                    changed = true;
                }
        if (!changed) break;
    }
    return cur;
}

int reduced_crossing_count(const SurfaceDiagram& d, int i, int j) {
    return crossing_count(reduce_pair(d, i, j), i, j);
}

}  // namespace surfdiag
