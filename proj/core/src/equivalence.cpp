#include "surfdiag/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "surfdiag/canonical_code.hpp"
#include "surfdiag/overlay.hpp"
#include "surfdiag/reduce.hpp"

namespace surfdiag {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
};

// The curves-plus-regions decoration of a fully scaffolded diagram: the
// stripped map keeps one dart per curve run between crossings, and every
// stripped face knows the genus of the complementary region it bounds.
struct Stripped {
    CombinatorialMap map;
    std::vector<int> curve_of;       // per stripped dart
    std::vector<int> region_of_face; // per stripped face id
    std::vector<int> region_genus;   // per region id
};

Stripped strip(const SurfaceDiagram& d) {
    // regions: faces glued across scaffold edges
    const int nf = d.map.face_count();
    UnionFind regions(nf);
    for (Dart x = 0; x < d.dart_count(); ++x)
        if (d.labels[x].is_scaffold())
            regions.join(d.map.face_at(x), d.map.face_at(d.map.edge(x)));

    // region Euler characteristics from cells: faces, scaffold edges, curve
    // dart boundary cells, and vertex corner classes joined across scaffold.
    std::map<int, int> chi;  // region root -> V - E + F
    for (int f = 0; f < nf; ++f) chi[regions.find(f)] += 1;
    for (Dart x = 0; x < d.dart_count(); ++x) {
        if (d.labels[x].is_scaffold()) {
            if (x < d.map.edge(x)) chi[regions.find(d.map.face_at(x))] -= 1;
        } else {
            chi[regions.find(d.map.face_at(x))] -= 1;  // one boundary cell per dart
        }
    }
    {
        // corner classes: sector(x) spans x..rot(x) and lies on face(rot(x));
        // sectors adjacent across a scaffold dart merge.
        UnionFind sectors(d.dart_count());
        for (Dart x = 0; x < d.dart_count(); ++x)
            if (d.labels[d.map.rot(x)].is_scaffold()) sectors.join(x, d.map.rot(x));
        std::map<int, int> root_region;
        for (Dart x = 0; x < d.dart_count(); ++x) {
            int root = sectors.find(x);
            if (!root_region.count(root)) {
                root_region[root] = regions.find(d.map.face_at(d.map.rot(x)));
                chi[root_region[root]] += 1;
            }
        }
    }

    // stripped map: crossings survive, anchors dissolve, crossing-free curves
    // keep one carrier vertex.
    Stripped out;
    std::map<Dart, Dart> id;  // original dart -> stripped dart
    std::vector<Dart> back;
    auto take = [&](Dart x) {
        auto [it, fresh] = id.emplace(x, static_cast<Dart>(back.size()));
        if (fresh) back.push_back(x);
        return it->second;
    };
    auto is_crossing_tail = [&](Dart x) { return classify_vertex(d, x) == VertexType::Crossing; };

    std::vector<std::vector<Dart>> runs_per_curve(d.k);  // run start darts (original ids)
    std::map<Dart, Dart> run_last;                       // start -> last dart of the run
    for (int i = 0; i < d.k; ++i) {
        const auto& cyc = d.curves[i];
        const int m = static_cast<int>(cyc.size());
        std::vector<int> stops;
        for (int t = 0; t < m; ++t)
            if (is_crossing_tail(cyc[t])) stops.push_back(t);
        if (stops.empty()) {
            // crossing-free curve: single stripped loop edge on a carrier
            Dart a = *std::min_element(cyc.begin(), cyc.end());
            int t0 = static_cast<int>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
            runs_per_curve[i] = {cyc[t0]};
            run_last[cyc[t0]] = cyc[(t0 + m - 1) % m];
            continue;
        }
        for (std::size_t s = 0; s < stops.size(); ++s) {
            int from = stops[s];
            int to = stops[(s + 1) % stops.size()];
            runs_per_curve[i].push_back(cyc[from]);
            run_last[cyc[from]] = cyc[(to + m - 1) % m];
        }
    }

    // allocate stripped darts: run start and the reverse at the far crossing
    std::map<Dart, Dart> srev;  // stripped dart -> stripped partner
    std::map<Dart, Dart> rep_fwd, rep_bwd;
    for (int i = 0; i < d.k; ++i) {
        for (Dart start : runs_per_curve[i]) {
            Dart fwd = take(start);
            Dart bwd = take(d.map.edge(run_last[start]));
            rep_fwd[start] = fwd;
            rep_bwd[start] = bwd;
        }
    }
    const int n = static_cast<int>(back.size());
    std::vector<Dart> edge2(n, kNoDart), rot2(n, kNoDart);
    out.curve_of.assign(n, -1);
    for (int i = 0; i < d.k; ++i) {
        for (Dart start : runs_per_curve[i]) {
            Dart fwd = rep_fwd[start], bwd = rep_bwd[start];
            edge2[fwd] = bwd;
            edge2[bwd] = fwd;
            out.curve_of[fwd] = out.curve_of[bwd] = i;
        }
    }
    // rotations: at crossings copy the original cyclic order; carriers pair up
    for (Dart x = 0; x < d.dart_count(); ++x) {
        if (!id.count(x)) continue;
        Dart sx = id[x];
        if (rot2[sx] != kNoDart) continue;
        if (classify_vertex(d, x) == VertexType::Crossing) {
            // all four darts at this vertex are stripped darts
            Dart y = x;
            do {
                Dart ny = d.map.rot(y);
                if (!id.count(y) || !id.count(ny))
                    throw std::logic_error("strip: crossing dart missing from stripped set");
                rot2[id[y]] = id[ny];
                y = ny;
            } while (y != x);
        } else {
            // carrier vertex of a crossing-free curve: the two stripped darts
            // of its single run sit on one two-dart vertex.
            Dart fwd = sx;
            Dart bwd = edge2[sx];
            rot2[fwd] = bwd;
            rot2[bwd] = fwd;
        }
    }
    out.map = CombinatorialMap(std::move(edge2), std::move(rot2));

    // stripped faces -> regions
    std::map<int, int> region_ids;
    out.region_of_face.assign(out.map.face_count(), -1);
    for (Dart sd = 0; sd < n; ++sd) {
        int f = out.map.face_at(sd);
        if (out.region_of_face[f] >= 0) continue;
        int reg_root = regions.find(d.map.face_at(back[sd]));
        auto [it, fresh] = region_ids.emplace(reg_root, static_cast<int>(region_ids.size()));
        out.region_of_face[f] = it->second;
    }
    out.region_genus.assign(region_ids.size(), 0);
    {
        // boundary circle count per region = stripped faces landing on it
        std::vector<int> b(region_ids.size(), 0);
        for (int f = 0; f < out.map.face_count(); ++f) ++b[out.region_of_face[f]];
        for (auto [root, rid] : region_ids) {
            int g2 = 2 - b[rid] - chi[root];
            if (g2 < 0 || g2 % 2 != 0)
                throw std::logic_error("strip: region genus came out (" + std::to_string(g2) + ")/2");
            out.region_genus[rid] = g2 / 2;
        }
    }
    return out;
}

std::vector<std::int64_t> code_of(const SurfaceDiagram& d) {
    Stripped s = strip(d);
    CodeColors colors;
    colors.dart_color.assign(s.map.dart_count(), 0);
    colors.group_of.assign(s.map.dart_count(), -1);
    for (Dart x = 0; x < s.map.dart_count(); ++x) {
        colors.dart_color[x] = s.curve_of[x];
        colors.group_of[x] = s.region_of_face[s.map.face_at(x)];
    }
    colors.group_payload.assign(s.region_genus.begin(), s.region_genus.end());
    std::vector<std::int64_t> code{d.genus(), d.k};
    auto body = canonical_code(s.map, colors);
    code.insert(code.end(), body.begin(), body.end());
    return code;
}

}  // namespace

SurfaceDiagram rotate_indices(const SurfaceDiagram& d, int r) {
    if (d.k == 0) return d;
    r = ((r % d.k) + d.k) % d.k;
    if (r == 0) return d;
    SurfaceDiagram out = d;
    for (auto& l : out.labels)
        if (l.kind == DartKind::Curve) l.index = (l.index + r) % d.k;
    for (int i = 0; i < d.k; ++i) out.curves[(i + r) % d.k] = d.curves[i];
    return out;
}

SurfaceDiagram relabel_darts(const SurfaceDiagram& d, const std::vector<Dart>& pi) {
    SurfaceDiagram out;
    out.map = d.map.relabeled(pi);
    out.labels.resize(d.labels.size());
    for (Dart x = 0; x < d.dart_count(); ++x) out.labels[pi[x]] = d.labels[x];
    out.k = d.k;
    out.curves.resize(d.curves.size());
    for (std::size_t i = 0; i < d.curves.size(); ++i) {
        out.curves[i].reserve(d.curves[i].size());
        for (Dart x : d.curves[i]) out.curves[i].push_back(pi[x]);
    }
    for (auto& [id, ov] : d.overlays) {
        Overlay o;
        o.closed = ov.closed;
        for (Dart x : ov.walk) o.walk.push_back(pi[x]);
        out.overlays.emplace(id, std::move(o));
    }
    out.next_overlay_id = d.next_overlay_id;
    return out;
}

std::vector<std::int64_t> normal_code(const SurfaceDiagram& d) {
    SurfaceDiagram base = drop_all_overlays(d);
    std::vector<std::int64_t> best;
    const int rotations = std::max(1, base.k);
    for (int r = 0; r < rotations; ++r) {
        SurfaceDiagram rotated = rotate_indices(base, r);
        SurfaceDiagram reduced = reduce_all_pairs(rotated);
        auto code = code_of(reduced);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool equivalent(const SurfaceDiagram& a, const SurfaceDiagram& b) {
    return normal_code(a) == normal_code(b);
}

}  // namespace surfdiag
