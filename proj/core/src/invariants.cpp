#include "surfdiag/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "surfdiag/reduce.hpp"

namespace surfdiag {

namespace {

// Cycle-space setup: a lowest-dart spanning tree of the map's graph; the
// non-tree edges carry the coordinates of H_1 of the embedded graph, and
// all but one face relation divide out to H_1 of the surface.
struct CycleBasis {
    std::vector<Dart> canonical;        // one dart per non-tree edge, sorted
    std::map<Dart, int> index_of;       // canonical dart -> coordinate
    std::vector<char> in_tree;          // per canonical dart id flag, by edge
    IntegerMatrix v;                    // column transform of the relation SNF
    int rank = 0;                       // rank of the face relations
    int coords = 0;                     // number of non-tree edges

    std::vector<std::int64_t> cycle_vector(const SurfaceDiagram& d,
                                           const std::vector<Dart>& walk) const {
        std::vector<std::int64_t> x(coords, 0);
        for (Dart t : walk) {
            Dart c = std::min(t, d.map.edge(t));
            auto it = index_of.find(c);
            if (it == index_of.end()) continue;  // tree edge
            x[it->second] = checked_add(x[it->second], t == c ? 1 : -1);
        }
        return x;
    }

    // quotient coordinates: the last (coords - rank) entries of x * V
    std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& x) const {
        std::vector<std::int64_t> y(coords - rank, 0);
        for (int j = rank; j < coords; ++j) {
            std::int64_t acc = 0;
            for (int i = 0; i < coords; ++i)
                acc = checked_add(acc, checked_mul(x[i], v.at(i, j)));
            y[j - rank] = acc;
        }
        return y;
    }
};

CycleBasis build_cycle_basis(const SurfaceDiagram& d) {
    CycleBasis cb;
    const int n = d.dart_count();
    if (n == 0) return cb;

    // spanning tree by lowest canonical dart (BFS over vertices)
    const auto& vert = d.map.vertex_of();
    const int nv = d.map.vertex_count();
    std::vector<char> reached(nv, 0);
    std::set<Dart> tree_edges;
    reached[vert[0]] = 1;
    for (int grown = 1; grown < nv;) {
        Dart best = kNoDart;
        for (Dart x = 0; x < n; ++x) {
            if (!reached[vert[x]] || reached[vert[d.map.edge(x)]]) continue;
            Dart c = std::min(x, d.map.edge(x));
            if (best == kNoDart || c < best) best = c;
        }
        if (best == kNoDart) break;  // disconnected map: callers validate first
        tree_edges.insert(best);
        reached[vert[best]] = 1;
        reached[vert[d.map.edge(best)]] = 1;
        ++grown;
    }

    for (Dart x = 0; x < n; ++x) {
        Dart c = std::min(x, d.map.edge(x));
        if (c != x || tree_edges.count(c)) continue;
        cb.index_of.emplace(c, static_cast<int>(cb.canonical.size()));
        cb.canonical.push_back(c);
    }
    cb.coords = static_cast<int>(cb.canonical.size());

    // face relations (all faces but the last)
    std::vector<std::vector<Dart>> walks;
    std::vector<char> seen(n, 0);
    for (Dart x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<Dart> walk = d.map.face_walk(x);
        for (Dart y : walk) seen[y] = 1;
        walks.push_back(std::move(walk));
    }
    IntegerMatrix rel(static_cast<int>(walks.size()) - 1, cb.coords);
    for (int i = 0; i + 1 < static_cast<int>(walks.size()); ++i) {
        auto x = cb.cycle_vector(d, walks[i]);
        for (int j = 0; j < cb.coords; ++j) rel.at(i, j) = x[j];
    }
    SmithResult snf = smith_normal_form(rel);
    cb.rank = 0;
    for (int t = 0; t < std::min(rel.rows, rel.cols); ++t) {
        if (snf.s.at(t, t) == 0) break;
        if (snf.s.at(t, t) != 1)
            throw std::logic_error("face relation lattice is not primitive");
        ++cb.rank;
    }
    if (cb.coords - cb.rank != 2 * d.genus())
        throw std::logic_error("cycle basis rank disagrees with the genus");
    cb.v = std::move(snf.v);
    return cb;
}

}  // namespace

IntegerMatrix homology_classes(const SurfaceDiagram& d) {
    CycleBasis cb = build_cycle_basis(d);
    IntegerMatrix h(d.k, 2 * d.genus());
    for (int i = 0; i < d.k; ++i) {
        auto y = cb.reduce(cb.cycle_vector(d, d.curves[i]));
        for (int j = 0; j < h.cols; ++j) h.at(i, j) = y[j];
    }
    return h;
}

int algebraic_intersection(const SurfaceDiagram& d, int i, int j) {
    if (i < 0 || i >= d.k || j < 0 || j >= d.k)
        throw DiagramError(DiagramErrorKind::UnknownIndex, "unknown curve index");
    if (i == j) return 0;
    // out-dart of each curve at a shared crossing; the sign reads the
    // rotation order of the four darts.
    std::map<int, Dart> out_i, out_j;
    for (Dart x : d.curves[i]) out_i[d.map.vertex_at(x)] = x;
    for (Dart x : d.curves[j]) out_j[d.map.vertex_at(x)] = x;
    int total = 0;
    for (auto& [v, oi] : out_i) {
        auto it = out_j.find(v);
        if (it == out_j.end()) continue;
        if (d.map.vertex_degree(oi) != 4) continue;
        total += d.map.rot(oi) == it->second ? 1 : -1;
    }
    return total;
}

AbelianGroupDescriptor quotient_group(const SurfaceDiagram& d) {
    IntegerMatrix h = homology_classes(d);
    AbelianGroupDescriptor out;
    if (h.cols == 0) return out;
    SmithResult snf = smith_normal_form(h);
    int rank = 0;
    for (int t = 0; t < std::min(h.rows, h.cols); ++t) {
        std::int64_t dt = snf.s.at(t, t);
        if (dt == 0) break;
        ++rank;
        if (dt > 1) out.torsion.push_back(dt);
    }
    out.free_rank = h.cols - rank;
    return out;
}

InvariantReport summary(const SurfaceDiagram& d) {
    InvariantReport r;
    r.genus = d.genus();
    r.k = d.k;
    r.geometric = IntegerMatrix(d.k, d.k);
    r.algebraic = IntegerMatrix(d.k, d.k);
    for (int i = 0; i < d.k; ++i)
        for (int j = i + 1; j < d.k; ++j) {
            int g = reduced_crossing_count(d, i, j);
            r.geometric.at(i, j) = r.geometric.at(j, i) = g;
            int a = algebraic_intersection(d, i, j);
            r.algebraic.at(i, j) = a;
            r.algebraic.at(j, i) = -a;
        }
    r.homology = homology_classes(d);
    r.quotient = quotient_group(d);
    return r;
}

std::string to_text(const InvariantReport& r) {
    std::ostringstream os;
    auto mat = [&](const char* name, const IntegerMatrix& m) {
        os << name << " " << m.rows << "x" << m.cols << "\n";
        for (int i = 0; i < m.rows; ++i) {
            os << " ";
            for (int j = 0; j < m.cols; ++j) os << " " << m.at(i, j);
            os << "\n";
        }
    };
    os << "genus " << r.genus << "\n";
    os << "k " << r.k << "\n";
    mat("matrix algebraic", r.algebraic);
    mat("matrix geometric", r.geometric);
    mat("matrix homology", r.homology);
    os << "quotient free-rank " << r.quotient.free_rank << " torsion";
    if (r.quotient.torsion.empty()) os << " none";
    for (auto t : r.quotient.torsion) os << " " << t;
    os << "  (diagram invariant, experimental)\n";
    return os.str();
}

}  // namespace surfdiag
