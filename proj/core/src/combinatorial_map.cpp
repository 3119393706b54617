#include "surfdiag/combinatorial_map.hpp"

#include <algorithm>

namespace surfdiag {

CombinatorialMap::CombinatorialMap(std::vector<Dart> edge, std::vector<Dart> rot)
    : edge_(std::move(edge)), rot_(std::move(rot)) {
    const int n = dart_count();
    if (static_cast<int>(rot_.size()) != n)
        throw MapError(MapErrorKind::BadRotation, {}, "edge/rot size mismatch");
    rinv_.assign(n, kNoDart);
    std::vector<char> seen(n, 0);
    for (Dart d = 0; d < n; ++d) {
        Dart r = rot_[d];
        if (r < 0 || r >= n || seen[r])
            throw MapError(MapErrorKind::BadRotation, {d}, "rot is not a permutation at dart " + std::to_string(d));
        seen[r] = 1;
        rinv_[r] = d;
    }
    for (Dart d = 0; d < n; ++d) {
        Dart e = edge_[d];
        if (e < 0 || e >= n || e == d || edge_[e] != d)
            throw MapError(MapErrorKind::UnpairedDart, {d}, "edge is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    index_orbits();
}

void CombinatorialMap::index_orbits() {
    const int n = dart_count();
    vertex_of_.assign(n, -1);
    face_of_.assign(n, -1);
    vertex_count_ = 0;
    for (Dart d = 0; d < n; ++d) {
        if (vertex_of_[d] >= 0) continue;
        for (Dart x = d; vertex_of_[x] < 0; x = rot_[x]) vertex_of_[x] = vertex_count_;
        ++vertex_count_;
    }
    face_count_ = 0;
    for (Dart d = 0; d < n; ++d) {
        if (face_of_[d] >= 0) continue;
        for (Dart x = d; face_of_[x] < 0; x = rot_[edge_[x]]) face_of_[x] = face_count_;
        ++face_count_;
    }
    // Connectivity under the group generated by edge and rot.
    connected_ = true;
    if (n > 0) {
        std::vector<char> vis(n, 0);
        std::vector<Dart> stack{0};
        vis[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart m : {edge_[d], rot_[d]}) {
                if (!vis[m]) {
                    vis[m] = 1;
                    ++reached;
                    stack.push_back(m);
                }
            }
        }
        connected_ = reached == n;
    }
}

std::vector<Dart> CombinatorialMap::vertex_darts(Dart d) const {
    std::vector<Dart> out;
    Dart x = d;
    do {
        out.push_back(x);
        x = rot_[x];
    } while (x != d);
    return out;
}

std::vector<Dart> CombinatorialMap::face_walk(Dart d) const {
    std::vector<Dart> out;
    Dart x = d;
    do {
        out.push_back(x);
        x = rot_[edge_[x]];
    } while (x != d);
    return out;
}

int CombinatorialMap::vertex_degree(Dart d) const {
    int n = 0;
    Dart x = d;
    do {
        ++n;
        x = rot_[x];
    } while (x != d);
    return n;
}

CombinatorialMap CombinatorialMap::relabeled(const std::vector<Dart>& pi) const {
    const int n = dart_count();
    std::vector<Dart> e2(n, kNoDart), r2(n, kNoDart);
    for (Dart d = 0; d < n; ++d) {
        e2[pi[d]] = pi[edge_[d]];
        r2[pi[d]] = pi[rot_[d]];
    }
    return CombinatorialMap(std::move(e2), std::move(r2));
}

CombinatorialMap build_map(const std::vector<std::pair<Dart, Dart>>& edge_pairs,
                           const std::vector<std::vector<Dart>>& rotations) {
    Dart max_dart = -1;
    for (auto [a, b] : edge_pairs) max_dart = std::max({max_dart, a, b});
    for (const auto& cyc : rotations)
        for (Dart d : cyc) max_dart = std::max(max_dart, d);
    const int n = max_dart + 1;

    std::vector<Dart> edge(n, kNoDart), rot(n, kNoDart);
    for (auto [a, b] : edge_pairs) {
        if (a == b)
            throw MapError(MapErrorKind::UnpairedDart, {a}, "edge pairs dart " + std::to_string(a) + " with itself");
        if (edge[a] != kNoDart)
            throw MapError(MapErrorKind::DuplicateDart, {a}, "dart " + std::to_string(a) + " appears in two edges");
        if (edge[b] != kNoDart)
            throw MapError(MapErrorKind::DuplicateDart, {b}, "dart " + std::to_string(b) + " appears in two edges");
        edge[a] = b;
        edge[b] = a;
    }
    for (const auto& cyc : rotations) {
        if (cyc.empty())
            throw MapError(MapErrorKind::BadRotation, {}, "empty rotation cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            if (rot[d] != kNoDart)
                throw MapError(MapErrorKind::DuplicateDart, {d}, "dart " + std::to_string(d) + " appears in two rotation cycles");
            rot[d] = cyc[(i + 1) % cyc.size()];
        }
    }
    for (Dart d = 0; d < n; ++d) {
        if (edge[d] == kNoDart)
            throw MapError(MapErrorKind::UnpairedDart, {d}, "dart " + std::to_string(d) + " missing from edge pairs");
        if (rot[d] == kNoDart)
            throw MapError(MapErrorKind::UnpairedDart, {d}, "dart " + std::to_string(d) + " missing from rotations");
    }
    CombinatorialMap m(std::move(edge), std::move(rot));
    if (!m.connected()) {
        // name one dart from the component of 0 and one outside it
        std::vector<char> vis(n, 0);
        std::vector<Dart> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart x : {m.edge(d), m.rot(d)})
                if (!vis[x]) { vis[x] = 1; stack.push_back(x); }
        }
        Dart outside = kNoDart;
        for (Dart d = 0; d < n; ++d)
            if (!vis[d]) { outside = d; break; }
        throw MapError(MapErrorKind::Disconnected, {0, outside}, "map is disconnected (darts 0 and " + std::to_string(outside) + ")");
    }
    return m;
}

int euler_characteristic(const CombinatorialMap& m) { return m.euler_characteristic(); }
int genus(const CombinatorialMap& m) { return m.genus(); }

}  // namespace surfdiag
