#include "surfdiag/fixtures.hpp"

#include <stdexcept>

namespace surfdiag {

namespace {

SurfaceDiagram assemble(std::vector<std::pair<Dart, Dart>> edges,
                        std::vector<std::vector<Dart>> rotations,
                        std::vector<Label> labels,
                        std::vector<std::vector<Dart>> curves) {
    SurfaceDiagram d;
    d.map = build_map(edges, rotations);
    d.labels = std::move(labels);
    d.k = static_cast<int>(curves.size());
    d.curves = std::move(curves);
    return d;
}

}  // namespace

SurfaceDiagram blank_diagram(int g) {
    if (g < 0) throw std::invalid_argument("blank_diagram: negative genus");
    if (g == 0)
        return assemble({{0, 1}}, {{0}, {1}}, {scaffold_label(), scaffold_label()}, {});
    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<Dart> ring;
    for (int h = 0; h < g; ++h) {
        Dart x = 4 * h, y = 4 * h + 1, X = 4 * h + 2, Y = 4 * h + 3;
        edges.push_back({x, X});
        edges.push_back({y, Y});
        ring.insert(ring.end(), {x, y, X, Y});
    }
    std::vector<Label> labels(4 * g, scaffold_label());
    return assemble(std::move(edges), {ring}, std::move(labels), {});
}

SurfaceDiagram pair_diagram(int g) {
    if (g < 1) throw std::invalid_argument("pair_diagram: genus must be >= 1");
    // v0 carries the crossing (a0, c0, b1, c1); the anchor v1 carries curve 0
    // through (a1 .. b0) plus g-1 interleaved scaffold handle pairs.
    const Dart a0 = 0, a1 = 1, b0 = 2, b1 = 3, c0 = 4, c1 = 5;
    std::vector<std::pair<Dart, Dart>> edges{{a0, a1}, {b0, b1}, {c0, c1}};
    std::vector<Dart> v1{a1};
    for (int h = 0; h < g - 1; ++h) {
        Dart x = 6 + 4 * h, y = x + 1, X = x + 2, Y = x + 3;
        edges.push_back({x, X});
        edges.push_back({y, Y});
        v1.insert(v1.end(), {x, y, X, Y});
    }
    v1.push_back(b0);
    std::vector<Label> labels(6 + 4 * (g - 1), scaffold_label());
    for (Dart d : {a0, a1, b0, b1}) labels[d] = curve_label(0);
    for (Dart d : {c0, c1}) labels[d] = curve_label(1);
    return assemble(std::move(edges), {{a0, c0, b1, c1}, v1}, std::move(labels),
                    {{a0, b0}, {c0}});
}

SurfaceDiagram chain_diagram(int g, int k) {
    if (k < 3) throw std::invalid_argument("chain_diagram: k must be >= 3 (use pair_diagram for k = 2)");
    int g0 = (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;
    if (g < g0)
        throw std::invalid_argument("chain_diagram: genus " + std::to_string(g) +
                                    " below the necklace embedding genus " + std::to_string(g0));
    // Curve i runs through crossings x_{i-1} and x_i along two arcs:
    //   u_i (at x_{i-1}) -> up_i (at x_i),  v_i (at x_i) -> vp_i (at x_{i-1}).
    auto u = [&](int i) { return 4 * i; };
    auto up = [&](int i) { return 4 * i + 1; };
    auto v = [&](int i) { return 4 * i + 2; };
    auto vp = [&](int i) { return 4 * i + 3; };
    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<std::vector<Dart>> rotations;
    std::vector<Label> labels(4 * k, scaffold_label());
    std::vector<std::vector<Dart>> curves(k);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        edges.push_back({u(i), up(i)});
        edges.push_back({v(i), vp(i)});
        rotations.push_back({up(i), u(j), v(i), vp(j)});
        for (Dart d : {u(i), up(i), v(i), vp(i)}) labels[d] = curve_label(i);
        curves[i] = {u(i), v(i)};
    }
    int handles = g - g0;
    if (handles > 0) {
        // Anchor on curve 0's first arc, carrying the extra genus.
        Dart p = 4 * k, q = 4 * k + 1;
        labels.push_back(curve_label(0));
        labels.push_back(curve_label(0));
        // replace edge {u_0, up_0} by {u_0, p} and {q, up_0}
        edges[0] = {u(0), p};
        edges.push_back({q, up(0)});
        std::vector<Dart> w{p};
        for (int h = 0; h < handles; ++h) {
            Dart x = 4 * k + 2 + 4 * h, y = x + 1, X = x + 2, Y = x + 3;
            edges.push_back({x, X});
            edges.push_back({y, Y});
            for (int t = 0; t < 4; ++t) labels.push_back(scaffold_label());
            w.insert(w.end(), {x, y, X, Y});
        }
        w.push_back(q);
        rotations.push_back(std::move(w));
        curves[0] = {u(0), q, v(0)};
    }
    return assemble(std::move(edges), std::move(rotations), std::move(labels), std::move(curves));
}

}  // namespace surfdiag
