#include "surfdiag/canonical_code.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace surfdiag {

namespace {

struct EncodeState {
    std::vector<int> num;           // dart -> visit number, -1 unvisited
    std::vector<Dart> order;        // visit number -> dart
    std::map<int, int> group_seen;  // group id -> first-visit index
};

void bfs(const CombinatorialMap& m, EncodeState& st, Dart root) {
    std::deque<Dart> q{root};
    st.num[root] = static_cast<int>(st.order.size());
    st.order.push_back(root);
    while (!q.empty()) {
        Dart d = q.front();
        q.pop_front();
        for (Dart x : {m.edge(d), m.rot(d), m.rot_inv(d)}) {
            if (st.num[x] < 0) {
                st.num[x] = static_cast<int>(st.order.size());
                st.order.push_back(x);
                q.push_back(x);
            }
        }
    }
}

// Emits tuples for darts visited at order index >= from.
void emit(const CombinatorialMap& m, const CodeColors& colors, EncodeState& st,
          std::size_t from, std::vector<std::int64_t>& out) {
    for (std::size_t i = from; i < st.order.size(); ++i) {
        Dart d = st.order[i];
        out.push_back(st.num[m.edge(d)]);
        out.push_back(st.num[m.rot(d)]);
        out.push_back(colors.dart_color.empty() ? 0 : colors.dart_color[d]);
        int g = colors.group_of.empty() ? -1 : colors.group_of[d];
        if (g < 0) {
            out.push_back(-1);
            out.push_back(0);
        } else {
            auto [it, fresh] = st.group_seen.emplace(g, static_cast<int>(st.group_seen.size()));
            out.push_back(it->second);
            out.push_back(colors.group_payload[g]);
        }
    }
}

std::vector<std::int64_t> encode_from(const CombinatorialMap& m, const CodeColors& colors, Dart root) {
    const int n = m.dart_count();
    EncodeState st;
    st.num.assign(n, -1);
    bfs(m, st, root);
    std::vector<std::int64_t> code;
    emit(m, colors, st, 0, code);
    // Greedy smallest continuation for remaining components.
    while (static_cast<int>(st.order.size()) < n) {
        std::vector<std::int64_t> best;
        EncodeState best_state;
        bool have = false;
        for (Dart u = 0; u < n; ++u) {
            if (st.num[u] >= 0) continue;
            EncodeState trial = st;
            std::size_t from = trial.order.size();
            bfs(m, trial, u);
            std::vector<std::int64_t> cont;
            emit(m, colors, trial, from, cont);
            if (!have || cont < best) {
                best = std::move(cont);
                best_state = std::move(trial);
                have = true;
            }
        }
        st = std::move(best_state);
        code.insert(code.end(), best.begin(), best.end());
    }
    return code;
}

}  // namespace

std::vector<std::int64_t> canonical_code(const CombinatorialMap& m, const CodeColors& colors) {
    const int n = m.dart_count();
    if (n == 0) return {};
    std::vector<std::int64_t> best;
    for (Dart r = 0; r < n; ++r) {
        auto code = encode_from(m, colors, r);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<std::int64_t> canonical_code(const CombinatorialMap& m) {
    return canonical_code(m, CodeColors{});
}

}  // namespace surfdiag
