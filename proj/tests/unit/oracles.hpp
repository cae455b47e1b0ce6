#pragma once

// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's algorithmic paths: acyclicity is a three-color DFS
// instead of source peeling, the chromatic search enumerates raw
// assignments, and cycles come from whole-subset filtering instead of the
// path-extension DFS.

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "perfdig/digraph.hpp"

namespace test_oracle {

using perfdig::Digraph;
using perfdig::VertexMask;
using perfdig::vbit;

inline bool dfs_has_cycle(const Digraph& d, VertexMask scope, int v, std::vector<int>& color) {
    color[static_cast<size_t>(v)] = 1;  // on stack
    for (int w = 0; w < d.vertex_count(); ++w) {
        if (w == v || !(scope & vbit(w)) || !d.arc(v, w)) continue;
        if (color[static_cast<size_t>(w)] == 1) return true;
        if (color[static_cast<size_t>(w)] == 0 && dfs_has_cycle(d, scope, w, color)) return true;
    }
    color[static_cast<size_t>(v)] = 2;
    return false;
}

inline bool oracle_is_acyclic(const Digraph& d, VertexMask scope) {
    std::vector<int> color(static_cast<size_t>(d.vertex_count()), 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        if ((scope & vbit(v)) && color[static_cast<size_t>(v)] == 0 &&
            dfs_has_cycle(d, scope, v, color))
            return false;
    return true;
}

inline bool oracle_assignment_proper(const Digraph& d, const std::vector<int>& colors) {
    std::vector<VertexMask> classes;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const size_t c = static_cast<size_t>(colors[static_cast<size_t>(v)]);
        if (classes.size() <= c) classes.resize(c + 1, 0);
        classes[c] |= vbit(v);
    }
    for (VertexMask m : classes)
        if (!oracle_is_acyclic(d, m)) return false;
    return true;
}

/// Smallest k such that some assignment of k colors is proper, by counting
/// through all k^n assignments.
inline int oracle_chi(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(static_cast<size_t>(n), 0);
        while (true) {
            if (oracle_assignment_proper(d, colors)) return k;
            int pos = 0;
            while (pos < n && colors[static_cast<size_t>(pos)] == k - 1) {
                colors[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
            ++colors[static_cast<size_t>(pos)];
        }
    }
    return n;
}

/// All induced directed cycles as canonical sequences (start at the least
/// vertex, follow the arcs), found by whole-subset filtering.
inline std::vector<std::vector<int>> oracle_induced_cycles(const Digraph& d, int min_len = 3) {
    const int n = d.vertex_count();
    std::vector<std::vector<int>> found;
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
        const int k = std::popcount(s);
        if (k < min_len) continue;
        bool ok = true;
        for (VertexMask m = s; m && ok; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (std::popcount(d.out_mask(v) & s) != 1 || std::popcount(d.in_mask(v) & s) != 1)
                ok = false;
        }
        if (!ok) continue;
        // in/out degree one everywhere: a disjoint union of directed
        // cycles; a single cycle walks through all k vertices
        const int start = std::countr_zero(s);
        std::vector<int> seq = {start};
        int cur = start;
        while (true) {
            const int next = std::countr_zero(d.out_mask(cur) & s);
            if (next == start) break;
            seq.push_back(next);
            cur = next;
        }
        if (static_cast<int>(seq.size()) == k) found.push_back(seq);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

}  // namespace test_oracle
