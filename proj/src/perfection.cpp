#include "perfdig/perfection.hpp"

#include <algorithm>
#include <bit>

namespace perfdig {

namespace {

// Undirected sibling of the chordless-cycle DFS in patterns.cpp: grow a
// chordless path in lexicographic order, allowing adjacency of a new vertex
// only to the path's last vertex, plus to its first when closing. The
// orientation tie v1 < v_{k-1} keeps each cycle from appearing twice.
struct HoleSearch {
    const Digraph& g;  // symmetric
    int k;
    std::vector<int> path;

    bool adj(int u, int v) const { return g.arc(u, v); }

    bool admissible(int w, bool closing) const {
        if (!adj(path.back(), w)) return false;
        const int limit = static_cast<int>(path.size()) - 1;
        for (int i = 0; i < limit; ++i) {
            const bool linked = adj(path[static_cast<size_t>(i)], w);
            if (i == 0 && closing) {
                if (!linked) return false;
            } else if (linked) {
                return false;
            }
        }
        return true;
    }

    bool extend() {
        if (static_cast<int>(path.size()) == k - 1) {
            for (int w = path[1] + 1; w < g.vertex_count(); ++w) {
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                if (admissible(w, true)) {
                    path.push_back(w);
                    return true;
                }
            }
            return false;
        }
        for (int w = path[0] + 1; w < g.vertex_count(); ++w) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (!admissible(w, false)) continue;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Digraph& g) {
    const int n = g.vertex_count();
    for (int k = 5; k <= n; k += 2) {
        for (int v0 = 0; v0 + k <= n; ++v0) {
            for (int v1 = v0 + 1; v1 <= n - 1; ++v1) {
                if (!g.arc(v0, v1)) continue;
                HoleSearch search{g, k, {v0, v1}};
                if (search.extend()) return search.path;
            }
        }
    }
    return std::nullopt;
}

PerfectionReport is_perfect_undirected(const Digraph& g) {
    if (!is_symmetric(g)) throw NotSymmetricError();
    if (auto hole = find_odd_hole(g))
        return {false, PerfectionMethod::Structural, OddHoleWitness{*hole}};
    if (auto hole = find_odd_hole(symmetric_complement(g)))
        return {false, PerfectionMethod::Structural, OddAntiholeWitness{*hole}};
    return {true, PerfectionMethod::Structural, {}};
}

PerfectionReport is_perfect_bruteforce(const Digraph& d) {
    const int n = d.vertex_count();
    const std::vector<int> chi = dichromatic_table(d);
    const std::vector<int> omega = clique_table(d);
    for (int size = 1; size <= n; ++size) {
        // Gosper's hack walks the masks of one popcount in increasing order
        VertexMask s = (VertexMask{1} << size) - 1;
        const VertexMask limit = VertexMask{1} << n;
        while (s < limit) {
            if (chi[s] != omega[s])
                return {false, PerfectionMethod::Definitional,
                        FailingSubdigraph{mask_vertices(s), chi[s], omega[s]}};
            const VertexMask c = s & (~s + 1);
            const VertexMask r = s + c;
            s = r | (((s ^ r) >> 2) / c);
        }
    }
    return {true, PerfectionMethod::Definitional, {}};
}

PerfectionReport is_perfect_structural(const Digraph& d) {
    if (auto cycle = find_induced_directed_cycle(d))
        return {false, PerfectionMethod::Structural, *cycle};
    const Digraph s = symmetric_part(d);
    if (auto hole = find_odd_hole(s))
        return {false, PerfectionMethod::Structural, OddHoleWitness{*hole}};
    if (auto hole = find_odd_hole(symmetric_complement(s)))
        return {false, PerfectionMethod::Structural, OddAntiholeWitness{*hole}};
    return {true, PerfectionMethod::Structural, {}};
}

}  // namespace perfdig
