#include "perfdig/solvers.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <unordered_map>

namespace perfdig {

bool is_proper_coloring(const Digraph& d, std::span<const int> assignment) {
    const int n = d.vertex_count();
    if (static_cast<int>(assignment.size()) != n) throw PartialAssignmentError();
    std::unordered_map<int, VertexMask> classes;
    for (int v = 0; v < n; ++v) classes[assignment[v]] |= vbit(v);
    for (const auto& [color, mask] : classes)
        if (!is_acyclic_within(d, mask)) return false;
    return true;
}

namespace {

// Enumerates the maximal acyclic subsets of `scope` that contain its
// smallest vertex, by include/exclude over the remaining vertices. A vertex
// with no arcs inside the scope can never be blocked, so its exclusion
// branch is pruned; beyond that the search is plainly exponential.
struct ChiSolver {
    const Digraph& d;
    std::unordered_map<VertexMask, int> memo;

    bool touched(int v, VertexMask scope) const {
        return ((d.out_mask(v) | d.in_mask(v)) & scope & ~vbit(v)) != 0;
    }

    bool is_maximal(VertexMask t, VertexMask scope) const {
        for (VertexMask m = scope & ~t; m; m &= m - 1)
            if (is_acyclic_within(d, t | vbit(std::countr_zero(m)))) return false;
        return true;
    }

    template <class F>
    void enumerate(VertexMask scope, const std::vector<int>& cand, size_t idx, VertexMask t,
                   F&& f) {
        if (idx == cand.size()) {
            if (is_maximal(t, scope)) f(t);
            return;
        }
        const int c = cand[idx];
        const bool can_add = is_acyclic_within(d, t | vbit(c));
        if (can_add) enumerate(scope, cand, idx + 1, t | vbit(c), f);
        if (!can_add || touched(c, scope)) enumerate(scope, cand, idx + 1, t, f);
    }

    template <class F>
    void for_each_class(VertexMask scope, F&& f) {
        const int v0 = std::countr_zero(scope);
        std::vector<int> cand = mask_vertices(scope & ~vbit(v0));
        enumerate(scope, cand, 0, vbit(v0), f);
    }

    int solve(VertexMask scope) {
        if (!scope) return 0;
        auto it = memo.find(scope);
        if (it != memo.end()) return it->second;
        int best = INT_MAX;
        for_each_class(scope, [&](VertexMask t) { best = std::min(best, solve(scope & ~t)); });
        const int chi = best + 1;
        memo.emplace(scope, chi);
        return chi;
    }
};

}  // namespace

ColoringResult dichromatic_number(const Digraph& d) {
    const int n = d.vertex_count();
    ColoringResult result;
    result.assignment.assign(static_cast<size_t>(n), 0);
    if (n == 0) return result;

    ChiSolver solver{d, {}};
    VertexMask rest = d.full_mask();
    result.chi = solver.solve(rest);
    int color = 0;
    while (rest) {
        ++color;
        const int target = solver.solve(rest) - 1;
        VertexMask best = 0;
        solver.for_each_class(rest, [&](VertexMask t) {
            if (solver.solve(rest & ~t) == target && (best == 0 || mask_lex_less(t, best)))
                best = t;
        });
        for (VertexMask m = best; m; m &= m - 1)
            result.assignment[static_cast<size_t>(std::countr_zero(m))] = color;
        rest &= ~best;
    }
    return result;
}

namespace {

// Tomita-style max clique on an undirected adjacency given as digon masks.
struct CliqueSolver {
    const std::vector<VertexMask>& adj;
    int n;
    VertexMask best = 0;
    int best_size = 0;

    void expand(VertexMask r, int r_size, VertexMask p) {
        if (!p) {
            if (r_size > best_size) {
                best = r;
                best_size = r_size;
            }
            return;
        }
        // greedy coloring of p: vertices of color class i are mutually
        // non-adjacent, so any clique uses at most #classes of them
        std::vector<int> order;
        std::vector<int> color;
        VertexMask uncolored = p;
        int classes = 0;
        while (uncolored) {
            ++classes;
            VertexMask avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                order.push_back(v);
                color.push_back(classes);
                uncolored &= ~vbit(v);
                avail &= ~(adj[static_cast<size_t>(v)] | vbit(v));
            }
        }
        for (size_t i = order.size(); i-- > 0;) {
            const int v = order[i];
            if (r_size + color[i] <= best_size) return;
            expand(r | vbit(v), r_size + 1, p & adj[static_cast<size_t>(v)]);
            p &= ~vbit(v);
        }
    }
};

}  // namespace

CliqueWitness clique_number(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return {};
    std::vector<VertexMask> adj(static_cast<size_t>(n), 0);
    const Digraph s = symmetric_part(d);
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = s.out_mask(v);
    CliqueSolver solver{adj, n};
    solver.expand(0, 0, d.full_mask());
    return {solver.best_size, mask_vertices(solver.best)};
}

namespace {

void check_table_size(int n) {
    if (n > 25) throw OutOfRangeError("per-subset tables limited to 25 vertices");
}

}  // namespace

std::vector<char> acyclic_table(const Digraph& d) {
    const int n = d.vertex_count();
    check_table_size(n);
    std::vector<VertexMask> in_col(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) in_col[static_cast<size_t>(v)] = d.in_mask(v);
    std::vector<char> ac(size_t{1} << n, 0);
    ac[0] = 1;
    for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
        // s is acyclic iff it has a source v and s \ {v} is acyclic;
        // removing a source never touches a cycle, so one source suffices
        for (VertexMask m = s; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if ((in_col[static_cast<size_t>(v)] & s) == 0) {
                ac[s] = ac[s & ~vbit(v)];
                break;
            }
        }
    }
    return ac;
}

std::vector<int> dichromatic_table(const Digraph& d) {
    const int n = d.vertex_count();
    check_table_size(n);
    const std::vector<char> ac = acyclic_table(d);
    std::vector<int> chi(size_t{1} << n, 0);
    for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
        const VertexMask low = s & (~s + 1);
        int best = INT_MAX;
        for (VertexMask t = s; t; t = (t - 1) & s)
            if ((t & low) && ac[t]) best = std::min(best, chi[s & ~t]);
        chi[s] = best + 1;
    }
    return chi;
}

std::vector<int> clique_table(const Digraph& d) {
    const int n = d.vertex_count();
    check_table_size(n);
    const Digraph s = symmetric_part(d);
    std::vector<int> omega(size_t{1} << n, 0);
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        const int v = std::countr_zero(m);
        omega[m] = std::max(omega[m & ~vbit(v)], 1 + omega[m & s.out_mask(v)]);
    }
    return omega;
}

}  // namespace perfdig
