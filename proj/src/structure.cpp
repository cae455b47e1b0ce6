#include "perfdig/structure.hpp"

#include <algorithm>
#include <bit>

#include "perfdig/patterns.hpp"

namespace perfdig {

ComponentStructure check_f_free_structure(const Digraph& d) {
    if (auto site = find_forbidden_site(d)) throw NotFFreeError(site->pattern, site->vertices);

    ComponentStructure out;
    out.components = symmetric_components(d);
    const int k = static_cast<int>(out.components.size());

    // joined[i][j]: some arc runs between the two components
    std::vector<std::vector<char>> joined(static_cast<size_t>(k),
                                          std::vector<char>(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool any = false;
            for (VertexMask a = out.components[static_cast<size_t>(i)]; a && !any; a &= a - 1) {
                const int u = std::countr_zero(a);
                const VertexMask other = out.components[static_cast<size_t>(j)];
                if ((d.out_mask(u) & other) || (d.in_mask(u) & other)) any = true;
            }
            joined[static_cast<size_t>(i)][static_cast<size_t>(j)] = any;
            joined[static_cast<size_t>(j)][static_cast<size_t>(i)] = any;
        }

    // groups = connected components of the "no arc between" relation; the
    // relation must come out as a disjoint union of cliques, otherwise the
    // multipartite shape is broken
    std::vector<int> group_of(static_cast<size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        if (group_of[static_cast<size_t>(i)] >= 0) continue;
        const int g = static_cast<int>(out.groups.size());
        std::vector<int> stack = {i};
        group_of[static_cast<size_t>(i)] = g;
        out.groups.push_back({});
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            out.groups.back().push_back(c);
            for (int j = 0; j < k; ++j)
                if (j != c && !joined[static_cast<size_t>(c)][static_cast<size_t>(j)] &&
                    group_of[static_cast<size_t>(j)] < 0) {
                    group_of[static_cast<size_t>(j)] = g;
                    stack.push_back(j);
                }
        }
        std::sort(out.groups.back().begin(), out.groups.back().end());
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!joined[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            // a joined pair inside one group means the no-arc relation is
            // not transitive here; the multipartite reading fails but the
            // pairwise claim below still must hold
            if (group_of[static_cast<size_t>(i)] == group_of[static_cast<size_t>(j)])
                out.multipartite = false;
            // joined components: complete orientation, one arc per cross pair
            const VertexMask ci = out.components[static_cast<size_t>(i)];
            const VertexMask cj = out.components[static_cast<size_t>(j)];
            for (VertexMask a = ci; a; a &= a - 1) {
                const int u = std::countr_zero(a);
                for (VertexMask b = cj; b; b &= b - 1) {
                    const int v = std::countr_zero(b);
                    const bool uv = d.arc(u, v), vu = d.arc(v, u);
                    if (uv && vu) throw StructureViolationError(i, j, u, v, "carries a digon");
                    if (!uv && !vu) throw StructureViolationError(i, j, u, v, "has no arc");
                    if (uv) out.cross_arcs[{i, j}].emplace_back(u, v);
                    else out.cross_arcs[{j, i}].emplace_back(v, u);
                }
            }
        }
    for (auto& [key, arcs] : out.cross_arcs) std::sort(arcs.begin(), arcs.end());
    return out;
}

PathCoverResult min_path_cover(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return {};
    if (n > 20) throw OutOfRangeError("path cover limited to 20 vertices");
    const VertexMask full = d.full_mask();
    const size_t words = size_t{1} << n;

    // open[x][v]: fewest new paths still to start, covered set x, current
    // path open at v. fresh[x]: same with no open path.
    constexpr int kInf = 1 << 20;
    std::vector<int> open(words * static_cast<size_t>(n), kInf);
    std::vector<int> fresh(words, kInf);
    auto open_at = [&](VertexMask x, int v) -> int& {
        return open[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(v)];
    };

    fresh[full] = 0;
    for (int v = 0; v < n; ++v) open_at(full, v) = 0;
    for (VertexMask x = full; x-- > 0;) {
        int best_start = kInf;
        for (VertexMask m = full & ~x; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            best_start = std::min(best_start, open_at(x | vbit(w), w));
        }
        fresh[x] = 1 + best_start;
        for (VertexMask m = x; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            int best = fresh[x];
            for (VertexMask e = d.out_mask(v) & ~x; e; e &= e - 1) {
                const int w = std::countr_zero(e);
                best = std::min(best, open_at(x | vbit(w), w));
            }
            open_at(x, v) = best;
        }
    }

    PathCoverResult result;
    result.count = fresh[0];

    // Greedy witness: grow the lexicographically smallest feasible path,
    // preferring to stop as soon as the remainder is still coverable within
    // budget (a prefix precedes every extension).
    VertexMask covered = 0;
    int budget = result.count;
    while (covered != full) {
        int start = -1;
        for (int s = 0; s < n && start < 0; ++s)
            if (!(covered & vbit(s)) && open_at(covered | vbit(s), s) == budget - 1) start = s;
        std::vector<int> path = {start};
        VertexMask x = covered | vbit(start);
        int last = start;
        while (fresh[x] != budget - 1) {
            int next = -1;
            for (VertexMask e = d.out_mask(last) & ~x; e && next < 0; e &= e - 1) {
                const int w = std::countr_zero(e);
                if (open_at(x | vbit(w), w) == budget - 1) next = w;
            }
            path.push_back(next);
            x |= vbit(next);
            last = next;
        }
        result.paths.push_back(std::move(path));
        covered = x;
        --budget;
    }
    return result;
}

}  // namespace perfdig
