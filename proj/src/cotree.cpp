#include "perfdig/cotree.hpp"

#include <algorithm>
#include <bit>

#include "perfdig/patterns.hpp"

namespace perfdig {

namespace {

void collect_leaves(const Cotree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.vertex);
        return;
    }
    for (const Cotree& c : t.children) collect_leaves(c, out);
}

std::vector<int> sorted_leaves(const Cotree& t) {
    std::vector<int> out;
    collect_leaves(t, out);
    std::sort(out.begin(), out.end());
    return out;
}

// components of the graph restricted to `scope`; `complemented` flips the
// adjacency so the same walk finds co-components
std::vector<VertexMask> components_within(const Digraph& g, VertexMask scope, bool complemented) {
    std::vector<VertexMask> comps;
    VertexMask seen = 0;
    for (VertexMask m = scope; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (seen & vbit(v)) continue;
        VertexMask comp = vbit(v);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) {
                const int u = std::countr_zero(f);
                const VertexMask nb =
                    complemented ? (scope & ~g.out_mask(u) & ~vbit(u)) : (scope & g.out_mask(u));
                next |= nb;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

std::array<int, 4> find_p4_within(const Digraph& g, VertexMask scope) {
    const std::vector<int> verts = mask_vertices(scope);
    const size_t m = verts.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k)
                for (size_t l = k + 1; l < m; ++l) {
                    std::array<int, 4> q = {verts[i], verts[j], verts[k], verts[l]};
                    if (induces_p4_in_symmetric(g, q)) return q;
                }
    throw Error("internal: cograph recursion stuck but no induced P4 found");
}

Cotree build_rec(const Digraph& g, VertexMask scope) {
    if (std::popcount(scope) == 1) {
        Cotree leaf;
        leaf.vertex = std::countr_zero(scope);
        return leaf;
    }
    std::vector<VertexMask> parts = components_within(g, scope, false);
    int label = 0;
    if (parts.size() < 2) {
        parts = components_within(g, scope, true);
        label = 1;
        if (parts.size() < 2) throw NotCographError(find_p4_within(g, scope));
    }
    Cotree node;
    node.label = label;
    for (VertexMask p : parts) node.children.push_back(build_rec(g, p));
    // larger subtrees first, ties by leaf list; this is what makes
    // K2 + K1 render as 0(1(v0 v1) v2)
    std::sort(node.children.begin(), node.children.end(), [](const Cotree& a, const Cotree& b) {
        const std::vector<int> la = sorted_leaves(a), lb = sorted_leaves(b);
        if (la.size() != lb.size()) return la.size() > lb.size();
        return la < lb;
    });
    return node;
}

}  // namespace

Cotree build_cotree(const Digraph& g) {
    if (!is_symmetric(g)) throw NotSymmetricError();
    if (g.vertex_count() == 0) return {};
    return build_rec(g, g.full_mask());
}

namespace {

VertexMask validate(const Cotree& t, int parent_label, int n) {
    if (t.is_leaf()) {
        if (t.label != -1 || !t.children.empty())
            throw MalformedCotreeError("leaf node carries children or a label");
        if (t.vertex >= n) throw MalformedCotreeError("leaf id out of range");
        return vbit(t.vertex);
    }
    if (t.label != 0 && t.label != 1) throw MalformedCotreeError("internal node label must be 0 or 1");
    if (t.label == parent_label) throw MalformedCotreeError("labels must alternate");
    if (t.children.size() < 2) throw MalformedCotreeError("internal node needs >= 2 children");
    VertexMask leaves = 0;
    for (const Cotree& c : t.children) {
        const VertexMask sub = validate(c, t.label, n);
        if (leaves & sub) throw MalformedCotreeError("duplicate leaf id");
        leaves |= sub;
    }
    return leaves;
}

VertexMask evaluate(const Cotree& t, Digraph& g) {
    if (t.is_leaf()) return vbit(t.vertex);
    std::vector<VertexMask> subs;
    subs.reserve(t.children.size());
    VertexMask all = 0;
    for (const Cotree& c : t.children) {
        subs.push_back(evaluate(c, g));
        all |= subs.back();
    }
    if (t.label == 1) {
        for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = i + 1; j < subs.size(); ++j)
                for (VertexMask a = subs[i]; a; a &= a - 1)
                    for (VertexMask b = subs[j]; b; b &= b - 1) {
                        const int u = std::countr_zero(a), v = std::countr_zero(b);
                        g.add_arc(u, v);
                        g.add_arc(v, u);
                    }
    }
    return all;
}

}  // namespace

Digraph cotree_to_graph(const Cotree& t) {
    if (t.is_empty_forest()) throw MalformedCotreeError("empty forest has no graph");
    std::vector<int> leaves = sorted_leaves(t);
    const int n = static_cast<int>(leaves.size());
    for (int i = 0; i < n; ++i)
        if (leaves[static_cast<size_t>(i)] != i)
            throw MalformedCotreeError("leaves must be exactly 0..n-1");
    validate(t, -1, n);
    Digraph g(n);
    evaluate(t, g);
    return g;
}

std::string render_cotree(const Cotree& t) {
    if (t.is_leaf()) return "v" + std::to_string(t.vertex);
    std::string s = std::to_string(t.label) + "(";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) s += " ";
        s += render_cotree(t.children[i]);
    }
    return s + ")";
}

}  // namespace perfdig
