#include "perfdig/digraph.hpp"

#include <bit>

namespace perfdig {

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

VertexMask mask_of(std::span<const int> vertices) {
    VertexMask m = 0;
    for (int v : vertices) m |= vbit(v);
    return m;
}

VertexMask mask_of(std::initializer_list<int> vertices) {
    return mask_of(std::span<const int>(vertices.begin(), vertices.size()));
}

bool mask_lex_less(VertexMask a, VertexMask b) {
    if (a == b) return false;
    const VertexMask diff = a ^ b;
    const VertexMask low = diff & (~diff + 1);
    const VertexMask above = ~(low | (low - 1));  // vertices beyond the first difference
    // The side holding the first differing vertex is smaller, unless the
    // other side is a strict prefix (nothing beyond that point).
    if (a & low) return (b & above) != 0;
    return (a & above) == 0;
}

Digraph::Digraph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw OutOfRangeError("vertex count " + std::to_string(n) + " out of range [0,64]");
    n_ = n;
    out_.assign(static_cast<size_t>(n), 0);
}

void Digraph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw OutOfRangeError("arc endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw LoopArcError(u);
}

void Digraph::add_arc(int u, int v) {
    check_pair(u, v);
    out_[u] |= vbit(v);
}

void Digraph::remove_arc(int u, int v) {
    check_pair(u, v);
    out_[u] &= ~vbit(v);
}

void Digraph::toggle_arc(int u, int v) {
    check_pair(u, v);
    out_[u] ^= vbit(v);
}

VertexMask Digraph::in_mask(int v) const {
    VertexMask m = 0;
    for (int u = 0; u < n_; ++u)
        if (arc(u, v)) m |= vbit(u);
    return m;
}

int Digraph::arc_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u) c += std::popcount(out_[u]);
    return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(arc_count()));
    for (int u = 0; u < n_; ++u)
        for (VertexMask m = out_[u]; m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
    return out;
}

Digraph build_digraph(int n, std::span<const std::pair<int, int>> arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

Digraph build_digraph(int n, std::initializer_list<std::pair<int, int>> arcs) {
    return build_digraph(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
}

Digraph symmetric_part(const Digraph& d) {
    Digraph s(d.vertex_count());
    for (int u = 0; u < d.vertex_count(); ++u)
        for (VertexMask m = d.out_mask(u); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (d.arc(v, u)) s.add_arc(u, v);
        }
    return s;
}

Digraph oriented_part(const Digraph& d) {
    Digraph o(d.vertex_count());
    for (int u = 0; u < d.vertex_count(); ++u)
        for (VertexMask m = d.out_mask(u); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (!d.arc(v, u)) o.add_arc(u, v);
        }
    return o;
}

Digraph reverse(const Digraph& d) {
    Digraph r(d.vertex_count());
    for (auto [u, v] : d.arcs()) r.add_arc(v, u);
    return r;
}

Digraph induced_subdigraph(const Digraph& d, VertexMask vertices) {
    if (vertices & ~d.full_mask()) throw OutOfRangeError("subset contains out-of-range vertices");
    std::vector<int> verts = mask_vertices(vertices);
    Digraph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            if (i != j && d.arc(verts[i], verts[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Digraph symmetric_complement(const Digraph& g) {
    if (!is_symmetric(g)) throw NotSymmetricError();
    Digraph c(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (u != v && !g.arc(u, v)) c.add_arc(u, v);
    return c;
}

bool is_symmetric(const Digraph& d) {
    for (int u = 0; u < d.vertex_count(); ++u)
        for (VertexMask m = d.out_mask(u); m; m &= m - 1)
            if (!d.arc(std::countr_zero(m), u)) return false;
    return true;
}

bool is_acyclic_within(const Digraph& d, VertexMask subset) {
    VertexMask rem = subset & d.full_mask();
    while (rem) {
        // peel every current source (no predecessor inside rem)
        VertexMask sources = 0;
        for (VertexMask m = rem; m; m &= m - 1) {
            int v = std::countr_zero(m);
            bool has_pred = false;
            for (VertexMask p = rem; p; p &= p - 1) {
                int u = std::countr_zero(p);
                if (u != v && d.arc(u, v)) {
                    has_pred = true;
                    break;
                }
            }
            if (!has_pred) sources |= vbit(v);
        }
        if (!sources) return false;  // every remaining vertex lies on a cycle path
        rem &= ~sources;
    }
    return true;
}

bool is_acyclic(const Digraph& d) { return is_acyclic_within(d, d.full_mask()); }

std::vector<VertexMask> symmetric_components(const Digraph& d) {
    const int n = d.vertex_count();
    Digraph s = symmetric_part(d);
    std::vector<VertexMask> comps;
    VertexMask seen = 0;
    for (int v = 0; v < n; ++v) {
        if (seen & vbit(v)) continue;
        VertexMask comp = vbit(v);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask m = frontier; m; m &= m - 1)
                next |= s.out_mask(std::countr_zero(m));
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

}  // namespace perfdig
