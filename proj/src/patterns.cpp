#include "perfdig/patterns.hpp"

#include <algorithm>
#include <bit>

namespace perfdig {

namespace {

void check_subset(const Digraph& d, std::span<const int> verts, size_t want) {
    VertexMask m = 0;
    for (int v : verts) {
        if (v < 0 || v >= d.vertex_count())
            throw BadSubsetSizeError("subset vertex " + std::to_string(v) + " out of range");
        m |= vbit(v);
    }
    if (static_cast<size_t>(std::popcount(m)) != want)
        throw BadSubsetSizeError("expected " + std::to_string(want) + " distinct vertices");
}

}  // namespace

TriplePattern classify_triple(const Digraph& d, std::array<int, 3> triple) {
    check_subset(d, triple, 3);
    std::sort(triple.begin(), triple.end());
    const int a = triple[0], b = triple[1], c = triple[2];
    const bool ab = d.arc(a, b), ba = d.arc(b, a);
    const bool ac = d.arc(a, c), ca = d.arc(c, a);
    const bool bc = d.arc(b, c), cb = d.arc(c, b);
    const int arcs = ab + ba + ac + ca + bc + cb;
    const int digons = (ab && ba) + (ac && ca) + (bc && cb);

    if (arcs == 0) return {TripleKind::None, -1};

    if (arcs == 3 && digons == 0) {
        // directed 3-cycle in either rotation sense
        if ((ab && bc && ca) || (ac && cb && ba)) return {TripleKind::C3, -1};
        return {TripleKind::Other, -1};
    }

    if (arcs == 2 && digons == 0) {
        // directed path x -> m -> z
        if (ab && bc) return {TripleKind::P3, b};
        if (cb && ba) return {TripleKind::P3, b};
        if (ba && ac) return {TripleKind::P3, a};
        if (ca && ab) return {TripleKind::P3, a};
        if (ac && cb) return {TripleKind::P3, c};
        if (bc && ca) return {TripleKind::P3, c};
        return {TripleKind::Other, -1};
    }

    if (arcs == 3 && digons == 1) {
        // digon {p,q} plus one asymmetric arc touching the third vertex t.
        // Arc out of the digon (x -> t): path x' -> x -> t doubled on its
        // first arc, i.e. P3+ with midpoint x. Arc into the digon (t -> x):
        // path t -> x -> x' doubled on its second arc, i.e. P3- with
        // midpoint x. Either way the midpoint is the digon endpoint the
        // asymmetric arc touches.
        int p, q, t;
        if (ab && ba) { p = a; q = b; t = c; }
        else if (ac && ca) { p = a; q = c; t = b; }
        else { p = b; q = c; t = a; }
        if (d.arc(p, t)) return {TripleKind::P3Plus, p};
        if (d.arc(q, t)) return {TripleKind::P3Plus, q};
        if (d.arc(t, p)) return {TripleKind::P3Minus, p};
        return {TripleKind::P3Minus, q};
    }

    return {TripleKind::Other, -1};
}

bool induces_p4_in_symmetric(const Digraph& d, std::array<int, 4> quad) {
    check_subset(d, quad, 4);
    std::sort(quad.begin(), quad.end());
    // 3 symmetric edges with degree multiset {1,1,2,2} is exactly a P4
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (d.digon(quad[i], quad[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges != 3) return false;
    int ones = 0, twos = 0;
    for (int x : deg) {
        if (x == 1) ++ones;
        if (x == 2) ++twos;
    }
    return ones == 2 && twos == 2;
}

PatternSignature p4c_signature(const Digraph& d) {
    const int n = d.vertex_count();
    PatternSignature sig;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                TriplePattern p = classify_triple(d, {i, j, k});
                switch (p.kind) {
                    case TripleKind::C3: sig.c3_triples.push_back({i, j, k}); break;
                    case TripleKind::P3: sig.p3_sites.push_back({{i, j, k}, p.midpoint}); break;
                    case TripleKind::P3Plus:
                    case TripleKind::P3Minus:
                        sig.p3_aug_sites.push_back({{i, j, k}, p.midpoint});
                        break;
                    default: break;
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (induces_p4_in_symmetric(d, {i, j, k, l}))
                        sig.p4_quads.push_back({i, j, k, l});
    return sig;  // loops emit in ascending order, so the sets are sorted
}

bool are_p4c_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw VertexCountMismatchError(a.vertex_count(), b.vertex_count());
    return p4c_signature(a) == p4c_signature(b);
}

namespace {

std::string set_string(std::span<const int> v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

template <class T>
std::optional<std::pair<T, char>> first_diff(const std::vector<T>& a, const std::vector<T>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++i; ++j; continue; }
        return a[i] < b[j] ? std::make_pair(a[i], 'A') : std::make_pair(b[j], 'B');
    }
    if (i < a.size()) return std::make_pair(a[i], 'A');
    if (j < b.size()) return std::make_pair(b[j], 'B');
    return std::nullopt;
}

}  // namespace

std::optional<std::string> signature_difference(const PatternSignature& a,
                                                const PatternSignature& b) {
    if (auto d = first_diff(a.p4_quads, b.p4_quads))
        return "p4-quad " + set_string(d->first) + " only-in " + d->second;
    if (auto d = first_diff(a.c3_triples, b.c3_triples))
        return "c3-triple " + set_string(d->first) + " only-in " + d->second;
    if (auto d = first_diff(a.p3_sites, b.p3_sites))
        return "p3-site " + set_string(d->first.first) + " midpoint " +
               std::to_string(d->first.second) + " only-in " + d->second;
    if (auto d = first_diff(a.p3_aug_sites, b.p3_aug_sites))
        return "p3aug-site " + set_string(d->first.first) + " midpoint " +
               std::to_string(d->first.second) + " only-in " + d->second;
    return std::nullopt;
}

namespace {

// DFS for an induced directed cycle of exactly k vertices, extending
// chordless directed paths v0.. in lexicographic order. A new vertex w may
// carry only the path arc (last -> w); the closing arc (w -> v0) is required
// at the final position and forbidden earlier, so the first cycle found is
// the lexicographically smallest of this length.
struct CycleSearch {
    const Digraph& d;
    int k;
    std::vector<int> path;

    bool admissible(int w, bool closing) const {
        const int last = path.back();
        if (!d.arc(last, w) || d.arc(w, last)) return false;
        const int limit = static_cast<int>(path.size()) - 1;
        for (int i = 0; i < limit; ++i) {
            const int u = path[static_cast<size_t>(i)];
            if (i == 0 && closing) {
                if (!d.arc(w, u) || d.arc(u, w)) return false;
            } else {
                if (d.arc(w, u) || d.arc(u, w)) return false;
            }
        }
        return true;
    }

    bool extend() {
        if (static_cast<int>(path.size()) == k - 1) {
            for (int w = path[0] + 1; w < d.vertex_count(); ++w) {
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                if (admissible(w, true)) {
                    path.push_back(w);
                    return true;
                }
            }
            return false;
        }
        for (int w = path[0] + 1; w < d.vertex_count(); ++w) {
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

std::optional<InducedCycleWitness> find_induced_directed_cycle(const Digraph& d, int min_len) {
    const int n = d.vertex_count();
    if (min_len < 3) min_len = 3;
    for (int k = min_len; k <= n; ++k) {
        for (int v0 = 0; v0 + k <= n; ++v0) {
            CycleSearch search{d, k, {v0}};
            if (search.extend()) return InducedCycleWitness{search.path};
        }
    }
    return std::nullopt;
}

bool is_induced_directed_cycle(const Digraph& d, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k < 3) return false;
    VertexMask seen = 0;
    for (int v : vertices) {
        if (v < 0 || v >= d.vertex_count() || (seen & vbit(v))) return false;
        seen |= vbit(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const bool want = (j == (i + 1) % k);
            if (d.arc(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]) != want)
                return false;
        }
    return true;
}

std::optional<ForbiddenSite> find_forbidden_site(const Digraph& d) {
    const int n = d.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                TriplePattern p = classify_triple(d, {i, j, k});
                switch (p.kind) {
                    case TripleKind::C3: return ForbiddenSite{"C3", {i, j, k}, -1};
                    case TripleKind::P3: return ForbiddenSite{"P3", {i, j, k}, p.midpoint};
                    case TripleKind::P3Plus: return ForbiddenSite{"P3+", {i, j, k}, p.midpoint};
                    case TripleKind::P3Minus: return ForbiddenSite{"P3-", {i, j, k}, p.midpoint};
                    default: break;
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (induces_p4_in_symmetric(d, {i, j, k, l}))
                        return ForbiddenSite{"symP4", {i, j, k, l}, -1};
    return std::nullopt;
}

bool is_f_free(const Digraph& d) { return !find_forbidden_site(d).has_value(); }

}  // namespace perfdig
