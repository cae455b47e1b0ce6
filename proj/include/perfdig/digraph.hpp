#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "perfdig/errors.hpp"

namespace perfdig {

/// Vertex subset as a bitmask; bit v set means vertex v is in the set.
using VertexMask = std::uint64_t;

constexpr VertexMask vbit(int v) { return VertexMask{1} << v; }

std::vector<int> mask_vertices(VertexMask m);
VertexMask mask_of(std::span<const int> vertices);
VertexMask mask_of(std::initializer_list<int> vertices);

/// Order of masks read as ascending vertex lists ({0,1,5} < {0,2,3}).
bool mask_lex_less(VertexMask a, VertexMask b);

/// Loopless digraph on vertices 0..n-1 with constant-time arc test.
/// Adjacency is stored as one out-neighbor bitmask per vertex, which caps
/// the size at 64 vertices; every solver here is exponential anyway.
class Digraph {
public:
    static constexpr int kMaxVertices = 64;

    Digraph() = default;
    explicit Digraph(int n);

    int vertex_count() const { return n_; }
    bool arc(int u, int v) const { return (out_[u] >> v) & 1u; }
    bool digon(int u, int v) const { return arc(u, v) && arc(v, u); }
    VertexMask out_mask(int u) const { return out_[u]; }
    VertexMask in_mask(int v) const;
    VertexMask full_mask() const { return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1; }

    int arc_count() const;
    std::vector<std::pair<int, int>> arcs() const;  // sorted by (u, v)

    void add_arc(int u, int v);     // throws LoopArcError / OutOfRangeError
    void remove_arc(int u, int v);
    void toggle_arc(int u, int v);

    bool operator==(const Digraph&) const = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::vector<VertexMask> out_;
};

/// Digraph with exactly the given arcs (duplicates collapse).
Digraph build_digraph(int n, std::span<const std::pair<int, int>> arcs);
Digraph build_digraph(int n, std::initializer_list<std::pair<int, int>> arcs);

/// S(D): the arcs that occur in antiparallel pairs.
Digraph symmetric_part(const Digraph& d);

/// O(D): the arcs of D that are not part of a digon.
Digraph oriented_part(const Digraph& d);

/// All arcs reversed.
Digraph reverse(const Digraph& d);

/// Subdigraph on the given vertices, relabeled by increasing original id.
Digraph induced_subdigraph(const Digraph& d, VertexMask vertices);

/// Complement within the symmetric world: digons exactly on the
/// non-adjacent distinct pairs. Input must be symmetric.
Digraph symmetric_complement(const Digraph& g);

bool is_symmetric(const Digraph& d);

/// True iff D has no directed cycle of any length >= 2 (a digon counts).
bool is_acyclic(const Digraph& d);

/// Acyclicity of the subdigraph induced by `subset`, tested in place by
/// Kahn-style source elimination.
bool is_acyclic_within(const Digraph& d, VertexMask subset);

/// Connected components of S(D) viewed as an undirected graph, as masks
/// ordered by smallest member; isolated vertices become singletons.
std::vector<VertexMask> symmetric_components(const Digraph& d);

}  // namespace perfdig
