#pragma once

#include <string>
#include <vector>

#include "perfdig/digraph.hpp"

namespace perfdig {

/// Canonical cotree node: leaves carry a vertex id, internal nodes carry
/// label 0 (disjoint union) or 1 (complete join) and at least two children;
/// labels alternate along every root-to-leaf path. The default-constructed
/// value is the empty-forest marker used for the graph on zero vertices.
struct Cotree {
    int label = -1;   // 0 or 1 on internal nodes, -1 otherwise
    int vertex = -1;  // leaf vertex id, -1 otherwise
    std::vector<Cotree> children;

    bool is_leaf() const { return vertex >= 0; }
    bool is_empty_forest() const { return label < 0 && vertex < 0 && children.empty(); }
    bool operator==(const Cotree&) const = default;
};

/// Canonical cotree of a symmetric digraph: disconnected graphs become
/// 0-nodes over component subtrees, co-disconnected graphs 1-nodes over
/// co-component subtrees; children are ordered by (leaf count, leaf list).
/// Throws NotCographError with an induced-P4 witness when the recursion
/// gets stuck.
Cotree build_cotree(const Digraph& g);

/// Evaluate a cotree back to a symmetric digraph: two leaves are joined by
/// a digon iff their lowest common ancestor is a 1-node. Rejects trees that
/// break the well-formedness invariants, including the empty-forest marker.
Digraph cotree_to_graph(const Cotree& t);

/// Nested-term rendering, e.g. "0(1(v0 v1) v2)".
std::string render_cotree(const Cotree& t);

}  // namespace perfdig
