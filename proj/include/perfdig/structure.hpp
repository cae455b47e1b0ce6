#pragma once

#include <map>
#include <utility>
#include <vector>

#include "perfdig/digraph.hpp"

namespace perfdig {

/// How the symmetric components of a pattern-free digraph fit together.
/// Any two components joined by at least one arc are joined by a complete
/// orientation: every cross pair carries exactly one asymmetric arc.
/// Groups collect components with no arcs between them; when the no-arc
/// relation happens to be transitive the groups are the parts of a complete
/// multipartite shape, recorded in `multipartite`. It is not always: a
/// single asymmetric arc plus a far-away component already breaks it, so
/// the flag is descriptive rather than an invariant.
struct ComponentStructure {
    std::vector<VertexMask> components;    // components of S(D), by min vertex
    std::vector<std::vector<int>> groups;  // mutually arc-free component clusters
    // (i, j) -> asymmetric arcs from component i into component j, for
    // every ordered component pair that carries such arcs
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross_arcs;
    bool multipartite = true;  // no group contains a joined pair
};

struct PathCoverResult {
    int count = 0;
    std::vector<std::vector<int>> paths;  // vertex-disjoint, covering, directed
};

/// Verify the component structure of a pattern-free digraph. Throws
/// NotFFreeError if one of the five patterns occurs, and
/// StructureViolationError if the claimed multipartite shape fails (which
/// would make the input a counterexample worth looking at).
ComponentStructure check_f_free_structure(const Digraph& d);

/// Exact minimum number of vertex-disjoint directed paths covering all
/// vertices, with a witness; a single vertex is a path, digons may be
/// walked either way. DP over (covered set, path end); fine up to n ~ 15,
/// hard-capped at 20 by memory.
PathCoverResult min_path_cover(const Digraph& d);

}  // namespace perfdig
