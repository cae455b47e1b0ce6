#pragma once

#include <span>
#include <vector>

#include "perfdig/digraph.hpp"

namespace perfdig {

struct ColoringResult {
    int chi = 0;
    std::vector<int> assignment;  // color of vertex v in 1..chi; empty for n = 0
};

struct CliqueWitness {
    int omega = 0;
    std::vector<int> vertices;  // ascending; pairwise joined by digons
};

/// True iff every color class induces an acyclic subdigraph. The assignment
/// must cover every vertex (one entry per vertex).
bool is_proper_coloring(const Digraph& d, std::span<const int> assignment);

/// Exact dichromatic number with a witness coloring. Subset DP: peel a
/// maximal acyclic class containing the smallest remaining vertex; among
/// optimal classes the lexicographically smallest is taken, so the witness
/// is deterministic. Exponential; intended for desk-scale instances.
ColoringResult dichromatic_number(const Digraph& d);

/// Exact clique number of S(D) by branch and bound with a greedy coloring
/// bound.
CliqueWitness clique_number(const Digraph& d);

/// Dense per-subset tables indexed by vertex mask (size 2^n, n <= 25):
/// value for mask S is the invariant of the subdigraph induced by S.
std::vector<char> acyclic_table(const Digraph& d);
std::vector<int> dichromatic_table(const Digraph& d);
std::vector<int> clique_table(const Digraph& d);

}  // namespace perfdig
