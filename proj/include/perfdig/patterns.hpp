#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "perfdig/digraph.hpp"

namespace perfdig {

/// Classification of the induced subdigraph on a 3-set.
enum class TripleKind { None, C3, P3, P3Plus, P3Minus, Other };

struct TriplePattern {
    TripleKind kind = TripleKind::None;
    int midpoint = -1;  // set for P3 / P3Plus / P3Minus, otherwise -1
    bool operator==(const TriplePattern&) const = default;
};

/// Occurrence sets of the four pattern families, stored in ascending order
/// so that equality and diffing are plain componentwise comparisons.
struct PatternSignature {
    std::vector<std::array<int, 4>> p4_quads;                      // P4 in S(D)
    std::vector<std::array<int, 3>> c3_triples;                    // directed 3-cycles
    std::vector<std::pair<std::array<int, 3>, int>> p3_sites;      // (triple, midpoint)
    std::vector<std::pair<std::array<int, 3>, int>> p3_aug_sites;  // P3+/P3- merged
    bool operator==(const PatternSignature&) const = default;
};

struct InducedCycleWitness {
    std::vector<int> vertices;  // v0 v1 ... v_{k-1}, arcs v_i -> v_{i+1 mod k}
    bool operator==(const InducedCycleWitness&) const = default;
};

/// A site witnessing that a digraph is not pattern-free.
struct ForbiddenSite {
    std::string pattern;        // "C3", "P3", "P3+", "P3-", "symP4"
    std::vector<int> vertices;
    int midpoint = -1;
};

/// Classify the induced subdigraph on a 3-element set. The P3+ orientation
/// is fixed as "digon on the first arc of the path", P3- on the second; the
/// distinction is invisible once the two classes are merged.
TriplePattern classify_triple(const Digraph& d, std::array<int, 3> triple);

/// True iff the 4-set induces a chordless 3-edge path in S(D). Asymmetric
/// arcs of D inside the quadruple are invisible here.
bool induces_p4_in_symmetric(const Digraph& d, std::array<int, 4> quad);

/// Exhaustive enumeration of all 3- and 4-subsets.
PatternSignature p4c_signature(const Digraph& d);

/// Componentwise signature equality; both digraphs must share the vertex count.
bool are_p4c_isomorphic(const Digraph& a, const Digraph& b);

/// First differing signature entry in canonical order, described as
/// "<family> {vertices}[ midpoint m] only-in <A|B>"; empty when equal.
std::optional<std::string> signature_difference(const PatternSignature& a,
                                                const PatternSignature& b);

/// Smallest induced directed cycle of length >= min_len (>= 3): no chords in
/// either direction, no digons. The witness is the lexicographically least
/// (length, sequence) pair, the sequence starting at its minimum vertex.
std::optional<InducedCycleWitness> find_induced_directed_cycle(const Digraph& d, int min_len = 3);

/// Check a claimed witness against the digraph.
bool is_induced_directed_cycle(const Digraph& d, const std::vector<int>& vertices);

/// First of the five forbidden patterns in scan order (triples ascending,
/// then quadruples). The quadruple test is the condition-1 one, a P4 in
/// S(D), so freedom from all five patterns is the same as an empty
/// signature; a digraph whose symmetric part hides a P4 under extra
/// asymmetric arcs is still caught.
std::optional<ForbiddenSite> find_forbidden_site(const Digraph& d);

/// True iff none of the five patterns occurs, i.e. the signature is empty.
bool is_f_free(const Digraph& d);

}  // namespace perfdig
