#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "perfdig/patterns.hpp"
#include "perfdig/solvers.hpp"

namespace perfdig {

enum class PerfectionMethod { Definitional, Structural };

struct FailingSubdigraph {
    std::vector<int> vertices;  // minimum-size subset with chi > omega
    int chi = 0;
    int omega = 0;
    bool operator==(const FailingSubdigraph&) const = default;
};

struct OddHoleWitness {
    std::vector<int> cycle;  // induced odd cycle of S(D), length >= 5
    bool operator==(const OddHoleWitness&) const = default;
};

struct OddAntiholeWitness {
    std::vector<int> cycle;  // odd hole of the complement of S(D)
    bool operator==(const OddAntiholeWitness&) const = default;
};

using PerfectionWitness = std::variant<std::monostate, FailingSubdigraph, OddHoleWitness,
                                       OddAntiholeWitness, InducedCycleWitness>;

struct PerfectionReport {
    bool perfect = true;
    PerfectionMethod method = PerfectionMethod::Structural;
    PerfectionWitness witness;  // monostate iff perfect
};

/// Smallest induced odd cycle of length >= 5 of a symmetric digraph, as the
/// lexicographically least (length, sequence) witness; the caller must pass
/// a symmetric digraph.
std::optional<std::vector<int>> find_odd_hole(const Digraph& g);

/// Desk-scale perfect-graph test on a symmetric digraph: search an odd hole
/// in the graph and in its complement.
PerfectionReport is_perfect_undirected(const Digraph& g);

/// Definitional test: chi = omega on every one of the 2^n induced
/// subdigraphs, via the per-subset tables. Subsets are scanned by
/// increasing size, so a reported witness has minimum size. Exponential;
/// sensible up to n ~ 12.
PerfectionReport is_perfect_bruteforce(const Digraph& d);

/// Structural test: no induced directed cycle of length >= 3, and S(D)
/// passes the perfect-graph test. The directed-cycle check runs first, so
/// its witness wins when both fail.
PerfectionReport is_perfect_structural(const Digraph& d);

}  // namespace perfdig
