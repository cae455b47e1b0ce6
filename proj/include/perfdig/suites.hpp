#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perfdig/digraph.hpp"

namespace perfdig {

enum class SuiteKind { Theorem1, SemiStrong, Prop2, Structure3, Solvers };

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    long long trials = 0;  // checks actually performed
    std::vector<SuiteFailure> failures;
    double elapsed_seconds = 0.0;
    bool ok() const { return failures.empty(); }
};

SuiteKind suite_from_name(const std::string& name);
std::string suite_name(SuiteKind kind);

/// Run one verification suite. Deterministic given (kind, nmax, trials,
/// seed); per-trial randomness derives from the master seed and the trial
/// index.
///
///  theorem1   nmax <= 4: every loopless digraph on nmax vertices, checking
///             that the definitional and the structural perfection verdicts
///             agree; nmax >= 5: `trials` seeded digraphs per n in 5..nmax
///             and per density preset.
///  semistrong `trials` base digraphs on 1..nmax vertices; for the reversal
///             pair and any mutation-search pair, structural perfection
///             verdicts must agree.
///  prop2      same pair stream; existence of an induced directed cycle
///             must agree within each pair.
///  structure3 every pattern-free digraph on up to min(nmax,4) vertices and
///             `trials` rejection-sampled ones per n in 5..nmax: component
///             structure valid, symmetric part P4-free, empty signature,
///             structurally perfect.
///  solvers    `trials` digraphs per n in min(4,nmax)..nmax: dichromatic
///             number against an exhaustive assignment search, witness
///             validity, clique number against subset enumeration, and
///             omega <= chi.
SuiteReport run_suite(SuiteKind kind, int nmax, long long trials, std::uint64_t seed);

/// One-line encoding of a digraph for failure reports.
std::string encode_digraph(const Digraph& d);

}  // namespace perfdig
