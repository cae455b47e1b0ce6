#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "perfdig/digraph.hpp"

namespace perfdig {

/// Erdos-Renyi-style model: per unordered pair, a digon with probability
/// p_sym, else a fair-coin-oriented single arc with probability p_asym.
struct GenSpec {
    int n = 0;
    double p_sym = 0.0;
    double p_asym = 0.0;
    std::uint64_t seed = 0;
};

/// splitmix64 finisher; all randomness here derives from it so results are
/// reproducible across platforms and independent of iteration order.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic per (spec, seed): each unordered pair draws from a hash of
/// (seed, canonical pair index).
Digraph random_digraph(const GenSpec& spec);

/// Canonical labeled instances: sym_p4, c3, p3, p3_plus, p3_minus,
/// dicycle(k>=3), sym_cycle(k>=3), sym_complete(k), sym_path(k),
/// c4_complement, arcless(k). Cycles run 0->1->...->k-1->0, paths along
/// increasing ids.
Digraph named_instance(const std::string& name, std::optional<int> k = std::nullopt);

enum class PairMode { Reversal, MutationSearch };

/// Manufacture a signature-preserving pair. Reversal pairs D with its
/// converse. MutationSearch proposes `budget` random single-arc toggles and
/// keeps each one only if the signature is unchanged; empty when no toggle
/// survives. Outputs are re-verified before returning.
std::optional<std::pair<Digraph, Digraph>> p4c_pair(const Digraph& d, PairMode mode, int budget,
                                                    std::uint64_t seed);

/// Rejection-sample random_digraph draws until one avoids all five
/// patterns; empty after max_attempts rejections.
std::optional<Digraph> random_f_free(int n, std::uint64_t seed, int max_attempts,
                                     double p_sym = 0.35, double p_asym = 0.05);

}  // namespace perfdig
