#include "perfdig/suites.hpp"

#include <bit>
#include <chrono>

#include "perfdig/cotree.hpp"
#include "perfdig/gen.hpp"
#include "perfdig/patterns.hpp"
#include "perfdig/perfection.hpp"
#include "perfdig/solvers.hpp"
#include "perfdig/structure.hpp"

namespace perfdig {

SuiteKind suite_from_name(const std::string& name) {
    if (name == "theorem1") return SuiteKind::Theorem1;
    if (name == "semistrong") return SuiteKind::SemiStrong;
    if (name == "prop2") return SuiteKind::Prop2;
    if (name == "structure3") return SuiteKind::Structure3;
    if (name == "solvers") return SuiteKind::Solvers;
    throw UnknownNameError(name);
}

std::string suite_name(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::Theorem1: return "theorem1";
        case SuiteKind::SemiStrong: return "semistrong";
        case SuiteKind::Prop2: return "prop2";
        case SuiteKind::Structure3: return "structure3";
        case SuiteKind::Solvers: return "solvers";
    }
    return "?";
}

std::string encode_digraph(const Digraph& d) {
    std::string s = "n=" + std::to_string(d.vertex_count()) + ";";
    for (auto [u, v] : d.arcs()) s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    return s;
}

namespace {

struct Preset {
    double p_sym;
    double p_asym;
};

constexpr Preset kDensityPresets[] = {{0.2, 0.2}, {0.5, 0.25}, {0.1, 0.6}};
constexpr Preset kSparsePresets[] = {{0.5, 0.0}, {0.35, 0.05}, {0.2, 0.1}};

// every loopless digraph on n vertices, by ascending arc-set encoding
template <class F>
void for_each_digraph(int n, F&& f) {
    const int bits = n * (n - 1);
    const std::uint64_t limit = std::uint64_t{1} << bits;
    for (std::uint64_t code = 0; code < limit; ++code) {
        Digraph d(n);
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if ((code >> idx) & 1) d.add_arc(u, v);
                ++idx;
            }
        f(d);
    }
}

void check_theorem1(const Digraph& d, SuiteReport& report) {
    ++report.trials;
    const bool brute = is_perfect_bruteforce(d).perfect;
    const bool structural = is_perfect_structural(d).perfect;
    if (brute != structural)
        report.failures.push_back({encode_digraph(d),
                                   "definitional=" + std::string(brute ? "true" : "false"),
                                   "structural=" + std::string(structural ? "true" : "false")});
}

SuiteReport run_theorem1(int nmax, long long trials, std::uint64_t seed) {
    SuiteReport report{"theorem1", 0, {}, 0.0};
    if (nmax <= 4) {
        for_each_digraph(nmax, [&](const Digraph& d) { check_theorem1(d, report); });
        return report;
    }
    for (int n = 5; n <= nmax; ++n)
        for (size_t p = 0; p < std::size(kDensityPresets); ++p)
            for (long long t = 0; t < trials; ++t) {
                const std::uint64_t s =
                    mix64(seed ^ mix64((static_cast<std::uint64_t>(n) << 40) ^
                                       (static_cast<std::uint64_t>(p) << 32) ^
                                       static_cast<std::uint64_t>(t)));
                const Digraph d =
                    random_digraph({n, kDensityPresets[p].p_sym, kDensityPresets[p].p_asym, s});
                check_theorem1(d, report);
            }
    return report;
}

// Shared pair stream for the semistrong and prop2 suites: per trial one
// base digraph, its reversal pair, and possibly one mutation-search pair.
template <class F>
void for_each_p4c_pair(int nmax, long long trials, std::uint64_t seed, F&& f) {
    for (long long t = 0; t < trials; ++t) {
        const std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(t) * 2 + 1));
        const int n = 1 + static_cast<int>(h % static_cast<std::uint64_t>(nmax));
        const Preset preset = kDensityPresets[t % std::size(kDensityPresets)];
        const Digraph base = random_digraph({n, preset.p_sym, preset.p_asym, mix64(h)});
        const auto rev = p4c_pair(base, PairMode::Reversal, 0, 0);
        f(rev->first, rev->second);
        if (const auto mut = p4c_pair(base, PairMode::MutationSearch, 100, mix64(h ^ 0xbadc0ffeull)))
            f(mut->first, mut->second);
    }
}

SuiteReport run_semistrong(int nmax, long long trials, std::uint64_t seed) {
    SuiteReport report{"semistrong", 0, {}, 0.0};
    for_each_p4c_pair(nmax, trials, seed, [&](const Digraph& a, const Digraph& b) {
        ++report.trials;
        const bool pa = is_perfect_structural(a).perfect;
        const bool pb = is_perfect_structural(b).perfect;
        if (pa != pb)
            report.failures.push_back({encode_digraph(a) + " ~ " + encode_digraph(b),
                                       "matching verdicts",
                                       std::string(pa ? "true" : "false") + " vs " +
                                           (pb ? "true" : "false")});
    });
    return report;
}

SuiteReport run_prop2(int nmax, long long trials, std::uint64_t seed) {
    SuiteReport report{"prop2", 0, {}, 0.0};
    for_each_p4c_pair(nmax, trials, seed, [&](const Digraph& a, const Digraph& b) {
        ++report.trials;
        const auto ca = find_induced_directed_cycle(a);
        const auto cb = find_induced_directed_cycle(b);
        if (ca && !is_induced_directed_cycle(a, ca->vertices)) {
            report.failures.push_back({encode_digraph(a), "valid cycle witness", "invalid"});
            return;
        }
        if (cb && !is_induced_directed_cycle(b, cb->vertices)) {
            report.failures.push_back({encode_digraph(b), "valid cycle witness", "invalid"});
            return;
        }
        if (ca.has_value() != cb.has_value())
            report.failures.push_back({encode_digraph(a) + " ~ " + encode_digraph(b),
                                       "matching cycle existence",
                                       std::string(ca ? "cycle" : "none") + " vs " +
                                           (cb ? "cycle" : "none")});
    });
    return report;
}

void check_structure3(const Digraph& d, SuiteReport& report) {
    ++report.trials;
    try {
        check_f_free_structure(d);
    } catch (const Error& e) {
        report.failures.push_back({encode_digraph(d), "valid component structure", e.what()});
        return;
    }
    const int n = d.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (induces_p4_in_symmetric(d, {i, j, k, l})) {
                        report.failures.push_back(
                            {encode_digraph(d), "P4-free symmetric part", "induced P4 found"});
                        return;
                    }
    // second route to the same fact: the cotree recursion succeeds exactly
    // on cographs
    try {
        build_cotree(symmetric_part(d));
    } catch (const Error& e) {
        report.failures.push_back({encode_digraph(d), "cotree for S(D)", e.what()});
        return;
    }
    const PatternSignature sig = p4c_signature(d);
    if (!(sig == PatternSignature{})) {
        report.failures.push_back({encode_digraph(d), "empty signature", "nonempty"});
        return;
    }
    if (!is_perfect_structural(d).perfect)
        report.failures.push_back({encode_digraph(d), "perfect", "not perfect"});
}

SuiteReport run_structure3(int nmax, long long trials, std::uint64_t seed) {
    SuiteReport report{"structure3", 0, {}, 0.0};
    for (int n = 1; n <= std::min(nmax, 4); ++n)
        for_each_digraph(n, [&](const Digraph& d) {
            if (is_f_free(d)) check_structure3(d, report);
        });
    for (int n = 5; n <= nmax; ++n)
        for (long long t = 0; t < trials; ++t) {
            const Preset preset = kSparsePresets[t % std::size(kSparsePresets)];
            const std::uint64_t s = mix64(seed ^ mix64((static_cast<std::uint64_t>(n) << 32) ^
                                                       static_cast<std::uint64_t>(t)));
            const auto d = random_f_free(n, s, 20000, preset.p_sym, preset.p_asym);
            if (!d) {
                report.failures.push_back({"n=" + std::to_string(n) + ";seed=" + std::to_string(s),
                                           "a pattern-free sample within 20000 attempts", "none"});
                continue;
            }
            check_structure3(*d, report);
        }
    return report;
}

// smallest k admitting a proper coloring with at most k classes, by
// exhaustive assignment of vertices to color blocks
bool colorable_with(const Digraph& d, int k, std::vector<VertexMask>& blocks, int v) {
    if (v == d.vertex_count()) return true;
    // index loop: the recursive call appends blocks, invalidating references
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!is_acyclic_within(d, blocks[i] | vbit(v))) continue;
        blocks[i] |= vbit(v);
        if (colorable_with(d, k, blocks, v + 1)) return true;
        blocks[i] &= ~vbit(v);
    }
    if (static_cast<int>(blocks.size()) < k) {
        blocks.push_back(vbit(v));
        if (colorable_with(d, k, blocks, v + 1)) return true;
        blocks.pop_back();
    }
    return false;
}

int chi_by_assignment_search(const Digraph& d) {
    if (d.vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<VertexMask> blocks;
        blocks.reserve(static_cast<size_t>(k));
        if (colorable_with(d, k, blocks, 0)) return k;
    }
}

int omega_by_subset_enumeration(const Digraph& d) {
    const int n = d.vertex_count();
    const Digraph s = symmetric_part(d);
    int best = 0;
    for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
        const std::vector<int> verts = mask_vertices(m);
        bool clique = true;
        for (size_t i = 0; i < verts.size() && clique; ++i)
            for (size_t j = i + 1; j < verts.size() && clique; ++j)
                if (!s.arc(verts[i], verts[j])) clique = false;
        if (clique) best = std::max(best, std::popcount(m));
    }
    return best;
}

SuiteReport run_solvers(int nmax, long long trials, std::uint64_t seed) {
    SuiteReport report{"solvers", 0, {}, 0.0};
    for (int n = std::min(4, nmax); n <= nmax; ++n)
        for (long long t = 0; t < trials; ++t) {
            const Preset preset = kDensityPresets[t % std::size(kDensityPresets)];
            const std::uint64_t s = mix64(seed ^ mix64((static_cast<std::uint64_t>(n) << 32) ^
                                                       static_cast<std::uint64_t>(t)));
            const Digraph d = random_digraph({n, preset.p_sym, preset.p_asym, s});
            ++report.trials;
            const ColoringResult coloring = dichromatic_number(d);
            const CliqueWitness clique = clique_number(d);
            if (!is_proper_coloring(d, coloring.assignment)) {
                report.failures.push_back({encode_digraph(d), "proper witness coloring", "improper"});
                continue;
            }
            std::vector<char> used(static_cast<size_t>(coloring.chi) + 1, 0);
            bool colors_ok = true;
            for (int c : coloring.assignment) {
                if (c < 1 || c > coloring.chi) colors_ok = false;
                else used[static_cast<size_t>(c)] = 1;
            }
            for (int c = 1; c <= coloring.chi && colors_ok; ++c) colors_ok = used[static_cast<size_t>(c)];
            if (!colors_ok) {
                report.failures.push_back({encode_digraph(d), "colors exactly 1..chi", "gap"});
                continue;
            }
            const int oracle_chi = chi_by_assignment_search(d);
            if (coloring.chi != oracle_chi) {
                report.failures.push_back({encode_digraph(d), "chi=" + std::to_string(oracle_chi),
                                           "chi=" + std::to_string(coloring.chi)});
                continue;
            }
            bool clique_ok = static_cast<int>(clique.vertices.size()) == clique.omega;
            for (size_t i = 0; i < clique.vertices.size() && clique_ok; ++i)
                for (size_t j = i + 1; j < clique.vertices.size() && clique_ok; ++j)
                    if (!d.digon(clique.vertices[i], clique.vertices[j])) clique_ok = false;
            if (!clique_ok) {
                report.failures.push_back({encode_digraph(d), "valid clique witness", "invalid"});
                continue;
            }
            const int oracle_omega = omega_by_subset_enumeration(d);
            if (clique.omega != oracle_omega) {
                report.failures.push_back({encode_digraph(d),
                                           "omega=" + std::to_string(oracle_omega),
                                           "omega=" + std::to_string(clique.omega)});
                continue;
            }
            if (clique.omega > coloring.chi)
                report.failures.push_back({encode_digraph(d), "omega <= chi",
                                           std::to_string(clique.omega) + " > " +
                                               std::to_string(coloring.chi)});
        }
    return report;
}

}  // namespace

SuiteReport run_suite(SuiteKind kind, int nmax, long long trials, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    switch (kind) {
        case SuiteKind::Theorem1: report = run_theorem1(nmax, trials, seed); break;
        case SuiteKind::SemiStrong: report = run_semistrong(nmax, trials, seed); break;
        case SuiteKind::Prop2: report = run_prop2(nmax, trials, seed); break;
        case SuiteKind::Structure3: report = run_structure3(nmax, trials, seed); break;
        case SuiteKind::Solvers: report = run_solvers(nmax, trials, seed); break;
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace perfdig
