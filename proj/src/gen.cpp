#include "perfdig/gen.hpp"

#include "perfdig/patterns.hpp"

namespace perfdig {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

double unit_interval(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

Digraph random_digraph(const GenSpec& spec) {
    if (spec.p_sym < 0 || spec.p_asym < 0 || spec.p_sym + spec.p_asym > 1.0)
        throw InvalidProbabilitiesError();
    Digraph d(spec.n);
    for (int j = 1; j < spec.n; ++j)
        for (int i = 0; i < j; ++i) {
            const std::uint64_t pair_index =
                static_cast<std::uint64_t>(j) * (static_cast<std::uint64_t>(j) - 1) / 2 +
                static_cast<std::uint64_t>(i);
            const std::uint64_t h = mix64(spec.seed ^ mix64(pair_index + 1));
            const double u = unit_interval(h);
            if (u < spec.p_sym) {
                d.add_arc(i, j);
                d.add_arc(j, i);
            } else if (u < spec.p_sym + spec.p_asym) {
                if (h & 1) d.add_arc(i, j);
                else d.add_arc(j, i);
            }
        }
    return d;
}

namespace {

Digraph dicycle(int k) {
    Digraph d(k);
    for (int i = 0; i < k; ++i) d.add_arc(i, (i + 1) % k);
    return d;
}

Digraph sym_cycle(int k) {
    Digraph d(k);
    for (int i = 0; i < k; ++i) {
        d.add_arc(i, (i + 1) % k);
        d.add_arc((i + 1) % k, i);
    }
    return d;
}

Digraph sym_complete(int k) {
    Digraph d(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) d.add_arc(i, j);
    return d;
}

Digraph sym_path(int k) {
    Digraph d(k);
    for (int i = 0; i + 1 < k; ++i) {
        d.add_arc(i, i + 1);
        d.add_arc(i + 1, i);
    }
    return d;
}

int require_size(const std::string& name, std::optional<int> k, int min) {
    if (!k) throw BadSizeError(name + " requires a size");
    if (*k < min)
        throw BadSizeError(name + " requires size >= " + std::to_string(min));
    return *k;
}

void forbid_size(const std::string& name, std::optional<int> k) {
    if (k) throw BadSizeError(name + " takes no size");
}

}  // namespace

Digraph named_instance(const std::string& name, std::optional<int> k) {
    if (name == "c3") {
        forbid_size(name, k);
        return dicycle(3);
    }
    if (name == "p3") {
        forbid_size(name, k);
        return build_digraph(3, {{0, 1}, {1, 2}});
    }
    if (name == "p3_plus") {
        forbid_size(name, k);
        return build_digraph(3, {{0, 1}, {1, 0}, {1, 2}});
    }
    if (name == "p3_minus") {
        forbid_size(name, k);
        return build_digraph(3, {{0, 1}, {1, 2}, {2, 1}});
    }
    if (name == "sym_p4") {
        forbid_size(name, k);
        return sym_path(4);
    }
    if (name == "c4_complement") {
        // every ordered pair except the four arcs of the directed 4-cycle
        forbid_size(name, k);
        Digraph d = sym_complete(4);
        for (int i = 0; i < 4; ++i) d.remove_arc(i, (i + 1) % 4);
        return d;
    }
    if (name == "dicycle") return dicycle(require_size(name, k, 3));
    if (name == "sym_cycle") return sym_cycle(require_size(name, k, 3));
    if (name == "sym_complete") return sym_complete(require_size(name, k, 0));
    if (name == "sym_path") return sym_path(require_size(name, k, 0));
    if (name == "arcless") return Digraph(require_size(name, k, 0));
    throw UnknownNameError(name);
}

std::optional<std::pair<Digraph, Digraph>> p4c_pair(const Digraph& d, PairMode mode, int budget,
                                                    std::uint64_t seed) {
    if (mode == PairMode::Reversal) {
        Digraph r = reverse(d);
        if (!are_p4c_isomorphic(d, r)) return std::nullopt;  // cannot happen; re-verify anyway
        return std::make_pair(d, r);
    }
    const int n = d.vertex_count();
    if (n < 2) return std::nullopt;
    const PatternSignature sig = p4c_signature(d);
    Digraph cur = d;
    for (int t = 0; t < budget; ++t) {
        const std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(t) + 0x5bd1e995));
        const int u = static_cast<int>((h >> 8) % static_cast<std::uint64_t>(n));
        int v = static_cast<int>((h >> 32) % static_cast<std::uint64_t>(n - 1));
        if (v >= u) ++v;
        cur.toggle_arc(u, v);
        if (!(p4c_signature(cur) == sig)) cur.toggle_arc(u, v);
    }
    if (cur == d) return std::nullopt;
    if (!are_p4c_isomorphic(d, cur)) return std::nullopt;
    return std::make_pair(d, cur);
}

std::optional<Digraph> random_f_free(int n, std::uint64_t seed, int max_attempts, double p_sym,
                                     double p_asym) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        GenSpec spec{n, p_sym, p_asym,
                     mix64(seed ^ mix64(static_cast<std::uint64_t>(attempt) + 0x2545f491))};
        Digraph d = random_digraph(spec);
        if (is_f_free(d)) return d;
    }
    return std::nullopt;
}

}  // namespace perfdig
