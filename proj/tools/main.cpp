#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "perfdig/cotree.hpp"
#include "perfdig/gen.hpp"
#include "perfdig/io.hpp"
#include "perfdig/patterns.hpp"
#include "perfdig/perfection.hpp"
#include "perfdig/solvers.hpp"
#include "perfdig/structure.hpp"
#include "perfdig/suites.hpp"

namespace {

using namespace perfdig;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

std::string set_string(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string seq_string(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string witness_string(const PerfectionWitness& w) {
    if (std::holds_alternative<std::monostate>(w)) return "none";
    if (const auto* f = std::get_if<FailingSubdigraph>(&w))
        return "failing-subdigraph " + set_string(f->vertices) + " chi=" + std::to_string(f->chi) +
               " omega=" + std::to_string(f->omega);
    if (const auto* h = std::get_if<OddHoleWitness>(&w)) return "odd-hole " + seq_string(h->cycle);
    if (const auto* a = std::get_if<OddAntiholeWitness>(&w))
        return "odd-antihole " + seq_string(a->cycle);
    return "induced-directed-cycle " + seq_string(std::get<InducedCycleWitness>(w).vertices);
}

int cmd_analyze(const std::string& file, bool brute) {
    const Digraph d = read_digraph_file(file);
    const ColoringResult coloring = dichromatic_number(d);
    const CliqueWitness clique = clique_number(d);
    const PerfectionReport structural = is_perfect_structural(d);
    std::cout << "n: " << d.vertex_count() << "\n";
    std::cout << "arcs: " << d.arc_count() << "\n";
    std::cout << "omega: " << clique.omega << "\n";
    std::cout << "clique: " << (clique.vertices.empty() ? "none" : seq_string(clique.vertices))
              << "\n";
    std::cout << "chi: " << coloring.chi << "\n";
    std::cout << "coloring: " << (coloring.assignment.empty() ? "none" : seq_string(coloring.assignment))
              << "\n";
    std::cout << "perfect: " << (structural.perfect ? "true" : "false") << "\n";
    std::cout << "witness: " << witness_string(structural.witness) << "\n";
    if (brute) {
        const PerfectionReport definitional = is_perfect_bruteforce(d);
        std::cout << "perfect-definitional: " << (definitional.perfect ? "true" : "false") << "\n";
        std::cout << "witness-definitional: " << witness_string(definitional.witness) << "\n";
        const bool agree = definitional.perfect == structural.perfect;
        std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
        if (!agree) {
            std::cerr << "error: definitional and structural verdicts disagree\n";
            return kExitViolated;
        }
    }
    return kExitOk;
}

int cmd_compare(const std::string& file_a, const std::string& file_b) {
    const Digraph a = read_digraph_file(file_a);
    const Digraph b = read_digraph_file(file_b);
    if (a.vertex_count() != b.vertex_count())
        throw VertexCountMismatchError(a.vertex_count(), b.vertex_count());
    const PatternSignature sa = p4c_signature(a);
    const PatternSignature sb = p4c_signature(b);
    if (sa == sb) {
        std::cout << "p4c-isomorphic: true\n";
        return kExitOk;
    }
    std::cout << "p4c-isomorphic: false\n";
    std::cout << "first-difference: " << *signature_difference(sa, sb) << "\n";
    return kExitViolated;
}

int cmd_verify(const std::string& suite, int nmax, long long trials, std::uint64_t seed) {
    const SuiteReport report = run_suite(suite_from_name(suite), nmax, trials, seed);
    std::cout << "suite: " << report.suite << "\n";
    std::cout << "nmax: " << nmax << "\n";
    std::cout << "trials: " << report.trials << "\n";
    std::cout << "failures: " << report.failures.size() << "\n";
    for (const SuiteFailure& f : report.failures)
        std::cout << "failure: input=" << f.input << " expected=" << f.expected
                  << " actual=" << f.actual << "\n";
    std::cerr << "elapsed-ms: " << static_cast<long long>(report.elapsed_seconds * 1000) << "\n";
    return report.ok() ? kExitOk : kExitViolated;
}

int cmd_generate(const std::string& model, int n, double psym, double pasym,
                 const std::string& named, std::optional<int> k, std::uint64_t seed,
                 const std::string& out_file) {
    Digraph d;
    if (!named.empty()) d = named_instance(named, k);
    else if (model == "er") d = random_digraph({n, psym, pasym, seed});
    else throw UnknownNameError(model);
    const std::string text = render_digraph(d);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw Error("cannot open file: " + out_file);
        out << text;
    }
    return kExitOk;
}

int cmd_cotree(const std::string& file) {
    const Digraph d = read_digraph_file(file);
    try {
        const Cotree t = build_cotree(symmetric_part(d));
        std::cout << "cotree: " << (t.is_empty_forest() ? "empty" : render_cotree(t)) << "\n";
        return kExitOk;
    } catch (const NotCographError& e) {
        std::cout << "not-a-cograph: true\n";
        std::cout << "p4-witness: " << e.p4_witness()[0] << " " << e.p4_witness()[1] << " "
                  << e.p4_witness()[2] << " " << e.p4_witness()[3] << "\n";
        return kExitViolated;
    }
}

int cmd_pathcover(const std::string& file) {
    const Digraph d = read_digraph_file(file);
    const PathCoverResult cover = min_path_cover(d);
    std::cout << "count: " << cover.count << "\n";
    for (const auto& path : cover.paths) std::cout << "path: " << seq_string(path) << "\n";
    return kExitOk;
}

int cmd_export_dot(const std::string& file) {
    std::cout << render_dot(read_digraph_file(file));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern, coloring and perfection analysis of small digraphs"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_file;
    bool brute = false;
    std::string suite = "theorem1", model, named;
    int nmax = 4, gen_n = -1;
    long long trials = 100;
    std::uint64_t seed = 1;
    double psym = 0.0, pasym = 0.0;
    int named_k = -1;

    auto* analyze = app.add_subcommand("analyze", "invariants and perfection of one digraph");
    analyze->add_option("file", file_a, "digraph file")->required();
    analyze->add_flag("--brute", brute, "also run the definitional check");

    auto* compare = app.add_subcommand("compare", "signature comparison of two digraphs");
    compare->add_option("fileA", file_a)->required();
    compare->add_option("fileB", file_b)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "theorem1|semistrong|prop2|structure3|solvers")
        ->required();
    verify->add_option("--nmax", nmax, "largest vertex count");
    verify->add_option("--trials", trials, "seeded trials per configuration");
    verify->add_option("--seed", seed, "master seed");

    auto* generate = app.add_subcommand("generate", "emit a digraph file");
    generate->add_option("--model", model, "er");
    generate->add_option("--n", gen_n, "vertex count for --model er");
    generate->add_option("--psym", psym, "digon probability per pair");
    generate->add_option("--pasym", pasym, "asymmetric-arc probability per pair");
    generate->add_option("--named", named, "named instance");
    generate->add_option("--k", named_k, "size for parameterized named instances");
    generate->add_option("--seed", seed, "seed for --model er");
    generate->add_option("-o,--out", out_file, "output file (default stdout)");

    auto* cotree = app.add_subcommand("cotree", "canonical cotree of the symmetric part");
    cotree->add_option("file", file_a)->required();

    auto* pathcover = app.add_subcommand("pathcover", "minimum vertex-disjoint directed path cover");
    pathcover->add_option("file", file_a)->required();

    auto* export_dot = app.add_subcommand("export-dot", "DOT rendering");
    export_dot->add_option("file", file_a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file_a, brute);
        if (compare->parsed()) return cmd_compare(file_a, file_b);
        if (verify->parsed()) return cmd_verify(suite, nmax, trials, seed);
        if (generate->parsed()) {
            if (named.empty() == model.empty()) {
                std::cerr << "error: generate needs exactly one of --model or --named\n";
                return kExitUsage;
            }
            if (!model.empty() && gen_n < 0) {
                std::cerr << "error: --model er requires --n\n";
                return kExitUsage;
            }
            std::optional<int> k;
            if (generate->count("--k")) k = named_k;
            return cmd_generate(model, gen_n, psym, pasym, named, k, seed, out_file);
        }
        if (cotree->parsed()) return cmd_cotree(file_a);
        if (pathcover->parsed()) return cmd_pathcover(file_a);
        if (export_dot->parsed()) return cmd_export_dot(file_a);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VertexCountMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
