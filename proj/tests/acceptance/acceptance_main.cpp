// Acceptance suite: runs every shipped criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
//   acceptance --cli <path-to-cli> --data <dir> --golden <dir> --work <dir>
//             [--regen]
//
// --regen rewrites the golden transcripts from the current CLI output
// instead of comparing against them (maintenance use only).

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "perfdig/cotree.hpp"
#include "perfdig/gen.hpp"
#include "perfdig/io.hpp"
#include "perfdig/patterns.hpp"
#include "perfdig/perfection.hpp"
#include "perfdig/solvers.hpp"
#include "perfdig/structure.hpp"
#include "perfdig/suites.hpp"

namespace fs = std::filesystem;
using namespace perfdig;

namespace {

struct Options {
    std::string cli;
    fs::path data;
    fs::path golden;
    fs::path work;
    bool regen = false;
};

bool g_all_pass = true;

class Criterion {
public:
    explicit Criterion(int number) : number_(number), start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        ok_ = false;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += why;
    }

    void note(const std::string& what) { notes_ = what; }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::ostringstream line;
        line << "criterion " << number_ << ": " << (ok_ ? "PASS" : "FAIL");
        if (!notes_.empty()) line << " (" << notes_ << ")";
        if (!ok_) line << " -- " << detail_;
        line.precision(1);
        line << std::fixed << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
        if (!ok_) g_all_pass = false;
    }

private:
    int number_;
    bool ok_ = true;
    std::string detail_;
    std::string notes_;
    std::chrono::steady_clock::time_point start_;
};

void check_suite(Criterion& c, const SuiteReport& report, long long min_trials) {
    if (report.trials < min_trials)
        c.fail(report.suite + ": only " + std::to_string(report.trials) + " trials, need " +
               std::to_string(min_trials));
    if (!report.ok()) {
        const SuiteFailure& f = report.failures.front();
        c.fail(report.suite + ": " + std::to_string(report.failures.size()) +
               " failures, first: input=" + f.input + " expected=" + f.expected +
               " actual=" + f.actual);
    }
}

// ---------------------------------------------------------------- criteria

void criterion1() {
    Criterion c(1);
    const SuiteReport r = run_suite(SuiteKind::Theorem1, 4, 0, 1);
    if (r.trials != 4096) c.fail("expected 4096 digraphs, saw " + std::to_string(r.trials));
    check_suite(c, r, 4096);
    c.note(std::to_string(r.trials) + " digraphs exhaustively");
}

void criterion2() {
    Criterion c(2);
    const SuiteReport r = run_suite(SuiteKind::Theorem1, 7, 10000, 2);
    check_suite(c, r, 90000);  // 10^4 per n in {5,6,7} per density preset
    c.note(std::to_string(r.trials) + " sampled digraphs");
}

void criterion3() {
    Criterion c(3);
    const SuiteReport r = run_suite(SuiteKind::SemiStrong, 8, 1000, 3);
    check_suite(c, r, 1000);
    c.note(std::to_string(r.trials) + " pairs");
}

void criterion4() {
    Criterion c(4);
    const SuiteReport r = run_suite(SuiteKind::Prop2, 8, 1000, 3);
    check_suite(c, r, 1000);
    c.note(std::to_string(r.trials) + " pairs");
}

void criterion5() {
    Criterion c(5);
    const SuiteReport r = run_suite(SuiteKind::Structure3, 7, 10000, 5);
    check_suite(c, r, 30000);  // 10^4 per n in {5,6,7} plus the exhaustive part
    c.note(std::to_string(r.trials) + " pattern-free digraphs");
}

void criterion6() {
    Criterion c(6);
    for (int k = 3; k <= 8; ++k) {
        const Digraph d = named_instance("dicycle", k);
        if (is_perfect_structural(d).perfect) c.fail("dicycle(" + std::to_string(k) + ") structural");
        if (is_perfect_bruteforce(d).perfect) c.fail("dicycle(" + std::to_string(k) + ") brute");
        if (dichromatic_number(d).chi != 2) c.fail("dicycle(" + std::to_string(k) + ") chi != 2");
        if (clique_number(d).omega != 1) c.fail("dicycle(" + std::to_string(k) + ") omega != 1");
    }
    const Digraph comp = named_instance("c4_complement");
    if (!is_perfect_structural(comp).perfect) c.fail("c4 complement structural");
    if (!is_perfect_bruteforce(comp).perfect) c.fail("c4 complement brute");
    // perfection is lost under complement: the 4-cycle fails, its complement holds
    if (is_perfect_structural(named_instance("dicycle", 4)).perfect) c.fail("dicycle(4) perfect");

    const PerfectionReport c5 = is_perfect_structural(named_instance("sym_cycle", 5));
    if (c5.perfect) c.fail("symmetric C5 reported perfect");
    if (!std::holds_alternative<OddHoleWitness>(c5.witness)) c.fail("symmetric C5 witness kind");
    c.note("directed cycles, c4 complement, odd hole");
}

void criterion7() {
    Criterion c(7);
    const SuiteReport r = run_suite(SuiteKind::Solvers, 7, 1000, 7);
    check_suite(c, r, 4000);  // 10^3 per n in {4,...,7}
    c.note(std::to_string(r.trials) + " digraphs");
}

bool cotree_round_trip(const Digraph& g, Criterion& c) {
    Cotree t;
    try {
        t = build_cotree(g);
    } catch (const Error& e) {
        c.fail(std::string("build_cotree threw: ") + e.what());
        return false;
    }
    struct {
        bool operator()(const Cotree& node, int parent) const {
            if (node.is_leaf()) return true;
            if (node.label == parent || node.children.size() < 2) return false;
            for (const Cotree& ch : node.children)
                if (!(*this)(ch, node.label)) return false;
            return true;
        }
    } alternating;
    if (!alternating(t, -1)) {
        c.fail("cotree not label-alternating for " + encode_digraph(g));
        return false;
    }
    if (!(cotree_to_graph(t) == g)) {
        c.fail("round trip mismatch for " + encode_digraph(g));
        return false;
    }
    return true;
}

void criterion8() {
    Criterion c(8);
    long long checked = 0;
    for (int n = 1; n <= 5 && checked >= 0; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            Digraph g(n);
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if ((code >> idx) & 1) {
                        g.add_arc(i, j);
                        g.add_arc(j, i);
                    }
                    ++idx;
                }
            bool p4free = true;
            for (int i = 0; i < n && p4free; ++i)
                for (int j = i + 1; j < n && p4free; ++j)
                    for (int k = j + 1; k < n && p4free; ++k)
                        for (int l = k + 1; l < n && p4free; ++l)
                            if (induces_p4_in_symmetric(g, {i, j, k, l})) p4free = false;
            if (!p4free) continue;
            ++checked;
            if (!cotree_round_trip(g, c)) return;
        }
    }
    const double presets[] = {0.3, 0.5, 0.7};
    for (int n = 6; n <= 7; ++n) {
        long long found = 0;
        for (std::uint64_t draw = 0; found < 1000 && draw < 2000000; ++draw) {
            const Digraph g =
                random_digraph({n, presets[draw % 3], 0.0,
                                mix64(0x807 + draw * 131 + static_cast<std::uint64_t>(n))});
            bool p4free = true;
            for (int i = 0; i < n && p4free; ++i)
                for (int j = i + 1; j < n && p4free; ++j)
                    for (int k = j + 1; k < n && p4free; ++k)
                        for (int l = k + 1; l < n && p4free; ++l)
                            if (induces_p4_in_symmetric(g, {i, j, k, l})) p4free = false;
            if (!p4free) continue;
            ++found;
            ++checked;
            if (!cotree_round_trip(g, c)) return;
        }
        if (found < 1000)
            c.fail("only " + std::to_string(found) + " sampled cographs at n=" + std::to_string(n));
    }
    c.note(std::to_string(checked) + " cographs");
}

// Kuhn-style augmenting-path maximum matching on the bipartite split of a
// DAG's arc set; the classical identity gives the minimum path cover size.
struct Matching {
    const Digraph& d;
    std::vector<int> match_right;  // right vertex -> matched left vertex

    bool augment(int u, std::vector<char>& visited) {
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == u || !d.arc(u, v) || visited[static_cast<size_t>(v)]) continue;
            visited[static_cast<size_t>(v)] = 1;
            if (match_right[static_cast<size_t>(v)] < 0 ||
                augment(match_right[static_cast<size_t>(v)], visited)) {
                match_right[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }

    int solve() {
        match_right.assign(static_cast<size_t>(d.vertex_count()), -1);
        int size = 0;
        for (int u = 0; u < d.vertex_count(); ++u) {
            std::vector<char> visited(static_cast<size_t>(d.vertex_count()), 0);
            if (augment(u, visited)) ++size;
        }
        return size;
    }
};

void criterion9() {
    Criterion c(9);
    const double presets[] = {0.2, 0.4, 0.6};
    long long checked = 0;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        const std::uint64_t h = mix64(0x9a6 + trial);
        const int n = 4 + static_cast<int>(h % 7);  // 4..10
        Digraph dag(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const std::uint64_t hh =
                    mix64(h ^ mix64(static_cast<std::uint64_t>(i * 64 + j)));
                if (static_cast<double>(hh >> 11) * 0x1.0p-53 < presets[trial % 3])
                    dag.add_arc(i, j);  // arcs only point upward: a DAG
            }
        const PathCoverResult cover = min_path_cover(dag);
        const int expected = n - Matching{dag, {}}.solve();
        ++checked;
        if (cover.count != expected) {
            c.fail("count " + std::to_string(cover.count) + " vs matching bound " +
                   std::to_string(expected) + " on " + encode_digraph(dag));
            return;
        }
        VertexMask covered = 0;
        bool valid = static_cast<int>(cover.paths.size()) == cover.count;
        for (const auto& path : cover.paths) {
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (!dag.arc(path[i], path[i + 1])) valid = false;
            for (int v : path) {
                if (covered & vbit(v)) valid = false;
                covered |= vbit(v);
            }
        }
        if (!valid || covered != dag.full_mask()) {
            c.fail("witness invalid on " + encode_digraph(dag));
            return;
        }
    }
    c.note(std::to_string(checked) + " random DAGs");
}

// ------------------------------------------------------------ CLI contract

struct Transcript {
    std::string name;
    std::string args;  // {data} expands to the corpus directory
    int expected_exit;
};

const std::vector<Transcript> kTranscripts = {
    {"analyze_dicycle4", "analyze {data}/dicycle4.digraph", 0},
    {"analyze_brute_dicycle4", "analyze --brute {data}/dicycle4.digraph", 0},
    {"analyze_c4_complement", "analyze {data}/c4_complement.digraph", 0},
    {"analyze_sym_cycle5", "analyze {data}/sym_cycle5.digraph", 0},
    {"analyze_er6", "analyze --brute {data}/er_n6_seed99.digraph", 0},
    {"compare_self", "compare {data}/c3.digraph {data}/c3.digraph", 0},
    {"compare_reversal", "compare {data}/p3.digraph {data}/p3_reversed.digraph", 0},
    {"compare_differs", "compare {data}/c3.digraph {data}/arcless3.digraph", 1},
    {"compare_size_mismatch", "compare {data}/c3.digraph {data}/sym_p4.digraph", 2},
    {"verify_theorem1_n4", "verify --suite theorem1 --nmax 4 --seed 1", 0},
    {"verify_prop2", "verify --suite prop2 --nmax 5 --trials 50 --seed 7", 0},
    {"generate_named", "generate --named dicycle --k 4", 0},
    {"generate_er", "generate --model er --n 6 --psym 0.3 --pasym 0.2 --seed 99", 0},
    {"cotree_cograph", "cotree {data}/k2_plus_k1.digraph", 0},
    {"cotree_mixed", "cotree {data}/p3_plus.digraph", 0},
    {"cotree_not_cograph", "cotree {data}/sym_p4.digraph", 1},
    {"pathcover_dag6", "pathcover {data}/dag6.digraph", 0},
    {"pathcover_arcless", "pathcover {data}/arcless3.digraph", 0},
    {"export_dot_mixed", "export-dot {data}/mixed4.digraph", 0},
    {"parse_error", "analyze {data}/bad/duplicate_arc.digraph", 2},
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion10(const Options& opt) {
    Criterion c(10);
    fs::create_directories(opt.work);
    int ran = 0;
    for (const Transcript& t : kTranscripts) {
        std::string args = t.args;
        while (true) {
            const size_t pos = args.find("{data}");
            if (pos == std::string::npos) break;
            args.replace(pos, 6, opt.data.string());
        }
        const fs::path out = opt.work / (t.name + ".out");
        const fs::path err = opt.work / (t.name + ".err");
        const std::string cmd = "'" + opt.cli + "' " + args + " > '" + out.string() + "' 2> '" +
                                err.string() + "'";
        const int status = std::system(cmd.c_str());
        const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        ++ran;
        if (exit_code != t.expected_exit) {
            c.fail(t.name + ": exit " + std::to_string(exit_code) + ", expected " +
                   std::to_string(t.expected_exit));
            continue;
        }
        const fs::path golden = opt.golden / (t.name + ".out");
        if (opt.regen) {
            fs::create_directories(opt.golden);
            fs::copy_file(out, golden, fs::copy_options::overwrite_existing);
            continue;
        }
        if (!fs::exists(golden)) {
            c.fail(t.name + ": missing golden file");
            continue;
        }
        const std::string expected = slurp(golden);
        const std::string actual = slurp(out);
        if (expected != actual) {
            size_t at = 0;
            while (at < expected.size() && at < actual.size() && expected[at] == actual[at]) ++at;
            c.fail(t.name + ": output differs at byte " + std::to_string(at));
        }
    }

    // file-format round trips over the corpus
    int corpus = 0;
    for (const auto& entry : fs::directory_iterator(opt.data)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".digraph") continue;
        ++corpus;
        const std::string text = slurp(entry.path());
        try {
            const Digraph d = parse_digraph(text);
            const std::string canonical = render_digraph(d);
            if (!(parse_digraph(canonical) == d))
                c.fail(entry.path().filename().string() + ": parse(render) != id");
            if (render_digraph(parse_digraph(canonical)) != canonical)
                c.fail(entry.path().filename().string() + ": render not canonical");
        } catch (const Error& e) {
            c.fail(entry.path().filename().string() + ": " + e.what());
        }
    }
    if (corpus < 20) c.fail("corpus has " + std::to_string(corpus) + " files, expected >= 20");
    c.note(std::to_string(ran) + " transcripts" + (opt.regen ? " regenerated" : "") + ", " +
           std::to_string(corpus) + " corpus files");
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--cli") opt.cli = next();
        else if (arg == "--data") opt.data = next();
        else if (arg == "--golden") opt.golden = next();
        else if (arg == "--work") opt.work = next();
        else if (arg == "--regen") opt.regen = true;
        else {
            std::cerr << "unknown argument: " << arg << "\n";
            return 2;
        }
    }
    if (opt.cli.empty() || opt.data.empty() || opt.golden.empty() || opt.work.empty()) {
        std::cerr << "usage: acceptance --cli <bin> --data <dir> --golden <dir> --work <dir> [--regen]\n";
        return 2;
    }

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(opt);

    std::cout << (g_all_pass ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return g_all_pass ? 0 : 1;
}
