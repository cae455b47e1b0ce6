#include "perfdig/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace perfdig {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    Digraph d;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (const size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "n" || toks.size() != 2)
                throw ParseError(lineno, "expected header 'n <count>'");
            const int n = parse_int(toks[1], lineno, "a vertex count");
            try {
                d = Digraph(n);
            } catch (const OutOfRangeError& e) {
                throw ParseError(lineno, e.what());
            }
            have_header = true;
            continue;
        }
        if (toks[0] != "arc" || toks.size() != 3)
            throw ParseError(lineno, "expected 'arc <u> <v>'");
        const int u = parse_int(toks[1], lineno, "a vertex id");
        const int v = parse_int(toks[2], lineno, "a vertex id");
        if (u < 0 || u >= d.vertex_count() || v < 0 || v >= d.vertex_count())
            throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "loop arc not allowed");
        if (d.arc(u, v)) throw ParseError(lineno, "duplicate arc");
        d.add_arc(u, v);
    }
    if (!have_header) throw ParseError(lineno, "missing 'n <count>' header");
    return d;
}

std::string render_digraph(const Digraph& d) {
    std::string out = "n " + std::to_string(d.vertex_count()) + "\n";
    for (auto [u, v] : d.arcs())
        out += "arc " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string render_dot(const Digraph& d) {
    std::string out = "digraph {\n";
    for (int v = 0; v < d.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (u == v || !d.arc(u, v)) continue;
            if (d.arc(v, u)) {
                if (u < v)
                    out += "  " + std::to_string(u) + " -> " + std::to_string(v) +
                           " [dir=both];\n";
            } else {
                out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
            }
        }
    return out + "}\n";
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

}  // namespace perfdig
