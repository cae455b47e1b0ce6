#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfdig {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LoopArcError : public Error {
public:
    explicit LoopArcError(int v)
        : Error("loop arc (" + std::to_string(v) + "," + std::to_string(v) + ") not allowed") {}
};

class OutOfRangeError : public Error {
public:
    using Error::Error;
};

class NotSymmetricError : public Error {
public:
    NotSymmetricError() : Error("digraph is not symmetric") {}
};

class BadSubsetSizeError : public Error {
public:
    using Error::Error;
};

class VertexCountMismatchError : public Error {
public:
    VertexCountMismatchError(int a, int b)
        : Error("vertex counts differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class PartialAssignmentError : public Error {
public:
    PartialAssignmentError() : Error("color assignment does not cover every vertex") {}
};

class NotCographError : public Error {
public:
    explicit NotCographError(const std::array<int, 4>& p4)
        : Error("graph is not a cograph: {" + std::to_string(p4[0]) + "," + std::to_string(p4[1]) +
                "," + std::to_string(p4[2]) + "," + std::to_string(p4[3]) + "} induces a P4"),
          p4_(p4) {}
    const std::array<int, 4>& p4_witness() const { return p4_; }

private:
    std::array<int, 4> p4_;
};

class MalformedCotreeError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    explicit UnknownNameError(const std::string& name) : Error("unknown name: " + name) {}
};

class BadSizeError : public Error {
public:
    using Error::Error;
};

class InvalidProbabilitiesError : public Error {
public:
    InvalidProbabilitiesError()
        : Error("probabilities must satisfy pSym >= 0, pAsym >= 0, pSym + pAsym <= 1") {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(reason) {}
    int line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

/// Thrown when an operation that requires a pattern-free digraph finds one
/// of the five patterns; carries a human-readable description of the site.
class NotFFreeError : public Error {
public:
    NotFFreeError(const std::string& pattern, const std::vector<int>& site)
        : Error(make_message(pattern, site)), pattern_(pattern), site_(site) {}
    const std::string& pattern() const { return pattern_; }
    const std::vector<int>& site() const { return site_; }

private:
    static std::string make_message(const std::string& pattern, const std::vector<int>& site) {
        std::string s = "digraph is not pattern-free: {";
        for (size_t i = 0; i < site.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(site[i]);
        }
        return s + "} induces " + pattern;
    }
    std::string pattern_;
    std::vector<int> site_;
};

/// Thrown when the component structure of a pattern-free digraph violates
/// the complete-multipartite shape; such a digraph would be a counterexample.
class StructureViolationError : public Error {
public:
    StructureViolationError(int comp_a, int comp_b, int u, int v, const std::string& kind)
        : Error("structure violation between components " + std::to_string(comp_a) + " and " +
                std::to_string(comp_b) + ": pair (" + std::to_string(u) + "," +
                std::to_string(v) + ") " + kind) {}
};

}  // namespace perfdig
