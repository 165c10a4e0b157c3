#ifndef CONFAULT_ERRORS_HPP
#define CONFAULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confault {

// Base class for all domain errors raised on bad inputs. The CLI maps
// these to the usage-error exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SelfLoopError : Error {
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v)) {}
};

struct OutOfRangeError : Error {
    OutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]") {}
};

struct MissingEdgeError : Error {
    MissingEdgeError(int tail, int head)
        : Error("edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                ") not present in the digraph") {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

struct NotCoReachableError : Error {
    NotCoReachableError(int mu, int nu)
        : Error("vertex " + std::to_string(mu) + " has no path to " + std::to_string(nu)) {}
};

struct TooLargeError : Error {
    TooLargeError(int n, int limit)
        : Error("exhaustive routine limited to " + std::to_string(limit) +
                " vertices, got " + std::to_string(n)) {}
};

struct BadLengthError : Error {
    BadLengthError(int k, int n)
        : Error("path length " + std::to_string(k) + " outside [1, " +
                std::to_string(n - 1) + "]") {}
};

struct DiagonalMinorError : Error {
    explicit DiagonalMinorError(int i)
        : Error("minor requires distinct row/column indices, got i = j = " + std::to_string(i)) {}
};

struct InfiniteDistanceError : Error {
    InfiniteDistanceError(int i, int j)
        : Error("no path from vertex " + std::to_string(i) + " to " + std::to_string(j)) {}
};

struct NotDistinguishableError : Error {
    NotDistinguishableError()
        : Error("digraph pair is indistinguishable from the observer; no witness exists") {}
};

struct NonSquareError : Error {
    NonSquareError(int rows, int cols)
        : Error("expected square matrix, got " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace confault

#endif
