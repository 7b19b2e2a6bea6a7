#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netent {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An edge whose two endpoints are the same node.
class SelfLoopError : public Error {
public:
    explicit SelfLoopError(std::string node, std::size_t line = 0)
        : Error(line == 0 ? "self-loop on node '" + node + "'"
                          : "line " + std::to_string(line) + ": self-loop on node '" + node + "'"),
          node_(std::move(node)),
          line_(line) {}

    const std::string& node() const noexcept { return node_; }
    /// 1-based source line, 0 when the edge did not come from a file.
    std::size_t line() const noexcept { return line_; }

private:
    std::string node_;
    std::size_t line_;
};

/// Construction produced a graph with zero nodes.
class EmptyGraphError : public Error {
public:
    EmptyGraphError() : Error("graph has no nodes") {}
};

class UnknownNodeError : public Error {
public:
    explicit UnknownNodeError(std::string node)
        : Error("unknown node '" + node + "'"), node_(std::move(node)) {}

    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

/// Degree normalization is undefined on a graph without edges.
class ZeroTotalDegreeError : public Error {
public:
    ZeroTotalDegreeError() : Error("total degree is zero (graph has no edges)") {}
};

/// 0^q diverges for negative q.
class NegativeQZeroProbError : public Error {
public:
    NegativeQZeroProbError()
        : Error("q < 0 requires strictly positive probabilities (0^q diverges)") {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Invalid sweep range (q_min > q_max or non-positive step).
class InvalidRangeError : public Error {
public:
    explicit InvalidRangeError(const std::string& what) : Error(what) {}
};

/// Input line that cannot be interpreted in the expected format.
class MalformedLineError : public Error {
public:
    MalformedLineError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Pajek input without a leading *Vertices section.
class MissingVerticesHeaderError : public Error {
public:
    MissingVerticesHeaderError() : Error("missing *Vertices header") {}
};

class VertexIdOutOfRangeError : public Error {
public:
    VertexIdOutOfRangeError(std::size_t line, long long id, std::size_t max_id)
        : Error("line " + std::to_string(line) + ": vertex id " + std::to_string(id) +
                " outside 1.." + std::to_string(max_id)),
          line_(line),
          id_(id) {}

    std::size_t line() const noexcept { return line_; }
    long long id() const noexcept { return id_; }

private:
    std::size_t line_;
    long long id_;
};

/// Degree sequence not realizable as a simple graph.
class NonGraphicalSequenceError : public Error {
public:
    NonGraphicalSequenceError(std::size_t violated_index, const std::string& what)
        : Error(what), violated_index_(violated_index) {}

    /// 1-based index k of the first violated Erdos-Gallai inequality,
    /// 0 when the sequence fails a more basic check (odd sum, negative entry).
    std::size_t violated_index() const noexcept { return violated_index_; }

private:
    std::size_t violated_index_;
};

class InvalidParamsError : public Error {
public:
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

}  // namespace netent
