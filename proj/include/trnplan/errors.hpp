#pragma once

#include <stdexcept>
#include <string>

namespace trnplan {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input syntax (JSON, edge list, CSV).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Structurally well-formed input that violates a model invariant
// (self-loop, duplicate edge, disconnected graph, value out of range).
// The message carries the offending record.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

// Argument outside its documented domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

// Invalid generator / run parameters.
class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& msg) : Error("invalid params: " + msg) {}
};

// Referenced node id is not part of the graph.
class NodeNotFound : public Error {
public:
    explicit NodeNotFound(const std::string& msg) : Error("node not found: " + msg) {}
};

// Iterative solver failed to reach its tolerance within the iteration cap.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& msg, int iterations)
        : Error("no convergence: " + msg), iterations_(iterations) {}

    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

}  // namespace trnplan
