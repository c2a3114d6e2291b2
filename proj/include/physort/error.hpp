#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace physort {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
            : Error(message), _position(position) {}

    /// 1-based character position of the offending input, 0 when not tied to a character.
    std::size_t position() const { return _position; }

private:
    std::size_t _position;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class UnknownAgent : public Error {
public:
    using Error::Error;
};

class NoAgents : public Error {
public:
    NoAgents() : Error("no agents") {}
};

class NotNormal : public Error {
public:
    explicit NotNormal(const std::string& what)
            : Error(what + ": configuration is not normal (leftmost agent must be red, rightmost blue); "
                           "use star_report / alg2 for general configurations") {}
};

/// A MoveSet rejected by the step semantics. Carries the tick when raised from a simulation run.
class MoveError : public Error {
public:
    explicit MoveError(std::string message) : Error(message), _message(std::move(message)) {}

    void annotate_tick(int tick) {
        _tick = tick;
        _message = "tick " + std::to_string(tick) + ": " + _message;
    }
    std::optional<int> tick() const { return _tick; }
    const char* what() const noexcept override { return _message.c_str(); }

private:
    std::string _message;
    std::optional<int> _tick;
};

class BoundaryViolation : public MoveError {
public:
    explicit BoundaryViolation(unsigned agent)
            : MoveError("agent " + std::to_string(agent) + " would leave the grid"), _agent(agent) {}
    unsigned agent() const { return _agent; }

private:
    unsigned _agent;
};

class OccupiedTarget : public MoveError {
public:
    explicit OccupiedTarget(unsigned agent)
            : MoveError("agent " + std::to_string(agent) + " targets a cell occupied at tick start"),
              _agent(agent) {}
    unsigned agent() const { return _agent; }

private:
    unsigned _agent;
};

class TargetConflict : public MoveError {
public:
    TargetConflict(unsigned first, unsigned second)
            : MoveError("agents " + std::to_string(first) + " and " + std::to_string(second) +
                        " target the same cell"),
              _first(first), _second(second) {}
    unsigned first() const { return _first; }
    unsigned second() const { return _second; }

private:
    unsigned _first;
    unsigned _second;
};

class ResourceExhausted : public Error {
public:
    ResourceExhausted(const std::string& what, std::size_t visited, std::size_t frontier, int depth)
            : Error(what + " (visited=" + std::to_string(visited) + " frontier=" + std::to_string(frontier) +
                    " depth=" + std::to_string(depth) + ")"),
              _visited(visited), _frontier(frontier), _depth(depth) {}

    std::size_t visited() const { return _visited; }
    std::size_t frontier() const { return _frontier; }
    int depth() const { return _depth; }

private:
    std::size_t _visited;
    std::size_t _frontier;
    int _depth;
};

}  // namespace physort
