#pragma once

#include <stdexcept>
#include <string>

namespace cmapf {

// Base for all library errors. Planner infeasibility is never an exception;
// it is reported through PlanOutcome. Exceptions mean a caller broke a
// structural precondition or fed us malformed input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node id or base out of range, or an edge endpoint past node_count.
struct RangeError : Error {
    using Error::Error;
};

// Text input (graph file, plan file, DIMACS result) failed to parse.
struct ParseError : Error {
    ParseError(int line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    int line;
};

struct NotACommEdge : Error {
    using Error::Error;
};

struct ZeroAgents : Error {
    using Error::Error;
};

struct AgentCountMismatch : Error {
    using Error::Error;
};

struct NotSightMoveable : Error {
    using Error::Error;
};

struct NotCompleteCommunication : Error {
    using Error::Error;
};

struct NotNeighborCommunicable : Error {
    using Error::Error;
};

struct BaseSelfLoopMissing : Error {
    using Error::Error;
};

// A satisfying assignment violated the exactly-one-position constraint;
// indicates an encoder bug, not bad user input.
struct MalformedModel : Error {
    using Error::Error;
};

struct InvalidFormula : Error {
    using Error::Error;
};

struct DisconnectedGrid : Error {
    using Error::Error;
};

struct BaseBlocked : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

}  // namespace cmapf
