#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace proofmesh {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid field arithmetic: mixed fields, inversion of zero, missing roots.
struct FieldError : Error {
    using Error::Error;
};

// Invalid evaluation-domain construction or use.
struct DomainError : Error {
    using Error::Error;
};

// Invalid sharing parameters or share sets.
struct SharingError : Error {
    using Error::Error;
};

// Circuit text rejected; `line` is 1-based, 0 when no line applies.
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

// A multiparty run could not complete; names the failing server and step.
struct ProtocolAbort : Error {
    std::uint32_t server;
    std::string step;
    ProtocolAbort(std::uint32_t server_idx, const std::string& step_name, const std::string& what)
        : Error("server " + std::to_string(server_idx) + ", step " + step_name + ": " + what),
          server(server_idx),
          step(step_name) {}
};

// Witness fails the circuit; raised by polynomial division.
struct UnsatisfiedWitness : Error {
    using Error::Error;
};

// An exhaustive enumeration would exceed its budget; carries the required run count.
struct BudgetError : Error {
    double required_runs;
    BudgetError(double required, const std::string& what) : Error(what), required_runs(required) {}
};

}  // namespace proofmesh
