#ifndef RECOLOR_ERRORS_HPP
#define RECOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recolor {

enum class ErrorCode {
    syntax,
    duplicate_edge,
    index_out_of_range,
    unknown_vertex,
    not_connected,
    euler_violation,
    invalid_embedding,
    precondition_violation,
    list_too_small,
    no_embedding,
    embedding_required,
    dimension_mismatch,
    improper_input,
    solver_unsat,
    budget_exceeded,
    checksum_mismatch,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::syntax: return "SYNTAX";
    case ErrorCode::duplicate_edge: return "DUPLICATE_EDGE";
    case ErrorCode::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::unknown_vertex: return "UNKNOWN_VERTEX";
    case ErrorCode::not_connected: return "NOT_CONNECTED";
    case ErrorCode::euler_violation: return "EULER_VIOLATION";
    case ErrorCode::invalid_embedding: return "INVALID_EMBEDDING";
    case ErrorCode::precondition_violation: return "PRECONDITION_VIOLATION";
    case ErrorCode::list_too_small: return "LIST_TOO_SMALL";
    case ErrorCode::no_embedding: return "NO_EMBEDDING";
    case ErrorCode::embedding_required: return "EMBEDDING_REQUIRED";
    case ErrorCode::dimension_mismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::improper_input: return "IMPROPER_INPUT";
    case ErrorCode::solver_unsat: return "SOLVER_UNSAT";
    case ErrorCode::budget_exceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::checksum_mismatch: return "CHECKSUM_MISMATCH";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Carries the 1-based source position of the offending token.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, int line, int column, const std::string& msg)
        : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace recolor

#endif
