#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weiljets {

enum class ErrorKind {
    DimensionMismatch,
    VariableCountMismatch,
    NotCoordinateChange,
    NotWellDefined,
    NotEpimorphism,
    NotAnIdeal,
    NotInSubspace,
    EmptyQuotient,
    HintTooSmall,
    FNotInIdeal,
    AlgebraMismatch,
    AxiomViolation,
    ParseError,
    UnknownName,
    SchemaViolation,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the kernel carries a machine-readable kind so the
/// CLI can report it per command.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

// Internal consistency checks. A failure here is a bug, never bad input.
inline void ensure(bool condition, const char* what) {
    if (!condition) throw Error(ErrorKind::Internal, std::string("internal check failed: ") + what);
}

}  // namespace weiljets
