#pragma once

#include <stdexcept>
#include <string>

namespace ioelim {

enum class ErrorKind {
    Syntax,
    UndeclaredSymbol,
    DuplicateDeclaration,
    OutputDependsOnInput,
    OutputDependsOnDerivative,
    InvalidReference,
    ZeroDenominator,
    UnsupportedShape,
    DegenerateDivisor,
    ResourceLimit,
    EmptyElimination,
    InsufficientRelations,
    ZeroPivot,
    DenominatorVanishes,
    InsufficientOrder,
    NonTermination,
    Io,
};

// Single exception type for the whole library; `detail` carries the
// found-count for InsufficientRelations and the line number for Syntax.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, long detail = 0)
        : std::runtime_error(std::move(message)), kind_(kind), detail_(detail) {}

    ErrorKind kind() const { return kind_; }
    long detail() const { return detail_; }

  private:
    ErrorKind kind_;
    long detail_;
};

const char* error_kind_name(ErrorKind kind);

} // namespace ioelim
