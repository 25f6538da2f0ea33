#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

// Every failure the library reports, from numeric kernels up to file parsing.
// The CLI maps ParseError to exit 2 and everything else to exit 3.
enum class ErrorKind {
    NotSquare,
    NotHermitian,
    NoConvergence,
    NotPsd,
    NotSelfAdjoint,
    SignatureMismatch,
    SizeMismatch,
    IndexOutOfRange,
    InvalidDimension,
    DomainNotSingleBlock,
    NotStochastic,
    NotCommutative,
    NotPu,
    NotMiu,
    NotFunctional,
    NotEffect,
    NotEModHom,
    InconsistentAffineData,
    SingularSystem,
    DimensionTooLarge,
    InvalidArgument,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace gelfand
