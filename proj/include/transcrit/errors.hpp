/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>

namespace transcrit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactmath
struct NonPositiveInput : Error { using Error::Error; };
struct NonPositiveBase : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// numberfield
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct FieldValidation : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct NotIntegerCoords : Error { using Error::Error; };
struct ConjugatePair : Error { using Error::Error; };
struct EqualInputs : Error { using Error::Error; };
struct ZeroForm : Error { using Error::Error; };
struct NotGalois : Error { using Error::Error; };

// sequences
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct UndefinedSymbol : Error { using Error::Error; };
struct UnsupportedX : Error { using Error::Error; };
struct CeilingExceeded : Error { using Error::Error; };

// criteria
struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& which_)
        : Error("constraint violated: " + which_), which(which_) {}
    std::string which;
};
struct EmptyGrid : Error { using Error::Error; };

// approximants
struct IntegralityViolated : Error { using Error::Error; };
struct RatioNotCertified : Error { using Error::Error; };
struct NotRationalA : Error { using Error::Error; };
struct PrecondViolated : Error { using Error::Error; };

} // namespace transcrit
