#pragma once

#include <stdexcept>
#include <string>

namespace dpois {

// Base of every error the library raises. Callers that only need a
// diagnostic line can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class NonIntegerExponent : public Error { using Error::Error; };
class NonIntegerLambda : public Error { using Error::Error; };
class PoleError : public Error { using Error::Error; };
class OrderMismatch : public Error { using Error::Error; };
class NonzeroConstantTerm : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class BudgetExhausted : public Error { using Error::Error; };
class RegimeError : public Error { using Error::Error; };
class UnsupportedRegime : public RegimeError { using RegimeError::RegimeError; };
class NonPositiveAlpha : public RegimeError { using RegimeError::RegimeError; };
class SamplerOverflow : public Error { using Error::Error; };
class NoClosedForm : public Error { using Error::Error; };
class UnknownIdentity : public Error { using Error::Error; };

}  // namespace dpois
