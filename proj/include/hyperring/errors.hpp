#ifndef HYPERRING_ERRORS_HPP_
#define HYPERRING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hyperring {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Wrong number of arguments for an operation of fixed arity.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  // An argument violates a precondition (empty subset, label not in the
  // carrier, non-surjective map passed where an epimorphism is needed, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class NotSurjectiveError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  class KernelNotContainedError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  // Predicate requested for the whole carrier.
  class ImproperIdealError : public Error {
   public:
    using Error::Error;
  };

  // A subset that was required to be a hyperideal is not one.
  class NotAHyperidealError : public Error {
   public:
    using Error::Error;
  };

  // Two routes that must agree did not. Always a bug, never a user error.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

  // Induced quotient operation depends on the choice of representatives.
  class IllDefinedQuotientError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column)
                + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Document is well-formed but a table is missing a tuple.
  class NonTotalTableError : public Error {
   public:
    using Error::Error;
  };

  class UnknownLabelError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hyperring

#endif  // HYPERRING_ERRORS_HPP_
