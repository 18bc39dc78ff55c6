#ifndef WILSON_ERRORS_HPP_
#define WILSON_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wilson {

  //! Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
  };

  class ConductorMismatch : public Error {
   public:
    ConductorMismatch(unsigned lhs, unsigned rhs)
        : Error("conductor mismatch: " + std::to_string(lhs) + " vs "
                + std::to_string(rhs)),
          lhs_(lhs),
          rhs_(rhs) {}
    unsigned lhs() const noexcept {
      return lhs_;
    }
    unsigned rhs() const noexcept {
      return rhs_;
    }

   private:
    unsigned lhs_;
    unsigned rhs_;
  };

  class IndexOutOfRange : public Error {
   public:
    IndexOutOfRange(std::size_t row, std::size_t col, std::size_t value)
        : Error("table entry (" + std::to_string(row) + ", "
                + std::to_string(col) + ") = " + std::to_string(value)
                + " is out of range"),
          row_(row),
          col_(col),
          value_(value) {}
    std::size_t row() const noexcept {
      return row_;
    }
    std::size_t col() const noexcept {
      return col_;
    }
    std::size_t value() const noexcept {
      return value_;
    }

   private:
    std::size_t row_, col_, value_;
  };

  //! Thrown by validation when (xy)z != x(yz).
  class AssocFail : public Error {
   public:
    AssocFail(std::size_t x, std::size_t y, std::size_t z)
        : Error("associativity fails at (" + std::to_string(x) + ", "
                + std::to_string(y) + ", " + std::to_string(z) + ")"),
          x_(x),
          y_(y),
          z_(z) {}
    std::size_t x() const noexcept {
      return x_;
    }
    std::size_t y() const noexcept {
      return y_;
    }
    std::size_t z() const noexcept {
      return z_;
    }

   private:
    std::size_t x_, y_, z_;
  };

  //! Input that does not meet an operation's documented precondition. The
  //! kind string is stable and machine-readable (e.g. "chi-not-star-invariant").
  class PreconditionError : public Error {
   public:
    PreconditionError(std::string kind, std::string const& detail)
        : Error(kind + ": " + detail), kind_(std::move(kind)) {}
    std::string const& kind() const noexcept {
      return kind_;
    }

   private:
    std::string kind_;
  };

  //! A semigroup or function lies outside the standing hypotheses
  //! (square generation, involutive automorphism, admissible weight).
  class BlanketAssumptionViolated : public Error {
   public:
    explicit BlanketAssumptionViolated(std::string const& what)
        : Error("blanket assumption violated: " + what) {}
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column "
                + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_, column_;
  };

}  // namespace wilson

#endif  // WILSON_ERRORS_HPP_
