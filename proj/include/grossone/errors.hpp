#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grossone {

/// Byte range [begin, end) into the source text an AST node was parsed from.
/// Programmatically built nodes carry the empty span {0, 0}.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Base class of every error this library raises.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A digit is NaN or an IEEE infinity, either in input terms or produced
/// mid-operation. Non-finite digits never propagate silently.
class InvalidDigit : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Division (or a reciprocal power) would yield an unbounded expansion and
/// no truncation floor is available to stop it.
class MissingTruncationFloor : public Error {
public:
  MissingTruncationFloor()
      : Error("operation needs a truncation floor: the expansion does not terminate") {}
};

/// An argument carries positive grosspowers where only a finite plus
/// infinitesimal value is meaningful.
class InfinitePart : public Error {
public:
  using Error::Error;
};

/// An infinitesimal part (or the floor) has a non-integer grosspower;
/// series composition only supports integer windows.
class NonIntegerInfinitesimal : public Error {
public:
  using Error::Error;
};

/// An elementary function was applied outside its real domain.
class DomainError : public Error {
public:
  DomainError(const std::string& function, double finite_part)
      : Error(function + " undefined at finite part " + std::to_string(finite_part)),
        function_(function),
        finite_part_(finite_part) {}

  const std::string& function() const { return function_; }
  double finite_part() const { return finite_part_; }

private:
  std::string function_;
  double finite_part_;
};

/// Requested derivative order exceeds the largest order whose factorial is
/// exact in binary64 (18).
class OrderTooLarge : public Error {
public:
  explicit OrderTooLarge(int order)
      : Error("derivative order " + std::to_string(order) + " exceeds the maximum 18") {}
};

/// Newton iteration hit a point with zero first derivative.
class DerivativeVanished : public Error {
public:
  explicit DerivativeVanished(double at)
      : Error("derivative vanished at x = " + std::to_string(at)), at_(at) {}
  double at() const { return at_; }

private:
  double at_;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

/// A domain error surfaced while evaluating an expression; carries the
/// source span of the innermost failing AST node.
class EvaluationError : public Error {
public:
  EvaluationError(Span span, const std::string& cause)
      : Error("evaluation failed at [" + std::to_string(span.begin) + ", " +
              std::to_string(span.end) + "): " + cause),
        span_(span) {}
  Span span() const { return span_; }

private:
  Span span_;
};

}  // namespace grossone
