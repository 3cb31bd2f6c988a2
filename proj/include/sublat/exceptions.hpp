#ifndef SUBLAT_EXCEPTIONS_HPP_
#define SUBLAT_EXCEPTIONS_HPP_

#include <stdexcept>
#include <string>

namespace sublat {

//! Base class for all errors reported by the library.
struct SublatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A multiplication table entry is not a valid element id.
struct InvalidEntry : SublatError {
  InvalidEntry(int row, int col, int value)
      : SublatError("invalid table entry " + std::to_string(value) + " at ("
                    + std::to_string(row) + ", " + std::to_string(col) + ")"),
        row(row),
        col(col),
        value(value) {}
  explicit InvalidEntry(std::string const& msg)
      : SublatError(msg), row(-1), col(-1), value(-1) {}
  int row, col, value;
};

//! Associativity fails; carries one violating triple.
struct NotAssociative : SublatError {
  NotAssociative(int a, int b, int c)
      : SublatError("not associative at (" + std::to_string(a) + ", "
                    + std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a),
        b(b),
        c(c) {}
  int a, b, c;
};

struct SizeZero : SublatError {
  SizeZero() : SublatError("semigroup size must be positive") {}
  explicit SizeZero(std::string const& what) : SublatError(what) {}
};

struct TooLarge : SublatError {
  using SublatError::SublatError;
};

struct NotOrthodox : SublatError {
  NotOrthodox() : SublatError("semigroup is not orthodox") {}
  explicit NotOrthodox(std::string const& what) : SublatError(what) {}
};

//! Compatibility fails; carries a violating quadruple (x, x', y, y').
struct NotACongruence : SublatError {
  NotACongruence(int x, int x2, int y, int y2)
      : SublatError("partition is not a congruence: (" + std::to_string(x)
                    + " ~ " + std::to_string(x2) + ", " + std::to_string(y)
                    + " ~ " + std::to_string(y2) + ") but products differ"),
        x(x),
        x2(x2),
        y(y),
        y2(y2) {}
  int x, x2, y, y2;
};

struct NotABand : SublatError {
  NotABand() : SublatError("semigroup is not a band") {}
};

struct NotNongroup : SublatError {
  explicit NotNongroup(int x)
      : SublatError("element " + std::to_string(x)
                    + " is a group element (its H-class contains an idempotent)"),
        x(x) {}
  int x;
};

struct NotAnInverse : SublatError {
  NotAnInverse(int a, int b)
      : SublatError("element " + std::to_string(b) + " is not an inverse of "
                    + std::to_string(a)),
        a(a),
        b(b) {}
  int a, b;
};

struct KernelNotCompletelySimple : SublatError {
  KernelNotCompletelySimple()
      : SublatError("the kernel is not completely simple with group H-classes") {}
  explicit KernelNotCompletelySimple(std::string const& what) : SublatError(what) {}
};

//! The map fails the partial homomorphism law; carries a witness pair.
struct NotPartialHom : SublatError {
  NotPartialHom(int a, int b)
      : SublatError("phi is not a partial homomorphism: phi(a)phi(b) != phi(ab) "
                    "for a = "
                    + std::to_string(a) + ", b = " + std::to_string(b)),
        a(a),
        b(b) {}
  int a, b;
};

//! A symbolic element violates its model's canonical-form invariants.
struct NotCanonical : SublatError {
  using SublatError::SublatError;
};

struct EmptyWord : SublatError {
  EmptyWord() : SublatError("cannot evaluate the empty word") {}
};

struct UnknownSuite : SublatError {
  explicit UnknownSuite(std::string const& name)
      : SublatError("unknown suite: " + name) {}
};

}  // namespace sublat

#endif  // SUBLAT_EXCEPTIONS_HPP_
