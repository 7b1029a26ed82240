#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A truncated Toeplitz matrix (or the recursion building it) stopped being
/// positive definite at the given order.
class NotPositiveDefinite : public Error {
public:
  explicit NotPositiveDefinite(std::ptrdiff_t order)
      : Error("moment sequence is not positive definite at order " + std::to_string(order)),
        order_(order) {}
  std::ptrdiff_t order() const noexcept { return order_; }

private:
  std::ptrdiff_t order_;
};

class InsufficientMoments : public Error {
public:
  InsufficientMoments(std::ptrdiff_t needed, std::ptrdiff_t available)
      : Error("need " + std::to_string(needed) + " moments, have " + std::to_string(available)) {}
};

class Singular : public Error {
public:
  Singular() : Error("matrix is singular") {}
};

class InvalidVerblunsky : public Error {
public:
  explicit InvalidVerblunsky(std::ptrdiff_t index)
      : Error("Verblunsky coefficient " + std::to_string(index) + " is not in (-1, 1)"),
        index_(index) {}
  std::ptrdiff_t index() const noexcept { return index_; }

private:
  std::ptrdiff_t index_;
};

class InvalidHeights : public Error {
public:
  explicit InvalidHeights(std::ptrdiff_t index)
      : Error("step height " + std::to_string(index) + " is not a positive finite number"),
        index_(index) {}
  std::ptrdiff_t index() const noexcept { return index_; }

private:
  std::ptrdiff_t index_;
};

class InvalidHamiltonian : public Error {
public:
  using Error::Error;
};

class InvalidPotential : public Error {
public:
  using Error::Error;
};

class OutOfRange : public Error {
public:
  using Error::Error;
};

class QuadratureFailure : public Error {
public:
  using Error::Error;
};

/// Malformed user input (spec strings, sample files, option values).
class InvalidInput : public Error {
public:
  using Error::Error;
};

class GridTooSmall : public Error {
public:
  GridTooSmall(double tail, double tolerance)
      : Error("grid tail bound " + std::to_string(tail) + " exceeds tolerance " +
              std::to_string(tolerance)),
        tail_(tail) {}
  double tail() const noexcept { return tail_; }

private:
  double tail_;
};

}  // namespace canspec
