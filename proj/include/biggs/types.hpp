#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace biggs {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex of a colored tree; also a point of the permutation domain.
using Vertex = std::uint32_t;

/// Edge color. Index 0 is the first color in construction order.
enum class Color : std::uint16_t {};

constexpr std::uint32_t index_of(Color c) noexcept { return static_cast<std::uint32_t>(c); }
constexpr Color color(std::uint32_t i) noexcept { return static_cast<Color>(i); }

/// Invalid arguments (bad C, R, malformed text, mismatched degrees).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is valid but exceeds a size the implementation is willing to handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied objects was violated (e.g. a search
/// generator that is not an involution).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A proven structural property failed on an explicit computation. Always a bug.
class ContradictionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by factorize() when the remaining cofactor is out of budget.
class PartialFactorizationError : public CapacityError {
 public:
  PartialFactorizationError(const std::string& what, BigInt cofactor)
      : CapacityError(what), cofactor_(std::move(cofactor)) {}
  const BigInt& cofactor() const noexcept { return cofactor_; }

 private:
  BigInt cofactor_;
};

inline std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace biggs
