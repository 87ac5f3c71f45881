#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zcc {

/// Precondition on an integer argument violated (n < 2, even Jacobi modulus, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an inverse is requested for a zero divisor. Carries gcd(a, n).
class not_a_unit : public std::domain_error {
 public:
  not_a_unit(std::uint64_t value, std::uint64_t modulus, std::uint64_t witness)
      : std::domain_error(std::to_string(value) + " is not a unit mod " +
                          std::to_string(modulus) + " (gcd " +
                          std::to_string(witness) + ")"),
        value_(value),
        modulus_(modulus),
        witness_(witness) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t gcd_witness() const noexcept { return witness_; }

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
  std::uint64_t witness_;
};

/// The operation needs 2 and 3 to be units (gcd(n, 6) = 1).
class unsupported_characteristic : public std::domain_error {
 public:
  explicit unsupported_characteristic(std::uint64_t modulus)
      : std::domain_error("operation requires gcd(n, 6) = 1, got n = " +
                          std::to_string(modulus)),
        modulus_(modulus) {}

  std::uint64_t modulus() const noexcept { return modulus_; }

 private:
  std::uint64_t modulus_;
};

/// Work or memory estimate exceeds the configured budget.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::uint64_t required,
                 std::uint64_t limit)
      : std::runtime_error(what + ": needs " + std::to_string(required) +
                           " tuples, budget is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

}  // namespace zcc
