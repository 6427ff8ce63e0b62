#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringprob {

enum class ErrorCode {
  ill_formed,
  flavor_mismatch,
  cap_exceeded,
  symmetry_violated,
  non_ideal_input,
  invalid_argument,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class IllFormedReason {
  shape,
  arity,
  coefficient_range,
  well_definedness,
  associativity,
  antisymmetry,
  jacobi,
  syntax,
};

const char* to_string(IllFormedReason reason) noexcept;

// Witness holds the offending basis indices (0-based), or the offending
// coordinate path for range/arity problems.
class IllFormed : public Error {
 public:
  IllFormed(IllFormedReason reason, std::vector<std::size_t> witness,
            const std::string& detail);

  IllFormedReason reason() const noexcept { return reason_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  IllFormedReason reason_;
  std::vector<std::size_t> witness_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& operation, std::uint64_t size, std::uint64_t cap)
      : Error(ErrorCode::cap_exceeded,
              operation + ": size " + std::to_string(size) + " exceeds cap " +
                  std::to_string(cap)) {}
};

class FlavorMismatch : public Error {
 public:
  explicit FlavorMismatch(const std::string& operation)
      : Error(ErrorCode::flavor_mismatch,
              operation + " requires an associative ring") {}
};

}  // namespace ringprob
