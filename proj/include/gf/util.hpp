#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf {

/// Domain failure carrying a machine-readable kind next to the human message.
/// Kinds in use: BlockOutOfRange, RecognitionFailure, CapExceeded, IndexMismatch,
/// NotTransitive, ActionLawViolation, InvalidAction, CoverageFailure, NotInjective,
/// MissingProvenance, ParseError.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

uint64_t fnv1a64(const void* data, size_t n);
uint64_t fnv1a64(const std::string& s);
std::string hex64(uint64_t v);

/// lcm on uint64 with overflow detection (throws CapExceeded on overflow).
uint64_t lcm_checked(uint64_t a, uint64_t b);

/// Exact n!/2 as a decimal string, n >= 2. Used for alternating-group orders
/// in certificates, where entries can exceed the uint64 range.
std::string half_factorial_string(uint64_t n);

}  // namespace gf
