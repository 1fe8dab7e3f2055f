#pragma once

#include <stdexcept>
#include <string>

namespace geomr {

// Malformed or out-of-range input (bad shapes, broken tableau invariants).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// The input lies off the open locus where a rational map is defined:
// a vanishing denominator, a zero divisor, or a rank drop.
class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// The tropical engine produced a zero output, which only happens when a map
// outside the positive catalog is evaluated.
class EngineMisuse : public std::runtime_error {
 public:
  explicit EngineMisuse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geomr
