#pragma once

#include <stdexcept>
#include <string>

namespace permdiam {

// Malformed input text: cycle notation, words, group descriptions.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid request: element outside the group, non-normal
// subgroup where normality is required, degree mismatch, wrong context.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Computation refused because it would exceed a configured budget
// (enumeration cap, BFS state budget, generating-set budget).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permdiam
