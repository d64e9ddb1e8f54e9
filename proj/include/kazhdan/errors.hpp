// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace kazhdan {

/// Input is well-formed but outside the domain of the requested operation
/// (bad q, disconnected graph, p out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Graph or generating-set data violates its own invariants.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be read or does not follow the document schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kazhdan
