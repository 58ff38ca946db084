#pragma once

#include <stdexcept>
#include <string>

namespace linembed {

// Malformed or invalid input data (files, parameters, broken invariants of
// user-supplied objects). CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact computation was requested beyond the instance size it is budgeted
// for. CLI exit code 2.
class CostGuardError : public std::runtime_error {
 public:
  explicit CostGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition of the requested operation does not hold for this input
// (e.g. an ordering fails the contiguity condition, or an embedding gate
// fails). Carries a machine-readable witness when one exists. CLI exit 3.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg, std::string witness = "")
      : std::runtime_error(msg), witness_json(std::move(witness)) {}
  std::string witness_json;
};

}  // namespace linembed
