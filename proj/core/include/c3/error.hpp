#pragma once

#include <stdexcept>
#include <string>

namespace c3 {

/// Unreadable or structurally invalid input (files, streams, corpora).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested entity (author, paper) does not exist in the current snapshot.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An analysis whose result is mathematically undefined for its inputs,
/// e.g. a correlation over a constant vector.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace c3
