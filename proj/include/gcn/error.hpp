#pragma once

#include <stdexcept>
#include <string>

namespace gcn {

/// Malformed or out-of-contract input (bad vertex id, non-partition, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact search was asked to run beyond its configured size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant of a constructive algorithm failed. Never expected
/// on valid input; indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EmbeddingError : public std::runtime_error {
 public:
  enum class Kind { NotAnEmbedding, NotMaximal, CannotTriangulate };

  EmbeddingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace gcn
