#ifndef MARKSEQ_ERRORS_HPP
#define MARKSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace markseq {

/// Which core invariant an input violated.
enum class ValidationKind {
  NegativeEntry,
  EntryAboveBound,
  CapacityExceeded,
  NonzeroDiagonal,
  BadDimensions,
  BadK,
};

const char* to_string(ValidationKind kind);

/// Invalid sequence or matrix input. Carries the violated invariant and
/// where it was hit (an entry index, or a vertex pair).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, const std::string& message, int index = -1)
      : std::runtime_error(message), kind_(kind), i_(index), j_(-1) {}
  ValidationError(ValidationKind kind, const std::string& message, int i, int j)
      : std::runtime_error(message), kind_(kind), i_(i), j_(j) {}

  ValidationKind kind() const noexcept { return kind_; }
  int index() const noexcept { return i_; }
  int pair_i() const noexcept { return i_; }
  int pair_j() const noexcept { return j_; }
  bool has_pair() const noexcept { return j_ >= 0; }

 private:
  ValidationKind kind_;
  int i_;
  int j_;
};

/// The sequence is not the mark sequence of any k-digraph.
class NotRealizableError : public std::runtime_error {
 public:
  explicit NotRealizableError(const std::string& message) : std::runtime_error(message) {}
};

/// A reduction step demands more reductions than entries exist
/// (reachable only for k >= 3 on sequences with the correct total).
class IllDefinedStepError : public std::runtime_error {
 public:
  explicit IllDefinedStepError(const std::string& message) : std::runtime_error(message) {}
};

/// A reduction step drove an entry below zero; the input is not realizable.
class NegativeEntryProducedError : public std::runtime_error {
 public:
  explicit NegativeEntryProducedError(const std::string& message)
      : std::runtime_error(message) {}
};

/// A local move's preconditions do not hold on the given digraph.
class InapplicableMoveError : public std::runtime_error {
 public:
  explicit InapplicableMoveError(const std::string& message) : std::runtime_error(message) {}
};

/// A brute-force guard tripped; the instance is too large for exact enumeration.
class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace markseq

#endif  // MARKSEQ_ERRORS_HPP
