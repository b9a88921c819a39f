#ifndef MARKSEQ_DIGRAPH_HPP
#define MARKSEQ_DIGRAPH_HPP

#include <compare>
#include <string>
#include <vector>

#include "markseq/errors.hpp"

namespace markseq {

/// Hard input caps. Everything past these is rejected up front so the
/// arithmetic below can run in plain int entries with 64-bit sums.
inline constexpr int kMaxVertices = 10000;
inline constexpr int kMaxArcMultiplicity = 1000;

class KDigraph;

namespace detail {
KDigraph make_unchecked(int n, int k, std::vector<int> mult);

/// Throws ValidationError unless 1 <= n <= kMaxVertices and
/// 1 <= k <= kMaxArcMultiplicity.
void check_dimensions(int n, int k);
}

/// Loopless directed multigraph on vertices 0..n-1 where each unordered pair
/// of vertices carries at most k arcs in total, both directions combined.
/// Immutable after construction; transforms return new instances.
class KDigraph {
 public:
  /// Validates and adopts an n-by-n multiplicity matrix.
  /// Throws ValidationError on bad dimensions, bad k, negative or
  /// over-capacity multiplicities, or a nonzero diagonal.
  static KDigraph from_matrix(int n, int k, const std::vector<std::vector<int>>& mult);

  /// The digraph with no arcs.
  static KDigraph empty(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  int multiplicity(int from, int to) const { return mult_[static_cast<size_t>(from) * n_ + to]; }

  int out_degree(int v) const;
  int in_degree(int v) const;

  /// Total number of arcs, multiplicities included.
  long long arc_count() const;

  std::vector<std::vector<int>> matrix() const;

  /// Copy with vertex v renamed to perm[v]. perm must be a permutation of 0..n-1.
  KDigraph relabeled(const std::vector<int>& perm) const;

  /// Copy with mult[from][to] changed by delta. Validates the entry stays
  /// non-negative and the pair total stays within k.
  KDigraph with_multiplicity_delta(int from, int to, int delta) const;

  /// Induced subdigraph on the given vertices, renumbered 0..m-1 in the given order.
  KDigraph induced(const std::vector<int>& vertices) const;

  bool operator==(const KDigraph& other) const noexcept {
    return n_ == other.n_ && k_ == other.k_ && mult_ == other.mult_;
  }

 private:
  KDigraph(int n, int k, std::vector<int> mult)
      : n_(n), k_(k), mult_(std::move(mult)) {}

  friend KDigraph detail::make_unchecked(int n, int k, std::vector<int> mult);

  int n_;
  int k_;
  std::vector<int> mult_;  // row-major, mult_[i*n + j] arcs from i to j
};

namespace detail {
/// Internal constructor that skips validation. Callers must guarantee the
/// matrix is already a valid k-digraph.
inline KDigraph make_unchecked(int n, int k, std::vector<int> mult) {
  return KDigraph(n, k, std::move(mult));
}
}  // namespace detail

/// Throws ValidationError if (n, k, mult) is not a valid k-digraph matrix.
void validate_digraph(int n, int k, const std::vector<std::vector<int>>& mult);

/// Non-decreasing integer sequence paired with an arc bound k. Entries are
/// validated against 0 <= p <= 2k(n-1) at construction. Input order is not
/// kept; out-of-order input is accepted and flagged via input_reordered().
class MarkSequence {
 public:
  MarkSequence(std::vector<int> entries, int k);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return static_cast<int>(entries_.size()); }

  /// Sum of all entries, which a realizable sequence must bring to k*n*(n-1).
  long long total() const noexcept;

  /// True when the constructor had to sort the input.
  bool input_reordered() const noexcept { return reordered_; }

  /// Ordering ignores the reordered flag: same entries + same k compare equal.
  std::strong_ordering operator<=>(const MarkSequence& other) const noexcept {
    if (auto c = entries_ <=> other.entries_; c != 0) return c;
    return k_ <=> other.k_;
  }
  bool operator==(const MarkSequence& other) const noexcept {
    return entries_ == other.entries_ && k_ == other.k_;
  }

 private:
  std::vector<int> entries_;
  int k_;
  bool reordered_;
};

/// Marks of all vertices: value k(n-1) + outdeg - indeg per vertex, returned
/// in vertex order (not sorted).
std::vector<int> vertex_marks(const KDigraph& d);

/// Sorted mark sequence of a digraph.
MarkSequence compute_marks(const KDigraph& d);

/// Parses whitespace/comma separated integers into a MarkSequence with the
/// given k. An unparseable token raises ValidationError{BadDimensions}.
MarkSequence parse_sequence(const std::string& text, int k);

}  // namespace markseq

#endif  // MARKSEQ_DIGRAPH_HPP
