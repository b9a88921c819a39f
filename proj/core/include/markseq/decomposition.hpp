#ifndef MARKSEQ_DECOMPOSITION_HPP
#define MARKSEQ_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "markseq/digraph.hpp"
#include "markseq/realizability.hpp"

namespace markseq {

/// One segment of a split sequence. Entries are shifted down by 2k times the
/// number of vertices in earlier segments, which turns the segment into a
/// realizable sequence in its own right.
struct SequenceComponent {
  int first = 0;   // 1-based position in the full sorted sequence, inclusive
  int last = 0;    // 1-based, inclusive
  int offset = 0;  // vertices before this segment; entries dropped by 2k*offset
  std::vector<int> entries;
};

struct Decomposition {
  int k = 0;
  std::vector<SequenceComponent> components;

  /// Undoes the shift and re-concatenates, recovering the original sequence.
  MarkSequence reassembled() const;
};

/// True when the prefix-sum test meets its bound only at t = n.
/// Throws NotRealizableError on sequences that fail the test.
bool is_irreducible_sequence(const MarkSequence& seq);

/// Splits at every interior equality point of the prefix-sum test. Each
/// resulting component is itself realizable and irreducible.
/// Throws NotRealizableError on sequences that fail the test.
Decomposition decompose_sequence(const MarkSequence& seq);

/// One part of a split digraph: the inducing vertex set (in mark order) and
/// the induced subdigraph. Arcs between parts are forced (k arcs from every
/// higher-part vertex to every lower-part vertex), so dropping them loses
/// nothing.
struct DigraphComponent {
  std::vector<int> vertices;
  KDigraph digraph;
};

struct DigraphDecomposition {
  int k = 0;
  std::vector<DigraphComponent> components;
};

/// True when the digraph admits no split: no proper vertex subset receives
/// full k arcs from every outside vertex while sending none back. Equivalent
/// to its mark sequence having no interior equality point.
bool is_irreducible_digraph(const KDigraph& d);

/// Splits along the mark sequence's interior equality points, ordering
/// vertices by (mark, index).
DigraphDecomposition decompose_digraph(const KDigraph& d);

/// Split check by direct enumeration of vertex subsets instead of equality
/// points. Exponential; throws TooLargeError past 12 vertices.
bool is_irreducible_digraph_exhaustive(const KDigraph& d);

/// Uniqueness verdict with the component evidence: a sequence has exactly
/// one realization (up to relabeling) when every component is [0] or
/// [1, 2k-1]. witness_index points at the first component breaking that.
struct UniqueReport {
  bool unique = false;
  Decomposition decomposition;
  std::optional<size_t> witness_index;
};

/// Throws NotRealizableError on sequences that fail the prefix-sum test.
UniqueReport is_uniquely_realizable(const MarkSequence& seq);

}  // namespace markseq

#endif  // MARKSEQ_DECOMPOSITION_HPP
