#ifndef MARKSEQ_TRANSFORM_HPP
#define MARKSEQ_TRANSFORM_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "markseq/digraph.hpp"

namespace markseq {

/// Local rewirings that keep every vertex mark fixed. Declaration order is
/// the priority order the minimizer uses.
enum class MoveKind {
  PairCancel,  // drop (or add) one opposing arc pair u <-> v: 2 arcs
  Cycle3,      // drop (or add) a directed 3-cycle u -> v -> w -> u: 3 arcs
  Shortcut,    // replace u -> v -> w by u -> w (or the reverse): 1 arc
};

enum class MoveDirection {
  Reduce,  // the arc count goes down
  Expand,  // the arc count goes up
};

const char* to_string(MoveKind kind);
const char* to_string(MoveDirection direction);

/// One concrete move instance. PairCancel uses vertices[2] = -1; Cycle3 is
/// canonicalized so vertices[0] is the cycle's smallest vertex.
struct TripleMove {
  MoveKind kind = MoveKind::PairCancel;
  MoveDirection direction = MoveDirection::Reduce;
  std::array<int, 3> vertices = {-1, -1, -1};

  auto operator<=>(const TripleMove&) const = default;
};

std::string to_string(const TripleMove& move);

/// True when the move's multiplicity preconditions hold on d.
bool is_applicable(const KDigraph& d, const TripleMove& move);

/// Applies the move; throws InapplicableMoveError when preconditions fail.
KDigraph apply_move(const KDigraph& d, const TripleMove& move);

/// All applicable moves, sorted by (kind, direction, vertices).
std::vector<TripleMove> enumerate_moves(const KDigraph& d);

struct MinimizeResult {
  KDigraph digraph;
  std::vector<TripleMove> trace;  // moves applied, in order
};

/// Repeatedly applies the first applicable arc-reducing move (PairCancel,
/// then Cycle3, then Shortcut, lexicographic vertices within a kind) until
/// none applies. Every step drops the arc count, so this terminates; marks
/// never change along the way.
MinimizeResult minimize_arcs(const KDigraph& d);

/// True when every selectable 1-triple is transitive: for each vertex triple,
/// picking one arc per nonempty pair (any direction of positive multiplicity;
/// empty pairs contribute nothing) never produces a 2-path u -> v -> w
/// without its closing u -> w.
bool is_transitive(const KDigraph& d);

}  // namespace markseq

#endif  // MARKSEQ_TRANSFORM_HPP
