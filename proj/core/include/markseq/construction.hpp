#ifndef MARKSEQ_CONSTRUCTION_HPP
#define MARKSEQ_CONSTRUCTION_HPP

#include <vector>

#include "markseq/digraph.hpp"

namespace markseq {

/// Flow model for realizing a sequence. Vertex i carries excess
/// q_i = p_i - k(n-1); deficit vertices (q < 0) are fed from the source,
/// surplus vertices (q > 0) drain to the sink, and each ordered vertex pair
/// carries capacity k. A feasible realization exists exactly when the
/// max flow saturates every source arc.
struct FlowNetwork {
  int n = 0;
  int k = 0;
  std::vector<long long> excess;  // q_i, indexed by vertex

  static FlowNetwork from_sequence(const MarkSequence& seq);

  /// Total demand: sum of positive excesses (equals sum of negative ones
  /// in magnitude whenever the sequence total is correct).
  long long demand() const;
};

/// Integral max flow split into its source, sink, and pair components.
struct FlowAssignment {
  long long value = 0;
  std::vector<long long> source_flow;            // into vertex i
  std::vector<long long> sink_flow;              // out of vertex i
  std::vector<std::vector<long long>> pair_flow; // pair_flow[i][j] over arc i -> j
};

/// Edmonds-Karp on the network. Augmenting paths are shortest-first with
/// lowest-index tie-breaking, so the result is deterministic.
FlowAssignment max_flow_integral(const FlowNetwork& net);

/// Removes opposite flow on every vertex pair: both directions drop by the
/// smaller of the two. Value and conservation are unchanged.
FlowAssignment cancel_two_cycles(const FlowNetwork& net, const FlowAssignment& flow);

/// Realizes a sequence through the flow model. The digraph's arc i -> j gets
/// multiplicity equal to the (cancelled) flow on the pair arc j -> i, which
/// makes outdeg - indeg come out to q_i per vertex. Vertices are assigned in
/// sorted entry order: vertex i receives mark seq.entries()[i].
/// Throws NotRealizableError when the total is wrong or the flow falls short.
KDigraph realize_flow(const MarkSequence& seq);

/// Which reduction recipe a step uses.
enum class HhVariant {
  OnesFirst,  // spreads the removal over single decrements where possible
  TwosFirst,  // spends double decrements first, then at most one single
};

enum class HhCase {
  Small,  // OnesFirst, r <= n-1: r entries drop by 1
  Large,  // OnesFirst, r > n-1: r-(n-1) entries drop by 2, the rest by 1
  Even,   // TwosFirst, r = 2t: t entries drop by 2
  Odd,    // TwosFirst, r = 2t+1: t entries drop by 2, one more by 1
};

const char* to_string(HhVariant variant);
const char* to_string(HhCase c);

/// One reduction level: the removed last entry, how much the rest must give
/// up, and the per-entry decrements (aligned to the sorted remaining
/// entries; always 0, 1, or 2, largest entries first, rightmost ties win).
struct ReductionPlan {
  int removed_entry = 0;
  int reduction_total = 0;  // r = 2k(n-1) - removed_entry
  HhVariant variant = HhVariant::OnesFirst;
  HhCase chosen_case = HhCase::Small;
  std::vector<int> deltas;           // size n-1, deltas[i] applies to entries()[i]
  std::vector<int> reduced_sequence; // re-sorted result, size n-1
};

/// Computes one reduction step without validating realizability.
/// Throws IllDefinedStepError when the required decrements cannot fit
/// (OnesFirst: r > 2(n-1); TwosFirst: the 2-decrement count exceeds n-1).
/// Throws NegativeEntryProducedError when a decrement would go below zero.
ReductionPlan hh_step(const MarkSequence& seq, HhVariant variant);

/// Realizes a sequence by recursive reduction: reduce to n-1 entries, realize
/// that, then reattach the removed vertex with per-pair arcs set by the
/// recorded decrement (0 -> k arcs outward, 1 -> k-1 outward, 2 -> k-1
/// outward plus 1 inward). The recursion normally relies on decrement
/// failures and the base case to reject bad input; verify_levels additionally
/// runs the full prefix-sum test on every level. Throws NotRealizableError
/// on any invalid level and IllDefinedStepError when a step is structurally
/// impossible (needs k >= 3 on inputs with the correct total).
KDigraph realize_hh(const MarkSequence& seq, HhVariant variant, bool verify_levels = false);

}  // namespace markseq

#endif  // MARKSEQ_CONSTRUCTION_HPP
