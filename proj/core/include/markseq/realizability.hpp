#ifndef MARKSEQ_REALIZABILITY_HPP
#define MARKSEQ_REALIZABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "markseq/digraph.hpp"

namespace markseq {

/// Verdict of the prefix-sum test together with the evidence behind it:
/// every prefix sum, the bound it was compared against, the positions where
/// the two are equal, and (on failure) the first offending prefix.
struct RealizabilityReport {
  bool realizable = false;
  std::vector<long long> prefix_sums;   // prefix_sums[t-1] = p_1 + ... + p_t
  std::vector<long long> bound_values;  // bound_values[t-1] = k * t * (t-1)
  std::vector<int> equality_points;     // 1-based t with prefix_sums == bound
  std::optional<int> failing_prefix;    // 1-based, smallest violating t
  std::optional<std::string> failure_reason;
};

/// A sorted sequence is the mark sequence of some k-digraph exactly when
/// every length-t prefix sums to at least k*t*(t-1), with equality at t = n.
RealizabilityReport check_realizable(const MarkSequence& seq);

enum class TournamentFailure {
  ParityViolation,
  LandauViolation,
};

const char* to_string(TournamentFailure failure);

/// Verdict of the tournament test on a candidate mark sequence. Marks and
/// scores are tied by p = 2s + (n - 1), so scores exist only when every
/// entry has the right parity.
struct TournamentReport {
  bool is_tournament_sequence = false;
  std::optional<std::vector<int>> scores;  // sorted, present iff the test passes
  std::optional<TournamentFailure> failure_reason;
};

/// Tests whether the entries are the marks of a tournament: each entry must
/// equal 2s + (n - 1) for integer scores s that satisfy the score-sequence
/// prefix condition (every length-t prefix of sorted scores sums to at least
/// t(t-1)/2, with equality at t = n). Independent of the sequence's k.
TournamentReport check_tournament_marks(const MarkSequence& seq);

/// Oriented graphs are exactly the 1-digraphs, so this is check_realizable
/// restricted to k = 1. Throws ValidationError{BadK} when seq.k() != 1.
RealizabilityReport check_oriented_marks(const MarkSequence& seq);

}  // namespace markseq

#endif  // MARKSEQ_REALIZABILITY_HPP
