#include "markseq/realizability.hpp"

#include <algorithm>

namespace markseq {

const char* to_string(TournamentFailure failure) {
  switch (failure) {
    case TournamentFailure::ParityViolation: return "ParityViolation";
    case TournamentFailure::LandauViolation: return "LandauViolation";
  }
  return "Unknown";
}

RealizabilityReport check_realizable(const MarkSequence& seq) {
  const auto& p = seq.entries();
  int n = seq.n();
  long long k = seq.k();

  RealizabilityReport report;
  report.prefix_sums.reserve(n);
  report.bound_values.reserve(n);

  long long sum = 0;
  for (int t = 1; t <= n; ++t) {
    sum += p[t - 1];
    long long bound = k * t * (t - 1);
    report.prefix_sums.push_back(sum);
    report.bound_values.push_back(bound);
    if (sum == bound) report.equality_points.push_back(t);
    if (sum < bound && !report.failing_prefix) {
      report.failing_prefix = t;
      report.failure_reason = "prefix too small";
    }
  }

  if (!report.failing_prefix && sum != k * n * (n - 1)) {
    report.failing_prefix = n;
    report.failure_reason = "wrong total";
  }

  report.realizable = !report.failing_prefix.has_value();
  return report;
}

TournamentReport check_tournament_marks(const MarkSequence& seq) {
  const auto& p = seq.entries();
  int n = seq.n();

  TournamentReport report;
  std::vector<int> scores(n);
  for (int i = 0; i < n; ++i) {
    int shifted = p[i] - (n - 1);
    if (shifted < 0 || shifted % 2 != 0) {
      report.failure_reason = TournamentFailure::ParityViolation;
      return report;
    }
    scores[i] = shifted / 2;
  }
  report.scores = scores;

  // Score-sequence prefix condition on the already sorted scores.
  long long sum = 0;
  for (int t = 1; t <= n; ++t) {
    sum += scores[t - 1];
    long long bound = static_cast<long long>(t) * (t - 1) / 2;
    if (sum < bound || (t == n && sum != bound)) {
      report.scores.reset();
      report.failure_reason = TournamentFailure::LandauViolation;
      return report;
    }
  }

  report.is_tournament_sequence = true;
  return report;
}

RealizabilityReport check_oriented_marks(const MarkSequence& seq) {
  if (seq.k() != 1) {
    throw ValidationError(ValidationKind::BadK,
                          "oriented-graph test requires k = 1, got k = " +
                              std::to_string(seq.k()));
  }
  return check_realizable(seq);
}

}  // namespace markseq
