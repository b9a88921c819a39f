#include "markseq/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace markseq {

namespace {

RealizabilityReport require_realizable(const MarkSequence& seq) {
  RealizabilityReport report = check_realizable(seq);
  if (!report.realizable) {
    throw NotRealizableError("sequence fails the prefix-sum test (" +
                             report.failure_reason.value_or("unknown") + " at prefix " +
                             std::to_string(report.failing_prefix.value_or(-1)) + ")");
  }
  return report;
}

Decomposition split_at(const MarkSequence& seq, const std::vector<int>& equality_points) {
  Decomposition out;
  out.k = seq.k();
  int prev = 0;
  for (int t : equality_points) {
    SequenceComponent comp;
    comp.first = prev + 1;
    comp.last = t;
    comp.offset = prev;
    comp.entries.reserve(t - prev);
    int shift = 2 * seq.k() * prev;
    for (int i = prev; i < t; ++i) comp.entries.push_back(seq.entries()[i] - shift);
    out.components.push_back(std::move(comp));
    prev = t;
  }
  return out;
}

}  // namespace

MarkSequence Decomposition::reassembled() const {
  std::vector<int> entries;
  for (const auto& comp : components) {
    int shift = 2 * k * comp.offset;
    for (int e : comp.entries) entries.push_back(e + shift);
  }
  return MarkSequence(std::move(entries), k);
}

bool is_irreducible_sequence(const MarkSequence& seq) {
  RealizabilityReport report = require_realizable(seq);
  return report.equality_points.size() == 1;  // only t = n
}

Decomposition decompose_sequence(const MarkSequence& seq) {
  RealizabilityReport report = require_realizable(seq);
  return split_at(seq, report.equality_points);
}

namespace {

// Vertices ordered by (mark, index); the digraph's sorted mark sequence read
// through this order is compute_marks(d).
std::vector<int> mark_order(const KDigraph& d) {
  std::vector<int> marks = vertex_marks(d);
  std::vector<int> order(d.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return marks[a] < marks[b]; });
  return order;
}

}  // namespace

bool is_irreducible_digraph(const KDigraph& d) {
  return is_irreducible_sequence(compute_marks(d));
}

DigraphDecomposition decompose_digraph(const KDigraph& d) {
  MarkSequence marks = compute_marks(d);
  RealizabilityReport report = check_realizable(marks);
  std::vector<int> order = mark_order(d);

  DigraphDecomposition out;
  out.k = d.k();
  int prev = 0;
  for (int t : report.equality_points) {
    std::vector<int> vertices(order.begin() + prev, order.begin() + t);
    KDigraph sub = d.induced(vertices);
    out.components.push_back(DigraphComponent{std::move(vertices), std::move(sub)});
    prev = t;
  }
  return out;
}

bool is_irreducible_digraph_exhaustive(const KDigraph& d) {
  int n = d.n();
  if (n > 12) {
    throw TooLargeError("subset enumeration is capped at 12 vertices, got " +
                        std::to_string(n));
  }
  // A subset S can sit below its complement only if every cross pair carries
  // the full k arcs inward and none outward.
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    bool valid = true;
    for (int s = 0; s < n && valid; ++s) {
      if (!(mask >> s & 1)) continue;
      for (int t = 0; t < n && valid; ++t) {
        if (mask >> t & 1) continue;
        if (d.multiplicity(t, s) != d.k() || d.multiplicity(s, t) != 0) valid = false;
      }
    }
    if (valid) return false;
  }
  return true;
}

UniqueReport is_uniquely_realizable(const MarkSequence& seq) {
  UniqueReport report;
  report.decomposition = decompose_sequence(seq);
  int k = seq.k();
  for (size_t c = 0; c < report.decomposition.components.size(); ++c) {
    const auto& entries = report.decomposition.components[c].entries;
    bool single_zero = entries.size() == 1 && entries[0] == 0;
    bool forced_pair = entries.size() == 2 && entries[0] == 1 && entries[1] == 2 * k - 1;
    if (!single_zero && !forced_pair) {
      report.witness_index = c;
      report.unique = false;
      return report;
    }
  }
  report.unique = true;
  return report;
}

}  // namespace markseq
