#include "markseq/construction.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "markseq/realizability.hpp"

namespace markseq {

const char* to_string(HhVariant variant) {
  switch (variant) {
    case HhVariant::OnesFirst: return "ones_first";
    case HhVariant::TwosFirst: return "twos_first";
  }
  return "unknown";
}

const char* to_string(HhCase c) {
  switch (c) {
    case HhCase::Small: return "small";
    case HhCase::Large: return "large";
    case HhCase::Even: return "even";
    case HhCase::Odd: return "odd";
  }
  return "unknown";
}

FlowNetwork FlowNetwork::from_sequence(const MarkSequence& seq) {
  FlowNetwork net;
  net.n = seq.n();
  net.k = seq.k();
  net.excess.resize(net.n);
  long long base = static_cast<long long>(net.k) * (net.n - 1);
  for (int i = 0; i < net.n; ++i) net.excess[i] = seq.entries()[i] - base;
  return net;
}

long long FlowNetwork::demand() const {
  long long d = 0;
  for (long long q : excess)
    if (q > 0) d += q;
  return d;
}

namespace {

// Node layout for the dense flow solver: 0..n-1 are digraph vertices,
// n is the source, n+1 the sink.
struct DenseFlow {
  int size;
  std::vector<long long> cap;   // cap[u*size + v]
  std::vector<long long> flow;  // 0 <= flow <= cap, both directions may be positive

  explicit DenseFlow(int size)
      : size(size),
        cap(static_cast<size_t>(size) * size, 0),
        flow(static_cast<size_t>(size) * size, 0) {}

  long long& cap_at(int u, int v) { return cap[static_cast<size_t>(u) * size + v]; }
  long long& flow_at(int u, int v) { return flow[static_cast<size_t>(u) * size + v]; }
  long long residual(int u, int v) const {
    size_t uv = static_cast<size_t>(u) * size + v;
    size_t vu = static_cast<size_t>(v) * size + u;
    return cap[uv] - flow[uv] + flow[vu];
  }

  // Pushes amount along u -> v, consuming forward capacity before cancelling
  // opposing flow. Requires amount <= residual(u, v).
  void push(int u, int v, long long amount) {
    long long forward = std::min(amount, cap_at(u, v) - flow_at(u, v));
    flow_at(u, v) += forward;
    flow_at(v, u) -= amount - forward;
  }
};

}  // namespace

FlowAssignment max_flow_integral(const FlowNetwork& net) {
  int n = net.n;
  int source = n;
  int sink = n + 1;
  DenseFlow g(n + 2);

  for (int i = 0; i < n; ++i) {
    if (net.excess[i] < 0) g.cap_at(source, i) = -net.excess[i];
    if (net.excess[i] > 0) g.cap_at(i, sink) = net.excess[i];
    for (int j = 0; j < n; ++j)
      if (i != j) g.cap_at(i, j) = net.k;
  }

  // Edmonds-Karp; BFS scans successors in ascending node order, so the
  // augmenting path chosen at each round is unique and reproducible.
  long long total = 0;
  std::vector<int> parent(g.size);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] < 0) {
      int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < g.size; ++v) {
        if (parent[v] < 0 && g.residual(u, v) > 0) {
          parent[v] = u;
          frontier.push(v);
        }
      }
    }
    if (parent[sink] < 0) break;

    long long bottleneck = -1;
    for (int v = sink; v != source; v = parent[v]) {
      long long r = g.residual(parent[v], v);
      bottleneck = bottleneck < 0 ? r : std::min(bottleneck, r);
    }
    for (int v = sink; v != source; v = parent[v]) g.push(parent[v], v, bottleneck);
    total += bottleneck;
  }

  FlowAssignment out;
  out.value = total;
  out.source_flow.resize(n);
  out.sink_flow.resize(n);
  out.pair_flow.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    out.source_flow[i] = g.flow_at(source, i);
    out.sink_flow[i] = g.flow_at(i, sink);
    for (int j = 0; j < n; ++j)
      if (i != j) out.pair_flow[i][j] = g.flow_at(i, j);
  }
  return out;
}

FlowAssignment cancel_two_cycles(const FlowNetwork& net, const FlowAssignment& flow) {
  FlowAssignment out = flow;
  for (int i = 0; i < net.n; ++i) {
    for (int j = i + 1; j < net.n; ++j) {
      long long d = std::min(out.pair_flow[i][j], out.pair_flow[j][i]);
      out.pair_flow[i][j] -= d;
      out.pair_flow[j][i] -= d;
    }
  }
  return out;
}

KDigraph realize_flow(const MarkSequence& seq) {
  int n = seq.n();
  long long k = seq.k();
  if (seq.total() != k * n * (n - 1)) {
    throw NotRealizableError("entry total " + std::to_string(seq.total()) +
                             " differs from k*n*(n-1) = " + std::to_string(k * n * (n - 1)));
  }

  FlowNetwork net = FlowNetwork::from_sequence(seq);
  FlowAssignment flow = max_flow_integral(net);
  if (flow.value < net.demand()) {
    throw NotRealizableError("max flow " + std::to_string(flow.value) +
                             " cannot meet demand " + std::to_string(net.demand()));
  }
  flow = cancel_two_cycles(net, flow);

  // Arc i -> j absorbs the flow routed j -> i; per vertex this turns the
  // met demand into outdeg - indeg = excess.
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) mult[i][j] = static_cast<int>(flow.pair_flow[j][i]);
  return KDigraph::from_matrix(n, seq.k(), mult);
}

ReductionPlan hh_step(const MarkSequence& seq, HhVariant variant) {
  int n = seq.n();
  int k = seq.k();
  if (n < 2) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "a reduction step needs at least two entries");
  }
  const auto& p = seq.entries();

  ReductionPlan plan;
  plan.removed_entry = p[n - 1];
  plan.reduction_total = 2 * k * (n - 1) - plan.removed_entry;
  plan.variant = variant;

  int r = plan.reduction_total;
  int m = n - 1;  // remaining entries
  plan.deltas.assign(m, 0);

  // Decrements always hit the largest remaining entries; with the entries
  // sorted ascending that is the rightmost block, so ties resolve to the
  // rightmost occurrences.
  if (variant == HhVariant::OnesFirst) {
    if (r <= m) {
      plan.chosen_case = HhCase::Small;
      for (int i = m - r; i < m; ++i) plan.deltas[i] = 1;
    } else if (r <= 2 * m) {
      plan.chosen_case = HhCase::Large;
      int twos = r - m;
      for (int i = 0; i < m; ++i) plan.deltas[i] = i < m - twos ? 1 : 2;
    } else {
      throw IllDefinedStepError("removing " + std::to_string(plan.removed_entry) +
                                " demands " + std::to_string(r) +
                                " decrements across " + std::to_string(m) +
                                " entries, more than 2 per entry");
    }
  } else {
    int twos = r / 2;
    int ones = r % 2;
    if (twos + ones > m) {
      throw IllDefinedStepError("removing " + std::to_string(plan.removed_entry) +
                                " demands " + std::to_string(twos) + " double and " +
                                std::to_string(ones) + " single decrements across only " +
                                std::to_string(m) + " entries");
    }
    plan.chosen_case = ones == 0 ? HhCase::Even : HhCase::Odd;
    for (int i = m - twos; i < m; ++i) plan.deltas[i] = 2;
    if (ones) plan.deltas[m - twos - 1] = 1;
  }

  plan.reduced_sequence.resize(m);
  for (int i = 0; i < m; ++i) {
    int value = p[i] - plan.deltas[i];
    if (value < 0) {
      throw NegativeEntryProducedError("entry " + std::to_string(p[i]) + " at position " +
                                       std::to_string(i) + " cannot drop by " +
                                       std::to_string(plan.deltas[i]));
    }
    plan.reduced_sequence[i] = value;
  }
  std::sort(plan.reduced_sequence.begin(), plan.reduced_sequence.end());
  return plan;
}

namespace {

// Attaches the removed vertex back: against a vertex whose entry dropped by
// delta the new vertex sends k - delta + (delta == 2) arcs and receives one
// arc when delta == 2, restoring both marks.
void attach_removed_vertex(std::vector<std::vector<int>>& mult, int u, int a, int delta,
                           int k) {
  switch (delta) {
    case 0: mult[u][a] = k; break;
    case 1: mult[u][a] = k - 1; break;
    case 2:
      mult[u][a] = k - 1;
      mult[a][u] = 1;
      break;
  }
}

KDigraph realize_hh_sorted(const MarkSequence& seq, HhVariant variant, bool verify_levels) {
  int n = seq.n();
  int k = seq.k();
  if (n == 1) return KDigraph::empty(1, k);

  ReductionPlan plan = hh_step(seq, variant);

  MarkSequence reduced = [&] {
    try {
      return MarkSequence(plan.reduced_sequence, k);
    } catch (const ValidationError& e) {
      throw NotRealizableError(std::string("reduced sequence is invalid: ") + e.what());
    }
  }();
  if (verify_levels && !check_realizable(reduced).realizable) {
    throw NotRealizableError("reduced sequence at " + std::to_string(n - 1) +
                             " entries fails the prefix-sum test");
  }
  KDigraph sub = realize_hh_sorted(reduced, variant, verify_levels);

  // sub's vertex i realizes reduced.entries()[i]; route each surviving entry
  // to the sub vertex holding its decremented value, matching duplicates in
  // position order.
  int m = n - 1;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return seq.entries()[a] - plan.deltas[a] < seq.entries()[b] - plan.deltas[b];
  });
  std::vector<int> sub_vertex(m);
  for (int pos = 0; pos < m; ++pos) sub_vertex[order[pos]] = pos;

  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) mult[a][b] = sub.multiplicity(sub_vertex[a], sub_vertex[b]);
  for (int a = 0; a < m; ++a) attach_removed_vertex(mult, n - 1, a, plan.deltas[a], k);

  return KDigraph::from_matrix(n, k, mult);
}

}  // namespace

KDigraph realize_hh(const MarkSequence& seq, HhVariant variant, bool verify_levels) {
  int n = seq.n();
  long long k = seq.k();
  if (seq.total() != k * n * (n - 1)) {
    throw NotRealizableError("entry total " + std::to_string(seq.total()) +
                             " differs from k*n*(n-1) = " + std::to_string(k * n * (n - 1)));
  }
  try {
    return realize_hh_sorted(seq, variant, verify_levels);
  } catch (const NegativeEntryProducedError& e) {
    throw NotRealizableError(std::string("reduction went negative: ") + e.what());
  }
}

}  // namespace markseq
