#include "markseq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace markseq::oracle {

namespace {

constexpr long long kEnumerationGuard = 100'000'000;
constexpr int kMaxCanonicalVertices = 8;

// Ordered pairs (i, j) with i < j, listed row-major; position p in a state
// vector refers to pairs()[p].
std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// All (a, b) with a + b <= k, ascending in (a, b); index order defines the
// enumeration order of digraphs.
std::vector<std::pair<int, int>> pair_states(int k) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(pair_state_count(k)));
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b) out.emplace_back(a, b);
  return out;
}

// Walks every digraph whose first pair takes a state in first_states (all
// states when first_states is empty); remaining pairs run through all states
// lexicographically.
template <typename Visit>
void enumerate_impl(int n, int k, const std::vector<int>& first_states, Visit&& visit) {
  auto pairs = vertex_pairs(n);
  auto states = pair_states(k);
  int P = static_cast<int>(pairs.size());
  int S = static_cast<int>(states.size());

  std::vector<int> mult(static_cast<size_t>(n) * n, 0);
  auto set_pair = [&](int p, int state) {
    auto [i, j] = pairs[p];
    auto [a, b] = states[state];
    mult[static_cast<size_t>(i) * n + j] = a;
    mult[static_cast<size_t>(j) * n + i] = b;
  };
  auto emit = [&] { visit(detail::make_unchecked(n, k, mult)); };

  if (P == 0) {
    emit();
    return;
  }

  std::vector<int> fixed = first_states;
  if (fixed.empty()) {
    fixed.resize(S);
    std::iota(fixed.begin(), fixed.end(), 0);
  }

  std::vector<int> idx(P, 0);
  for (int first : fixed) {
    set_pair(0, first);
    std::fill(idx.begin() + 1, idx.end(), 0);
    for (int p = 1; p < P; ++p) set_pair(p, 0);
    while (true) {
      emit();
      int p = P - 1;
      while (p >= 1) {
        if (++idx[p] < S) {
          set_pair(p, idx[p]);
          break;
        }
        idx[p] = 0;
        set_pair(p, 0);
        --p;
      }
      if (p < 1) break;
    }
  }
}

int clamp_jobs(int jobs, int k) {
  if (jobs < 1) jobs = 1;
  return std::min<long long>(jobs, pair_state_count(k));
}

// Runs make_acc/visit over a partition of the enumeration by first-pair
// state and folds the per-worker results in worker order, so the fold is
// reproducible for any job count.
template <typename Acc, typename Visit, typename Merge>
Acc partitioned_reduce(int n, int k, int jobs, Acc init, Visit visit, Merge merge) {
  labeled_digraph_count(n, k);  // size guard
  jobs = clamp_jobs(jobs, k);
  if (jobs == 1 || n < 2) {
    Acc acc = init;
    enumerate_impl(n, k, {}, [&](const KDigraph& d) { visit(d, acc); });
    return acc;
  }

  int S = static_cast<int>(pair_state_count(k));
  std::vector<Acc> partial(jobs, init);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::vector<int> firsts;
      for (int s = w; s < S; s += jobs) firsts.push_back(s);
      enumerate_impl(n, k, firsts, [&](const KDigraph& d) { visit(d, partial[w]); });
    });
  }
  for (auto& t : workers) t.join();

  Acc acc = std::move(partial[0]);
  for (int w = 1; w < jobs; ++w) merge(acc, std::move(partial[w]));
  return acc;
}

}  // namespace

long long pair_state_count(int k) {
  return static_cast<long long>(k + 1) * (k + 2) / 2;
}

long long labeled_digraph_count(int n, int k) {
  detail::check_dimensions(n, k);
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  long long states = pair_state_count(k);
  long long count = 1;
  for (long long p = 0; p < pairs; ++p) {
    if (count > kEnumerationGuard / states) {
      throw TooLargeError("enumerating " + std::to_string(n) + " vertices at k = " +
                          std::to_string(k) + " exceeds the " +
                          std::to_string(kEnumerationGuard) + " digraph guard");
    }
    count *= states;
  }
  if (count > kEnumerationGuard) {
    throw TooLargeError("enumerating " + std::to_string(n) + " vertices at k = " +
                        std::to_string(k) + " exceeds the " +
                        std::to_string(kEnumerationGuard) + " digraph guard");
  }
  return count;
}

void enumerate_digraphs(int n, int k, const std::function<void(const KDigraph&)>& visit) {
  labeled_digraph_count(n, k);  // size guard
  enumerate_impl(n, k, {}, visit);
}

std::set<MarkSequence> realizable_set_bruteforce(int n, int k, int jobs) {
  return partitioned_reduce(
      n, k, jobs, std::set<MarkSequence>{},
      [](const KDigraph& d, std::set<MarkSequence>& acc) { acc.insert(compute_marks(d)); },
      [](std::set<MarkSequence>& acc, std::set<MarkSequence>&& other) {
        acc.merge(std::move(other));
      });
}

CanonicalKey canonical_form(const KDigraph& d) {
  int n = d.n();
  if (n > kMaxCanonicalVertices) {
    throw TooLargeError("relabeling search is capped at " +
                        std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                        std::to_string(n));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best;
  CanonicalKey candidate(static_cast<size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        candidate[static_cast<size_t>(perm[i]) * n + perm[j]] = d.multiplicity(i, j);
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

RealizationCount count_realizations(const MarkSequence& seq, int jobs) {
  if (seq.n() > kMaxCanonicalVertices) {
    throw TooLargeError("relabeling classes need at most " +
                        std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                        std::to_string(seq.n()));
  }

  struct Acc {
    long long labeled = 0;
    std::set<CanonicalKey> classes;
  };
  Acc result = partitioned_reduce(
      seq.n(), seq.k(), jobs, Acc{},
      [&seq](const KDigraph& d, Acc& acc) {
        if (compute_marks(d) == seq) {
          ++acc.labeled;
          acc.classes.insert(canonical_form(d));
        }
      },
      [](Acc& acc, Acc&& other) {
        acc.labeled += other.labeled;
        acc.classes.merge(std::move(other.classes));
      });

  return RealizationCount{result.labeled, static_cast<long long>(result.classes.size())};
}

long long min_arc_count_bruteforce(const MarkSequence& seq, int jobs) {
  constexpr long long kNone = -1;
  long long best = partitioned_reduce(
      seq.n(), seq.k(), jobs, kNone,
      [&seq](const KDigraph& d, long long& acc) {
        if (compute_marks(d) == seq) {
          long long arcs = d.arc_count();
          if (acc == kNone || arcs < acc) acc = arcs;
        }
      },
      [](long long& acc, long long&& other) {
        if (acc == kNone || (other != kNone && other < acc)) acc = other;
      });
  if (best == kNone) {
    throw NotRealizableError("no digraph realizes the sequence");
  }
  return best;
}

std::vector<MarkSequence> candidate_sequences(int n, int k) {
  detail::check_dimensions(n, k);
  long long bound = 2LL * k * (n - 1);
  long long total = static_cast<long long>(k) * n * (n - 1);

  std::vector<MarkSequence> out;
  std::vector<int> current(n);
  auto rec = [&](auto&& self, int pos, int floor, long long remaining) -> void {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(current, k);
      return;
    }
    long long slots_after = n - pos - 1;
    for (long long v = floor; v <= bound && v <= remaining; ++v) {
      if (remaining - v > slots_after * bound) continue;
      // Non-decreasing tail: every later entry is at least v, so the
      // remainder must still be reachable.
      if (remaining - v < slots_after * v) break;
      current[pos] = static_cast<int>(v);
      self(self, pos + 1, static_cast<int>(v), remaining - v);
    }
  };
  rec(rec, 0, 0, total);
  return out;
}

}  // namespace markseq::oracle
