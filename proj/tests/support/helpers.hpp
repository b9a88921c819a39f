#ifndef MARKSEQ_TEST_HELPERS_HPP
#define MARKSEQ_TEST_HELPERS_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "markseq/digraph.hpp"

namespace testsupport {

/// Uniformly random valid digraph: every unordered pair gets one of the
/// (k+1)(k+2)/2 legal arc-count states with equal probability.
inline markseq::KDigraph random_digraph(std::mt19937& rng, int n, int k) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::uniform_int_distribution<int> pick(0, (k + 1) * (k + 2) / 2 - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int s = pick(rng);
      int a = 0;
      while (s >= k - a + 1) {
        s -= k - a + 1;
        ++a;
      }
      adj[i][j] = a;
      adj[j][i] = s;
    }
  }
  return markseq::KDigraph::from_matrix(n, k, adj);
}

/// Runs f and hands back the ValidationError it threw, if any.
template <typename F>
std::optional<markseq::ValidationError> capture_validation(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const markseq::ValidationError& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace testsupport

#endif  // MARKSEQ_TEST_HELPERS_HPP
