#include "markseq/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace markseq {

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::NegativeEntry: return "NegativeEntry";
    case ValidationKind::EntryAboveBound: return "EntryAboveBound";
    case ValidationKind::CapacityExceeded: return "CapacityExceeded";
    case ValidationKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ValidationKind::BadDimensions: return "BadDimensions";
    case ValidationKind::BadK: return "BadK";
  }
  return "Unknown";
}

namespace detail {

void check_dimensions(int n, int k) {
  if (n < 1 || n > kMaxVertices) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "vertex count must be between 1 and " +
                              std::to_string(kMaxVertices) + ", got " + std::to_string(n));
  }
  if (k < 1 || k > kMaxArcMultiplicity) {
    throw ValidationError(ValidationKind::BadK,
                          "arc bound k must be between 1 and " +
                              std::to_string(kMaxArcMultiplicity) + ", got " + std::to_string(k));
  }
}

}  // namespace detail

void validate_digraph(int n, int k, const std::vector<std::vector<int>>& mult) {
  detail::check_dimensions(n, k);
  if (static_cast<int>(mult.size()) != n) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "expected " + std::to_string(n) + " rows, got " +
                              std::to_string(mult.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mult[i].size()) != n) {
      throw ValidationError(ValidationKind::BadDimensions,
                            "row " + std::to_string(i) + " has " +
                                std::to_string(mult[i].size()) + " columns, expected " +
                                std::to_string(n));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = mult[i][j];
      if (i == j && m != 0) {
        throw ValidationError(ValidationKind::NonzeroDiagonal,
                              "loop multiplicity " + std::to_string(m) + " at vertex " +
                                  std::to_string(i),
                              i, j);
      }
      if (m < 0) {
        throw ValidationError(ValidationKind::NegativeEntry,
                              "negative multiplicity " + std::to_string(m) + " at (" +
                                  std::to_string(i) + ", " + std::to_string(j) + ")",
                              i, j);
      }
      if (i < j && m + mult[j][i] > k) {
        throw ValidationError(ValidationKind::CapacityExceeded,
                              "pair {" + std::to_string(i) + ", " + std::to_string(j) +
                                  "} carries " + std::to_string(m + mult[j][i]) +
                                  " arcs, more than k = " + std::to_string(k),
                              i, j);
      }
    }
  }
}

KDigraph KDigraph::from_matrix(int n, int k, const std::vector<std::vector<int>>& mult) {
  validate_digraph(n, k, mult);
  std::vector<int> flat(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = mult[i][j];
  return KDigraph(n, k, std::move(flat));
}

KDigraph KDigraph::empty(int n, int k) {
  detail::check_dimensions(n, k);
  return KDigraph(n, k, std::vector<int>(static_cast<size_t>(n) * n, 0));
}

int KDigraph::out_degree(int v) const {
  int sum = 0;
  for (int j = 0; j < n_; ++j) sum += mult_[static_cast<size_t>(v) * n_ + j];
  return sum;
}

int KDigraph::in_degree(int v) const {
  int sum = 0;
  for (int i = 0; i < n_; ++i) sum += mult_[static_cast<size_t>(i) * n_ + v];
  return sum;
}

long long KDigraph::arc_count() const {
  return std::accumulate(mult_.begin(), mult_.end(), 0LL);
}

std::vector<std::vector<int>> KDigraph::matrix() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = multiplicity(i, j);
  return out;
}

KDigraph KDigraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "permutation size " + std::to_string(perm.size()) +
                              " does not match vertex count " + std::to_string(n_));
  }
  std::vector<bool> seen(n_, false);
  for (int v : perm) {
    if (v < 0 || v >= n_ || seen[v]) {
      throw ValidationError(ValidationKind::BadDimensions,
                            "relabeling is not a permutation of 0.." + std::to_string(n_ - 1));
    }
    seen[v] = true;
  }
  std::vector<int> flat(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      flat[static_cast<size_t>(perm[i]) * n_ + perm[j]] = multiplicity(i, j);
  return KDigraph(n_, k_, std::move(flat));
}

KDigraph KDigraph::with_multiplicity_delta(int from, int to, int delta) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_ || from == to) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "arc endpoints (" + std::to_string(from) + ", " + std::to_string(to) +
                              ") out of range",
                          from, to);
  }
  int m = multiplicity(from, to) + delta;
  if (m < 0) {
    throw ValidationError(ValidationKind::NegativeEntry,
                          "multiplicity at (" + std::to_string(from) + ", " +
                              std::to_string(to) + ") would become " + std::to_string(m),
                          from, to);
  }
  if (m + multiplicity(to, from) > k_) {
    throw ValidationError(ValidationKind::CapacityExceeded,
                          "pair {" + std::to_string(from) + ", " + std::to_string(to) +
                              "} would carry " + std::to_string(m + multiplicity(to, from)) +
                              " arcs, more than k = " + std::to_string(k_),
                          from, to);
  }
  std::vector<int> flat = mult_;
  flat[static_cast<size_t>(from) * n_ + to] = m;
  return KDigraph(n_, k_, std::move(flat));
}

KDigraph KDigraph::induced(const std::vector<int>& vertices) const {
  int m = static_cast<int>(vertices.size());
  if (m < 1) {
    throw ValidationError(ValidationKind::BadDimensions, "induced subdigraph needs a vertex");
  }
  for (int v : vertices) {
    if (v < 0 || v >= n_) {
      throw ValidationError(ValidationKind::BadDimensions,
                            "vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<int> flat(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      flat[static_cast<size_t>(a) * m + b] = multiplicity(vertices[a], vertices[b]);
  return KDigraph(m, k_, std::move(flat));
}

MarkSequence::MarkSequence(std::vector<int> entries, int k)
    : entries_(std::move(entries)), k_(k), reordered_(false) {
  detail::check_dimensions(static_cast<int>(entries_.size()), k);
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    std::sort(entries_.begin(), entries_.end());
    reordered_ = true;
  }
  int n = static_cast<int>(entries_.size());
  long long upper = 2LL * k_ * (n - 1);
  for (int i = 0; i < n; ++i) {
    if (entries_[i] < 0) {
      throw ValidationError(ValidationKind::NegativeEntry,
                            "entry " + std::to_string(entries_[i]) + " at position " +
                                std::to_string(i) + " is negative",
                            i);
    }
    if (entries_[i] > upper) {
      throw ValidationError(ValidationKind::EntryAboveBound,
                            "entry " + std::to_string(entries_[i]) + " at position " +
                                std::to_string(i) + " exceeds 2k(n-1) = " +
                                std::to_string(upper),
                            i);
    }
  }
}

long long MarkSequence::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

std::vector<int> vertex_marks(const KDigraph& d) {
  std::vector<int> marks(d.n());
  for (int v = 0; v < d.n(); ++v) {
    marks[v] = d.k() * (d.n() - 1) + d.out_degree(v) - d.in_degree(v);
  }
  return marks;
}

MarkSequence compute_marks(const KDigraph& d) {
  return MarkSequence(vertex_marks(d), d.k());
}

MarkSequence parse_sequence(const std::string& text, int k) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<int> entries;
  std::string token;
  while (in >> token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ValidationError(ValidationKind::BadDimensions,
                            "cannot parse \"" + token + "\" as an integer entry");
    }
    entries.push_back(value);
  }
  if (entries.empty()) {
    throw ValidationError(ValidationKind::BadDimensions, "sequence input is empty");
  }
  return MarkSequence(std::move(entries), k);
}

}  // namespace markseq
