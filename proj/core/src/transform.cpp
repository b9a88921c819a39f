#include "markseq/transform.hpp"

#include <algorithm>
#include <optional>

namespace markseq {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::PairCancel: return "pair_cancel";
    case MoveKind::Cycle3: return "cycle3";
    case MoveKind::Shortcut: return "shortcut";
  }
  return "unknown";
}

const char* to_string(MoveDirection direction) {
  switch (direction) {
    case MoveDirection::Reduce: return "reduce";
    case MoveDirection::Expand: return "expand";
  }
  return "unknown";
}

std::string to_string(const TripleMove& move) {
  std::string out = to_string(move.kind);
  out += ' ';
  out += to_string(move.direction);
  out += " (";
  out += std::to_string(move.vertices[0]);
  out += ",";
  out += std::to_string(move.vertices[1]);
  if (move.vertices[2] >= 0) {
    out += ",";
    out += std::to_string(move.vertices[2]);
  }
  out += ")";
  return out;
}

namespace {

// Per-arc multiplicity changes of a move, as (from, to, delta) triples.
struct ArcDelta {
  int from, to, delta;
};

int delta_count(const TripleMove& move) { return move.kind == MoveKind::PairCancel ? 2 : 3; }

void move_deltas(const TripleMove& move, ArcDelta out[3]) {
  auto [u, v, w] = move.vertices;
  int sign = move.direction == MoveDirection::Reduce ? -1 : 1;
  switch (move.kind) {
    case MoveKind::PairCancel:
      out[0] = {u, v, sign};
      out[1] = {v, u, sign};
      break;
    case MoveKind::Cycle3:
      out[0] = {u, v, sign};
      out[1] = {v, w, sign};
      out[2] = {w, u, sign};
      break;
    case MoveKind::Shortcut:
      out[0] = {u, v, sign};
      out[1] = {v, w, sign};
      out[2] = {u, w, -sign};
      break;
  }
}

bool vertices_valid(const KDigraph& d, const TripleMove& move) {
  auto [u, v, w] = move.vertices;
  int wanted = delta_count(move) == 2 ? 2 : 3;
  int given[3] = {u, v, w};
  for (int i = 0; i < wanted; ++i) {
    if (given[i] < 0 || given[i] >= d.n()) return false;
    for (int j = 0; j < i; ++j)
      if (given[i] == given[j]) return false;
  }
  if (wanted == 2 && w != -1) return false;
  return true;
}

}  // namespace

bool is_applicable(const KDigraph& d, const TripleMove& move) {
  if (!vertices_valid(d, move)) return false;

  ArcDelta deltas[3];
  move_deltas(move, deltas);
  int count = delta_count(move);
  auto new_mult = [&](int a, int b) {
    int m = d.multiplicity(a, b);
    for (int i = 0; i < count; ++i)
      if (deltas[i].from == a && deltas[i].to == b) m += deltas[i].delta;
    return m;
  };
  for (int i = 0; i < count; ++i) {
    int a = deltas[i].from;
    int b = deltas[i].to;
    if (new_mult(a, b) < 0) return false;
    if (new_mult(a, b) + new_mult(b, a) > d.k()) return false;
  }

  // A shortcut only fires on an open 2-path: with the back arc w -> u
  // present the triple is a 3-cycle and belongs to Cycle3.
  if (move.kind == MoveKind::Shortcut) {
    auto [u, v, w] = move.vertices;
    if (d.multiplicity(w, u) != 0) return false;
  }
  return true;
}

KDigraph apply_move(const KDigraph& d, const TripleMove& move) {
  if (!is_applicable(d, move)) {
    throw InapplicableMoveError("move " + to_string(move) + " does not apply here");
  }
  ArcDelta deltas[3];
  move_deltas(move, deltas);
  KDigraph out = d;
  for (int i = 0; i < delta_count(move); ++i)
    out = out.with_multiplicity_delta(deltas[i].from, deltas[i].to, deltas[i].delta);
  return out;
}

std::vector<TripleMove> enumerate_moves(const KDigraph& d) {
  std::vector<TripleMove> moves;
  int n = d.n();
  auto consider = [&](const TripleMove& move) {
    if (is_applicable(d, move)) moves.push_back(move);
  };

  // Generation runs kind-major, direction-next, vertices ascending, which is
  // exactly the TripleMove ordering; no sort needed afterwards.
  for (auto dir : {MoveDirection::Reduce, MoveDirection::Expand})
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        consider({MoveKind::PairCancel, dir, {u, v, -1}});

  // 3-cycles are canonicalized on their least vertex; both rotations of the
  // remaining two vertices are distinct cycle directions.
  for (auto dir : {MoveDirection::Reduce, MoveDirection::Expand})
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        for (int w = u + 1; w < n; ++w)
          if (v != w) consider({MoveKind::Cycle3, dir, {u, v, w}});

  for (auto dir : {MoveDirection::Reduce, MoveDirection::Expand})
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          if (u != v && v != w && u != w) consider({MoveKind::Shortcut, dir, {u, v, w}});

  return moves;
}

namespace {

// First applicable arc-reducing move in priority order, or nullopt.
std::optional<TripleMove> first_reduce_move(const KDigraph& d) {
  int n = d.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      TripleMove move{MoveKind::PairCancel, MoveDirection::Reduce, {u, v, -1}};
      if (is_applicable(d, move)) return move;
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = u + 1; w < n; ++w) {
        if (v == w) continue;
        TripleMove move{MoveKind::Cycle3, MoveDirection::Reduce, {u, v, w}};
        if (is_applicable(d, move)) return move;
      }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        TripleMove move{MoveKind::Shortcut, MoveDirection::Reduce, {u, v, w}};
        if (is_applicable(d, move)) return move;
      }
  return std::nullopt;
}

}  // namespace

MinimizeResult minimize_arcs(const KDigraph& d) {
  MinimizeResult result{d, {}};
  while (auto move = first_reduce_move(result.digraph)) {
    result.digraph = apply_move(result.digraph, *move);
    result.trace.push_back(*move);
  }
  return result;
}

namespace {

// Selectable directions within one triple's pair: 0 = nothing (empty pair
// only), 1 = first -> second, 2 = second -> first.
int pair_choices(const KDigraph& d, int a, int b, int out[2]) {
  int count = 0;
  if (d.multiplicity(a, b) > 0) out[count++] = 1;
  if (d.multiplicity(b, a) > 0) out[count++] = 2;
  if (count == 0) out[count++] = 0;
  return count;
}

// A triple is fine when every per-pair direction choice yields a transitive
// relation: no chain x -> y -> z misses its x -> z arc.
bool triple_transitive(const KDigraph& d, int u, int v, int w) {
  int choices[3][2];
  int counts[3];
  counts[0] = pair_choices(d, u, v, choices[0]);
  counts[1] = pair_choices(d, u, w, choices[1]);
  counts[2] = pair_choices(d, v, w, choices[2]);

  for (int c0 = 0; c0 < counts[0]; ++c0)
    for (int c1 = 0; c1 < counts[1]; ++c1)
      for (int c2 = 0; c2 < counts[2]; ++c2) {
        bool sel[3][3] = {};
        auto apply = [&](int a, int b, int choice) {
          if (choice == 1) sel[a][b] = true;
          if (choice == 2) sel[b][a] = true;
        };
        apply(0, 1, choices[0][c0]);
        apply(0, 2, choices[1][c1]);
        apply(1, 2, choices[2][c2]);
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
              if (x == y || y == z || x == z) continue;
              if (sel[x][y] && sel[y][z] && !sel[x][z]) return false;
            }
      }
  return true;
}

}  // namespace

bool is_transitive(const KDigraph& d) {
  int n = d.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (!triple_transitive(d, u, v, w)) return false;
  return true;
}

}  // namespace markseq
