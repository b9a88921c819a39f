#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "markseq/construction.hpp"
#include "markseq/decomposition.hpp"
#include "markseq/errors.hpp"
#include "markseq/oracle.hpp"
#include "markseq/realizability.hpp"
#include "markseq/transform.hpp"

using markseq::HhVariant;
using markseq::KDigraph;
using markseq::MarkSequence;

TEST_SUITE("properties") {

TEST_CASE("every mark sequence of a digraph flows back into a digraph") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> pick_n(1, 10);
  std::uniform_int_distribution<int> pick_k(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    auto d = testsupport::random_digraph(rng, pick_n(rng), pick_k(rng));
    MarkSequence seq = compute_marks(d);
    auto rebuilt = realize_flow(seq);
    MarkSequence back = compute_marks(rebuilt);
    CHECK(back == seq);
  }
}

TEST_CASE("random applicable moves never change the marks") {
  std::mt19937 rng(161803);
  int applied = 0;
  while (applied < 400) {
    auto d = testsupport::random_digraph(rng, 6, 2);
    auto moves = enumerate_moves(d);
    if (moves.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    const auto& mv = moves[pick(rng)];
    auto e = apply_move(d, mv);
    MarkSequence before = compute_marks(d);
    MarkSequence after = compute_marks(e);
    CHECK(before == after);
    ++applied;
  }
}

TEST_CASE("splits reassemble and separate strictly") {
  std::mt19937 rng(141421);
  std::uniform_int_distribution<int> pick_n(1, 8);
  std::uniform_int_distribution<int> pick_k(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int k = pick_k(rng);
    auto d = testsupport::random_digraph(rng, pick_n(rng), k);
    MarkSequence seq = compute_marks(d);
    auto dec = markseq::decompose_sequence(seq);
    CHECK(dec.reassembled() == seq);
    for (size_t c = 0; c + 1 < dec.components.size(); ++c) {
      int last_original = dec.components[c].entries.back() + 2 * k * dec.components[c].offset;
      int next_original =
          dec.components[c + 1].entries.front() + 2 * k * dec.components[c + 1].offset;
      CHECK(last_original < next_original);
    }
  }
}

TEST_CASE("all construction methods land on the requested marks") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& seq : markseq::oracle::candidate_sequences(n, k)) {
        if (!markseq::check_realizable(seq).realizable) continue;
        MarkSequence via_flow = compute_marks(realize_flow(seq));
        CHECK(via_flow == seq);
        for (auto variant : {HhVariant::OnesFirst, HhVariant::TwosFirst}) {
          try {
            MarkSequence via_hh = compute_marks(realize_hh(seq, variant, true));
            CHECK(via_hh == seq);
          } catch (const markseq::NotRealizableError& e) {
            // The ones-first spreading rule can force a decrement onto a zero
            // entry even on realizable input; in this range that happens for
            // exactly one sequence, so pin it instead of swallowing it.
            CHECK(variant == HhVariant::OnesFirst);
            CHECK(seq.entries() == std::vector<int>{0, 6, 6});
            CHECK(std::string(e.what()).find("reduction went negative") !=
                  std::string::npos);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration workers do not affect results") {
  CHECK(markseq::oracle::realizable_set_bruteforce(4, 1, 1) ==
        markseq::oracle::realizable_set_bruteforce(4, 1, 3));
  auto a = markseq::oracle::count_realizations(MarkSequence({1, 2, 3}, 1), 1);
  auto b = markseq::oracle::count_realizations(MarkSequence({1, 2, 3}, 1), 2);
  CHECK(a.labeled == b.labeled);
  CHECK(a.iso_classes == b.iso_classes);
}

TEST_CASE("minimization of every small digraph reaches a transitive one") {
  for (int k = 1; k <= 2; ++k) {
    markseq::oracle::enumerate_digraphs(3, k, [](const KDigraph& d) {
      auto res = minimize_arcs(d);
      CHECK(is_transitive(res.digraph));
      MarkSequence before = compute_marks(d);
      MarkSequence after = compute_marks(res.digraph);
      CHECK(before == after);
      CHECK(res.digraph.arc_count() <= d.arc_count());
    });
  }
}

TEST_CASE("minimization never beats the exhaustive minimum") {
  std::mt19937 rng(577215);
  for (int trial = 0; trial < 30; ++trial) {
    auto d = testsupport::random_digraph(rng, 4, 2);
    MarkSequence seq = compute_marks(d);
    long long fewest = markseq::oracle::min_arc_count_bruteforce(seq);
    auto res = minimize_arcs(d);
    CHECK(res.digraph.arc_count() >= fewest);
  }
}

}  // TEST_SUITE
