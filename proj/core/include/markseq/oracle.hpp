#ifndef MARKSEQ_ORACLE_HPP
#define MARKSEQ_ORACLE_HPP

#include <functional>
#include <set>
#include <vector>

#include "markseq/digraph.hpp"

namespace markseq::oracle {

/// Ways one vertex pair can be wired: ordered arc counts (a, b) with
/// a + b <= k, which is (k+1)(k+2)/2 states.
long long pair_state_count(int k);

/// pair_state_count(k) to the power of the number of pairs.
/// Throws TooLargeError past 10^8.
long long labeled_digraph_count(int n, int k);

/// Calls the visitor on every labeled digraph exactly once, in one fixed
/// lexicographic order over pair states. Throws TooLargeError when the
/// count guard trips.
void enumerate_digraphs(int n, int k, const std::function<void(const KDigraph&)>& visit);

/// Every sequence that occurs as the marks of some digraph, by exhaustion.
/// jobs > 1 splits the enumeration by the first pair's state; the returned
/// set does not depend on jobs.
std::set<MarkSequence> realizable_set_bruteforce(int n, int k, int jobs = 1);

struct RealizationCount {
  long long labeled = 0;
  long long iso_classes = 0;
};

/// How many digraphs realize the sequence, both as labeled digraphs and up
/// to relabeling. Relabeling classes need canonical_form and so cap n at 8.
RealizationCount count_realizations(const MarkSequence& seq, int jobs = 1);

using CanonicalKey = std::vector<int>;

/// Lexicographically least flattened multiplicity matrix over all vertex
/// relabelings. Equal keys mean isomorphic digraphs. Throws TooLargeError
/// past 8 vertices.
CanonicalKey canonical_form(const KDigraph& d);

/// Fewest arcs over all digraphs realizing the sequence, by exhaustion.
/// Throws NotRealizableError when nothing realizes it.
long long min_arc_count_bruteforce(const MarkSequence& seq, int jobs = 1);

/// All non-decreasing sequences with entries in [0, 2k(n-1)] and the total
/// a mark sequence must have. Realizability is not filtered.
std::vector<MarkSequence> candidate_sequences(int n, int k);

}  // namespace markseq::oracle

#endif  // MARKSEQ_ORACLE_HPP
