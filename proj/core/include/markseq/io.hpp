#ifndef MARKSEQ_IO_HPP
#define MARKSEQ_IO_HPP

#include <string>

#include "markseq/digraph.hpp"

namespace markseq {

/// Compact JSON object {"n": ..., "k": ..., "adj": [[...], ...]}.
std::string digraph_to_json(const KDigraph& d);

/// Parses the JSON produced by digraph_to_json. Malformed or mistyped input
/// raises ValidationError{BadDimensions}; matrix contents go through the
/// usual digraph validation.
KDigraph digraph_from_json(const std::string& text);

/// Graphviz source with every vertex declared and one edge statement per
/// unit of multiplicity.
std::string digraph_to_dot(const KDigraph& d);

/// Plain text: an "n k" header line followed by the n matrix rows.
std::string digraph_to_matrix_text(const KDigraph& d);

/// Parses the format written by digraph_to_matrix_text.
KDigraph digraph_from_matrix_text(const std::string& text);

/// Parses either supported text form, deciding by the first non-space byte
/// ('{' means JSON).
KDigraph digraph_from_text(const std::string& text);

/// Reads the file and parses it with digraph_from_text. An unreadable path
/// raises ValidationError{BadDimensions}.
KDigraph load_digraph(const std::string& path);

}  // namespace markseq

#endif  // MARKSEQ_IO_HPP
