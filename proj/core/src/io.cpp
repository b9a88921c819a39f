#include "markseq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace markseq {

std::string digraph_to_json(const KDigraph& d) {
  nlohmann::json j;
  j["n"] = d.n();
  j["k"] = d.k();
  j["adj"] = d.matrix();
  return j.dump();
}

KDigraph digraph_from_json(const std::string& text) {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> adj;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    n = j.at("n").get<int>();
    k = j.at("k").get<int>();
    adj = j.at("adj").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ValidationKind::BadDimensions,
                          std::string("cannot parse digraph JSON: ") + e.what());
  }
  return KDigraph::from_matrix(n, k, adj);
}

std::string digraph_to_dot(const KDigraph& d) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j)
      for (int m = 0; m < d.multiplicity(i, j); ++m) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string digraph_to_matrix_text(const KDigraph& d) {
  std::ostringstream out;
  out << d.n() << ' ' << d.k() << '\n';
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 0; j < d.n(); ++j) {
      if (j) out << ' ';
      out << d.multiplicity(i, j);
    }
    out << '\n';
  }
  return out.str();
}

KDigraph digraph_from_matrix_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  int k = 0;
  if (!(in >> n >> k)) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "matrix text must start with \"n k\"");
  }
  if (n < 1 || n > kMaxVertices) {
    throw ValidationError(ValidationKind::BadDimensions,
                          "vertex count " + std::to_string(n) + " out of range");
  }
  std::vector<std::vector<int>> adj(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> adj[i][j])) {
        throw ValidationError(ValidationKind::BadDimensions,
                              "matrix text ends before row " + std::to_string(i) +
                                  " is complete");
      }
  return KDigraph::from_matrix(n, k, adj);
}

KDigraph digraph_from_text(const std::string& text) {
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at == std::string::npos) {
    throw ValidationError(ValidationKind::BadDimensions, "digraph input is empty");
  }
  return text[at] == '{' ? digraph_from_json(text) : digraph_from_matrix_text(text);
}

KDigraph load_digraph(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ValidationError(ValidationKind::BadDimensions, "cannot open file: " + path);
  }
  std::ostringstream content;
  content << file.rdbuf();
  return digraph_from_text(content.str());
}

}  // namespace markseq
