#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gbp {

// Simple undirected graph, vertices 0..n-1 internally (1-indexed only in
// external formats such as DIMACS).
class graph {
 public:
  explicit graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  }

  graph(int n, const std::vector<std::pair<int, int>>& edges) : graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    if (!at(u, v)) {
      at(u, v) = at(v, u) = 1;
      ++m_;
    }
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && at(u, v);
  }

  int degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (int u = 0; u < n_; ++u) deg += at(v, u);
    return deg;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (at(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const graph& a, const graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  }
  char& at(int u, int v) { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  char at(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }

  int n_ = 0;
  int m_ = 0;
  std::vector<char> adj_;
};

inline graph complement(const graph& g) {
  graph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

// True iff every pair of distinct vertices in s is an edge; sets of size
// <= 1 (and repeated vertices) count as cliques.
inline bool is_clique(const graph& g, std::span<const int> s) {
  for (int v : s)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("is_clique: vertex out of range");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) continue;
      if (!g.has_edge(s[a], s[b])) return false;
    }
  return true;
}

}  // namespace gbp
