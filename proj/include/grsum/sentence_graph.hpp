#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "grsum/error.hpp"
#include "grsum/similarity.hpp"

namespace grsum {

struct Edge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  std::size_t node = 0;
  double weight = 0.0;
};

// Undirected weighted graph with one node per sentence. Immutable once built.
class SentenceGraph {
 public:
  explicit SentenceGraph(std::size_t n = 0, std::vector<Edge> edges = {})
      : n_(n), edges_(std::move(edges)), adjacency_(n) {
    for (auto& e : edges_) {
      if (e.i > e.j) std::swap(e.i, e.j);
      if (e.j >= n_) throw Error("edge endpoint out of range");
      if (e.i == e.j) throw Error("self-loop on node " + std::to_string(e.i));
      if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
        throw Error("edge weights must be positive and finite");
      }
      adjacency_[e.i].push_back({e.j, e.weight});
      adjacency_[e.j].push_back({e.i, e.weight});
    }
    for (auto& adj : adjacency_) {
      std::sort(adj.begin(), adj.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
      for (std::size_t k = 1; k < adj.size(); ++k) {
        if (adj[k].node == adj[k - 1].node) throw Error("duplicate edge");
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  bool has_edge(std::size_t u, std::size_t v) const {
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Neighbor& a, std::size_t x) { return a.node < x; });
    return it != adj.end() && it->node == v;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// ceil(t * count), snapped to the nearest integer when the product lies within
// rounding error of it (0.7 * 10 evaluates to 7.000000000000001).
inline std::size_t edge_quota(double t, std::size_t count) {
  const double product = t * static_cast<double>(count);
  const double nearest = std::round(product);
  if (std::abs(product - nearest) <= 1e-9 * std::max(1.0, product)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(product));
}

// Keeps the top ceil(t * |positive pairs|) pairs ranked by (value desc, i asc,
// j asc). Pairs with zero similarity are never edges.
inline SentenceGraph build_graph(std::vector<SimilarityScore> scores, std::size_t n, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidThreshold("threshold must lie in [0, 1], got " + std::to_string(t));
  }
  std::erase_if(scores, [](const SimilarityScore& s) { return !(s.value > 0.0); });
  for (auto& s : scores) {
    if (s.i > s.j) std::swap(s.i, s.j);
  }
  std::sort(scores.begin(), scores.end(), [](const SimilarityScore& a, const SimilarityScore& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  const auto keep = std::min(edge_quota(t, scores.size()), scores.size());

  std::vector<Edge> edges;
  edges.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) edges.push_back({scores[k].i, scores[k].j, scores[k].value});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return SentenceGraph(n, std::move(edges));
}

namespace detail {

// Shortest decimal that round-trips.
inline std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

// DOT text; edges carry the similarity as both `weight` and `label`.
inline std::string graph_dot_export(const SentenceGraph& g) {
  std::string out = "graph sentences {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges()) {
    const auto w = detail::format_real(e.weight);
    out += "  " + std::to_string(e.i) + " -- " + std::to_string(e.j) + " [weight=" + w +
           ", label=\"" + w + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace grsum
