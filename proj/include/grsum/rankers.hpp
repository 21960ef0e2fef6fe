#pragma once

// Centrality measures over a SentenceGraph and top-N selection.
//
// PageRank, HITS and degree use edge weights. Closeness and betweenness work
// on hop counts; the weighted_* variants use 1/weight as edge length.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/error.hpp"
#include "grsum/sentence_graph.hpp"

namespace grsum {

enum class Method { pagerank, hits, closeness, betweenness, degree, clusters };

inline constexpr Method kAllMethods[] = {Method::pagerank,    Method::hits,
                                         Method::closeness,   Method::betweenness,
                                         Method::degree,      Method::clusters};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::pagerank: return "pagerank";
    case Method::hits: return "hits";
    case Method::closeness: return "closeness";
    case Method::betweenness: return "betweenness";
    case Method::degree: return "degree";
    case Method::clusters: return "clusters";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (auto m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

struct RankResult {
  Method method = Method::pagerank;
  std::vector<double> scores;
  std::vector<std::size_t> selected;  // ascending
  bool converged = true;
};

struct PageRankParams {
  double damping = 0.85;
  double tol = 1e-8;  // L1 change between iterates
  std::size_t max_iter = 200;
};

struct HitsParams {
  double tol = 1e-10;  // L1 change between iterates
  std::size_t max_iter = 10000;
};

// Result of a power iteration. When `converged` is false, `scores` holds the
// last iterate.
struct IterativeScores {
  std::vector<double> scores;
  bool converged = true;
  std::size_t iterations = 0;
};

inline std::vector<double> strengths(const SentenceGraph& g) {
  std::vector<double> s(g.size(), 0.0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& nb : g.neighbors(v)) s[v] += nb.weight;
  }
  return s;
}

// Weighted PageRank: each undirected edge is a pair of arcs and a walker
// leaves a node along an arc with probability proportional to its weight.
// Nodes without edges spread their mass uniformly.
inline IterativeScores pagerank(const SentenceGraph& g, const PageRankParams& p = {}) {
  if (!(p.damping > 0.0 && p.damping < 1.0)) throw Error("damping must lie in (0, 1)");
  if (!(p.tol > 0.0)) throw Error("tolerance must be positive");
  const auto n = g.size();
  IterativeScores out;
  if (n == 0) return out;

  const auto strength = strengths(g);
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> x(n, uniform);
  std::vector<double> next(n);
  out.converged = false;
  for (std::size_t it = 1; it <= p.max_iter; ++it) {
    double dangling = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (strength[v] == 0.0) dangling += x[v];
    }
    const double base = (1.0 - p.damping) * uniform + p.damping * dangling * uniform;
    std::fill(next.begin(), next.end(), base);
    for (std::size_t v = 0; v < n; ++v) {
      if (strength[v] == 0.0) continue;
      const double share = p.damping * x[v] / strength[v];
      for (const auto& nb : g.neighbors(v)) next[nb.node] += share * nb.weight;
    }
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= total;
      change += std::abs(next[v] - x[v]);
    }
    x.swap(next);
    out.iterations = it;
    if (change < p.tol) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(x);
  return out;
}

// On an undirected graph hub and authority scores coincide with the principal
// eigenvector of the weighted adjacency matrix A. Iterating with A + I keeps
// the same principal eigenvector and avoids the oscillation plain power
// iteration shows on bipartite graphs. L2-normalized; a graph without edges
// keeps the uniform start vector.
inline IterativeScores hits(const SentenceGraph& g, const HitsParams& p = {}) {
  if (!(p.tol > 0.0)) throw Error("tolerance must be positive");
  const auto n = g.size();
  IterativeScores out;
  if (n == 0) return out;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  out.converged = false;
  for (std::size_t it = 1; it <= p.max_iter; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = x[v];
      for (const auto& nb : g.neighbors(v)) acc += nb.weight * x[nb.node];
      next[v] = acc;
    }
    double norm = 0.0;
    for (double v : next) norm += v * v;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= norm;
      change += std::abs(next[v] - x[v]);
    }
    x.swap(next);
    out.iterations = it;
    if (change < p.tol) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(x);
  return out;
}

namespace detail {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_hops(const SentenceGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(v)) {
      if (dist[nb.node] == kUnreached) {
        dist[nb.node] = dist[v] + 1;
        queue.push_back(nb.node);
      }
    }
  }
  return dist;
}

inline std::vector<double> dijkstra_lengths(const SentenceGraph& g, std::size_t source) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      const double nd = d + 1.0 / nb.weight;
      if (nd < dist[nb.node]) {
        dist[nb.node] = nd;
        heap.emplace(nd, nb.node);
      }
    }
  }
  return dist;
}

// Wasserman-Faust: ((r-1)/(n-1)) * ((r-1)/sum of distances), r = nodes reached
// including the source.
inline double scaled_closeness(std::size_t n, std::size_t reached, double total) {
  if (n < 2 || reached < 2 || !(total > 0.0)) return 0.0;
  const double r1 = static_cast<double>(reached - 1);
  return (r1 / static_cast<double>(n - 1)) * (r1 / total);
}

}  // namespace detail

inline std::vector<double> closeness(const SentenceGraph& g) {
  const auto n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto dist = detail::bfs_hops(g, v);
    std::size_t reached = 0;
    std::size_t total = 0;
    for (auto d : dist) {
      if (d == detail::kUnreached) continue;
      ++reached;
      total += d;
    }
    out[v] = detail::scaled_closeness(n, reached, static_cast<double>(total));
  }
  return out;
}

inline std::vector<double> weighted_closeness(const SentenceGraph& g) {
  const auto n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto dist = detail::dijkstra_lengths(g, v);
    std::size_t reached = 0;
    double total = 0.0;
    for (auto d : dist) {
      if (std::isinf(d)) continue;
      ++reached;
      total += d;
    }
    out[v] = detail::scaled_closeness(n, reached, total);
  }
  return out;
}

// Brandes accumulation on hop counts, unnormalized, each unordered pair
// counted once. `Real` needs +, *, / and construction from int; an exact
// rational type gives exact results.
template <class Real = double>
std::vector<Real> betweenness(const SentenceGraph& g) {
  const auto n = g.size();
  std::vector<Real> centrality(n, Real(0));
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<Real> sigma(n);
  std::vector<Real> delta(n);
  std::vector<std::size_t> dist(n);

  for (std::size_t s = 0; s < n; ++s) {
    order.clear();
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), Real(0));
    std::fill(delta.begin(), delta.end(), Real(0));
    std::fill(dist.begin(), dist.end(), detail::kUnreached);
    sigma[s] = Real(1);
    dist[s] = 0;

    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        const auto w = nb.node;
        if (dist[w] == detail::kUnreached) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] = sigma[w] + sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto v : preds[w]) {
        delta[v] = delta[v] + sigma[v] / sigma[w] * (Real(1) + delta[w]);
      }
      if (w != s) centrality[w] = centrality[w] + delta[w];
    }
  }
  for (auto& c : centrality) c = c / Real(2);
  return centrality;
}

inline std::vector<double> weighted_betweenness(const SentenceGraph& g) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const auto n = g.size();
  std::vector<double> centrality(n, 0.0);
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<double> dist(n);
  using Item = std::pair<double, std::size_t>;

  for (std::size_t s = 0; s < n; ++s) {
    order.clear();
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), inf);
    std::vector<char> settled(n, 0);
    sigma[s] = 1.0;
    dist[s] = 0.0;

    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (settled[v] || d > dist[v]) continue;
      settled[v] = 1;
      order.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        const auto w = nb.node;
        const double nd = d + 1.0 / nb.weight;
        if (nd < dist[w]) {
          dist[w] = nd;
          sigma[w] = sigma[v];
          preds[w].assign(1, v);
          heap.emplace(nd, w);
        } else if (nd == dist[w] && !settled[w]) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  for (auto& c : centrality) c /= 2.0;
  return centrality;
}

// Weighted degree (sum of incident edge weights).
inline std::vector<double> degree(const SentenceGraph& g) { return strengths(g); }

// The `count` highest scores, ties to the lower index, returned in ascending
// index order.
inline std::vector<std::size_t> select_top(const std::vector<double>& scores, std::size_t count) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto k = std::min(count, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace grsum
