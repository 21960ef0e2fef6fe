#pragma once

// Maximal cliques of the sentence graph and one representative sentence per
// clique.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "grsum/error.hpp"
#include "grsum/rankers.hpp"
#include "grsum/sentence_graph.hpp"

namespace grsum {

struct Clique {
  std::vector<std::size_t> members;  // ascending

  std::size_t size() const noexcept { return members.size(); }
  bool operator==(const Clique&) const = default;
};

inline constexpr std::size_t kDefaultCliqueCap = 100000;

// Size descending, then lexicographic on the sorted members (which orders by
// smallest member first).
inline bool clique_order(const Clique& a, const Clique& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.members < b.members;
}

namespace detail {

class BronKerbosch {
 public:
  BronKerbosch(const SentenceGraph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<Clique> run() && {
    std::vector<std::size_t> all(g_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> clique;
    expand(clique, std::move(all), {});
    return std::move(found_);
  }

 private:
  std::vector<std::size_t> neighbors_in(std::size_t v, const std::vector<std::size_t>& set) const {
    std::vector<std::size_t> out;
    for (auto u : set) {
      if (g_.has_edge(v, u)) out.push_back(u);
    }
    return out;
  }

  // Tomita pivot: the vertex of P ∪ X with the most neighbors in P.
  std::size_t choose_pivot(const std::vector<std::size_t>& p, const std::vector<std::size_t>& x) const {
    std::size_t best = p.empty() ? x.front() : p.front();
    std::size_t best_count = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
      for (auto u : *set) {
        const auto count = neighbors_in(u, p).size();
        if (first || count > best_count) {
          best = u;
          best_count = count;
          first = false;
        }
      }
    }
    return best;
  }

  void expand(std::vector<std::size_t>& clique, std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (found_.size() >= cap_) {
          throw CliqueBudgetExceeded("more than " + std::to_string(cap_) + " maximal cliques");
        }
        Clique c{clique};
        std::sort(c.members.begin(), c.members.end());
        found_.push_back(std::move(c));
      }
      return;
    }
    const auto pivot = choose_pivot(p, x);
    std::vector<std::size_t> candidates;
    for (auto v : p) {
      if (!g_.has_edge(pivot, v)) candidates.push_back(v);
    }
    for (auto v : candidates) {
      clique.push_back(v);
      expand(clique, neighbors_in(v, p), neighbors_in(v, x));
      clique.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const SentenceGraph& g_;
  std::size_t cap_;
  std::vector<Clique> found_;
};

}  // namespace detail

// All maximal cliques (Bron-Kerbosch with pivoting), isolated nodes included
// as singletons, ordered by clique_order. Throws CliqueBudgetExceeded once
// more than `cap` cliques are found.
inline std::vector<Clique> maximal_cliques(const SentenceGraph& g,
                                           std::size_t cap = kDefaultCliqueCap) {
  if (g.size() == 0) return {};
  auto cliques = detail::BronKerbosch(g, cap).run();
  std::sort(cliques.begin(), cliques.end(), clique_order);
  return cliques;
}

// Elects one sentence per clique and returns up to `count` of them in
// ascending order:
//  - singleton cliques are ignored;
//  - cliques are visited in clique_order; each picks its highest-closeness
//    member (ties to the lower index) not already taken by an earlier clique;
//  - representatives are ranked by clique size, then closeness, then index;
//  - if fewer than `count` exist, the highest-closeness remaining sentences
//    fill the gap.
inline std::vector<std::size_t> elect_representatives(std::vector<Clique> cliques,
                                                      const std::vector<double>& closeness_scores,
                                                      std::size_t count) {
  const auto n = closeness_scores.size();
  std::sort(cliques.begin(), cliques.end(), clique_order);
  auto better = [&](std::size_t a, std::size_t b) {
    if (closeness_scores[a] != closeness_scores[b]) return closeness_scores[a] > closeness_scores[b];
    return a < b;
  };

  struct Elected {
    std::size_t node;
    std::size_t clique_size;
  };
  std::vector<Elected> elected;
  std::vector<char> taken(n, 0);
  for (const auto& c : cliques) {
    if (c.size() < 2) continue;
    std::size_t best = n;
    for (auto v : c.members) {
      if (v >= n) throw Error("clique member outside closeness table");
      if (taken[v]) continue;
      if (best == n || better(v, best)) best = v;
    }
    if (best == n) continue;
    taken[best] = 1;
    elected.push_back({best, c.size()});
  }

  std::stable_sort(elected.begin(), elected.end(), [&](const Elected& a, const Elected& b) {
    if (a.clique_size != b.clique_size) return a.clique_size > b.clique_size;
    return better(a.node, b.node);
  });

  const auto want = std::min(count, n);
  std::vector<std::size_t> out;
  out.reserve(want);
  std::vector<char> chosen(n, 0);
  for (const auto& e : elected) {
    if (out.size() == want) break;
    out.push_back(e.node);
    chosen[e.node] = 1;
  }
  if (out.size() < want) {
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v) {
      if (!chosen[v]) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end(), better);
    for (auto v : rest) {
      if (out.size() == want) break;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grsum
