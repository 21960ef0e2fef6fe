#pragma once

// Rooted ordered labeled trees built from dependency parses, and the
// postorder / leftmost-leaf / keyroot tables used by tree edit distance.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "grsum/corpus_io.hpp"
#include "grsum/detail/strings.hpp"
#include "grsum/error.hpp"

namespace grsum {

class DepTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  // `parent[k]` is the parent of node k, or npos for the root. Node indices
  // are surface word positions; children are kept in ascending index order.
  DepTree(std::vector<std::string> labels, std::vector<std::size_t> parent)
      : labels_(std::move(labels)), parent_(std::move(parent)) {
    if (labels_.empty()) throw EmptySentence("tree has no nodes");
    if (labels_.size() != parent_.size()) {
      throw Error("label and parent arrays differ in length");
    }
    const auto n = labels_.size();
    children_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto p = parent_[k];
      if (p == npos) {
        if (root_ != npos) {
          throw MultipleRoots("nodes " + std::to_string(root_) + " and " + std::to_string(k) +
                              " are both roots");
        }
        root_ = k;
      } else if (p >= n) {
        throw HeadOutOfRange("node " + std::to_string(k) + " has parent " + std::to_string(p));
      } else {
        children_[p].push_back(k);
      }
    }
    if (root_ == npos) throw NoRoot("tree has no root");

    // Every node must reach the root without revisiting a node.
    std::vector<char> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
    state[root_] = 2;
    std::vector<std::size_t> walk;
    for (std::size_t k = 0; k < n; ++k) {
      walk.clear();
      auto v = k;
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = parent_[v];
      }
      if (state[v] == 1) {
        throw CycleDetected("cycle through node " + std::to_string(v));
      }
      for (auto w : walk) state[w] = 2;
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t root() const noexcept { return root_; }
  const std::string& label(std::size_t k) const { return labels_[k]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t parent(std::size_t k) const { return parent_[k]; }
  const std::vector<std::size_t>& children(std::size_t k) const { return children_[k]; }
  bool is_leaf(std::size_t k) const { return children_[k].empty(); }

  std::size_t leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(children_.begin(), children_.end(), [](const auto& c) { return c.empty(); }));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = npos;
};

// Node labels are lowercased lemmas (the form when the lemma column is empty).
inline DepTree tree_from_conllu(const ConlluSentence& sentence) {
  if (sentence.empty()) throw EmptySentence("sentence has no tokens");
  std::vector<std::string> labels;
  std::vector<std::size_t> parent;
  labels.reserve(sentence.size());
  parent.reserve(sentence.size());
  for (const auto& tok : sentence) {
    const bool no_lemma = tok.lemma.empty() || tok.lemma == "_";
    labels.push_back(detail::ascii_lower(no_lemma ? tok.form : tok.lemma));
    if (tok.head > sentence.size()) {
      throw HeadOutOfRange("token " + std::to_string(tok.index) + " has head " +
                           std::to_string(tok.head));
    }
    parent.push_back(tok.head == 0 ? DepTree::npos : tok.head - 1);
  }
  return DepTree(std::move(labels), std::move(parent));
}

// Right-leaning chain: token k is the parent of token k+1.
inline DepTree fallback_tree(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw EmptySentence("cannot build a tree from zero tokens");
  std::vector<std::size_t> parent(tokens.size());
  parent[0] = DepTree::npos;
  for (std::size_t k = 1; k < tokens.size(); ++k) parent[k] = k - 1;
  return DepTree(tokens, std::move(parent));
}

// All indices below are postorder positions, not word positions.
struct TedTables {
  std::vector<std::size_t> postorder;  // postorder position -> tree node
  std::vector<std::string> labels;     // label per postorder position
  std::vector<std::size_t> lml;        // leftmost leaf descendant
  std::vector<std::size_t> keyroots;   // ascending
};

inline TedTables prepare_ted_tables(const DepTree& tree) {
  const auto n = tree.size();
  TedTables t;
  t.postorder.reserve(n);
  t.labels.reserve(n);
  t.lml.resize(n);

  std::vector<std::size_t> position(n);
  // (node, next child to visit)
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(tree.root(), 0);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& kids = tree.children(node);
    if (next < kids.size()) {
      const auto child = kids[next++];
      stack.emplace_back(child, 0);
      continue;
    }
    const auto pos = t.postorder.size();
    position[node] = pos;
    t.postorder.push_back(node);
    t.labels.push_back(tree.label(node));
    t.lml[pos] = kids.empty() ? pos : t.lml[position[kids.front()]];
    stack.pop_back();
  }

  // A keyroot is the highest postorder node sharing its leftmost leaf.
  std::vector<char> seen(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    if (!seen[t.lml[i]]) {
      seen[t.lml[i]] = 1;
      t.keyroots.push_back(i);
    }
  }
  std::reverse(t.keyroots.begin(), t.keyroots.end());
  return t;
}

}  // namespace grsum
