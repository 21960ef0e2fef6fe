#pragma once

// Sentence similarity: normalized lemma overlap and tree-edit-distance
// similarity (Zhang-Shasha).

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/dep_tree.hpp"
#include "grsum/text_pipeline.hpp"

namespace grsum {

enum class Metric { overlap, ted };

struct SimilarityScore {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double value = 0.0;

  bool operator==(const SimilarityScore&) const = default;
};

// Unit costs by default: insert 1, delete 1, relabel 0 for equal labels and 1
// otherwise.
struct EditCostModel {
  double insert_cost = 1.0;
  double delete_cost = 1.0;
  double relabel_mismatch_cost = 1.0;

  double insert(std::string_view) const { return insert_cost; }
  double remove(std::string_view) const { return delete_cost; }
  double relabel(std::string_view a, std::string_view b) const {
    return a == b ? 0.0 : relabel_mismatch_cost;
  }
};

template <class C>
concept TreeEditCosts = requires(const C& c, std::string_view a, std::string_view b) {
  { c.insert(a) } -> std::convertible_to<double>;
  { c.remove(a) } -> std::convertible_to<double>;
  { c.relabel(a, b) } -> std::convertible_to<double>;
};

inline std::size_t overlap_count(const Sentence& a, const Sentence& b) {
  std::size_t count = 0;
  auto x = a.content_lemmas.begin();
  auto y = b.content_lemmas.begin();
  while (x != a.content_lemmas.end() && y != b.content_lemmas.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

// |A ∩ B| / (ln|A| + ln|B|) over the distinct content lemmas of each
// sentence; 0 when the intersection is empty or the denominator is not
// positive.
inline double overlap_similarity(const Sentence& a, const Sentence& b) {
  const auto shared = overlap_count(a, b);
  if (shared == 0) return 0.0;
  const double denom = std::log(static_cast<double>(a.content_lemmas.size())) +
                       std::log(static_cast<double>(b.content_lemmas.size()));
  if (!(denom > 0.0)) return 0.0;
  return static_cast<double>(shared) / denom;
}

// Zhang-Shasha forest-distance dynamic program over keyroot pairs.
template <TreeEditCosts Costs = EditCostModel>
double ted(const TedTables& a, const TedTables& b, const Costs& costs = {}) {
  const auto n1 = a.lml.size();
  const auto n2 = b.lml.size();
  if (n1 == 0 || n2 == 0) {
    double total = 0.0;
    for (const auto& l : a.labels) total += costs.remove(l);
    for (const auto& l : b.labels) total += costs.insert(l);
    return total;
  }

  std::vector<double> treedist(n1 * n2, 0.0);
  auto td = [&](std::size_t i, std::size_t j) -> double& { return treedist[i * n2 + j]; };
  std::vector<double> forest((n1 + 1) * (n2 + 1), 0.0);

  for (const auto i : a.keyroots) {
    for (const auto j : b.keyroots) {
      const auto li = a.lml[i];
      const auto lj = b.lml[j];
      const auto rows = i - li + 2;
      const auto cols = j - lj + 2;
      auto fd = [&](std::size_t x, std::size_t y) -> double& { return forest[x * cols + y]; };

      fd(0, 0) = 0.0;
      for (std::size_t x = 1; x < rows; ++x) {
        fd(x, 0) = fd(x - 1, 0) + costs.remove(a.labels[li + x - 1]);
      }
      for (std::size_t y = 1; y < cols; ++y) {
        fd(0, y) = fd(0, y - 1) + costs.insert(b.labels[lj + y - 1]);
      }
      for (std::size_t x = 1; x < rows; ++x) {
        const auto i1 = li + x - 1;
        const double del = costs.remove(a.labels[i1]);
        for (std::size_t y = 1; y < cols; ++y) {
          const auto j1 = lj + y - 1;
          const double ins = costs.insert(b.labels[j1]);
          const double by_edit = std::min(fd(x - 1, y) + del, fd(x, y - 1) + ins);
          if (a.lml[i1] == li && b.lml[j1] == lj) {
            // Both prefixes are whole trees.
            fd(x, y) = std::min(by_edit, fd(x - 1, y - 1) + costs.relabel(a.labels[i1], b.labels[j1]));
            td(i1, j1) = fd(x, y);
          } else {
            const auto p = a.lml[i1] - li;
            const auto q = b.lml[j1] - lj;
            fd(x, y) = std::min(by_edit, fd(p, q) + td(i1, j1));
          }
        }
      }
    }
  }
  return td(n1 - 1, n2 - 1);
}

template <TreeEditCosts Costs = EditCostModel>
double ted(const DepTree& a, const DepTree& b, const Costs& costs = {}) {
  return ted(prepare_ted_tables(a), prepare_ted_tables(b), costs);
}

inline double similarity_from_distance(double distance) { return 1.0 / (1.0 + distance); }

inline double ted_similarity(const DepTree& a, const DepTree& b) {
  return similarity_from_distance(ted(a, b));
}

// Scores for every pair i < j, ordered by (i, j).
inline std::vector<SimilarityScore> pairwise_similarities(const Document& doc, Metric metric) {
  const auto n = doc.size();
  std::vector<SimilarityScore> scores;
  scores.reserve(n * (n > 0 ? n - 1 : 0) / 2);

  if (metric == Metric::overlap) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        scores.push_back({i, j, overlap_similarity(doc.sentences[i], doc.sentences[j])});
      }
    }
    return scores;
  }

  if (doc.trees.size() != n) {
    throw Error("document '" + doc.id + "' has " + std::to_string(doc.trees.size()) +
                " trees for " + std::to_string(n) + " sentences");
  }
  std::vector<TedTables> tables;
  tables.reserve(n);
  for (const auto& t : doc.trees) tables.push_back(prepare_ted_tables(t));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      scores.push_back({i, j, similarity_from_distance(ted(tables[i], tables[j]))});
    }
  }
  return scores;
}

}  // namespace grsum
