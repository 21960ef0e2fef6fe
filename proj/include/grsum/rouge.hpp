#pragma once

// ROUGE-1, ROUGE-2 and ROUGE-L against a single reference.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/detail/strings.hpp"
#include "grsum/error.hpp"

namespace grsum {

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

struct RougeReport {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
};

// Lowercase, split on anything that is not a letter or digit; no stemming,
// stopwords kept.
inline std::vector<std::string> rouge_tokenize(std::string_view text) {
  return detail::word_tokens(text);
}

inline RougeScore make_rouge_score(std::size_t matches, std::size_t reference_total,
                                   std::size_t candidate_total) {
  RougeScore s;
  if (reference_total > 0) {
    s.recall = static_cast<double>(matches) / static_cast<double>(reference_total);
  }
  if (candidate_total > 0) {
    s.precision = static_cast<double>(matches) / static_cast<double>(candidate_total);
  }
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

namespace detail {

inline std::map<std::vector<std::string_view>, std::size_t> ngram_counts(
    std::span<const std::string> tokens, std::size_t n) {
  std::map<std::vector<std::string_view>, std::size_t> counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t k = 0; k + n <= tokens.size(); ++k) {
    std::vector<std::string_view> gram(tokens.begin() + static_cast<std::ptrdiff_t>(k),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(k + n));
    ++counts[std::move(gram)];
  }
  return counts;
}

}  // namespace detail

// Clipped n-gram overlap.
inline RougeScore rouge_n(std::span<const std::string> candidate,
                          std::span<const std::string> reference, std::size_t n) {
  const auto cand = detail::ngram_counts(candidate, n);
  const auto ref = detail::ngram_counts(reference, n);
  std::size_t matches = 0;
  for (const auto& [gram, count] : ref) {
    if (auto it = cand.find(gram); it != cand.end()) matches += std::min(count, it->second);
  }
  const auto grams = [n](std::size_t len) { return len >= n && n > 0 ? len - n + 1 : 0; };
  return make_rouge_score(matches, grams(reference.size()), grams(candidate.size()));
}

inline std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    prev.swap(cur);
  }
  return prev[b.size()];
}

inline RougeScore rouge_l(std::span<const std::string> candidate,
                          std::span<const std::string> reference) {
  return make_rouge_score(lcs_length(candidate, reference), reference.size(), candidate.size());
}

// Both sides are flattened into one token sequence (sentences in order) before
// scoring.
inline RougeReport score_summary(const std::vector<std::string>& generated,
                                 const std::vector<std::string>& gold) {
  if (generated.empty()) throw EmptySummary("generated summary has no sentences");
  if (gold.empty()) throw EmptyReference("reference summary has no sentences");
  std::vector<std::string> cand;
  std::vector<std::string> ref;
  for (const auto& s : generated) {
    auto t = rouge_tokenize(s);
    cand.insert(cand.end(), t.begin(), t.end());
  }
  for (const auto& s : gold) {
    auto t = rouge_tokenize(s);
    ref.insert(ref.end(), t.begin(), t.end());
  }
  RougeReport r;
  r.rouge1 = rouge_n(cand, ref, 1);
  r.rouge2 = rouge_n(cand, ref, 2);
  r.rougeL = rouge_l(cand, ref);
  return r;
}

}  // namespace grsum
