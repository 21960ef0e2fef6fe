#pragma once

// End-to-end summarization of a Document and corpus-level evaluation.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "grsum/clusters.hpp"
#include "grsum/error.hpp"
#include "grsum/rankers.hpp"
#include "grsum/rouge.hpp"
#include "grsum/sentence_graph.hpp"
#include "grsum/similarity.hpp"
#include "grsum/text_pipeline.hpp"

namespace grsum {

inline std::string_view to_string(Metric m) { return m == Metric::overlap ? "overlap" : "ted"; }

inline std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "overlap") return Metric::overlap;
  if (name == "ted") return Metric::ted;
  return std::nullopt;
}

inline constexpr Metric kAllMetrics[] = {Metric::overlap, Metric::ted};

// Defaults reproduce the headline configuration: overlap metric, PageRank,
// t = 0.5, five sentences.
struct RunConfig {
  Metric metric = Metric::overlap;
  Method method = Method::pagerank;
  double threshold = 0.5;
  std::size_t length = 5;
  bool weighted_paths = false;
  std::size_t clique_cap = kDefaultCliqueCap;
  PageRankParams pagerank;
  HitsParams hits;
};

inline RankResult rank_sentences(const SentenceGraph& g, const RunConfig& config) {
  RankResult r;
  r.method = config.method;
  auto path_closeness = [&] {
    return config.weighted_paths ? weighted_closeness(g) : closeness(g);
  };
  switch (config.method) {
    case Method::pagerank: {
      auto it = pagerank(g, config.pagerank);
      r.scores = std::move(it.scores);
      r.converged = it.converged;
      break;
    }
    case Method::hits: {
      auto it = hits(g, config.hits);
      r.scores = std::move(it.scores);
      r.converged = it.converged;
      break;
    }
    case Method::closeness:
      r.scores = path_closeness();
      break;
    case Method::betweenness:
      r.scores = config.weighted_paths ? weighted_betweenness(g) : betweenness(g);
      break;
    case Method::degree:
      r.scores = degree(g);
      break;
    case Method::clusters: {
      r.scores = path_closeness();
      r.selected = elect_representatives(maximal_cliques(g, config.clique_cap), r.scores,
                                         config.length);
      return r;
    }
  }
  r.selected = select_top(r.scores, config.length);
  return r;
}

struct SummaryResult {
  SentenceGraph graph;
  RankResult rank;
  std::vector<std::string> sentences;  // selected raw sentences, document order
};

inline SummaryResult summarize(const Document& doc, const RunConfig& config) {
  if (doc.size() == 0) throw EmptyDocument("document '" + doc.id + "' has no sentences");
  if (config.length == 0) throw Error("summary length must be at least 1");
  auto scores = pairwise_similarities(doc, config.metric);
  SummaryResult out{build_graph(std::move(scores), doc.size(), config.threshold), {}, {}};
  out.rank = rank_sentences(out.graph, config);
  for (auto k : out.rank.selected) out.sentences.push_back(doc.sentences[k].raw);
  return out;
}

struct EvalInput {
  Document document;
  std::vector<std::string> gold;
};

struct EvalRow {
  Method method = Method::pagerank;
  Metric metric = Metric::overlap;
  double threshold = 0.5;
  RougeReport mean;  // precision fields are means too
  std::size_t docs = 0;      // documents scored
  std::size_t excluded = 0;  // documents that failed for this configuration
  double seconds = 0.0;      // summed per-document wall time
};

struct EvalResult {
  std::vector<EvalRow> rows;  // metric-major, then method, in request order
  // per_document[row][doc]; empty when that document failed.
  std::vector<std::vector<std::optional<RougeReport>>> per_document;
};

struct EvalOptions {
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<Metric> metrics{std::begin(kAllMetrics), std::end(kAllMetrics)};
  RunConfig base;
  std::size_t jobs = 1;
};

namespace detail {

inline void accumulate(RougeScore& acc, const RougeScore& s) {
  acc.recall += s.recall;
  acc.precision += s.precision;
  acc.f1 += s.f1;
}

inline void divide(RougeScore& s, double d) {
  s.recall /= d;
  s.precision /= d;
  s.f1 /= d;
}

}  // namespace detail

// Scores every (metric, method) pair on every input. Means are accumulated in
// input order, so results do not depend on `jobs`.
inline EvalResult evaluate(const std::vector<EvalInput>& inputs, const EvalOptions& options) {
  if (inputs.empty()) throw EmptyCorpus("nothing to evaluate");

  struct Combo {
    Metric metric;
    Method method;
  };
  std::vector<Combo> combos;
  for (auto metric : options.metrics) {
    for (auto method : options.methods) combos.push_back({metric, method});
  }

  EvalResult result;
  result.per_document.assign(combos.size(),
                             std::vector<std::optional<RougeReport>>(inputs.size()));
  std::vector<std::vector<double>> seconds(combos.size(), std::vector<double>(inputs.size(), 0.0));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto d = next.fetch_add(1); d < inputs.size(); d = next.fetch_add(1)) {
      const auto& input = inputs[d];
      for (std::size_t c = 0; c < combos.size(); ++c) {
        auto config = options.base;
        config.metric = combos[c].metric;
        config.method = combos[c].method;
        const auto start = std::chrono::steady_clock::now();
        try {
          auto summary = summarize(input.document, config);
          result.per_document[c][d] = score_summary(summary.sentences, input.gold);
        } catch (const Error&) {
          result.per_document[c][d].reset();
        }
        seconds[c][d] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    }
  };

  const auto jobs = std::max<std::size_t>(1, std::min(options.jobs, inputs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  for (std::size_t c = 0; c < combos.size(); ++c) {
    EvalRow row;
    row.metric = combos[c].metric;
    row.method = combos[c].method;
    row.threshold = options.base.threshold;
    for (std::size_t d = 0; d < inputs.size(); ++d) {
      row.seconds += seconds[c][d];
      const auto& r = result.per_document[c][d];
      if (!r) {
        ++row.excluded;
        continue;
      }
      ++row.docs;
      detail::accumulate(row.mean.rouge1, r->rouge1);
      detail::accumulate(row.mean.rouge2, r->rouge2);
      detail::accumulate(row.mean.rougeL, r->rougeL);
    }
    if (row.docs > 0) {
      const auto n = static_cast<double>(row.docs);
      detail::divide(row.mean.rouge1, n);
      detail::divide(row.mean.rouge2, n);
      detail::divide(row.mean.rougeL, n);
    }
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace grsum
