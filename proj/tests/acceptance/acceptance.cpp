// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Set GRSUM_CNNDM_DIR to a directory of CNN/DailyMail .story files
// (at least 500) to run the corpus criterion; it prints SKIP otherwise.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grsum/grsum.hpp"
#include "oracles/oracles.hpp"

namespace fs = std::filesystem;
using namespace grsum;

namespace {

struct Outcome {
  enum class Kind { pass, fail, skip } kind = Kind::pass;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {Outcome::Kind::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Kind::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Kind::skip, std::move(detail)}; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ------------------------------------------------------------ criteria

Outcome ted_brute_force() {
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 300; ++k) {
    const auto a = oracle::random_plain_tree(rng, 6, 3);
    const auto b = oracle::random_plain_tree(rng, 6, 3);
    const double got = ted(oracle::to_dep_tree(a), oracle::to_dep_tree(b));
    const int expected = oracle::ted_brute_force(a, b);
    if (got != expected) {
      return fail("pair " + std::to_string(k) + ": ted " + std::to_string(got) + " vs " +
                  std::to_string(expected));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) return fail("took " + std::to_string(secs) + " s");
  return pass("300 pairs in " + std::to_string(secs) + " s");
}

Outcome ted_chains() {
  std::mt19937_64 rng(1002);
  for (int k = 0; k < 200; ++k) {
    auto a = oracle::random_tokens(rng, 10, 4);
    auto b = oracle::random_tokens(rng, 10, 4);
    if (a.empty()) a.push_back("a");
    if (b.empty()) b.push_back("b");
    const double got = ted(fallback_tree(a), fallback_tree(b));
    const auto expected = oracle::string_edit_distance(a, b);
    if (got != static_cast<double>(expected)) return fail("sequence pair " + std::to_string(k));
  }
  return pass("200 sequence pairs");
}

Outcome pagerank_dense() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto n = 1 + rng() % 8;
    const auto g = oracle::random_connected_graph(rng, n, 0.4, true);
    const auto got = pagerank(g).scores;
    const auto expected = oracle::pagerank_dense(g, 0.85);
    for (std::size_t v = 0; v < n; ++v) worst = std::max(worst, std::abs(got[v] - expected[v]));
    const double sum = std::accumulate(got.begin(), got.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9) return fail("graph " + std::to_string(k) + " sums to " + std::to_string(sum));
  }
  if (worst > 1e-6) return fail("max deviation " + std::to_string(worst));
  std::ostringstream d;
  d << "max deviation " << worst;
  return pass(d.str());
}

Outcome path_centralities() {
  std::size_t checked = 0;
  auto check = [&](const SentenceGraph& g) -> bool {
    ++checked;
    const auto b = betweenness<oracle::Rational>(g);
    const auto b_expected = oracle::betweenness_brute_force(g);
    const auto c = closeness(g);
    const auto c_expected = oracle::closeness_brute_force(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!(b[v] == b_expected[v])) return false;
      if (std::abs(c[v] - c_expected[v]) > 1e-12) return false;
    }
    return true;
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::all_graphs(n, true)) {
      if (!check(g)) return fail("exhaustive graph on " + std::to_string(n) + " nodes");
    }
  }
  std::mt19937_64 rng(1004);
  for (int k = 0; k < 100; ++k) {
    if (!check(oracle::random_graph(rng, 1 + rng() % 8, 0.4, true))) {
      return fail("random graph " + std::to_string(k));
    }
  }
  return pass(std::to_string(checked) + " graphs");
}

Outcome cliques() {
  std::mt19937_64 rng(1005);
  for (int k = 0; k < 100; ++k) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 10, 0.5, false);
    std::set<std::vector<std::size_t>> got;
    for (const auto& c : maximal_cliques(g)) got.insert(c.members);
    if (got != oracle::maximal_cliques_brute_force(g)) return fail("graph " + std::to_string(k));
  }
  return pass("100 graphs");
}

Outcome rouge_examples() {
  using T = std::vector<std::string>;
  auto near = [](const RougeScore& s, double r, double p, double f) {
    return std::abs(s.recall - r) <= 1e-9 && std::abs(s.precision - p) <= 1e-9 &&
           std::abs(s.f1 - f) <= 1e-9;
  };
  const T cand = {"the", "cat", "sat"};
  const T ref = {"the", "cat", "ran", "fast"};
  if (!near(rouge_n(cand, cand, 1), 1, 1, 1)) return fail("identical unigram case");
  if (!near(rouge_n(cand, ref, 1), 0.5, 2.0 / 3.0, 4.0 / 7.0)) return fail("unigram case");
  if (!near(rouge_n(cand, ref, 2), 1.0 / 3.0, 0.5, 0.4)) return fail("bigram case");
  if (!near(rouge_l(T{"a", "b", "c", "d"}, T{"a", "c", "d"}), 1.0, 0.75, 6.0 / 7.0)) {
    return fail("LCS case");
  }
  if (!near(rouge_l(T{"a", "b"}, T{"c"}), 0, 0, 0)) return fail("disjoint LCS case");
  std::mt19937_64 rng(1006);
  for (int k = 0; k < 500; ++k) {
    const auto a = oracle::random_tokens(rng, 20, 4);
    const auto b = oracle::random_tokens(rng, 20, 4);
    if (lcs_length(a, b) != oracle::lcs_recursive(a, b)) return fail("LCS pair " + std::to_string(k));
  }
  return pass("worked examples and 500 LCS pairs");
}

Outcome graph_sweep() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> coarse(0, 5);
  for (int k = 0; k < 200; ++k) {
    const auto n = 2 + rng() % 12;
    std::vector<SimilarityScore> scores;
    std::size_t positives = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = coarse(rng) * 0.2;
        positives += v > 0.0;
        scores.push_back({i, j, v});
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> previous;
    for (double t : {0.0, 0.1, 0.5, 1.0}) {
      const auto g = build_graph(scores, n, t);
      const auto want = static_cast<std::size_t>(std::ceil(t * static_cast<double>(positives) - 1e-9));
      if (g.edges().size() != want) return fail("edge count at t=" + std::to_string(t));
      std::set<std::pair<std::size_t, std::size_t>> current;
      for (const auto& e : g.edges()) current.insert({e.i, e.j});
      if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end())) {
        return fail("subset property at t=" + std::to_string(t));
      }
      previous = std::move(current);
    }
  }
  return pass("200 score sets");
}

Outcome determinism() {
  const auto story = fs::path(GRSUM_TEST_DATA) / "fixture30.story";
  const auto out = fs::temp_directory_path() / "grsum_acceptance.out";
  std::size_t combos = 0;
  for (auto metric : kAllMetrics) {
    for (auto method : kAllMethods) {
      std::string first;
      for (int run = 0; run < 3; ++run) {
        const std::string cmd = std::string("\"") + GRSUM_CLI + "\" summarize \"" + story.string() +
                                "\" --method " + std::string(to_string(method)) + " --metric " +
                                std::string(to_string(metric)) + " --output \"" + out.string() +
                                "\" 2>/dev/null";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
          return fail(std::string(to_string(method)) + "/" + std::string(to_string(metric)) +
                      " exited abnormally");
        }
        const auto text = slurp(out);
        if (run == 0) {
          first = text;
          if (first.empty()) return fail("empty output");
        } else if (text != first) {
          return fail(std::string(to_string(method)) + "/" + std::string(to_string(metric)) +
                      " differs between runs");
        }
      }
      ++combos;
    }
  }
  fs::remove(out);
  return pass(std::to_string(combos) + " combinations x 3 runs");
}

Outcome lead_n() {
  const auto doc = build_document(load_story(fs::path(GRSUM_TEST_DATA) / "fixture30.story"));
  const std::vector<std::size_t> lead = {0, 1, 2, 3, 4};
  for (auto metric : kAllMetrics) {
    for (auto method : kAllMethods) {
      RunConfig config;
      config.metric = metric;
      config.method = method;
      config.threshold = 0.0;
      if (summarize(doc, config).rank.selected != lead) {
        return fail(std::string(to_string(method)) + "/" + std::string(to_string(metric)));
      }
    }
  }
  return pass("every method and metric");
}

Outcome dataset() {
  const char* dir = std::getenv("GRSUM_CNNDM_DIR");
  if (dir == nullptr || *dir == '\0') return skip("GRSUM_CNNDM_DIR not set");
  std::vector<fs::path> paths;
  try {
    paths = list_stories(dir);
  } catch (const Error& e) {
    return skip(e.what());
  }
  std::size_t limit = 3500;
  if (const char* l = std::getenv("GRSUM_CNNDM_LIMIT")) limit = std::strtoul(l, nullptr, 10);
  if (paths.size() > limit) paths.resize(limit);
  if (paths.size() < 500) return skip("fewer than 500 stories in " + std::string(dir));

  const auto stopwords = Stopwords::english();
  std::vector<EvalInput> inputs;
  for (const auto& p : paths) {
    try {
      auto record = load_story(p);
      if (record.highlights.empty()) continue;
      std::vector<ConlluSentence> sidecar;
      const auto side = sidecar_path(p, p.parent_path());
      const bool has_sidecar = fs::is_regular_file(side);
      if (has_sidecar) sidecar = load_conllu_sidecar(side);
      inputs.push_back({build_document(record, has_sidecar ? &sidecar : nullptr, stopwords),
                        record.highlights});
    } catch (const Error&) {
    }
  }
  if (inputs.size() < 500) return skip("fewer than 500 usable stories");

  EvalOptions options;
  options.metrics = {Metric::overlap};
  options.methods = {Method::pagerank, Method::closeness, Method::betweenness, Method::degree};
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = evaluate(inputs, options).rows;

  std::ostringstream d;
  bool ok = true;
  for (const auto& row : rows) {
    const double r1 = row.mean.rouge1.recall;
    d << to_string(row.method) << " R1-R " << r1;
    ok = ok && std::abs(r1 - 0.50) <= 0.08;
    if (row.method == Method::pagerank) {
      d << " RL-R " << row.mean.rougeL.recall << " R1-F " << row.mean.rouge1.f1;
      ok = ok && std::abs(row.mean.rougeL.recall - 0.44) <= 0.08;
      ok = ok && std::abs(row.mean.rouge1.f1 - 0.26) <= 0.06;
    }
    d << "; ";
  }
  d << inputs.size() << " docs";
  return ok ? pass(d.str()) : fail(d.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ted matches exhaustive mapping oracle", ted_brute_force},
      {"ted on chains equals string edit distance", ted_chains},
      {"pagerank matches dense stationary solve", pagerank_dense},
      {"betweenness and closeness match brute force", path_centralities},
      {"maximal cliques match subset enumeration", cliques},
      {"rouge worked examples and lcs oracle", rouge_examples},
      {"graph construction threshold sweep", graph_sweep},
      {"summarize is byte-identical across runs", determinism},
      {"t=0 yields lead-N for every method", lead_n},
      {"cnn/dailymail recall within tolerance", dataset},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.kind == Outcome::Kind::pass ? "PASS" : o.kind == Outcome::Kind::fail ? "FAIL" : "SKIP";
    failures += o.kind == Outcome::Kind::fail;
    std::cout << tag << "  " << name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
