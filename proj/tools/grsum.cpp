// grsum: graph-based extractive summarization from the command line.
//
//   grsum summarize <story> [options]
//   grsum evaluate <corpus-dir> [options]
//   grsum stats <corpus-dir> [options]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grsum/grsum.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitError = 1;
constexpr int kExitIo = 2;

struct Options {
  std::string input;
  std::vector<std::string> metrics;
  std::vector<std::string> methods;
  double threshold = 0.5;
  std::size_t length = 5;
  std::string conllu_dir;
  std::string stopwords;
  std::string dump_graph;
  std::string output;
  std::string format = "table";
  std::size_t jobs = 1;
  bool weighted_paths = false;
  std::size_t clique_cap = grsum::kDefaultCliqueCap;
  bool gold = false;
  bool no_timing = false;
};

class UsageError : public grsum::Error {
 public:
  using grsum::Error::Error;
};

grsum::Metric metric_or_throw(const std::string& name) {
  if (auto m = grsum::parse_metric(name)) return *m;
  throw UsageError("unknown metric '" + name + "' (expected overlap or ted)");
}

grsum::Method method_or_throw(const std::string& name) {
  if (auto m = grsum::parse_method(name)) return *m;
  throw UsageError("unknown method '" + name +
                   "' (expected pagerank, hits, closeness, betweenness, degree or clusters)");
}

grsum::OutputFormat format_or_throw(const std::string& name) {
  if (auto f = grsum::parse_format(name)) return *f;
  throw UsageError("unknown format '" + name + "' (expected table, csv or json)");
}

grsum::RunConfig make_config(const Options& o) {
  grsum::RunConfig c;
  if (!o.metrics.empty()) c.metric = metric_or_throw(o.metrics.front());
  if (!o.methods.empty()) c.method = method_or_throw(o.methods.front());
  if (!(o.threshold >= 0.0 && o.threshold <= 1.0)) {
    throw grsum::InvalidThreshold("--threshold must lie in [0, 1]");
  }
  if (o.length == 0) throw UsageError("--length must be at least 1");
  c.threshold = o.threshold;
  c.length = o.length;
  c.weighted_paths = o.weighted_paths;
  c.clique_cap = o.clique_cap;
  return c;
}

grsum::Stopwords load_stopwords(const Options& o) {
  if (o.stopwords.empty()) return grsum::Stopwords::english();
  return grsum::Stopwords::from_file(o.stopwords);
}

// Sidecar lookup: <conllu-dir>/<stem>.conllu, or next to the story when no
// directory is given. A missing sidecar is not an error.
std::optional<std::vector<grsum::ConlluSentence>> find_sidecar(const fs::path& story,
                                                               const Options& o) {
  const auto dir = o.conllu_dir.empty() ? story.parent_path() : fs::path(o.conllu_dir);
  const auto path = grsum::sidecar_path(story, dir);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return std::nullopt;
  return grsum::load_conllu_sidecar(path);
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw grsum::IoError("cannot write " + path);
  out << text;
  if (!out) throw grsum::IoError("write failed: " + path);
}

void require_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw grsum::IoError("no such file: " + path.string());
}

void cmd_summarize(const Options& o) {
  const auto config = make_config(o);
  const fs::path story_path = o.input;
  require_file(story_path);
  const auto stopwords = load_stopwords(o);
  const auto record = grsum::load_story(story_path);
  const auto sidecar = find_sidecar(story_path, o);
  const auto doc = grsum::build_document(record, sidecar ? &*sidecar : nullptr, stopwords);
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << '\n';

  const auto summary = grsum::summarize(doc, config);
  if (!summary.rank.converged) {
    std::cerr << "warning: " << grsum::to_string(config.method)
              << " did not converge; using the last iterate\n";
  }
  if (!o.dump_graph.empty()) write_text(grsum::graph_dot_export(summary.graph), o.dump_graph);

  std::string text;
  for (const auto& s : summary.sentences) text += s + '\n';
  if (o.gold) {
    text += grsum::to_json(grsum::score_summary(summary.sentences, record.highlights)).dump();
    text += '\n';
  }
  write_text(text, o.output);
}

void cmd_evaluate(const Options& o) {
  const auto format = format_or_throw(o.format);
  grsum::EvalOptions eval;
  eval.base = make_config(o);
  eval.jobs = o.jobs;
  const bool all_methods =
      o.methods.empty() || (o.methods.size() == 1 && o.methods.front() == "all");
  const bool all_metrics =
      o.metrics.empty() || (o.metrics.size() == 1 && o.metrics.front() == "all");
  if (!all_methods) {
    eval.methods.clear();
    for (const auto& m : o.methods) eval.methods.push_back(method_or_throw(m));
  }
  if (!all_metrics) {
    eval.metrics.clear();
    for (const auto& m : o.metrics) eval.metrics.push_back(metric_or_throw(m));
  }

  const auto stopwords = load_stopwords(o);
  const auto paths = grsum::list_stories(o.input);
  if (paths.empty()) throw grsum::EmptyCorpus("no .story files in " + o.input);

  std::vector<grsum::EvalInput> inputs;
  std::size_t load_failures = 0;
  for (const auto& path : paths) {
    try {
      auto record = grsum::load_story(path);
      if (record.highlights.empty()) throw grsum::EmptyReference("story has no highlights");
      const auto sidecar = find_sidecar(path, o);
      auto doc = grsum::build_document(record, sidecar ? &*sidecar : nullptr, stopwords);
      for (const auto& w : doc.warnings) std::cerr << "warning: " << w << '\n';
      inputs.push_back({std::move(doc), std::move(record.highlights)});
    } catch (const grsum::Error& e) {
      ++load_failures;
      std::cerr << "skipping " << path.filename().string() << ": " << e.what() << '\n';
    }
  }
  if (inputs.empty()) throw grsum::EmptyCorpus("no usable stories in " + o.input);

  auto result = grsum::evaluate(inputs, eval);
  for (auto& row : result.rows) {
    row.excluded += load_failures;
    if (o.no_timing) row.seconds = 0.0;
    if (row.excluded > 0) {
      std::cerr << grsum::to_string(row.method) << '/' << grsum::to_string(row.metric) << ": "
                << row.excluded << " document(s) excluded\n";
    }
  }
  write_text(grsum::format_eval(result.rows, format), o.output);
}

void cmd_stats(const Options& o) {
  const auto format = format_or_throw(o.format);
  const auto paths = grsum::list_stories(o.input);
  std::vector<grsum::StoryRecord> records;
  for (const auto& path : paths) {
    try {
      records.push_back(grsum::load_story(path));
    } catch (const grsum::MalformedStory& e) {
      std::cerr << "skipping " << path.filename().string() << ": " << e.what() << '\n';
    }
  }
  const auto stats =
      grsum::corpus_stats(records, [](const std::string& text) { return grsum::segment(text); });
  write_text(grsum::format_stats(stats, format), o.output);
}

void add_pipeline_flags(CLI::App& cmd, Options& o, bool multi) {
  auto* metric = cmd.add_option("--metric", o.metrics, "Similarity metric: overlap or ted");
  auto* method = cmd.add_option(
      "--method", o.methods,
      "Ranking method: pagerank, hits, closeness, betweenness, degree or clusters");
  if (multi) {
    metric->delimiter(',')->description("Metrics to evaluate (comma-separated, or all)");
    method->delimiter(',')->description("Methods to evaluate (comma-separated, or all)");
  } else {
    metric->expected(1);
    method->expected(1);
  }
  cmd.add_option("--threshold", o.threshold, "Fraction of positive pairs kept as edges")
      ->capture_default_str();
  cmd.add_option("--length", o.length, "Sentences per summary")->capture_default_str();
  cmd.add_option("--conllu-dir", o.conllu_dir, "Directory of <stem>.conllu sidecar parses");
  cmd.add_option("--stopwords", o.stopwords, "Newline-delimited stopword list");
  cmd.add_flag("--weighted-paths", o.weighted_paths,
               "Closeness and betweenness over 1/weight edge lengths");
  cmd.add_option("--clique-cap", o.clique_cap, "Maximum number of maximal cliques")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-based extractive summarization"};
  app.require_subcommand(1);
  Options o;

  auto* summarize = app.add_subcommand("summarize", "Summarize one story file");
  summarize->add_option("story", o.input, "Story file")->required();
  add_pipeline_flags(*summarize, o, false);
  summarize->add_option("--dump-graph", o.dump_graph, "Write the sentence graph as DOT");
  summarize->add_option("--output", o.output, "Write to a file instead of stdout");
  summarize->add_flag("--gold", o.gold, "Append ROUGE scores against the story highlights");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate methods over a corpus");
  evaluate->add_option("corpus", o.input, "Directory of .story files")->required();
  add_pipeline_flags(*evaluate, o, true);
  evaluate->add_option("--format", o.format, "table, csv or json")->capture_default_str();
  evaluate->add_option("--output", o.output, "Write to a file instead of stdout");
  evaluate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  evaluate->add_flag("--no-timing", o.no_timing, "Report 0 seconds for byte-stable output");

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("corpus", o.input, "Directory of .story files")->required();
  stats->add_option("--format", o.format, "table, csv or json")->capture_default_str();
  stats->add_option("--output", o.output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitIo;
  }

  try {
    if (summarize->parsed()) cmd_summarize(o);
    if (evaluate->parsed()) cmd_evaluate(o);
    if (stats->parsed()) cmd_stats(o);
  } catch (const grsum::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const grsum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
