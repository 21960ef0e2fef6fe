#pragma once

// Readers for CNN/DailyMail story files and CoNLL-U sidecar parses, plus
// corpus-level statistics.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/detail/strings.hpp"
#include "grsum/error.hpp"

namespace grsum {

struct StoryRecord {
  std::string id;
  std::string article_text;
  std::vector<std::string> highlights;

  bool operator==(const StoryRecord&) const = default;
};

// One token line of a CoNLL-U sentence. Only the columns the pipeline consumes
// are kept.
struct ConlluToken {
  std::size_t index = 0;  // 1-based word index
  std::string form;
  std::string lemma;
  std::size_t head = 0;  // 0 = root
  std::string deprel;

  bool operator==(const ConlluToken&) const = default;
};

using ConlluSentence = std::vector<ConlluToken>;

struct CorpusStats {
  std::size_t doc_count = 0;
  double avg_doc_len_sentences = 0.0;
  double avg_summary_len_sentences = 0.0;
  double avg_compression = 0.0;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return std::move(buf).str();
}

inline std::string join_block(const std::vector<std::string_view>& lines) {
  std::string out;
  for (auto line : lines) {
    if (!out.empty()) out += '\n';
    out += line;
  }
  return std::string(trim(out));
}

}  // namespace detail

// Parses story text: the body is everything before the first line that reads
// exactly "@highlight"; each highlight is the trimmed block after such a line.
inline StoryRecord parse_story(std::string_view text, std::string id = {}) {
  StoryRecord record;
  record.id = std::move(id);

  std::vector<std::string_view> block;
  bool in_highlight = false;
  auto flush = [&] {
    auto joined = detail::join_block(block);
    block.clear();
    if (!in_highlight) {
      record.article_text = std::move(joined);
    } else if (!joined.empty()) {
      record.highlights.push_back(std::move(joined));
    }
  };

  for (auto line : detail::split_lines(text)) {
    if (detail::trim(line) == "@highlight") {
      flush();
      in_highlight = true;
      continue;
    }
    block.push_back(line);
  }
  flush();

  if (record.article_text.empty()) {
    throw MalformedStory("story has no body text" +
                         (record.id.empty() ? std::string{} : ": " + record.id));
  }
  return record;
}

inline StoryRecord load_story(const std::filesystem::path& path) {
  return parse_story(detail::read_file(path), path.stem().string());
}

inline std::string format_story(const StoryRecord& record) {
  std::string out = record.article_text;
  for (const auto& h : record.highlights) {
    out += "\n\n@highlight\n\n";
    out += h;
  }
  out += '\n';
  return out;
}

inline void write_story(const std::filesystem::path& path, const StoryRecord& record) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_story(record);
  if (!out) throw IoError("write failed: " + path.string());
}

namespace detail {

inline bool parse_index(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

inline void check_heads(const ConlluSentence& sentence, std::size_t first_line) {
  for (const auto& tok : sentence) {
    if (tok.head > sentence.size()) {
      throw HeadOutOfRange("sentence starting at line " + std::to_string(first_line) +
                           ": token " + std::to_string(tok.index) + " has head " +
                           std::to_string(tok.head) + " but the sentence has " +
                           std::to_string(sentence.size()) + " tokens");
    }
  }
}

}  // namespace detail

// Parses CoNLL-U text into per-sentence token tables. Multiword-token ranges
// ("3-4") and empty nodes ("5.1") are skipped.
inline std::vector<ConlluSentence> parse_conllu(std::string_view text) {
  std::vector<ConlluSentence> sentences;
  ConlluSentence current;
  std::size_t current_start = 0;

  auto finish = [&] {
    if (current.empty()) return;
    detail::check_heads(current, current_start);
    sentences.push_back(std::move(current));
    current.clear();
  };

  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    if (detail::trim(line).empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') continue;

    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 10) {
      throw ConlluParseError(line_no, "expected 10 tab-separated columns, found " +
                                          std::to_string(cols.size()));
    }
    const auto id = cols[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      continue;
    }

    ConlluToken tok;
    if (!detail::parse_index(id, tok.index) || tok.index == 0) {
      throw ConlluParseError(line_no, "invalid token id '" + std::string(id) + "'");
    }
    if (tok.index != current.size() + 1) {
      throw ConlluParseError(line_no, "token id " + std::to_string(tok.index) +
                                          " out of sequence, expected " +
                                          std::to_string(current.size() + 1));
    }
    if (!detail::parse_index(cols[6], tok.head)) {
      throw ConlluParseError(line_no, "invalid head '" + std::string(cols[6]) + "'");
    }
    tok.form = std::string(cols[1]);
    tok.lemma = std::string(cols[2]);
    tok.deprel = std::string(cols[7]);
    if (current.empty()) current_start = line_no;
    current.push_back(std::move(tok));
  }
  finish();
  return sentences;
}

inline std::vector<ConlluSentence> load_conllu_sidecar(const std::filesystem::path& path) {
  return parse_conllu(detail::read_file(path));
}

inline std::string format_conllu(const std::vector<ConlluSentence>& sentences) {
  std::string out;
  for (const auto& sentence : sentences) {
    for (const auto& t : sentence) {
      out += std::to_string(t.index) + '\t' + t.form + '\t' + t.lemma + "\t_\t_\t_\t" +
             std::to_string(t.head) + '\t' + (t.deprel.empty() ? "_" : t.deprel) +
             "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

// Sidecar for `story` under `conllu_dir` (X.story <-> X.conllu).
inline std::filesystem::path sidecar_path(const std::filesystem::path& story,
                                          const std::filesystem::path& conllu_dir) {
  return conllu_dir / (story.stem().string() + ".conllu");
}

// All *.story files in `dir`, sorted by file name.
inline std::vector<std::filesystem::path> list_stories(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".story") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

// Segmenter: any callable mapping article text to a sized range of sentences.
template <class Segmenter>
CorpusStats corpus_stats(const std::vector<StoryRecord>& records, Segmenter&& segmenter) {
  if (records.empty()) throw EmptyCorpus("corpus has no records");

  // Integer totals keep the result independent of record order.
  std::size_t doc_sentences = 0;
  std::size_t summary_sentences = 0;
  for (const auto& r : records) {
    doc_sentences += std::size(segmenter(r.article_text));
    summary_sentences += r.highlights.size();
  }

  CorpusStats stats;
  stats.doc_count = records.size();
  const auto count = static_cast<double>(records.size());
  stats.avg_doc_len_sentences = static_cast<double>(doc_sentences) / count;
  stats.avg_summary_len_sentences = static_cast<double>(summary_sentences) / count;
  if (stats.avg_doc_len_sentences > 0.0 && stats.avg_summary_len_sentences > 0.0) {
    stats.avg_compression =
        1.0 - stats.avg_summary_len_sentences / stats.avg_doc_len_sentences;
  }
  return stats;
}

}  // namespace grsum
