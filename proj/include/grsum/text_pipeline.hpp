#pragma once

// Sentence segmentation, token normalization and document assembly.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/corpus_io.hpp"
#include "grsum/dep_tree.hpp"
#include "grsum/detail/strings.hpp"
#include "grsum/porter_stemmer.hpp"
#include "grsum/stopwords.hpp"

namespace grsum {

struct Sentence {
  std::size_t index = 0;
  std::string raw;
  std::vector<std::string> tokens;          // lowercased word forms, in order
  std::vector<std::string> content_lemmas;  // sorted, unique
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<DepTree> trees;  // one per sentence
  bool trees_from_parse = false;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return sentences.size(); }
};

namespace detail {

// Lowercase words that end in a period without ending a sentence.
inline bool is_abbreviation(std::string_view word) {
  static constexpr std::array<std::string_view, 38> kAbbrev = {
      "mr",   "mrs",  "ms",  "dr",  "prof", "sr",   "jr",  "st",  "mt",   "vs",
      "inc",  "ltd",  "co",  "corp", "gen", "col",  "lt",  "sgt", "capt", "cmdr",
      "rep",  "sen",  "gov", "pres", "rev", "messrs", "jan", "feb", "mar",  "apr",
      "jun",  "jul",  "aug", "sep",  "sept", "oct", "nov", "dec"};
  if (word.find('.') != std::string_view::npos) return true;  // U.S., e.g., a.m.
  const auto lower = ascii_lower(word);
  return std::find(kAbbrev.begin(), kAbbrev.end(), lower) != kAbbrev.end();
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Closing quotes and brackets that may trail sentence-final punctuation.
inline std::size_t closer_length(std::string_view text, std::size_t i) {
  const char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+2019 and U+201D
  if (text.substr(i, 3) == "\xE2\x80\x99" || text.substr(i, 3) == "\xE2\x80\x9D") return 3;
  return 0;
}

inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace detail

// Splits on '.', '?' and '!' followed by whitespace (or end of text), and on
// blank lines. A period after a known abbreviation does not split. Internal
// whitespace of each sentence is collapsed to single spaces.
inline std::vector<std::string> segment(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    auto s = detail::collapse_whitespace(text.substr(begin, end - begin));
    if (!s.empty()) out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      // Blank line: newline, optional horizontal whitespace, newline.
      auto j = i + 1;
      while (j < text.size() && detail::is_space(text[j]) && text[j] != '\n') ++j;
      if (j < text.size() && text[j] == '\n') {
        emit(start, i);
        start = j + 1;
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }

    auto end = i + 1;
    while (end < text.size() && (text[end] == '.' || text[end] == '?' || text[end] == '!')) ++end;
    while (end < text.size()) {
      const auto len = detail::closer_length(text, end);
      if (len == 0) break;
      end += len;
    }
    if (end < text.size() && !detail::is_space(text[end])) {
      i = end;
      continue;
    }
    if (c == '.' && end == i + 1) {
      auto w = i;
      while (w > start && !detail::is_space(text[w - 1])) --w;
      auto word = text.substr(w, i - w);
      while (!word.empty() && (word.front() == '(' || word.front() == '"')) word.remove_prefix(1);
      if (!word.empty() && detail::is_abbreviation(word)) {
        i = end;
        continue;
      }
    }
    emit(start, end);
    start = end;
    i = end;
  }
  emit(start, text.size());
  return out;
}

struct NormalizedSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> content_lemmas;
};

namespace detail {

inline void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// Stemmer path: lowercase word tokens, stopwords dropped, Porter stems.
inline NormalizedSentence normalize(std::string_view sentence,
                                    const Stopwords& stopwords = Stopwords::english()) {
  NormalizedSentence out;
  out.tokens = detail::word_tokens(sentence);
  for (const auto& tok : out.tokens) {
    if (stopwords.contains(tok)) continue;
    out.content_lemmas.push_back(porter_stem(tok));
  }
  detail::sort_unique(out.content_lemmas);
  return out;
}

// Parse path: lemmas come from the CoNLL-U table. Tokens without any word
// character (punctuation) are dropped, as are tokens whose form or lemma is a
// stopword.
inline NormalizedSentence normalize(const ConlluSentence& parsed,
                                    const Stopwords& stopwords = Stopwords::english()) {
  NormalizedSentence out;
  for (const auto& tok : parsed) {
    const auto form = detail::ascii_lower(tok.form);
    if (std::none_of(form.begin(), form.end(), detail::is_word_byte)) continue;
    out.tokens.push_back(form);
    const bool no_lemma = tok.lemma.empty() || tok.lemma == "_";
    auto lemma = no_lemma ? porter_stem(form) : detail::ascii_lower(tok.lemma);
    if (stopwords.contains(form) || stopwords.contains(lemma)) continue;
    out.content_lemmas.push_back(std::move(lemma));
  }
  detail::sort_unique(out.content_lemmas);
  return out;
}

// Segments and normalizes the article. Sentences without any word token are
// dropped. A sidecar whose sentence count matches supplies the lemmas and
// trees; otherwise it is discarded with a warning and chain trees are built
// from the stemmed tokens.
inline Document build_document(const StoryRecord& record,
                               const std::vector<ConlluSentence>* sidecar = nullptr,
                               const Stopwords& stopwords = Stopwords::english()) {
  Document doc;
  doc.id = record.id;
  for (auto& raw : segment(record.article_text)) {
    auto norm = normalize(raw, stopwords);
    if (norm.tokens.empty()) continue;
    Sentence s;
    s.index = doc.sentences.size();
    s.raw = std::move(raw);
    s.tokens = std::move(norm.tokens);
    s.content_lemmas = std::move(norm.content_lemmas);
    doc.sentences.push_back(std::move(s));
  }

  if (sidecar != nullptr) {
    if (sidecar->size() != doc.sentences.size()) {
      doc.warnings.push_back("sidecar for '" + doc.id + "' has " +
                             std::to_string(sidecar->size()) + " sentences, document has " +
                             std::to_string(doc.sentences.size()) + "; using chain trees");
    } else {
      try {
        std::vector<DepTree> trees;
        trees.reserve(sidecar->size());
        for (const auto& parsed : *sidecar) trees.push_back(tree_from_conllu(parsed));
        for (std::size_t k = 0; k < doc.sentences.size(); ++k) {
          auto norm = normalize((*sidecar)[k], stopwords);
          doc.sentences[k].tokens = std::move(norm.tokens);
          doc.sentences[k].content_lemmas = std::move(norm.content_lemmas);
        }
        doc.trees = std::move(trees);
        doc.trees_from_parse = true;
      } catch (const Error& e) {
        doc.warnings.push_back("sidecar for '" + doc.id + "' rejected (" + e.what() +
                               "); using chain trees");
      }
    }
  }

  if (!doc.trees_from_parse) {
    doc.trees.reserve(doc.sentences.size());
    for (const auto& s : doc.sentences) {
      std::vector<std::string> labels;
      labels.reserve(s.tokens.size());
      for (const auto& t : s.tokens) labels.push_back(porter_stem(t));
      doc.trees.push_back(fallback_tree(labels));
    }
  }
  return doc;
}

}  // namespace grsum
