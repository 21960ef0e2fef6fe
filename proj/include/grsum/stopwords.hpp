#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/corpus_io.hpp"
#include "grsum/detail/strings.hpp"
#include "grsum/error.hpp"

namespace grsum {

class Stopwords {
 public:
  Stopwords() = default;

  template <class Range>
  explicit Stopwords(const Range& words) {
    for (const auto& w : words) {
      auto t = detail::trim(w);
      if (!t.empty()) words_.insert(detail::ascii_lower(t));
    }
  }

  Stopwords(std::initializer_list<std::string_view> words)
      : Stopwords(std::vector<std::string_view>(words)) {}

  // Standard English list (the NLTK corpus list).
  static const Stopwords& english() {
    static const Stopwords list{
        "i",        "me",       "my",         "myself",    "we",         "our",
        "ours",     "ourselves", "you",       "you're",    "you've",     "you'll",
        "you'd",    "your",     "yours",      "yourself",  "yourselves", "he",
        "him",      "his",      "himself",    "she",       "she's",      "her",
        "hers",     "herself",  "it",         "it's",      "its",        "itself",
        "they",     "them",     "their",      "theirs",    "themselves", "what",
        "which",    "who",      "whom",       "this",      "that",       "that'll",
        "these",    "those",    "am",         "is",        "are",        "was",
        "were",     "be",       "been",       "being",     "have",       "has",
        "had",      "having",   "do",         "does",      "did",        "doing",
        "a",        "an",       "the",        "and",       "but",        "if",
        "or",       "because",  "as",         "until",     "while",      "of",
        "at",       "by",       "for",        "with",      "about",      "against",
        "between",  "into",     "through",    "during",    "before",     "after",
        "above",    "below",    "to",         "from",      "up",         "down",
        "in",       "out",      "on",         "off",       "over",       "under",
        "again",    "further",  "then",       "once",      "here",       "there",
        "when",     "where",    "why",        "how",       "all",        "any",
        "both",     "each",     "few",        "more",      "most",       "other",
        "some",     "such",     "no",         "nor",       "not",        "only",
        "own",      "same",     "so",         "than",      "too",        "very",
        "s",        "t",        "can",        "will",      "just",       "don",
        "don't",    "should",   "should've",  "now",       "d",          "ll",
        "m",        "o",        "re",         "ve",        "y",          "ain",
        "aren",     "aren't",   "couldn",     "couldn't",  "didn",       "didn't",
        "doesn",    "doesn't",  "hadn",       "hadn't",    "hasn",       "hasn't",
        "haven",    "haven't",  "isn",        "isn't",     "ma",         "mightn",
        "mightn't", "mustn",    "mustn't",    "needn",     "needn't",    "shan",
        "shan't",   "shouldn",  "shouldn't",  "wasn",      "wasn't",     "weren",
        "weren't",  "won",      "won't",      "wouldn",    "wouldn't"};
    return list;
  }

  // Newline-delimited word list; blank lines are ignored.
  static Stopwords from_file(const std::filesystem::path& path) {
    const auto text = detail::read_file(path);
    return Stopwords(detail::split_lines(text));
  }

  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace grsum
