#pragma once

// Text, CSV and JSON renderings of evaluation rows, corpus statistics and
// ROUGE reports.

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grsum/corpus_io.hpp"
#include "grsum/pipeline.hpp"
#include "grsum/rouge.hpp"
#include "grsum/sentence_graph.hpp"

namespace grsum {

enum class OutputFormat { table, csv, json };

inline std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

inline constexpr std::string_view kEvalCsvHeader =
    "method,metric,threshold,rouge1_r,rouge2_r,rougeL_r,rouge1_f,rouge2_f,rougeL_f,docs,seconds";

namespace detail {

inline std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline nlohmann::ordered_json to_json(const RougeScore& s) {
  return {{"recall", s.recall}, {"precision", s.precision}, {"f1", s.f1}};
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const RougeReport& r) {
  return {{"rouge1", detail::to_json(r.rouge1)},
          {"rouge2", detail::to_json(r.rouge2)},
          {"rougeL", detail::to_json(r.rougeL)}};
}

inline std::string format_eval(const std::vector<EvalRow>& rows, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::csv: {
      out += kEvalCsvHeader;
      out += '\n';
      for (const auto& r : rows) {
        out += std::string(to_string(r.method)) + ',' + std::string(to_string(r.metric)) + ',' +
               detail::format_real(r.threshold) + ',' + detail::fixed3(r.mean.rouge1.recall) + ',' +
               detail::fixed3(r.mean.rouge2.recall) + ',' + detail::fixed3(r.mean.rougeL.recall) +
               ',' + detail::fixed3(r.mean.rouge1.f1) + ',' + detail::fixed3(r.mean.rouge2.f1) +
               ',' + detail::fixed3(r.mean.rougeL.f1) + ',' + std::to_string(r.docs) + ',' +
               detail::fixed3(r.seconds) + '\n';
      }
      return out;
    }
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"method", to_string(r.method)},
                       {"metric", to_string(r.metric)},
                       {"threshold", r.threshold},
                       {"rouge1_r", r.mean.rouge1.recall},
                       {"rouge2_r", r.mean.rouge2.recall},
                       {"rougeL_r", r.mean.rougeL.recall},
                       {"rouge1_f", r.mean.rouge1.f1},
                       {"rouge2_f", r.mean.rouge2.f1},
                       {"rougeL_f", r.mean.rougeL.f1},
                       {"docs", r.docs},
                       {"excluded", r.excluded},
                       {"seconds", r.seconds}});
      }
      return arr.dump(2) + '\n';
    }
    case OutputFormat::table: {
      const std::vector<std::string> head = {"Method", "Metric", "t", "R1-R", "R2-R", "RL-R",
                                             "R1-F", "R2-F", "RL-F", "Docs", "Excl", "Seconds"};
      const std::vector<std::size_t> width = {12, 8, 5, 6, 6, 6, 6, 6, 6, 6, 5, 8};
      auto end_line = [&out] {
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
      };
      for (std::size_t k = 0; k < head.size(); ++k) out += detail::pad(head[k], width[k] + 1);
      end_line();
      for (const auto& r : rows) {
        const std::vector<std::string> cells = {
            std::string(to_string(r.method)), std::string(to_string(r.metric)),
            detail::format_real(r.threshold), detail::fixed3(r.mean.rouge1.recall),
            detail::fixed3(r.mean.rouge2.recall), detail::fixed3(r.mean.rougeL.recall),
            detail::fixed3(r.mean.rouge1.f1), detail::fixed3(r.mean.rouge2.f1),
            detail::fixed3(r.mean.rougeL.f1), std::to_string(r.docs), std::to_string(r.excluded),
            detail::fixed3(r.seconds)};
        for (std::size_t k = 0; k < cells.size(); ++k) out += detail::pad(cells[k], width[k] + 1);
        end_line();
      }
      return out;
    }
  }
  return out;
}

inline std::string format_stats(const CorpusStats& s, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "doc_count,avg_doc_len_sentences,avg_summary_len_sentences,avg_compression\n" +
             std::to_string(s.doc_count) + ',' + detail::fixed3(s.avg_doc_len_sentences) + ',' +
             detail::fixed3(s.avg_summary_len_sentences) + ',' +
             detail::fixed3(s.avg_compression) + '\n';
    case OutputFormat::json: {
      nlohmann::ordered_json j = {{"doc_count", s.doc_count},
                                  {"avg_doc_len_sentences", s.avg_doc_len_sentences},
                                  {"avg_summary_len_sentences", s.avg_summary_len_sentences},
                                  {"avg_compression", s.avg_compression}};
      return j.dump(2) + '\n';
    }
    case OutputFormat::table:
      return "Number of documents                   " + std::to_string(s.doc_count) + '\n' +
             "Average document length (sentences)   " + detail::fixed3(s.avg_doc_len_sentences) +
             '\n' + "Average summary length (sentences)    " +
             detail::fixed3(s.avg_summary_len_sentences) + '\n' +
             "Average document-summary compression  " + detail::fixed3(s.avg_compression) + '\n';
  }
  return {};
}

}  // namespace grsum
