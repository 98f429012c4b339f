#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opskit/io/text.hpp"
#include "opskit/stats/concordance.hpp"
#include "opskit/stats/scores.hpp"

namespace opskit::io {

namespace detail {

inline int integer_cell(std::string_view cell, int line) {
  const auto value = parse_integer(cell);
  if (!value) parse_fail(Errc::NonIntegerCell, line, "cell `" + std::string(cell) + "` is not an integer");
  return static_cast<int>(*value);
}

inline double double_cell(std::string_view cell, int line) {
  const auto value = parse_double(cell);
  if (!value || !std::isfinite(*value))
    parse_fail(Errc::ParseError, line, "cell `" + std::string(cell) + "` is not a decimal number");
  return *value;
}

}  // namespace detail

// Rank CSV: header row of object ids 1..n, then one row of integer ranks per
// expert. Rows that are not permutations parse fine; kendall_w flags them.
inline stats::RankMatrix parse_rank_csv(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::EmptyMatrix, "empty rank CSV");

  const auto header = split_commas(lines.front().text);
  const int n = static_cast<int>(header.size());
  for (int i = 0; i < n; ++i)
    if (detail::integer_cell(header[i], lines.front().number) != i + 1)
      parse_fail(Errc::ParseError, lines.front().number, "header must list object ids 1.." + std::to_string(n));

  std::vector<std::vector<int>> rows;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto cells = split_commas(lines[li].text);
    if (static_cast<int>(cells.size()) != n)
      parse_fail(Errc::RaggedRows, lines[li].number,
                 "expected " + std::to_string(n) + " cells, found " + std::to_string(cells.size()));
    std::vector<int> row;
    row.reserve(n);
    for (const auto cell : cells) row.push_back(detail::integer_cell(cell, lines[li].number));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::EmptyMatrix, "rank CSV has a header but no expert rows");
  return stats::RankMatrix(rows);
}

inline std::string serialize_rank_csv(const stats::RankMatrix& r) {
  std::string out;
  for (int i = 1; i <= r.objects(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(i);
  }
  out += '\n';
  for (int j = 0; j < r.experts(); ++j) {
    for (int i = 0; i < r.objects(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(r.rank(j, i));
    }
    out += '\n';
  }
  return out;
}

// Score CSV: header row of indicator names, an optional `weights,...` row,
// then one row of 0..3 integer scores per expert.
inline stats::ScoreMatrix parse_score_csv(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::EmptyMatrix, "empty score CSV");

  const auto header = split_commas(lines.front().text);
  const int k = static_cast<int>(header.size());
  std::vector<std::string> names(header.begin(), header.end());

  std::vector<double> weights;
  size_t first_data = 1;
  if (lines.size() > 1) {
    const auto cells = split_commas(lines[1].text);
    if (!cells.empty() && cells.front() == "weights") {
      if (static_cast<int>(cells.size()) != k + 1)
        parse_fail(Errc::RaggedRows, lines[1].number,
                   "weights row needs " + std::to_string(k) + " values");
      for (size_t i = 1; i < cells.size(); ++i)
        weights.push_back(detail::double_cell(cells[i], lines[1].number));
      first_data = 2;
    }
  }

  std::vector<std::vector<int>> rows;
  for (size_t li = first_data; li < lines.size(); ++li) {
    const auto cells = split_commas(lines[li].text);
    if (static_cast<int>(cells.size()) != k)
      parse_fail(Errc::RaggedRows, lines[li].number,
                 "expected " + std::to_string(k) + " cells, found " + std::to_string(cells.size()));
    std::vector<int> row;
    row.reserve(k);
    for (const auto cell : cells) row.push_back(detail::integer_cell(cell, lines[li].number));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::EmptyMatrix, "score CSV has a header but no expert rows");
  return stats::ScoreMatrix(std::move(names), rows, std::move(weights));
}

inline bool all_unit_weights(const std::vector<double>& weights) {
  for (double w : weights)
    if (w != 1.0) return false;
  return true;
}

inline std::string serialize_score_csv(const stats::ScoreMatrix& s) {
  std::string out;
  for (int i = 0; i < s.indicators(); ++i) {
    if (i > 0) out += ',';
    out += s.names()[i];
  }
  out += '\n';
  if (!all_unit_weights(s.weights())) {
    out += "weights";
    for (double w : s.weights()) out += ',' + format_number(w);
    out += '\n';
  }
  for (int j = 0; j < s.experts(); ++j) {
    for (int i = 0; i < s.indicators(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s.score(j, i));
    }
    out += '\n';
  }
  return out;
}

// Published summaries often carry only per-indicator means. A means CSV is a
// header row of indicator names, an optional `weights,...` row, and exactly
// one row of decimal means in [0, 3].
struct MeansCsv {
  std::vector<std::string> names;
  std::vector<double> means;
  std::vector<double> weights;  // empty means all 1

  friend bool operator==(const MeansCsv&, const MeansCsv&) = default;
};

inline MeansCsv parse_means_csv(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) fail(Errc::EmptyMatrix, "empty means CSV");

  const auto header = split_commas(lines.front().text);
  const int k = static_cast<int>(header.size());
  MeansCsv result;
  result.names.assign(header.begin(), header.end());

  size_t data_row = 1;
  if (lines.size() > 1) {
    const auto cells = split_commas(lines[1].text);
    if (!cells.empty() && cells.front() == "weights") {
      if (static_cast<int>(cells.size()) != k + 1)
        parse_fail(Errc::RaggedRows, lines[1].number,
                   "weights row needs " + std::to_string(k) + " values");
      for (size_t i = 1; i < cells.size(); ++i)
        result.weights.push_back(detail::double_cell(cells[i], lines[1].number));
      data_row = 2;
    }
  }
  if (lines.size() != data_row + 1)
    fail(Errc::ParseError, "means CSV must contain exactly one data row");
  const auto cells = split_commas(lines[data_row].text);
  if (static_cast<int>(cells.size()) != k)
    parse_fail(Errc::RaggedRows, lines[data_row].number,
               "expected " + std::to_string(k) + " cells, found " + std::to_string(cells.size()));
  for (const auto cell : cells) {
    const double value = detail::double_cell(cell, lines[data_row].number);
    if (!(value >= 0.0 && value <= 3.0))
      parse_fail(Errc::ScoreOutOfScale, lines[data_row].number, "means must lie in [0, 3]");
    result.means.push_back(value);
  }
  return result;
}

inline std::string serialize_means_csv(const MeansCsv& m) {
  std::string out;
  for (size_t i = 0; i < m.names.size(); ++i) {
    if (i > 0) out += ',';
    out += m.names[i];
  }
  out += '\n';
  if (!m.weights.empty() && !all_unit_weights(m.weights)) {
    out += "weights";
    for (double w : m.weights) out += ',' + format_number(w);
    out += '\n';
  }
  for (size_t i = 0; i < m.means.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(m.means[i]);
  }
  out += '\n';
  return out;
}

}  // namespace opskit::io
