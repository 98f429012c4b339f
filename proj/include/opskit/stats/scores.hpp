#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "opskit/error.hpp"

namespace opskit::stats {

// m experts scoring k indicators on the four-level scale {0 absent, 1 low,
// 2 good, 3 very good}, with positive per-indicator weights (default 1).
class ScoreMatrix {
 public:
  ScoreMatrix(std::vector<std::string> names, const std::vector<std::vector<int>>& rows,
              std::vector<double> weights = {})
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.empty()) fail(Errc::EmptyMatrix, "score matrix needs at least one indicator");
    if (rows.empty()) fail(Errc::EmptyMatrix, "score matrix needs at least one expert");
    k_ = static_cast<int>(names_.size());
    m_ = static_cast<int>(rows.size());
    if (weights_.empty()) weights_.assign(k_, 1.0);
    if (static_cast<int>(weights_.size()) != k_)
      fail(Errc::InvalidArgument, "expected one weight per indicator");
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w)) fail(Errc::InvalidArgument, "weights must be > 0");
    cells_.reserve(static_cast<size_t>(m_) * k_);
    for (size_t j = 0; j < rows.size(); ++j) {
      if (static_cast<int>(rows[j].size()) != k_)
        fail(Errc::RaggedRows, "expert " + std::to_string(j + 1) + " has " +
                                   std::to_string(rows[j].size()) + " cells, expected " +
                                   std::to_string(k_));
      for (int score : rows[j]) {
        if (score < 0 || score > 3)
          fail(Errc::ScoreOutOfScale,
               "score " + std::to_string(score) + " outside the 0..3 scale");
        cells_.push_back(score);
      }
    }
  }

  int experts() const { return m_; }
  int indicators() const { return k_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& weights() const { return weights_; }

  // 0-based indices.
  int score(int expert, int indicator) const {
    return cells_[static_cast<size_t>(expert) * k_ + indicator];
  }

 private:
  int m_ = 0;
  int k_ = 0;
  std::vector<std::string> names_;
  std::vector<double> weights_;
  std::vector<int> cells_;
};

struct AggregateReport {
  std::vector<std::string> names;
  std::vector<double> indicator_means;
  std::vector<double> weights;
  double group_mean = 0.0;
};

// Weighted group mean over per-indicator means that were already computed
// elsewhere (published summaries typically report only the means).
inline AggregateReport aggregate_means(std::vector<std::string> names,
                                       std::vector<double> means,
                                       std::vector<double> weights = {}) {
  if (names.empty()) fail(Errc::EmptyMatrix, "need at least one indicator");
  if (means.size() != names.size())
    fail(Errc::InvalidArgument, "expected one mean per indicator");
  if (weights.empty()) weights.assign(names.size(), 1.0);
  if (weights.size() != names.size())
    fail(Errc::InvalidArgument, "expected one weight per indicator");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) fail(Errc::InvalidArgument, "weights must be > 0");
  for (double mean : means)
    if (!(mean >= 0.0 && mean <= 3.0))
      fail(Errc::ScoreOutOfScale, "indicator means must lie in [0, 3]");

  AggregateReport report;
  report.names = std::move(names);
  report.indicator_means = std::move(means);
  report.weights = std::move(weights);
  double weighted = 0.0, total = 0.0;
  for (size_t i = 0; i < report.indicator_means.size(); ++i) {
    weighted += report.weights[i] * report.indicator_means[i];
    total += report.weights[i];
  }
  report.group_mean = weighted / total;
  return report;
}

inline AggregateReport aggregate_scores(const ScoreMatrix& s) {
  std::vector<double> means(s.indicators(), 0.0);
  for (int i = 0; i < s.indicators(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < s.experts(); ++j) sum += s.score(j, i);
    means[i] = sum / s.experts();
  }
  return aggregate_means(s.names(), std::move(means), s.weights());
}

}  // namespace opskit::stats
