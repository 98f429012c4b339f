#pragma once

#include <string>
#include <vector>

#include "opskit/error.hpp"
#include "opskit/stats/special.hpp"

namespace opskit::stats {

struct TieWarning {
  int expert = 0;               // 1-based row number
  std::vector<int> duplicated;  // rank values appearing more than once, ascending
  std::vector<int> missing;     // rank values absent from the row, ascending

  friend bool operator==(const TieWarning&, const TieWarning&) = default;
};

// m experts ranking n objects; cell (expert, object) holds the rank the
// expert assigned. Every entry must lie in 1..n. Rows are expected to be
// permutations of 1..n but repeats are accepted (and flagged downstream),
// since real survey data contains them.
class RankMatrix {
 public:
  explicit RankMatrix(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
      fail(Errc::EmptyMatrix, "rank matrix needs at least one expert and one object");
    m_ = static_cast<int>(rows.size());
    n_ = static_cast<int>(rows.front().size());
    cells_.reserve(static_cast<size_t>(m_) * n_);
    for (size_t j = 0; j < rows.size(); ++j) {
      if (static_cast<int>(rows[j].size()) != n_)
        fail(Errc::RaggedRows, "expert " + std::to_string(j + 1) + " has " +
                                   std::to_string(rows[j].size()) + " cells, expected " +
                                   std::to_string(n_));
      for (int value : rows[j]) {
        if (value < 1 || value > n_)
          fail(Errc::OutOfRangeRank, "rank " + std::to_string(value) + " outside 1.." +
                                         std::to_string(n_) + " (expert " + std::to_string(j + 1) +
                                         ")");
        cells_.push_back(value);
      }
    }
  }

  int experts() const { return m_; }
  int objects() const { return n_; }

  // 0-based indices.
  int rank(int expert, int object) const {
    return cells_[static_cast<size_t>(expert) * n_ + object];
  }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> cells_;
};

// One warning per row that is not a permutation of 1..n.
inline std::vector<TieWarning> validate_rank_matrix(const RankMatrix& r) {
  std::vector<TieWarning> warnings;
  for (int j = 0; j < r.experts(); ++j) {
    std::vector<int> count(r.objects() + 1, 0);
    for (int i = 0; i < r.objects(); ++i) ++count[r.rank(j, i)];
    TieWarning w;
    w.expert = j + 1;
    for (int value = 1; value <= r.objects(); ++value) {
      if (count[value] > 1) w.duplicated.push_back(value);
      if (count[value] == 0) w.missing.push_back(value);
    }
    if (!w.duplicated.empty() || !w.missing.empty()) warnings.push_back(std::move(w));
  }
  return warnings;
}

struct ConcordanceResult {
  std::vector<double> rank_sums;  // per-object totals R_i
  double s = 0.0;                 // sum of squared deviations of R_i from their mean
  double w = 0.0;                 // concordance coefficient, in [0, 1]
  double chi_square = 0.0;
  int df = 0;
  double alpha = 0.0;
  double critical = 0.0;
  bool significant = false;
  std::vector<TieWarning> tie_warnings;
};

// Kendall's coefficient of concordance with the chi-square significance test:
//   W = 12 S / (m^2 (n^3 - n)),   chi^2 = 12 S / (m n (n+1)) = m (n-1) W,
// where S sums squared deviations of the object rank sums from their
// empirical mean. No tie correction is applied; imperfect rows only surface
// as warnings.
inline ConcordanceResult kendall_w(const RankMatrix& r, double alpha = 0.01) {
  const int m = r.experts();
  const int n = r.objects();
  if (m < 2 || n < 2)
    fail(Errc::DegenerateMatrix, "concordance needs at least 2 experts and 2 objects");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::InvalidAlpha, "alpha must lie in (0, 1)");

  ConcordanceResult result;
  result.alpha = alpha;
  result.rank_sums.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) result.rank_sums[i] += r.rank(j, i);

  double total = 0.0;
  for (double sum : result.rank_sums) total += sum;
  const double mean = total / n;
  for (double sum : result.rank_sums) result.s += (sum - mean) * (sum - mean);

  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  result.w = 12.0 * result.s / (mm * mm * (nn * nn * nn - nn));
  result.chi_square = 12.0 * result.s / (mm * nn * (nn + 1.0));
  result.df = n - 1;
  result.critical = chi_square_critical(result.df, alpha);
  result.significant = result.chi_square > result.critical;
  result.tie_warnings = validate_rank_matrix(r);
  return result;
}

}  // namespace opskit::stats
