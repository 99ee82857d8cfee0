#include "ellrmt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace ellrmt::spectra {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

DensityTable make_table(const GridSpec& grid) {
  DensityTable t;
  t.edges.resize(grid.bins + 1);
  for (int b = 0; b <= grid.bins; ++b)
    t.edges[b] = grid.lo + (grid.hi - grid.lo) * b / grid.bins;
  t.heights.assign(grid.bins, 0.0);
  t.stderrs.assign(grid.bins, 0.0);
  return t;
}
}  // namespace

double DensityTable::integral() const {
  double s = 0.0;
  for (std::size_t b = 0; b < heights.size(); ++b)
    s += heights[b] * (edges[b + 1] - edges[b]);
  return s;
}

UnfoldedZeros unfold(const ensembles::EigenangleSample& sample) {
  UnfoldedZeros z;
  z.source = ensembles::kind_name(sample.spec.kind);
  z.excluded_critical = sample.forced_zero_mult;
  double m_total = sample.spec.matrix_dim;
  z.values.reserve(sample.angles.size());
  for (double t : sample.angles) z.values.push_back(t * m_total / kTwoPi);
  std::sort(z.values.begin(), z.values.end());
  if (sample.spec.kind == ensembles::Kind::Unitary) z.period = m_total;
  return z;
}

UnfoldedZeros unfold_lzeros(const std::vector<double>& gammas,
                            double refined_conductor) {
  if (!(refined_conductor > 0.0))
    throw std::invalid_argument("unfold_lzeros: refined conductor must be > 0");
  UnfoldedZeros z;
  z.source = "lfunction";
  for (double g : gammas) {
    if (g < 0.0) throw std::invalid_argument("unfold_lzeros: ordinates >= 0");
    if (g == 0.0) {
      ++z.excluded_critical;
      continue;
    }
    z.values.push_back(g * refined_conductor / kTwoPi);
  }
  std::sort(z.values.begin(), z.values.end());
  return z;
}

DensityTable one_level_density(const std::vector<UnfoldedZeros>& sets,
                               const GridSpec& grid) {
  if (sets.empty()) throw std::invalid_argument("one_level_density: no input");
  DensityTable t = make_table(grid);
  t.sample_count = static_cast<std::int64_t>(sets.size());
  std::vector<double> sum(grid.bins, 0.0), sumsq(grid.bins, 0.0);
  std::vector<int> counts(grid.bins);
  for (const auto& s : sets) {
    std::fill(counts.begin(), counts.end(), 0);
    for (double v : s.values) {
      int b = grid.bin_of(v);
      if (b >= 0) ++counts[b];
    }
    for (int b = 0; b < grid.bins; ++b) {
      sum[b] += counts[b];
      sumsq[b] += static_cast<double>(counts[b]) * counts[b];
    }
  }
  double n = static_cast<double>(sets.size());
  double w = grid.width();
  for (int b = 0; b < grid.bins; ++b) {
    double mean = sum[b] / n;
    t.heights[b] = mean / w;
    if (sets.size() > 1) {
      double var = (sumsq[b] - n * mean * mean) / (n - 1.0);
      t.stderrs[b] = std::sqrt(std::max(var, 0.0) / n) / w;
    }
  }
  return t;
}

DensityTable pair_correlation(const std::vector<UnfoldedZeros>& sets,
                              const GridSpec& grid) {
  if (sets.empty()) throw std::invalid_argument("pair_correlation: no input");
  DensityTable t = make_table(grid);
  t.sample_count = static_cast<std::int64_t>(sets.size());
  double norm = 0.0;  // sum over sets of points-per-set
  for (const auto& s : sets) {
    std::size_t m = s.values.size();
    norm += static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        double d = std::fabs(s.values[j] - s.values[i]);
        if (s.period > 0.0) d = std::min(d, s.period - d);
        int b = grid.bin_of(d);
        if (b >= 0) t.heights[b] += 1.0;
      }
  }
  if (norm == 0.0) throw std::invalid_argument("pair_correlation: empty sets");
  double w = grid.width();
  for (int b = 0; b < grid.bins; ++b) {
    double c = t.heights[b];
    t.heights[b] = c / (norm * w);
    t.stderrs[b] = std::sqrt(c) / (norm * w);
  }
  return t;
}

DensityTable nn_spacing(const std::vector<UnfoldedZeros>& sets,
                        const GridSpec& grid) {
  if (sets.empty()) throw std::invalid_argument("nn_spacing: no input");
  DensityTable t = make_table(grid);
  std::int64_t total = 0;
  for (const auto& s : sets) {
    if (s.values.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
      ++total;
      int b = grid.bin_of(s.values[i + 1] - s.values[i]);
      if (b >= 0) t.heights[b] += 1.0;
    }
  }
  t.sample_count = total;
  if (total == 0) return t;
  double w = grid.width();
  for (int b = 0; b < grid.bins; ++b) {
    double c = t.heights[b];
    t.heights[b] = c / (total * w);
    t.stderrs[b] = std::sqrt(c) / (total * w);
  }
  return t;
}

MomentEstimate moment_estimator(const std::vector<double>& values, int k) {
  if (values.empty()) throw std::invalid_argument("moment_estimator: empty input");
  if (k < 1) throw std::invalid_argument("moment_estimator: k >= 1");
  std::size_t n = values.size();
  std::vector<double> powed(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    powed[i] = std::pow(values[i], k);
    total += powed[i];
  }
  MomentEstimate est;
  est.mean = total / n;
  if (n == 1) return est;
  // jackknife over leave-one-out means
  double ssq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double loo = (total - powed[i]) / (n - 1.0);
    double d = loo - est.mean;  // mean of leave-one-out means equals the mean
    ssq += d * d;
  }
  est.stderr_ = std::sqrt((n - 1.0) / n * ssq);
  return est;
}

void write_csv(const DensityTable& table, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "bin_left,bin_right,height,stderr\n");
  for (std::size_t b = 0; b < table.heights.size(); ++b)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", table.edges[b],
                 table.edges[b + 1], table.heights[b], table.stderrs[b]);
  std::fclose(f);
}

}  // namespace ellrmt::spectra
