// spectra.hpp — unfolding and empirical statistics: one-level density,
// pair correlation, nearest-neighbor spacing, moment estimators.

#pragma once

#include <string>
#include <vector>

#include "ellrmt/ensembles.hpp"

namespace ellrmt::spectra {

struct UnfoldedZeros {
  std::vector<double> values;   // sorted, nonnegative, unit mean spacing
  std::string source;           // ensemble or L-function tag
  int excluded_critical = 0;    // omitted forced zeros at the critical point
  double period = 0.0;          // circumference in unfolded units; 0 = line
};

struct GridSpec {
  double lo = 0.0;
  double hi = 5.0;
  int bins = 50;

  double width() const { return (hi - lo) / bins; }
  // bin index or -1 when outside the grid
  int bin_of(double x) const {
    if (x < lo || x >= hi) return -1;
    int b = static_cast<int>((x - lo) / width());
    return b >= bins ? bins - 1 : b;
  }
};

struct DensityTable {
  std::vector<double> edges;    // bins+1 ascending edges
  std::vector<double> heights;
  std::vector<double> stderrs;
  std::int64_t sample_count = 0;  // number of zero sets (or spacing count)

  double width() const { return edges[1] - edges[0]; }
  // sum of height x width (the integration identity checked in tests)
  double integral() const;
};

// Mapping free angles to unfolded positions: theta * M_total / (2 pi);
// forced zeros at 0 are excluded and counted.
UnfoldedZeros unfold(const ensembles::EigenangleSample& sample);

// L-function ordinates: gamma * c(L)/(2 pi); entries at exactly 0 are
// treated as critical zeros and excluded.
UnfoldedZeros unfold_lzeros(const std::vector<double>& gammas,
                            double refined_conductor);

// heights[b] = count in bin / (sets x bin width); per-bin standard error
// from the across-set variance of the bin counts.
DensityTable one_level_density(const std::vector<UnfoldedZeros>& sets,
                               const GridSpec& grid);

// Pairwise-distance histogram normalized per set, per point, per bin width;
// circular distances when the set carries a period.
DensityTable pair_correlation(const std::vector<UnfoldedZeros>& sets,
                              const GridSpec& grid);

// Consecutive-spacing histogram normalized to a probability density;
// sets with fewer than 2 values are skipped.
DensityTable nn_spacing(const std::vector<UnfoldedZeros>& sets,
                        const GridSpec& grid);

// (mean of v^k, jackknife standard error)
struct MomentEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};
MomentEstimate moment_estimator(const std::vector<double>& values, int k);

void write_csv(const DensityTable& table, const std::string& path);

}  // namespace ellrmt::spectra
