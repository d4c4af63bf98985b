#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "linkpred/adjacency.hpp"

namespace linkpred {

enum class Binning { linear, logarithmic };

struct HistogramBin {
  double k_low;
  double k_high;  // exclusive
  std::int64_t count;
  double density;  // count / (included_nodes * width)
};

// Degree histogram normalized as a probability density over the included
// nodes: sum over bins of density * width is 1. With include_zero the first
// bin is [0, 1) and covers isolated nodes; without it only nodes with
// k >= 1 are included. Logarithmic bins grow by a fixed ratio from k = 1.
struct DegreeHistogram {
  std::vector<HistogramBin> bins;  // non-empty bins only, ascending
  Binning binning = Binning::logarithmic;
  std::int64_t total_nodes = 0;  // nodes included in the density normalization
};

// Geometric centre for logarithmic bins, arithmetic for linear ones.
inline double bin_centre(const HistogramBin& bin, Binning binning) {
  if (binning == Binning::logarithmic && bin.k_low > 0.0)
    return std::sqrt(bin.k_low * bin.k_high);
  return 0.5 * (bin.k_low + bin.k_high);
}

inline DegreeHistogram degree_histogram(const DegreeVector& deg, Binning binning,
                                        bool include_zero = false,
                                        double log_ratio = 1.5) {
  if (deg.empty()) throw std::invalid_argument("degree_histogram: empty degree vector");
  if (binning == Binning::logarithmic && !(log_ratio > 1.0))
    throw std::invalid_argument("degree_histogram: log bin ratio must exceed 1");

  double k_max = 0.0;
  std::int64_t included = 0;
  for (double k : deg) {
    if (k >= 1.0 || include_zero) {
      ++included;
      k_max = std::max(k_max, k);
    }
  }
  if (included == 0)
    throw std::invalid_argument("degree_histogram: no node with k >= 1 and zeros excluded");

  // Bin edges: optional [0, 1), then either unit bins or multiplicative
  // bins 1, r, r^2, ... until k_max is covered.
  std::vector<double> edges;
  if (include_zero) edges.push_back(0.0);
  edges.push_back(1.0);
  if (binning == Binning::linear) {
    for (double e = 2.0; edges.back() <= k_max; e += 1.0) edges.push_back(e);
  } else {
    while (edges.back() <= k_max) edges.push_back(edges.back() * log_ratio);
  }

  std::vector<std::int64_t> counts(edges.size() - 1, 0);
  for (double k : deg) {
    if (k < 1.0 && !include_zero) continue;
    auto it = std::upper_bound(edges.begin(), edges.end(), k);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin());
    if (bin == 0 || bin > counts.size()) continue;  // below the first edge
    ++counts[bin - 1];
  }

  DegreeHistogram hist;
  hist.binning = binning;
  hist.total_nodes = included;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] == 0) continue;
    const double width = edges[b + 1] - edges[b];
    hist.bins.push_back({edges[b], edges[b + 1], counts[b],
                         static_cast<double>(counts[b]) /
                             (static_cast<double>(included) * width)});
  }
  return hist;
}

struct PowerLawFit {
  double gamma = 0.0;  // P(k) ~ k^(-gamma)
  double k_min = 0.0;  // tail cutoff the fit used
  double r_squared = 0.0;
  int points_used = 0;
};

// Least-squares line through (log centre, log density) over the tail bins
// with centre >= k_min; gamma is the negated slope. Needs at least three
// usable bins.
inline PowerLawFit fit_power_law(const DegreeHistogram& hist, double k_min) {
  std::vector<double> xs, ys;
  for (const HistogramBin& bin : hist.bins) {
    const double centre = bin_centre(bin, hist.binning);
    if (centre < k_min || bin.density <= 0.0 || centre <= 0.0) continue;
    xs.push_back(std::log(centre));
    ys.push_back(std::log(bin.density));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("fit_power_law: fewer than 3 usable bins at or above k_min");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_power_law: degenerate abscissa, all centres equal");

  PowerLawFit fit;
  fit.k_min = k_min;
  fit.points_used = static_cast<int>(xs.size());
  const double slope = sxy / sxx;
  fit.gamma = -slope;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

// Default tail cutoff: the 10th percentile (nearest rank) of the nonzero
// degrees. The CLI exposes the knob for anyone who wants a different tail.
inline double default_k_min(const DegreeVector& deg) {
  std::vector<double> nonzero;
  for (double k : deg)
    if (k > 0.0) nonzero.push_back(k);
  if (nonzero.empty())
    throw std::invalid_argument("default_k_min: all degrees are zero");
  std::sort(nonzero.begin(), nonzero.end());
  const std::size_t rank =
      static_cast<std::size_t>(std::ceil(0.10 * static_cast<double>(nonzero.size())));
  return nonzero[rank == 0 ? 0 : rank - 1];
}

}  // namespace linkpred
