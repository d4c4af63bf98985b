#include "linkpred/degree_stats.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "linkpred/rng.hpp"
#include "test_util.hpp"

using namespace linkpred;

namespace {

double histogram_mass(const DegreeHistogram& hist) {
  double mass = 0.0;
  for (const HistogramBin& bin : hist.bins)
    mass += bin.density * (bin.k_high - bin.k_low);
  return mass;
}

// Noiseless histogram sampled from p(k) = C * k^(-gamma) at log-spaced bins.
DegreeHistogram synthetic_power_law(double gamma, double c = 1.0) {
  DegreeHistogram hist;
  hist.binning = Binning::logarithmic;
  hist.total_nodes = 1000;
  double lo = 1.0;
  for (int b = 0; b < 20; ++b) {
    const double hi = lo * 1.5;
    const double centre = std::sqrt(lo * hi);
    hist.bins.push_back({lo, hi, 1, c * std::pow(centre, -gamma)});
    lo = hi;
  }
  return hist;
}

}  // namespace

TEST(DegreeHistogram, UniformDegreesFillOneUnitBin) {
  DegreeHistogram hist = degree_histogram({1.0, 1.0, 1.0, 1.0}, Binning::linear);
  ASSERT_EQ(hist.bins.size(), 1u);
  EXPECT_DOUBLE_EQ(hist.bins[0].k_low, 1.0);
  EXPECT_DOUBLE_EQ(hist.bins[0].density, 1.0);
  EXPECT_EQ(hist.total_nodes, 4);
}

TEST(DegreeHistogram, ZeroDegreesExcludedByDefault) {
  DegreeHistogram hist = degree_histogram({0.0, 0.0, 1.0, 1.0}, Binning::linear);
  EXPECT_EQ(hist.total_nodes, 2);
  EXPECT_NEAR(histogram_mass(hist), 1.0, 1e-12);
}

TEST(DegreeHistogram, IncludeZeroAddsLeadingBin) {
  DegreeHistogram hist = degree_histogram({0.0, 0.0, 1.0, 1.0}, Binning::linear, true);
  EXPECT_EQ(hist.total_nodes, 4);
  ASSERT_GE(hist.bins.size(), 2u);
  EXPECT_DOUBLE_EQ(hist.bins[0].k_low, 0.0);
  EXPECT_EQ(hist.bins[0].count, 2);
  EXPECT_NEAR(histogram_mass(hist), 1.0, 1e-12);
}

TEST(DegreeHistogram, AllZeroWithoutZeroBinThrows) {
  EXPECT_THROW(degree_histogram({0.0, 0.0}, Binning::logarithmic), std::invalid_argument);
}

TEST(DegreeHistogram, MassSumsToOneOnRandomDegrees) {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    DegreeVector deg(500);
    for (double& k : deg) k = std::floor(rng.next_double() * 40.0);
    for (Binning binning : {Binning::linear, Binning::logarithmic}) {
      DegreeHistogram hist = degree_histogram(deg, binning, true);
      EXPECT_NEAR(histogram_mass(hist), 1.0, 1e-9);
      std::int64_t counted = 0;
      for (const HistogramBin& bin : hist.bins) counted += bin.count;
      EXPECT_EQ(counted, hist.total_nodes);
    }
  }
}

TEST(FitPowerLaw, RecoversGeneratingExponentExactly) {
  for (double gamma : {1.5, 1.8, 2.1, 3.0, 4.0}) {
    PowerLawFit fit = fit_power_law(synthetic_power_law(gamma), 1.0);
    EXPECT_NEAR(fit.gamma, gamma, 1e-6);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-9);
    EXPECT_EQ(fit.points_used, 20);
  }
}

TEST(FitPowerLaw, InvariantUnderDensityRescaling) {
  PowerLawFit base = fit_power_law(synthetic_power_law(2.1, 1.0), 1.0);
  PowerLawFit scaled = fit_power_law(synthetic_power_law(2.1, 37.5), 1.0);
  EXPECT_NEAR(base.gamma, scaled.gamma, 1e-9);
}

TEST(FitPowerLaw, RespectsTailCutoff) {
  DegreeHistogram hist = synthetic_power_law(2.5);
  PowerLawFit fit = fit_power_law(hist, 10.0);
  EXPECT_LT(fit.points_used, 20);
  EXPECT_NEAR(fit.gamma, 2.5, 1e-6);
}

TEST(FitPowerLaw, FewerThanThreeBinsThrows) {
  DegreeHistogram hist = synthetic_power_law(2.1);
  hist.bins.resize(2);
  EXPECT_THROW(fit_power_law(hist, 1.0), std::invalid_argument);
  EXPECT_THROW(fit_power_law(synthetic_power_law(2.1), 1e9), std::invalid_argument);
}

TEST(DefaultKMin, TenthPercentileOfNonzeroDegrees) {
  DegreeVector deg;
  for (int i = 1; i <= 100; ++i) deg.push_back(static_cast<double>(i));
  deg.push_back(0.0);
  EXPECT_DOUBLE_EQ(default_k_min(deg), 10.0);
  EXPECT_THROW(default_k_min({0.0, 0.0}), std::invalid_argument);
}
