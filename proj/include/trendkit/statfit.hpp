#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trendkit {

/// Maximum-likelihood log-normal fit: mu and sigma are the mean and
/// population standard deviation of ln(values).
struct LognormalFit {
  double mu = 0.0;
  double sigma = 0.0;
  std::size_t n = 0;
};

/// Throws NonPositiveValue, TooFewPoints (n < 2) or TooFewDistinct (sigma 0).
LognormalFit fit_lognormal(std::span<const double> sample);

double lognormal_cdf(double x, double mu, double sigma);

/// One-sample Kolmogorov-Smirnov result against a fitted log-normal,
/// asymptotic critical value 1.36/sqrt(n) at alpha = 0.05. With parameters
/// estimated from the same sample the test passes more often than the nominal
/// rate; pass-rate expectations are calibrated by Monte Carlo in the tests
/// rather than taken from the nominal level.
struct KsResult {
  double d_stat = 0.0;
  double critical_value = 0.0;
  bool passed = false;
  std::size_t n = 0;
};

KsResult ks_test_lognormal(std::span<const double> sample,
                           const LognormalFit& fit);

/// Continuous power-law MLE: alpha = 1 + n_tail / sum(ln(x_i/xmin)) over the
/// tail x >= xmin.
struct PowerlawFit {
  double alpha = 0.0;
  double xmin = 0.0;
  std::size_t n_tail = 0;
};

/// When xmin is absent it is chosen by scanning observed values for the
/// cutoff minimizing the KS distance between the tail and its fitted model.
/// Throws InsufficientTail when fewer than 10 points remain at the cutoff.
PowerlawFit fit_powerlaw(std::span<const double> sample,
                         std::optional<double> xmin = std::nullopt);

struct Binning {
  enum class Scale { Linear, Log };
  Scale scale = Scale::Linear;
  int nbins = 10;

  static Binning linear(int nbins) { return {Scale::Linear, nbins}; }
  static Binning log(int nbins) { return {Scale::Log, nbins}; }
};

struct Histogram {
  std::vector<double> edges;  // nbins + 1, non-decreasing
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;
};

/// Last bin is closed so the maximum lands inside. Throws EmptySample or
/// NonPositiveForLogBins.
Histogram histogram(std::span<const double> sample, Binning binning);

// Plot-ready emission.
std::string lognormal_report_json(const LognormalFit& fit, const KsResult* ks);
std::string powerlaw_report_json(const PowerlawFit& fit);
void write_histogram_csv(const Histogram& hist, const std::string& path);

}  // namespace trendkit
