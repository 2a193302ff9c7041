#include "trendkit/statfit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "trendkit/error.hpp"

namespace trendkit {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

void require_positive(std::span<const double> sample) {
  for (double x : sample) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue,
                  "sample contains a non-positive value");
    }
  }
}

}  // namespace

LognormalFit fit_lognormal(std::span<const double> sample) {
  if (sample.size() < 2) {
    throw Error(ErrorCode::TooFewPoints,
                "need at least 2 points, got " + std::to_string(sample.size()));
  }
  require_positive(sample);

  double sum = 0.0;
  for (double x : sample) sum += std::log(x);
  const double mu = sum / static_cast<double>(sample.size());

  double ss = 0.0;
  for (double x : sample) {
    const double d = std::log(x) - mu;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss / static_cast<double>(sample.size()));
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::TooFewDistinct,
                "all values identical, sigma would be 0");
  }
  return {mu, sigma, sample.size()};
}

double lognormal_cdf(double x, double mu, double sigma) {
  if (x <= 0.0) return 0.0;
  return 0.5 * std::erfc(-(std::log(x) - mu) / (sigma * kSqrt2));
}

KsResult ks_test_lognormal(std::span<const double> sample,
                           const LognormalFit& fit) {
  if (sample.empty()) {
    throw Error(ErrorCode::TooFewPoints, "empty sample");
  }
  require_positive(sample);

  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  const double n = static_cast<double>(sorted.size());
  double d_stat = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double model = lognormal_cdf(sorted[k], fit.mu, fit.sigma);
    const double above = (static_cast<double>(k) + 1.0) / n - model;
    const double below = model - static_cast<double>(k) / n;
    d_stat = std::max({d_stat, above, below});
  }

  KsResult result;
  result.d_stat = d_stat;
  result.critical_value = 1.36 / std::sqrt(n);
  result.passed = d_stat < result.critical_value;
  result.n = sorted.size();
  return result;
}

namespace {

constexpr std::size_t kMinTail = 10;

PowerlawFit fit_tail(const std::vector<double>& sorted_tail, double xmin) {
  const double log_xmin = std::log(xmin);
  double sum = 0.0;
  for (double x : sorted_tail) sum += std::log(x) - log_xmin;
  if (!(sum > 0.0)) {
    throw Error(ErrorCode::TooFewDistinct,
                "tail values all equal xmin, alpha undefined");
  }
  PowerlawFit fit;
  fit.xmin = xmin;
  fit.n_tail = sorted_tail.size();
  fit.alpha = 1.0 + static_cast<double>(sorted_tail.size()) / sum;
  return fit;
}

double tail_ks_distance(const std::vector<double>& sorted, std::size_t from,
                        double xmin, double alpha) {
  const std::size_t m = sorted.size() - from;
  const double log_xmin = std::log(xmin);
  double d = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double model =
        1.0 - std::exp((1.0 - alpha) * (std::log(sorted[from + k]) - log_xmin));
    const double above = (static_cast<double>(k) + 1.0) / m - model;
    const double below = model - static_cast<double>(k) / m;
    d = std::max({d, above, below});
  }
  return d;
}

}  // namespace

PowerlawFit fit_powerlaw(std::span<const double> sample,
                         std::optional<double> xmin) {
  require_positive(sample);

  if (xmin.has_value()) {
    if (!(*xmin > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue, "xmin must be positive");
    }
    std::vector<double> tail;
    for (double x : sample) {
      if (x >= *xmin) tail.push_back(x);
    }
    if (tail.size() < kMinTail) {
      throw Error(ErrorCode::InsufficientTail,
                  "only " + std::to_string(tail.size()) + " points >= xmin");
    }
    return fit_tail(tail, *xmin);
  }

  if (sample.size() < kMinTail) {
    throw Error(ErrorCode::InsufficientTail,
                "need at least " + std::to_string(kMinTail) + " points");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  // Clauset-style scan: try each distinct observed value as the cutoff and
  // keep the one whose tail fits its own model best by KS distance.
  std::optional<PowerlawFit> best;
  double best_d = 0.0;
  for (std::size_t from = 0; from + kMinTail <= sorted.size(); ++from) {
    if (from > 0 && sorted[from] == sorted[from - 1]) continue;
    const double candidate = sorted[from];
    const std::vector<double> tail(sorted.begin() + static_cast<long>(from),
                                   sorted.end());
    PowerlawFit fit;
    try {
      fit = fit_tail(tail, candidate);
    } catch (const Error&) {
      continue;  // degenerate candidate (all-equal tail)
    }
    const double d = tail_ks_distance(sorted, from, candidate, fit.alpha);
    if (!best || d < best_d) {
      best = fit;
      best_d = d;
    }
  }
  if (!best) {
    throw Error(ErrorCode::InsufficientTail, "no viable xmin candidate");
  }
  return *best;
}

Histogram histogram(std::span<const double> sample, Binning binning) {
  if (sample.empty()) {
    throw Error(ErrorCode::EmptySample, "histogram needs at least one value");
  }
  if (binning.nbins < 1) {
    throw Error(ErrorCode::ParamError, "nbins must be >= 1");
  }
  const bool log_scale = binning.scale == Binning::Scale::Log;
  if (log_scale) {
    for (double x : sample) {
      if (!(x > 0.0)) {
        throw Error(ErrorCode::NonPositiveForLogBins,
                    "log binning needs positive values");
      }
    }
  }

  auto transform = [log_scale](double x) { return log_scale ? std::log(x) : x; };
  double lo = transform(sample[0]);
  double hi = lo;
  for (double x : sample) {
    lo = std::min(lo, transform(x));
    hi = std::max(hi, transform(x));
  }

  Histogram hist;
  const std::size_t nbins = static_cast<std::size_t>(binning.nbins);
  hist.edges.resize(nbins + 1);
  for (std::size_t i = 0; i <= nbins; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(nbins);
    const double edge = lo + (hi - lo) * t;
    hist.edges[i] = log_scale ? std::exp(edge) : edge;
  }
  hist.counts.assign(nbins, 0);
  const double span = hi - lo;
  for (double x : sample) {
    std::size_t index = 0;
    if (span > 0.0) {
      const double position = (transform(x) - lo) / span * static_cast<double>(nbins);
      index = std::min(static_cast<std::size_t>(position), nbins - 1);
    }
    ++hist.counts[index];
  }
  hist.total = static_cast<std::int64_t>(sample.size());
  return hist;
}

std::string lognormal_report_json(const LognormalFit& fit, const KsResult* ks) {
  nlohmann::json report;
  report["type"] = "lognormal";
  report["mu"] = fit.mu;
  report["sigma"] = fit.sigma;
  report["n"] = fit.n;
  if (ks != nullptr) {
    report["ks"] = {{"d_stat", ks->d_stat},
                    {"critical_value", ks->critical_value},
                    {"passed", ks->passed},
                    {"n", ks->n}};
  }
  return report.dump();
}

std::string powerlaw_report_json(const PowerlawFit& fit) {
  nlohmann::json report;
  report["type"] = "powerlaw";
  report["alpha"] = fit.alpha;
  report["xmin"] = fit.xmin;
  report["n_tail"] = fit.n_tail;
  return report.dump();
}

void write_histogram_csv(const Histogram& hist, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "bin_lo,bin_hi,count\n";
  char lo[64], hi[64];
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    std::snprintf(lo, sizeof(lo), "%.10g", hist.edges[i]);
    std::snprintf(hi, sizeof(hi), "%.10g", hist.edges[i + 1]);
    out << lo << ',' << hi << ',' << hist.counts[i] << '\n';
  }
}

}  // namespace trendkit
