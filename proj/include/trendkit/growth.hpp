#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trendkit/event.hpp"
#include "trendkit/trending.hpp"

namespace trendkit {

enum class Subset { All, OriginalOnly, RetweetOnly };

const char* subset_name(Subset subset);
Subset subset_from_name(const std::string& name);

/// Per-topic interval counts n_q(t) and exact prefix sums N_q(t_i) over
/// contiguous intervals [t0 + (i-1)*width, t0 + i*width), i = 1..T.
struct CumulativeSeries {
  std::string topic;
  std::int64_t t0 = 0;
  std::int64_t interval_width = 600;
  Subset subset = Subset::All;
  std::vector<std::int64_t> interval_counts;  // n_q(t_1..t_T)
  std::vector<std::int64_t> cumulative;       // N_q(t_1..t_T)

  std::size_t intervals() const { return interval_counts.size(); }
};

/// Builds the series for one topic, counting events with the topic key, a
/// matching kind and timestamp >= t0. Intervals run through the topic's last
/// event; `min_intervals` zero-extends past it (no events happened there, so
/// the cumulative count stays flat), which keeps late time frames defined for
/// topics that stopped early. A topic with no events after t0 yields a single
/// zero interval.
CumulativeSeries cumulative_series(const EventStream& stream,
                                   const std::string& topic, std::int64_t t0,
                                   std::int64_t width, Subset subset,
                                   std::size_t min_intervals = 0);

/// C_q(t_i, t_j) = N_q(t_i) / N_q(t_j), 1-based, i > j >= 1.
/// Throws IndexOutOfRange or ZeroDenominator.
double ratio(const CumulativeSeries& series, std::size_t i, std::size_t j);

/// Topic plus its trend-start anchor t0.
struct TopicAnchor {
  std::string topic;
  std::int64_t t0 = 0;
};

struct FramePair {
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Cross-topic ratio sample for one frame pair. `topics` and `values` are
/// aligned; `skipped` counts topics excluded for N_q(t_j) = 0.
struct RatioSample {
  FramePair frames;
  Subset subset = Subset::All;
  std::vector<std::string> topics;
  std::vector<double> values;
  std::size_t skipped = 0;
};

/// One C_q(t_i, t_j) per eligible topic. Throws EmptySample when no topic is
/// eligible, IndexOutOfRange for a malformed frame pair.
RatioSample ratio_distribution(const EventStream& stream,
                               const std::vector<TopicAnchor>& anchors,
                               FramePair frames, std::int64_t width,
                               Subset subset);

/// t0 per topic: the first snapshot hour that listed it.
std::vector<TopicAnchor> trend_anchors(
    const std::vector<TrendingSnapshot>& snapshots);

void write_ratios_csv(const std::vector<RatioSample>& samples,
                      const std::string& path);

}  // namespace trendkit
