#include "trendkit/growth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"

namespace trendkit {

const char* subset_name(Subset subset) {
  switch (subset) {
    case Subset::All: return "all";
    case Subset::OriginalOnly: return "original";
    case Subset::RetweetOnly: return "retweet";
  }
  return "all";
}

Subset subset_from_name(const std::string& name) {
  if (name == "all") return Subset::All;
  if (name == "original") return Subset::OriginalOnly;
  if (name == "retweet") return Subset::RetweetOnly;
  throw Error(ErrorCode::ParamError, "unknown subset '" + name + "'");
}

namespace {

bool kind_in_subset(EventKind kind, Subset subset) {
  switch (subset) {
    case Subset::All: return true;
    case Subset::OriginalOnly: return kind == EventKind::Original;
    case Subset::RetweetOnly: return kind == EventKind::Retweet;
  }
  return true;
}

// Shared series assembly from a topic's (timestamp, kind) pairs, already
// filtered to the topic. Pairs need not be sorted.
CumulativeSeries build_series(
    const std::string& topic, std::int64_t t0, std::int64_t width,
    Subset subset, std::size_t min_intervals,
    const std::vector<std::pair<std::int64_t, EventKind>>& observations) {
  if (width <= 0) {
    throw Error(ErrorCode::InvalidWidth,
                "interval width must be positive, got " + std::to_string(width));
  }
  CumulativeSeries series;
  series.topic = topic;
  series.t0 = t0;
  series.interval_width = width;
  series.subset = subset;

  std::int64_t last_index = -1;
  for (const auto& [timestamp, kind] : observations) {
    if (timestamp < t0 || !kind_in_subset(kind, subset)) continue;
    last_index = std::max(last_index, (timestamp - t0) / width);
  }
  std::size_t intervals = static_cast<std::size_t>(last_index + 1);
  intervals = std::max<std::size_t>({intervals, min_intervals, 1});

  series.interval_counts.assign(intervals, 0);
  for (const auto& [timestamp, kind] : observations) {
    if (timestamp < t0 || !kind_in_subset(kind, subset)) continue;
    ++series.interval_counts[static_cast<std::size_t>((timestamp - t0) / width)];
  }
  series.cumulative.resize(intervals);
  std::int64_t running = 0;
  for (std::size_t i = 0; i < intervals; ++i) {
    running += series.interval_counts[i];
    series.cumulative[i] = running;
  }
  return series;
}

}  // namespace

CumulativeSeries cumulative_series(const EventStream& stream,
                                   const std::string& topic, std::int64_t t0,
                                   std::int64_t width, Subset subset,
                                   std::size_t min_intervals) {
  std::vector<std::pair<std::int64_t, EventKind>> observations;
  for (const PostEvent& event : stream.events) {
    if (event.has_topic(topic)) {
      observations.emplace_back(event.timestamp, event.kind);
    }
  }
  return build_series(topic, t0, width, subset, min_intervals, observations);
}

double ratio(const CumulativeSeries& series, std::size_t i, std::size_t j) {
  if (j < 1 || i <= j || i > series.cumulative.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "frame pair (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") needs i > j >= 1 and i <= " +
                    std::to_string(series.cumulative.size()));
  }
  const std::int64_t denominator = series.cumulative[j - 1];
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroDenominator,
                "N_" + series.topic + "(t_" + std::to_string(j) + ") = 0");
  }
  return static_cast<double>(series.cumulative[i - 1]) /
         static_cast<double>(denominator);
}

RatioSample ratio_distribution(const EventStream& stream,
                               const std::vector<TopicAnchor>& anchors,
                               FramePair frames, std::int64_t width,
                               Subset subset) {
  if (frames.j < 1 || frames.i <= frames.j) {
    throw Error(ErrorCode::IndexOutOfRange,
                "frame pair (" + std::to_string(frames.i) + ", " +
                    std::to_string(frames.j) + ") needs i > j >= 1");
  }
  if (width <= 0) {
    throw Error(ErrorCode::InvalidWidth,
                "interval width must be positive, got " + std::to_string(width));
  }

  // Single pass over the stream collecting per-topic observations, instead of
  // one full rescan per topic.
  std::unordered_map<std::string, std::vector<std::pair<std::int64_t, EventKind>>>
      per_topic;
  std::unordered_set<std::string> wanted;
  wanted.reserve(anchors.size());
  for (const TopicAnchor& anchor : anchors) wanted.insert(anchor.topic);
  for (const PostEvent& event : stream.events) {
    for (const std::string& topic : event.topic_keys) {
      if (wanted.count(topic)) {
        per_topic[topic].emplace_back(event.timestamp, event.kind);
      }
    }
  }

  RatioSample sample;
  sample.frames = frames;
  sample.subset = subset;
  static const std::vector<std::pair<std::int64_t, EventKind>> kNone;
  for (const TopicAnchor& anchor : anchors) {
    auto it = per_topic.find(anchor.topic);
    const auto& observations = it == per_topic.end() ? kNone : it->second;
    CumulativeSeries series = build_series(anchor.topic, anchor.t0, width,
                                           subset, frames.i, observations);
    try {
      const double value = ratio(series, frames.i, frames.j);
      sample.topics.push_back(anchor.topic);
      sample.values.push_back(value);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ZeroDenominator) throw;
      ++sample.skipped;
    }
  }
  if (sample.values.empty()) {
    throw Error(ErrorCode::EmptySample,
                "no topic has N(t_" + std::to_string(frames.j) + ") > 0");
  }
  return sample;
}

std::vector<TopicAnchor> trend_anchors(
    const std::vector<TrendingSnapshot>& snapshots) {
  std::map<std::string, std::int64_t> first_hour;
  for (const TrendingSnapshot& snapshot : snapshots) {
    for (const auto& [topic, count] : snapshot.ranked) {
      first_hour.emplace(topic, snapshot.hour_start);
    }
  }
  std::vector<TopicAnchor> anchors;
  anchors.reserve(first_hour.size());
  for (const auto& [topic, hour] : first_hour) {
    anchors.push_back({topic, hour});
  }
  return anchors;
}

void write_ratios_csv(const std::vector<RatioSample>& samples,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "topic,i,j,ratio,subset\n";
  char buffer[64];
  for (const RatioSample& sample : samples) {
    for (std::size_t n = 0; n < sample.values.size(); ++n) {
      std::snprintf(buffer, sizeof(buffer), "%.10g", sample.values[n]);
      out << csv::escape(sample.topics[n]) << ',' << sample.frames.i << ','
          << sample.frames.j << ',' << buffer << ',' << subset_name(sample.subset)
          << '\n';
    }
  }
}

}  // namespace trendkit
