#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trendkit/event.hpp"

namespace trendkit {

inline constexpr std::int64_t kHourSeconds = 3600;

/// Hourly top-K list: (topic, event count) ordered by count descending,
/// lexicographic topic order breaking ties. May be shorter than K when fewer
/// topics were active; empty for hours with no events.
struct TrendingSnapshot {
  std::int64_t hour_start = 0;
  std::vector<std::pair<std::string, std::int64_t>> ranked;
};

/// A topic's tenure on the trending list.
struct TrendEpisode {
  std::string topic;
  std::int64_t hours_on_list = 0;
  std::int64_t reappearances = 0;  // maximal absence gaps inside [first, last]
  std::vector<std::pair<std::int64_t, int>> hourly_ranks;  // (hour_start, 1..K)
};

/// One snapshot per hour between the first and last event (hours with no
/// events produce empty lists, keeping the sequence contiguous). Frequency is
/// the raw event count per topic in that hour; originals and retweets both
/// count, and an event counts once per topic key it carries. `width` is the
/// snapshot window, hourly by default.
std::vector<TrendingSnapshot> compute_snapshots(const EventStream& stream, int k,
                                                std::int64_t width = kHourSeconds);

/// Folds hour-contiguous snapshots into per-topic episodes, ordered by topic.
/// Throws NonContiguousSnapshots if hours are not consecutive.
std::vector<TrendEpisode> build_episodes(
    const std::vector<TrendingSnapshot>& snapshots,
    std::int64_t width = kHourSeconds);

struct BandPersistenceRow {
  std::int64_t duration_hours = 0;
  double bottom_band_fraction = 0.0;  // mean share of on-list hours at rank > K/2
  std::size_t episodes = 0;
};

/// For each episode duration, the mean fraction of on-list hours spent in the
/// bottom rank band (ranks K/2+1 .. K). K must be even.
std::vector<BandPersistenceRow> band_persistence(
    const std::vector<TrendEpisode>& episodes, int k);

void write_snapshots_csv(const std::vector<TrendingSnapshot>& snapshots,
                         const std::string& path);
void write_episodes_csv(const std::vector<TrendEpisode>& episodes,
                        const std::string& path);
void write_band_persistence_csv(const std::vector<BandPersistenceRow>& rows,
                                const std::string& path);

}  // namespace trendkit
