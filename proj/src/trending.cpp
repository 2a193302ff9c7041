#include "trendkit/trending.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_map>

#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"

namespace trendkit {

std::vector<TrendingSnapshot> compute_snapshots(const EventStream& stream, int k,
                                                std::int64_t width) {
  if (k < 1) {
    throw Error(ErrorCode::ParamError, "k must be >= 1, got " + std::to_string(k));
  }
  if (width <= 0) {
    throw Error(ErrorCode::InvalidWidth,
                "snapshot width must be positive, got " + std::to_string(width));
  }
  std::vector<TrendingSnapshot> snapshots;
  if (stream.events.empty()) return snapshots;

  const std::int64_t first_hour = stream.events.front().timestamp / width;
  const std::int64_t last_hour = stream.events.back().timestamp / width;

  // hour index -> topic -> count; only hours with events get a map.
  std::unordered_map<std::int64_t, std::unordered_map<std::string, std::int64_t>>
      counts;
  for (const PostEvent& event : stream.events) {
    auto& per_topic = counts[event.timestamp / width];
    for (const std::string& topic : event.topic_keys) {
      ++per_topic[topic];
    }
  }

  snapshots.reserve(static_cast<std::size_t>(last_hour - first_hour + 1));
  for (std::int64_t hour = first_hour; hour <= last_hour; ++hour) {
    TrendingSnapshot snapshot;
    snapshot.hour_start = hour * width;
    if (auto it = counts.find(hour); it != counts.end()) {
      snapshot.ranked.assign(it->second.begin(), it->second.end());
      std::sort(snapshot.ranked.begin(), snapshot.ranked.end(),
                [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
                });
      if (snapshot.ranked.size() > static_cast<std::size_t>(k)) {
        snapshot.ranked.resize(static_cast<std::size_t>(k));
      }
    }
    snapshots.push_back(std::move(snapshot));
  }
  return snapshots;
}

std::vector<TrendEpisode> build_episodes(
    const std::vector<TrendingSnapshot>& snapshots, std::int64_t width) {
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (snapshots[i].hour_start - snapshots[i - 1].hour_start != width) {
      throw Error(ErrorCode::NonContiguousSnapshots,
                  "gap between hours " + std::to_string(snapshots[i - 1].hour_start) +
                      " and " + std::to_string(snapshots[i].hour_start));
    }
  }

  std::map<std::string, TrendEpisode> by_topic;
  for (const TrendingSnapshot& snapshot : snapshots) {
    for (std::size_t index = 0; index < snapshot.ranked.size(); ++index) {
      const std::string& topic = snapshot.ranked[index].first;
      TrendEpisode& episode = by_topic[topic];
      if (episode.topic.empty()) episode.topic = topic;
      episode.hourly_ranks.emplace_back(snapshot.hour_start,
                                        static_cast<int>(index + 1));
    }
  }

  std::vector<TrendEpisode> episodes;
  episodes.reserve(by_topic.size());
  for (auto& [topic, episode] : by_topic) {
    episode.hours_on_list = static_cast<std::int64_t>(episode.hourly_ranks.size());
    episode.reappearances = 0;
    for (std::size_t i = 1; i < episode.hourly_ranks.size(); ++i) {
      if (episode.hourly_ranks[i].first - episode.hourly_ranks[i - 1].first >
          width) {
        ++episode.reappearances;
      }
    }
    episodes.push_back(std::move(episode));
  }
  return episodes;
}

std::vector<BandPersistenceRow> band_persistence(
    const std::vector<TrendEpisode>& episodes, int k) {
  if (k < 2) {
    throw Error(ErrorCode::ParamError, "k must be >= 2, got " + std::to_string(k));
  }
  if (k % 2 != 0) {
    throw Error(ErrorCode::OddK, "bands need an even k, got " + std::to_string(k));
  }
  const int band_split = k / 2;

  std::map<std::int64_t, std::pair<double, std::size_t>> by_duration;
  for (const TrendEpisode& episode : episodes) {
    std::int64_t bottom_hours = 0;
    for (const auto& [hour, rank] : episode.hourly_ranks) {
      if (rank > k) {
        throw Error(ErrorCode::ParamError,
                    "episode rank " + std::to_string(rank) + " exceeds k");
      }
      if (rank > band_split) ++bottom_hours;
    }
    const double fraction = static_cast<double>(bottom_hours) /
                            static_cast<double>(episode.hours_on_list);
    auto& [sum, count] = by_duration[episode.hours_on_list];
    sum += fraction;
    ++count;
  }

  std::vector<BandPersistenceRow> rows;
  rows.reserve(by_duration.size());
  for (const auto& [duration, acc] : by_duration) {
    rows.push_back({duration, acc.first / static_cast<double>(acc.second),
                    acc.second});
  }
  return rows;
}

void write_snapshots_csv(const std::vector<TrendingSnapshot>& snapshots,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "hour_start,rank,topic,count\n";
  for (const TrendingSnapshot& snapshot : snapshots) {
    for (std::size_t index = 0; index < snapshot.ranked.size(); ++index) {
      out << snapshot.hour_start << ',' << index + 1 << ','
          << csv::escape(snapshot.ranked[index].first) << ','
          << snapshot.ranked[index].second << '\n';
    }
  }
}

void write_episodes_csv(const std::vector<TrendEpisode>& episodes,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "topic,hours_on_list,reappearances\n";
  for (const TrendEpisode& episode : episodes) {
    out << csv::escape(episode.topic) << ',' << episode.hours_on_list << ','
        << episode.reappearances << '\n';
  }
}

void write_band_persistence_csv(const std::vector<BandPersistenceRow>& rows,
                                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "duration_hours,bottom_band_fraction,episodes\n";
  char buffer[64];
  for (const BandPersistenceRow& row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%.10g", row.bottom_band_fraction);
    out << row.duration_hours << ',' << buffer << ',' << row.episodes << '\n';
  }
}

}  // namespace trendkit
