#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "trendkit/error.hpp"
#include "trendkit/event.hpp"
#include "trendkit/rng.hpp"

namespace testutil {

using trendkit::Error;
using trendkit::ErrorCode;
using trendkit::EventKind;
using trendkit::EventStream;
using trendkit::PostEvent;
using trendkit::Rng;

inline PostEvent original(std::string id, std::int64_t ts, std::string author,
                          std::vector<std::string> topics = {}) {
  PostEvent event;
  event.event_id = std::move(id);
  event.timestamp = ts;
  event.author_id = std::move(author);
  event.kind = EventKind::Original;
  event.topic_keys = std::move(topics);
  std::sort(event.topic_keys.begin(), event.topic_keys.end());
  return event;
}

inline PostEvent retweet(std::string id, std::int64_t ts, std::string author,
                         std::string root_post, std::string root_author,
                         std::vector<std::string> topics = {}) {
  PostEvent event;
  event.event_id = std::move(id);
  event.timestamp = ts;
  event.author_id = std::move(author);
  event.kind = EventKind::Retweet;
  event.root_post_id = std::move(root_post);
  event.root_author_id = std::move(root_author);
  event.topic_keys = std::move(topics);
  std::sort(event.topic_keys.begin(), event.topic_keys.end());
  return event;
}

inline EventStream stream_of(std::vector<PostEvent> events) {
  EventStream stream;
  stream.events = std::move(events);
  stream.metadata.source = "test";
  trendkit::finalize_stream(stream);
  return stream;
}

/// Random stream with configurable topic/author diversity; retweets may
/// reference roots outside the stream (allowed by the event model).
inline EventStream random_stream(Rng& rng, std::size_t count, int topics,
                                 std::int64_t horizon, int authors = 30) {
  std::vector<PostEvent> events;
  events.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const std::int64_t ts =
        static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(horizon)));
    std::vector<std::string> keys{
        "top" + std::to_string(rng.below(static_cast<std::uint64_t>(topics)))};
    if (rng.uniform() < 0.2) {
      keys.push_back(
          "top" + std::to_string(rng.below(static_cast<std::uint64_t>(topics))));
    }
    const std::string author =
        "user" + std::to_string(rng.below(static_cast<std::uint64_t>(authors)));
    if (rng.uniform() < 0.6) {
      events.push_back(retweet("ev" + std::to_string(n), ts, author,
                               "post" + std::to_string(rng.below(25)),
                               "root" + std::to_string(rng.below(15)),
                               std::move(keys)));
    } else {
      events.push_back(original("ev" + std::to_string(n), ts, author,
                                std::move(keys)));
    }
  }
  return stream_of(std::move(events));
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("trendkit_test_" + tag)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// The ErrorCode a callable throws, or nullopt if it does not throw.
template <typename Fn>
std::optional<ErrorCode> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return std::nullopt;
}

inline double sample_skewness(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double x : values) mean += x;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double x : values) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  return m3 / std::pow(m2, 1.5);
}

}  // namespace testutil
