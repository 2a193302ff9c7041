#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trendkit {

enum class EventKind { Original, Retweet };

/// One microblog post or retweet. Immutable after construction by convention;
/// safe to share across workers.
///
/// Invariants enforced by validate_event:
///   - Retweet events carry both root_post_id and root_author_id.
///   - Original events carry neither.
///   - timestamp >= 0.
///   - topic_keys are normalized, sorted and unique.
struct PostEvent {
  std::string event_id;
  std::int64_t timestamp = 0;  // seconds since epoch
  std::string author_id;
  EventKind kind = EventKind::Original;
  std::optional<std::string> root_post_id;
  std::optional<std::string> root_author_id;
  std::vector<std::string> topic_keys;
  std::optional<std::string> comment_text;

  bool operator==(const PostEvent&) const = default;

  bool has_topic(std::string_view key) const;
};

struct StreamMetadata {
  std::string source;
  std::size_t total_events = 0;
  std::size_t original_count = 0;
  std::size_t retweet_count = 0;
  std::size_t duplicates_dropped = 0;
  std::int64_t first_timestamp = 0;
  std::int64_t last_timestamp = 0;

  double retweet_share() const {
    return total_events == 0
               ? 0.0
               : static_cast<double>(retweet_count) / static_cast<double>(total_events);
  }
};

/// Events ordered by (timestamp, event_id), event_ids unique.
struct EventStream {
  std::vector<PostEvent> events;
  StreamMetadata metadata;
};

/// Raw textual record prior to validation. An absent optional means the
/// field was missing from the input.
struct RawEvent {
  std::optional<std::string> event_id;
  std::optional<std::string> timestamp;
  std::optional<std::string> author_id;
  std::optional<std::string> kind;
  std::optional<std::string> root_post_id;
  std::optional<std::string> root_author_id;
  std::optional<std::string> comment_text;
  std::vector<std::string> topics;
};

/// Trim + ASCII case-fold. Returns empty string for all-whitespace input.
std::string normalize_topic_key(std::string_view raw);

/// Validates a raw record into a well-formed PostEvent.
/// Throws Error with MissingField, NonNumericTimestamp, RangeError,
/// InvalidKind or KindLineageMismatch.
PostEvent validate_event(const RawEvent& candidate);

const char* kind_name(EventKind kind);

/// Stream ordering: (timestamp, event_id) ascending.
bool event_order_less(const PostEvent& a, const PostEvent& b);

/// Sorts events and recomputes metadata counts/time span in place.
/// `source` and `duplicates_dropped` are preserved.
void finalize_stream(EventStream& stream);

}  // namespace trendkit
