#include "trendkit/event.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "trendkit/error.hpp"

namespace trendkit {

bool PostEvent::has_topic(std::string_view key) const {
  return std::binary_search(topic_keys.begin(), topic_keys.end(), key);
}

std::string normalize_topic_key(std::string_view raw) {
  std::size_t b = 0, e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  std::string out;
  out.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i])));
  }
  return out;
}

const char* kind_name(EventKind kind) {
  return kind == EventKind::Original ? "original" : "retweet";
}

namespace {

// Present-but-empty text fields are treated as absent (the CSV wire format
// encodes absence as the empty string).
bool present(const std::optional<std::string>& field) {
  return field.has_value() && !field->empty();
}

std::int64_t parse_timestamp(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw Error(ErrorCode::NonNumericTimestamp,
                "timestamp is not an integer: '" + text + "'");
  }
  if (value < 0) {
    throw Error(ErrorCode::RangeError,
                "timestamp must be >= 0, got " + text);
  }
  return value;
}

}  // namespace

PostEvent validate_event(const RawEvent& candidate) {
  if (!present(candidate.event_id)) {
    throw Error(ErrorCode::MissingField, "event_id");
  }
  if (!candidate.timestamp.has_value()) {
    throw Error(ErrorCode::MissingField, "timestamp");
  }
  if (!present(candidate.author_id)) {
    throw Error(ErrorCode::MissingField, "author_id");
  }
  if (!present(candidate.kind)) {
    throw Error(ErrorCode::MissingField, "kind");
  }

  PostEvent event;
  event.event_id = *candidate.event_id;
  event.timestamp = parse_timestamp(*candidate.timestamp);
  event.author_id = *candidate.author_id;

  const std::string& kind = *candidate.kind;
  if (kind == "original") {
    event.kind = EventKind::Original;
  } else if (kind == "retweet") {
    event.kind = EventKind::Retweet;
  } else {
    throw Error(ErrorCode::InvalidKind, "unknown kind '" + kind + "'");
  }

  const bool has_root_post = present(candidate.root_post_id);
  const bool has_root_author = present(candidate.root_author_id);
  if (event.kind == EventKind::Retweet) {
    if (!has_root_post || !has_root_author) {
      throw Error(ErrorCode::KindLineageMismatch,
                  "retweet '" + event.event_id + "' lacks root fields");
    }
    event.root_post_id = *candidate.root_post_id;
    event.root_author_id = *candidate.root_author_id;
  } else if (has_root_post || has_root_author) {
    throw Error(ErrorCode::KindLineageMismatch,
                "original '" + event.event_id + "' carries root fields");
  }

  for (const std::string& raw : candidate.topics) {
    std::string key = normalize_topic_key(raw);
    if (!key.empty()) event.topic_keys.push_back(std::move(key));
  }
  std::sort(event.topic_keys.begin(), event.topic_keys.end());
  event.topic_keys.erase(
      std::unique(event.topic_keys.begin(), event.topic_keys.end()),
      event.topic_keys.end());

  if (present(candidate.comment_text)) {
    event.comment_text = *candidate.comment_text;
  }
  return event;
}

bool event_order_less(const PostEvent& a, const PostEvent& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  return a.event_id < b.event_id;
}

void finalize_stream(EventStream& stream) {
  if (!std::is_sorted(stream.events.begin(), stream.events.end(),
                      event_order_less)) {
    std::sort(stream.events.begin(), stream.events.end(), event_order_less);
  }
  auto& meta = stream.metadata;
  meta.total_events = stream.events.size();
  meta.original_count = 0;
  meta.retweet_count = 0;
  for (const PostEvent& event : stream.events) {
    if (event.kind == EventKind::Original) {
      ++meta.original_count;
    } else {
      ++meta.retweet_count;
    }
  }
  if (!stream.events.empty()) {
    meta.first_timestamp = stream.events.front().timestamp;
    meta.last_timestamp = stream.events.back().timestamp;
  } else {
    meta.first_timestamp = 0;
    meta.last_timestamp = 0;
  }
}

}  // namespace trendkit
