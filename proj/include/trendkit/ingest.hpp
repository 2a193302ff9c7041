#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trendkit/event.hpp"

namespace trendkit {

enum class StreamFormat { Jsonl, Csv };

/// Infers the format from the file extension (.jsonl/.json vs .csv).
/// Throws ParamError for anything else.
StreamFormat format_from_path(const std::string& path);

/// Loads, validates, sorts and deduplicates an event log.
///
/// Duplicate event_ids keep the first occurrence in file order; the dropped
/// count lands in metadata.duplicates_dropped. Events come out ordered by
/// (timestamp, event_id). Throws IoError, ParseError (with 1-based line
/// number) or EmptyInput.
EventStream load_stream(const std::string& path, StreamFormat format);

/// Wire formats. JSONL: one object per line with fields event_id, timestamp,
/// author_id, kind ("original"|"retweet"), root_post_id?, root_author_id?,
/// topics (array of strings), comment_text?. CSV: header row with the same
/// names, topics |-separated, empty string meaning absent.
std::string event_to_jsonl_line(const PostEvent& event);
PostEvent parse_jsonl_line(const std::string& line, std::size_t line_number);

void write_jsonl(const EventStream& stream, const std::string& path);
void write_csv(const EventStream& stream, const std::string& path);

struct Bucket {
  std::int64_t start = 0;
  std::vector<PostEvent> events;
};

/// Half-open, width-aligned time buckets [start, start + width).
/// bucket starts are strictly increasing multiples of width and contiguous
/// between the first and last event (empty buckets materialized).
struct BucketedStream {
  std::int64_t bucket_width = 0;
  std::vector<Bucket> buckets;
};

BucketedStream bucketize(const EventStream& stream, std::int64_t width);

}  // namespace trendkit
