#include "trendkit/ingest.hpp"

#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"

namespace trendkit {

namespace {

using nlohmann::json;

const std::vector<std::string> kCsvHeader = {
    "event_id",    "timestamp", "author_id", "kind",
    "root_post_id", "root_author_id", "topics", "comment_text"};

std::vector<std::string> split_topics(const std::string& joined) {
  std::vector<std::string> out;
  if (joined.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = joined.find('|', start);
    if (bar == std::string::npos) {
      out.push_back(joined.substr(start));
      return out;
    }
    out.push_back(joined.substr(start, bar - start));
    start = bar + 1;
  }
}

std::string join_topics(const std::vector<std::string>& topics) {
  std::string out;
  for (std::size_t i = 0; i < topics.size(); ++i) {
    if (i) out += '|';
    out += topics[i];
  }
  return out;
}

std::optional<std::string> json_text_field(const json& object, const char* name,
                                           std::size_t line_number) {
  auto it = object.find(name);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::ParseError,
                std::string(name) + " must be a string (line " +
                    std::to_string(line_number) + ")",
                line_number);
  }
  return it->get<std::string>();
}

PostEvent validate_at_line(const RawEvent& raw, std::size_t line_number) {
  try {
    return validate_event(raw);
  } catch (const Error& err) {
    throw Error(err.code(),
                std::string(err.what()) + " (line " +
                    std::to_string(line_number) + ")",
                line_number);
  }
}

EventStream assemble(std::vector<PostEvent> events, const std::string& source) {
  std::unordered_set<std::string> seen;
  seen.reserve(events.size());
  std::vector<PostEvent> unique;
  unique.reserve(events.size());
  std::size_t duplicates = 0;
  for (PostEvent& event : events) {
    if (seen.insert(event.event_id).second) {
      unique.push_back(std::move(event));
    } else {
      ++duplicates;
    }
  }
  if (unique.empty()) {
    throw Error(ErrorCode::EmptyInput, "no valid events in " + source);
  }
  EventStream stream;
  stream.events = std::move(unique);
  stream.metadata.source = source;
  stream.metadata.duplicates_dropped = duplicates;
  finalize_stream(stream);
  return stream;
}

std::vector<PostEvent> load_jsonl_events(std::istream& in) {
  std::vector<PostEvent> events;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    events.push_back(parse_jsonl_line(line, line_number));
  }
  return events;
}

std::vector<PostEvent> load_csv_events(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t lines = 0;
  std::size_t line_number = 1;
  if (!csv::read_record(in, fields, lines)) {
    return {};
  }
  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < fields.size(); ++i) column[fields[i]] = i;
  for (const char* required :
       {"event_id", "timestamp", "author_id", "kind", "topics"}) {
    if (!column.count(required)) {
      throw Error(ErrorCode::ParseError,
                  std::string("CSV header lacks column '") + required + "'", 1);
    }
  }
  const std::size_t ncols = fields.size();
  auto cell = [&](const std::vector<std::string>& row,
                  const char* name) -> std::optional<std::string> {
    auto it = column.find(name);
    if (it == column.end()) return std::nullopt;
    const std::string& value = row[it->second];
    if (value.empty()) return std::nullopt;  // empty string means absent
    return value;
  };

  std::vector<PostEvent> events;
  line_number += lines;
  std::size_t record_start = line_number;
  while (csv::read_record(in, fields, lines)) {
    if (fields.size() == 1 && fields[0].empty()) {
      line_number += lines;
      record_start = line_number;
      continue;  // blank line
    }
    if (fields.size() != ncols) {
      throw Error(ErrorCode::ParseError,
                  "row has " + std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(ncols) + " (line " +
                      std::to_string(record_start) + ")",
                  record_start);
    }
    RawEvent raw;
    raw.event_id = cell(fields, "event_id");
    raw.timestamp = cell(fields, "timestamp");
    raw.author_id = cell(fields, "author_id");
    raw.kind = cell(fields, "kind");
    raw.root_post_id = cell(fields, "root_post_id");
    raw.root_author_id = cell(fields, "root_author_id");
    raw.comment_text = cell(fields, "comment_text");
    if (auto topics = cell(fields, "topics")) raw.topics = split_topics(*topics);
    events.push_back(validate_at_line(raw, record_start));
    line_number += lines;
    record_start = line_number;
  }
  return events;
}

}  // namespace

StreamFormat format_from_path(const std::string& path) {
  auto ends_with = [&](const char* suffix) {
    const std::string s(suffix);
    return path.size() >= s.size() &&
           path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".jsonl") || ends_with(".json")) return StreamFormat::Jsonl;
  if (ends_with(".csv")) return StreamFormat::Csv;
  throw Error(ErrorCode::ParamError,
              "cannot infer format from '" + path + "' (use .jsonl or .csv)");
}

PostEvent parse_jsonl_line(const std::string& line, std::size_t line_number) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::exception& err) {
    throw Error(ErrorCode::ParseError,
                std::string("bad JSON (line ") + std::to_string(line_number) +
                    "): " + err.what(),
                line_number);
  }
  if (!object.is_object()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_number) + " is not a JSON object",
                line_number);
  }
  RawEvent raw;
  raw.event_id = json_text_field(object, "event_id", line_number);
  raw.author_id = json_text_field(object, "author_id", line_number);
  raw.kind = json_text_field(object, "kind", line_number);
  raw.root_post_id = json_text_field(object, "root_post_id", line_number);
  raw.root_author_id = json_text_field(object, "root_author_id", line_number);
  raw.comment_text = json_text_field(object, "comment_text", line_number);

  if (auto it = object.find("timestamp"); it != object.end() && !it->is_null()) {
    if (it->is_number_integer()) {
      raw.timestamp = std::to_string(it->get<std::int64_t>());
    } else if (it->is_string()) {
      raw.timestamp = it->get<std::string>();
    } else {
      throw Error(ErrorCode::NonNumericTimestamp,
                  "timestamp must be an integer (line " +
                      std::to_string(line_number) + ")",
                  line_number);
    }
  }
  if (auto it = object.find("topics"); it != object.end() && !it->is_null()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::ParseError,
                  "topics must be an array (line " + std::to_string(line_number) + ")",
                  line_number);
    }
    for (const auto& entry : *it) {
      if (!entry.is_string()) {
        throw Error(ErrorCode::ParseError,
                    "topics entries must be strings (line " +
                        std::to_string(line_number) + ")",
                    line_number);
      }
      raw.topics.push_back(entry.get<std::string>());
    }
  }
  return validate_at_line(raw, line_number);
}

std::string event_to_jsonl_line(const PostEvent& event) {
  json object;
  object["event_id"] = event.event_id;
  object["timestamp"] = event.timestamp;
  object["author_id"] = event.author_id;
  object["kind"] = kind_name(event.kind);
  if (event.kind == EventKind::Retweet) {
    object["root_post_id"] = *event.root_post_id;
    object["root_author_id"] = *event.root_author_id;
  }
  object["topics"] = event.topic_keys;
  if (event.comment_text) object["comment_text"] = *event.comment_text;
  return object.dump();
}

EventStream load_stream(const std::string& path, StreamFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::vector<PostEvent> events = format == StreamFormat::Jsonl
                                      ? load_jsonl_events(in)
                                      : load_csv_events(in);
  return assemble(std::move(events), path);
}

void write_jsonl(const EventStream& stream, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  for (const PostEvent& event : stream.events) {
    out << event_to_jsonl_line(event) << '\n';
  }
}

void write_csv(const EventStream& stream, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  out << csv::join_row(kCsvHeader) << '\n';
  for (const PostEvent& event : stream.events) {
    std::vector<std::string> row(8);
    row[0] = event.event_id;
    row[1] = std::to_string(event.timestamp);
    row[2] = event.author_id;
    row[3] = kind_name(event.kind);
    row[4] = event.root_post_id.value_or("");
    row[5] = event.root_author_id.value_or("");
    row[6] = join_topics(event.topic_keys);
    row[7] = event.comment_text.value_or("");
    out << csv::join_row(row) << '\n';
  }
}

BucketedStream bucketize(const EventStream& stream, std::int64_t width) {
  if (width <= 0) {
    throw Error(ErrorCode::InvalidWidth,
                "bucket width must be positive, got " + std::to_string(width));
  }
  BucketedStream result;
  result.bucket_width = width;
  if (stream.events.empty()) return result;

  const std::int64_t first = stream.events.front().timestamp / width;
  const std::int64_t last = stream.events.back().timestamp / width;
  result.buckets.resize(static_cast<std::size_t>(last - first + 1));
  for (std::size_t i = 0; i < result.buckets.size(); ++i) {
    result.buckets[i].start = (first + static_cast<std::int64_t>(i)) * width;
  }
  for (const PostEvent& event : stream.events) {
    const std::size_t index =
        static_cast<std::size_t>(event.timestamp / width - first);
    result.buckets[index].events.push_back(event);
  }
  return result;
}

}  // namespace trendkit
