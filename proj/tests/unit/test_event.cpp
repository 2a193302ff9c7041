#include <optional>

#include "doctest.h"
#include "helpers.hpp"
#include "trendkit/event.hpp"

using namespace trendkit;
using testutil::thrown_code;

namespace {

RawEvent minimal_original() {
  RawEvent raw;
  raw.event_id = "e1";
  raw.timestamp = "100";
  raw.author_id = "u1";
  raw.kind = "original";
  raw.topics = {"rain"};
  return raw;
}

}  // namespace

TEST_CASE("validate_event accepts a minimal original post") {
  const PostEvent event = validate_event(minimal_original());
  CHECK(event.event_id == "e1");
  CHECK(event.timestamp == 100);
  CHECK(event.author_id == "u1");
  CHECK(event.kind == EventKind::Original);
  CHECK_FALSE(event.root_post_id.has_value());
  CHECK_FALSE(event.root_author_id.has_value());
  CHECK(event.topic_keys == std::vector<std::string>{"rain"});
}

TEST_CASE("retweet without root fields is a lineage mismatch") {
  RawEvent raw = minimal_original();
  raw.event_id = "e2";
  raw.author_id = "u2";
  raw.kind = "retweet";
  raw.topics = {};
  CHECK(thrown_code([&] { validate_event(raw); }) ==
        ErrorCode::KindLineageMismatch);

  // one root field present, the other missing
  raw.root_post_id = "p1";
  CHECK(thrown_code([&] { validate_event(raw); }) ==
        ErrorCode::KindLineageMismatch);
}

TEST_CASE("original carrying root fields is a lineage mismatch") {
  RawEvent raw = minimal_original();
  raw.root_post_id = "p1";
  raw.root_author_id = "u9";
  CHECK(thrown_code([&] { validate_event(raw); }) ==
        ErrorCode::KindLineageMismatch);
}

TEST_CASE("negative timestamp is rejected") {
  RawEvent raw = minimal_original();
  raw.timestamp = "-5";
  CHECK(thrown_code([&] { validate_event(raw); }) == ErrorCode::RangeError);
}

TEST_CASE("non-numeric timestamp is rejected") {
  RawEvent raw = minimal_original();
  raw.timestamp = "noon";
  CHECK(thrown_code([&] { validate_event(raw); }) ==
        ErrorCode::NonNumericTimestamp);
  raw.timestamp = "100x";
  CHECK(thrown_code([&] { validate_event(raw); }) ==
        ErrorCode::NonNumericTimestamp);
}

TEST_CASE("missing required fields are reported") {
  for (auto strip : {0, 1, 2, 3}) {
    RawEvent raw = minimal_original();
    if (strip == 0) raw.event_id.reset();
    if (strip == 1) raw.timestamp.reset();
    if (strip == 2) raw.author_id.reset();
    if (strip == 3) raw.kind.reset();
    CHECK(thrown_code([&] { validate_event(raw); }) == ErrorCode::MissingField);
  }
}

TEST_CASE("unknown kind is rejected") {
  RawEvent raw = minimal_original();
  raw.kind = "repost";
  CHECK(thrown_code([&] { validate_event(raw); }) == ErrorCode::InvalidKind);
}

TEST_CASE("valid retweet keeps lineage") {
  RawEvent raw = minimal_original();
  raw.kind = "retweet";
  raw.root_post_id = "p7";
  raw.root_author_id = "celeb";
  const PostEvent event = validate_event(raw);
  CHECK(event.kind == EventKind::Retweet);
  CHECK(event.root_post_id == "p7");
  CHECK(event.root_author_id == "celeb");
}

TEST_CASE("topic keys are case-folded, trimmed, deduplicated and sorted") {
  RawEvent raw = minimal_original();
  raw.topics = {" Rain ", "SNOW", "rain", "  ", "hail"};
  const PostEvent event = validate_event(raw);
  CHECK(event.topic_keys == std::vector<std::string>{"hail", "rain", "snow"});
  CHECK(event.has_topic("rain"));
  CHECK_FALSE(event.has_topic("sleet"));
}

TEST_CASE("normalize_topic_key") {
  CHECK(normalize_topic_key("  Hello World ") == "hello world");
  CHECK(normalize_topic_key("\t\n") == "");
  CHECK(normalize_topic_key("ABC") == "abc");
}

TEST_CASE("empty comment text is treated as absent") {
  RawEvent raw = minimal_original();
  raw.comment_text = "";
  CHECK_FALSE(validate_event(raw).comment_text.has_value());
  raw.comment_text = "nice";
  CHECK(validate_event(raw).comment_text == "nice");
}

TEST_CASE("original/retweet counts partition every stream") {
  testutil::Rng rng(11);
  for (int round = 0; round < 20; ++round) {
    const EventStream stream =
        testutil::random_stream(rng, 50 + rng.below(200), 5, 20000);
    std::size_t originals = 0, retweets = 0;
    for (const PostEvent& event : stream.events) {
      (event.kind == EventKind::Original ? originals : retweets)++;
    }
    CHECK(originals + retweets == stream.events.size());
    CHECK(stream.metadata.original_count == originals);
    CHECK(stream.metadata.retweet_count == retweets);
  }
}

TEST_CASE("finalize_stream orders by (timestamp, event_id)") {
  EventStream stream;
  stream.events = {testutil::original("b", 50, "u1", {"x"}),
                   testutil::original("a", 50, "u2", {"x"}),
                   testutil::original("z", 10, "u3", {"x"})};
  finalize_stream(stream);
  CHECK(stream.events[0].event_id == "z");
  CHECK(stream.events[1].event_id == "a");
  CHECK(stream.events[2].event_id == "b");
  CHECK(stream.metadata.first_timestamp == 10);
  CHECK(stream.metadata.last_timestamp == 50);
}
