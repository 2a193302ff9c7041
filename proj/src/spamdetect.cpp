#include "trendkit/spamdetect.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"

namespace trendkit {

std::map<std::string, RetweetProfile> user_retweet_profiles(
    const EventStream& stream) {
  struct Accumulator {
    std::int64_t retweets = 0;
    std::unordered_set<std::string> targets;
  };
  std::unordered_map<std::string, Accumulator> acc;
  for (const PostEvent& event : stream.events) {
    if (event.kind != EventKind::Retweet) continue;
    Accumulator& a = acc[event.author_id];
    ++a.retweets;
    a.targets.insert(*event.root_author_id);
  }

  std::map<std::string, RetweetProfile> profiles;
  for (auto& [user, a] : acc) {
    RetweetProfile profile;
    profile.user_id = user;
    profile.retweet_count = a.retweets;
    profile.distinct_targets = static_cast<std::int64_t>(a.targets.size());
    profile.ratio = static_cast<double>(profile.retweet_count) /
                    static_cast<double>(profile.distinct_targets);
    profiles.emplace(user, std::move(profile));
  }
  return profiles;
}

const char* account_state_name(AccountState state) {
  switch (state) {
    case AccountState::Active: return "active";
    case AccountState::Deleted: return "deleted";
    case AccountState::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

AccountState parse_account_state(const std::string& text, std::size_t line) {
  std::string lowered;
  for (char ch : text) {
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (lowered == "active") return AccountState::Active;
  if (lowered == "deleted") return AccountState::Deleted;
  if (lowered == "unknown") return AccountState::Unknown;
  throw Error(ErrorCode::ParseError,
              "unknown account status '" + text + "' (line " +
                  std::to_string(line) + ")",
              line);
}

}  // namespace

std::map<std::string, AccountState> load_status_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");

  std::map<std::string, AccountState> statuses;
  std::vector<std::string> fields;
  std::size_t lines = 0;
  std::size_t line_number = 1;
  bool first = true;
  while (csv::read_record(in, fields, lines)) {
    if (!(fields.size() == 1 && fields[0].empty())) {
      if (first && fields.size() >= 2 && fields[0] == "user_id") {
        // header row
      } else if (fields.size() < 2) {
        throw Error(ErrorCode::ParseError,
                    "status row needs user_id,status (line " +
                        std::to_string(line_number) + ")",
                    line_number);
      } else {
        statuses[fields[0]] = parse_account_state(fields[1], line_number);
      }
      first = false;
    }
    line_number += lines;
  }
  return statuses;
}

std::set<std::string> load_allowlist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::set<std::string> users;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) users.insert(line);
  }
  return users;
}

const char* suspect_reason_name(SuspectReason reason) {
  switch (reason) {
    case SuspectReason::HighRatio: return "high_ratio";
    case SuspectReason::DeletedAccount: return "deleted_account";
    case SuspectReason::GroundTruth: return "ground_truth";
  }
  return "unknown";
}

SuspectSet flag_suspects(const std::map<std::string, RetweetProfile>& profiles,
                         const std::map<std::string, AccountState>& statuses,
                         const SpamPolicy& policy,
                         const std::set<std::string>& allowlist) {
  if (policy.ratio_threshold < 1.0) {
    throw Error(ErrorCode::ParamError, "ratio threshold must be >= 1");
  }
  SuspectSet suspects;
  suspects.policy = "ratio_threshold=" + std::to_string(policy.ratio_threshold) +
                    " use_status=" + (policy.use_status ? "true" : "false");
  for (const auto& [user, profile] : profiles) {
    if (allowlist.count(user)) continue;
    std::vector<SuspectReason> reasons;
    if (profile.ratio >= policy.ratio_threshold) {
      reasons.push_back(SuspectReason::HighRatio);
    }
    if (policy.use_status) {
      auto it = statuses.find(user);
      if (it != statuses.end() && it->second == AccountState::Deleted) {
        reasons.push_back(SuspectReason::DeletedAccount);
      }
    }
    if (!reasons.empty()) {
      suspects.members.emplace(user, std::move(reasons));
    }
  }
  return suspects;
}

SuspectSet suspects_from_truth(const std::vector<std::string>& user_ids) {
  SuspectSet suspects;
  suspects.policy = "ground_truth";
  for (const std::string& user : user_ids) {
    suspects.members.emplace(user,
                             std::vector<SuspectReason>{SuspectReason::GroundTruth});
  }
  return suspects;
}

std::vector<RatioBand> default_ratio_bands() {
  std::vector<RatioBand> bands;
  bands.push_back({30.0, std::numeric_limits<double>::infinity()});
  bands.push_back({20.0, 30.0});
  bands.push_back({11.0, 20.0});
  for (double lo = 10.0; lo >= 1.0; lo -= 1.0) {
    bands.push_back({lo, lo + 1.0});
  }
  return bands;
}

std::vector<BandActivity> active_fraction_by_ratio(
    const std::map<std::string, RetweetProfile>& profiles,
    const std::map<std::string, AccountState>& statuses,
    const std::vector<RatioBand>& bands) {
  std::vector<std::size_t> order(bands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bands[a].lo < bands[b].lo;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const RatioBand& band = bands[order[i]];
    if (!(band.lo < band.hi)) {
      throw Error(ErrorCode::ParamError, "band with lo >= hi");
    }
    if (i > 0 && bands[order[i - 1]].hi > band.lo) {
      throw Error(ErrorCode::ParamError, "overlapping ratio bands");
    }
  }

  std::vector<std::size_t> total(bands.size(), 0);
  std::vector<std::size_t> active(bands.size(), 0);
  for (const auto& [user, profile] : profiles) {
    bool placed = false;
    for (std::size_t i = 0; i < bands.size(); ++i) {
      if (profile.ratio >= bands[i].lo && profile.ratio < bands[i].hi) {
        ++total[i];
        auto it = statuses.find(user);
        if (it != statuses.end() && it->second == AccountState::Active) {
          ++active[i];
        }
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::ParamError,
                  "ratio " + std::to_string(profile.ratio) +
                      " not covered by any band");
    }
  }

  std::vector<BandActivity> rows;
  rows.reserve(bands.size());
  for (std::size_t i = 0; i < bands.size(); ++i) {
    BandActivity row;
    row.band = bands[i];
    row.users = total[i];
    if (total[i] > 0) {
      row.active_pct = 100.0 * static_cast<double>(active[i]) /
                       static_cast<double>(total[i]);
      row.inactive_pct = 100.0 - *row.active_pct;
    }
    rows.push_back(row);
  }
  return rows;
}

std::pair<EventStream, RemovalReport> remove_spam(const EventStream& stream,
                                                  const SuspectSet& suspects) {
  if (suspects.empty()) {
    throw Error(ErrorCode::EmptySuspects, "suspect set is empty");
  }

  EventStream cleaned;
  cleaned.metadata.source = stream.metadata.source;
  RemovalReport report;

  std::unordered_set<std::string> users;
  std::size_t suspect_users = 0;
  for (const PostEvent& event : stream.events) {
    if (users.insert(event.author_id).second &&
        suspects.contains(event.author_id)) {
      ++suspect_users;
    }
    const bool authored_by_suspect = suspects.contains(event.author_id);
    const bool roots_to_suspect = event.kind == EventKind::Retweet &&
                                  suspects.contains(*event.root_author_id);
    if (authored_by_suspect || roots_to_suspect) {
      if (event.kind == EventKind::Retweet) {
        ++report.removed_retweets;
      } else {
        ++report.removed_originals;
      }
    } else {
      cleaned.events.push_back(event);
    }
  }
  finalize_stream(cleaned);

  const auto& meta = stream.metadata;
  report.removed_fraction_of_retweets =
      meta.retweet_count == 0
          ? 0.0
          : static_cast<double>(report.removed_retweets) /
                static_cast<double>(meta.retweet_count);
  report.removed_fraction_of_all_tweets =
      meta.total_events == 0
          ? 0.0
          : static_cast<double>(report.removed_retweets + report.removed_originals) /
                static_cast<double>(meta.total_events);
  report.suspects_fraction_of_users =
      users.empty() ? 0.0
                    : static_cast<double>(suspect_users) /
                          static_cast<double>(users.size());
  report.remaining_events = static_cast<std::int64_t>(cleaned.events.size());
  report.remaining_retweets =
      static_cast<std::int64_t>(cleaned.metadata.retweet_count);
  report.remaining_originals =
      static_cast<std::int64_t>(cleaned.metadata.original_count);
  return {std::move(cleaned), report};
}

ImpactReport trendsetter_impact(const EventStream& stream,
                                const SuspectSet& suspects,
                                const std::set<std::string>& trending_keywords) {
  std::unordered_set<std::string> retweeted_authors;
  std::unordered_set<std::string> touched_authors;
  std::unordered_set<std::string> touched_keywords;
  for (const PostEvent& event : stream.events) {
    if (event.kind != EventKind::Retweet) continue;
    retweeted_authors.insert(*event.root_author_id);
    if (suspects.contains(event.author_id)) {
      touched_authors.insert(*event.root_author_id);
      for (const std::string& topic : event.topic_keys) {
        if (trending_keywords.count(topic)) touched_keywords.insert(topic);
      }
    }
  }

  ImpactReport report;
  report.retweeted_authors = static_cast<std::int64_t>(retweeted_authors.size());
  report.retweeted_authors_touched =
      static_cast<std::int64_t>(touched_authors.size());
  report.fraction_retweeted_authors_touched =
      retweeted_authors.empty()
          ? 0.0
          : static_cast<double>(touched_authors.size()) /
                static_cast<double>(retweeted_authors.size());
  report.trending_keywords = static_cast<std::int64_t>(trending_keywords.size());
  report.trending_keywords_touched =
      static_cast<std::int64_t>(touched_keywords.size());
  report.fraction_trending_keywords_touched =
      trending_keywords.empty()
          ? 0.0
          : static_cast<double>(touched_keywords.size()) /
                static_cast<double>(trending_keywords.size());
  return report;
}

std::vector<TrendsetterEntry> rank_trendsetters(
    const EventStream& stream, const std::vector<TrendEpisode>& episodes,
    std::int64_t min_topics) {
  std::unordered_set<std::string> trending;
  for (const TrendEpisode& episode : episodes) trending.insert(episode.topic);

  struct Accumulator {
    std::int64_t retweets = 0;
    std::unordered_set<std::string> posts;
    std::unordered_set<std::string> topics;
  };
  std::unordered_map<std::string, Accumulator> acc;
  for (const PostEvent& event : stream.events) {
    if (event.kind != EventKind::Retweet) continue;
    Accumulator& a = acc[*event.root_author_id];
    ++a.retweets;
    a.posts.insert(*event.root_post_id);
    for (const std::string& topic : event.topic_keys) {
      if (trending.count(topic)) a.topics.insert(topic);
    }
  }

  std::vector<TrendsetterEntry> entries;
  for (const auto& [author, a] : acc) {
    if (static_cast<std::int64_t>(a.topics.size()) < min_topics) continue;
    TrendsetterEntry entry;
    entry.root_author_id = author;
    entry.times_retweeted = a.retweets;
    entry.distinct_tweets_retweeted = static_cast<std::int64_t>(a.posts.size());
    entry.topics_appeared_in = static_cast<std::int64_t>(a.topics.size());
    entry.score = static_cast<double>(entry.times_retweeted) /
                  static_cast<double>(entry.topics_appeared_in);
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const TrendsetterEntry& a, const TrendsetterEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.root_author_id < b.root_author_id;
            });
  return entries;
}

BurstFeatures burst_features(const EventStream& stream,
                             const std::string& user_id,
                             std::int64_t burst_gap) {
  std::vector<std::int64_t> times;
  std::unordered_map<std::string, std::int64_t> per_root;
  for (const PostEvent& event : stream.events) {
    if (event.kind == EventKind::Retweet && event.author_id == user_id) {
      times.push_back(event.timestamp);
      ++per_root[*event.root_post_id];
    }
  }
  if (times.size() < 2) {
    throw Error(ErrorCode::TooFewEvents,
                "user '" + user_id + "' has " + std::to_string(times.size()) +
                    " retweets, need >= 2");
  }
  // stream is time-ordered, so `times` already is.

  BurstFeatures features;
  features.burst_count = 1;
  std::vector<std::int64_t> intra_gaps;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const std::int64_t gap = times[i] - times[i - 1];
    if (gap > burst_gap) {
      ++features.burst_count;
    } else {
      intra_gaps.push_back(gap);
    }
  }
  if (!intra_gaps.empty()) {
    std::sort(intra_gaps.begin(), intra_gaps.end());
    const std::size_t mid = intra_gaps.size() / 2;
    features.median_intra_burst_gap =
        intra_gaps.size() % 2 == 1
            ? static_cast<double>(intra_gaps[mid])
            : (static_cast<double>(intra_gaps[mid - 1]) +
               static_cast<double>(intra_gaps[mid])) /
                  2.0;
  }
  for (const auto& [root, count] : per_root) {
    features.max_repeats_one_root = std::max(features.max_repeats_one_root, count);
  }
  return features;
}

void write_profiles_csv(const std::map<std::string, RetweetProfile>& profiles,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "user_id,retweet_count,distinct_targets,ratio\n";
  char buffer[64];
  for (const auto& [user, profile] : profiles) {
    std::snprintf(buffer, sizeof(buffer), "%.10g", profile.ratio);
    out << csv::escape(user) << ',' << profile.retweet_count << ','
        << profile.distinct_targets << ',' << buffer << '\n';
  }
}

std::string suspects_json(const SuspectSet& suspects) {
  nlohmann::json report;
  report["policy"] = suspects.policy;
  nlohmann::json members = nlohmann::json::array();
  for (const auto& [user, reasons] : suspects.members) {
    nlohmann::json entry;
    entry["user_id"] = user;
    nlohmann::json names = nlohmann::json::array();
    for (SuspectReason reason : reasons) names.push_back(suspect_reason_name(reason));
    entry["reasons"] = names;
    members.push_back(entry);
  }
  report["members"] = members;
  report["count"] = suspects.members.size();
  return report.dump();
}

std::string removal_report_json(const RemovalReport& report) {
  nlohmann::json out;
  out["removed_retweets"] = report.removed_retweets;
  out["removed_originals"] = report.removed_originals;
  out["removed_fraction_of_retweets"] = report.removed_fraction_of_retweets;
  out["removed_fraction_of_all_tweets"] = report.removed_fraction_of_all_tweets;
  out["suspects_fraction_of_users"] = report.suspects_fraction_of_users;
  out["remaining_events"] = report.remaining_events;
  out["remaining_retweets"] = report.remaining_retweets;
  out["remaining_originals"] = report.remaining_originals;
  return out.dump();
}

std::string impact_report_json(const ImpactReport& report) {
  nlohmann::json out;
  out["retweeted_authors"] = report.retweeted_authors;
  out["retweeted_authors_touched"] = report.retweeted_authors_touched;
  out["fraction_retweeted_authors_touched"] =
      report.fraction_retweeted_authors_touched;
  out["trending_keywords"] = report.trending_keywords;
  out["trending_keywords_touched"] = report.trending_keywords_touched;
  out["fraction_trending_keywords_touched"] =
      report.fraction_trending_keywords_touched;
  return out.dump();
}

void write_band_activity_csv(const std::vector<BandActivity>& rows,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "band_lo,band_hi,users,active_pct,inactive_pct\n";
  char lo[64], hi[64], a[64], i[64];
  for (const BandActivity& row : rows) {
    std::snprintf(lo, sizeof(lo), "%.10g", row.band.lo);
    std::snprintf(hi, sizeof(hi), "%.10g", row.band.hi);
    out << lo << ',' << hi << ',' << row.users << ',';
    if (row.active_pct) {
      std::snprintf(a, sizeof(a), "%.10g", *row.active_pct);
      std::snprintf(i, sizeof(i), "%.10g", *row.inactive_pct);
      out << a << ',' << i;
    } else {
      out << ',';
    }
    out << '\n';
  }
}

void write_trendsetters_csv(const std::vector<TrendsetterEntry>& entries,
                            const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "root_author_id,times_retweeted,distinct_tweets_retweeted,"
         "topics_appeared_in,score\n";
  char buffer[64];
  for (const TrendsetterEntry& entry : entries) {
    std::snprintf(buffer, sizeof(buffer), "%.10g", entry.score);
    out << csv::escape(entry.root_author_id) << ',' << entry.times_retweeted
        << ',' << entry.distinct_tweets_retweeted << ','
        << entry.topics_appeared_in << ',' << buffer << '\n';
  }
}

}  // namespace trendkit
