#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trendkit/event.hpp"
#include "trendkit/trending.hpp"

namespace trendkit {

/// Per-user retweet behavior. ratio = R/U is the user-retweet ratio: the
/// retweet count over the number of distinct root authors retweeted. Values
/// near 1 mean broad retweeting; large values mean single-target
/// amplification.
struct RetweetProfile {
  std::string user_id;
  std::int64_t retweet_count = 0;    // R
  std::int64_t distinct_targets = 0; // U
  double ratio = 0.0;                // R / U, >= 1
};

/// One profile per user with >= 1 retweet event, keyed and ordered by user.
std::map<std::string, RetweetProfile> user_retweet_profiles(
    const EventStream& stream);

enum class AccountState { Active, Deleted, Unknown };

const char* account_state_name(AccountState state);

/// Pluggable account-status oracle: CSV file (user_id,status) with status in
/// {active, deleted, unknown}. Users absent from the map count as Unknown and
/// are never flagged by status.
std::map<std::string, AccountState> load_status_file(const std::string& path);

/// Allowlist: one user_id per line; listed users are never flagged.
std::set<std::string> load_allowlist(const std::string& path);

enum class SuspectReason { HighRatio, DeletedAccount, GroundTruth };

const char* suspect_reason_name(SuspectReason reason);

struct SuspectSet {
  std::map<std::string, std::vector<SuspectReason>> members;
  std::string policy;

  bool contains(const std::string& user_id) const {
    return members.count(user_id) > 0;
  }
  bool empty() const { return members.empty(); }
};

struct SpamPolicy {
  double ratio_threshold = 5.0;
  bool use_status = true;
};

/// HighRatio iff ratio >= threshold; DeletedAccount iff use_status and the
/// oracle says Deleted. Allowlisted users are exempt. Flagging is monotone in
/// the threshold.
SuspectSet flag_suspects(const std::map<std::string, RetweetProfile>& profiles,
                         const std::map<std::string, AccountState>& statuses,
                         const SpamPolicy& policy,
                         const std::set<std::string>& allowlist = {});

SuspectSet suspects_from_truth(const std::vector<std::string>& user_ids);

/// Half-open ratio band [lo, hi); hi may be +infinity.
struct RatioBand {
  double lo = 0.0;
  double hi = 0.0;
};

/// The paper-style banding: [30,inf), [20,30), [11,20), then unit bands
/// [10,11) down to [1,2).
std::vector<RatioBand> default_ratio_bands();

struct BandActivity {
  RatioBand band;
  std::size_t users = 0;
  std::optional<double> active_pct;    // null row when the band is empty
  std::optional<double> inactive_pct;  // Deleted + Unknown
};

/// Percentage of Active vs not-Active accounts per ratio band. Bands must be
/// disjoint and cover every observed ratio.
std::vector<BandActivity> active_fraction_by_ratio(
    const std::map<std::string, RetweetProfile>& profiles,
    const std::map<std::string, AccountState>& statuses,
    const std::vector<RatioBand>& bands);

struct RemovalReport {
  std::int64_t removed_retweets = 0;
  std::int64_t removed_originals = 0;
  double removed_fraction_of_retweets = 0.0;
  double removed_fraction_of_all_tweets = 0.0;
  double suspects_fraction_of_users = 0.0;
  std::int64_t remaining_events = 0;
  std::int64_t remaining_retweets = 0;
  std::int64_t remaining_originals = 0;
};

/// Drops (a) retweets authored by suspects, (b) originals authored by
/// suspects, (c) retweets whose root author is a suspect. Fractions are
/// relative to the input stream. Throws EmptySuspects.
std::pair<EventStream, RemovalReport> remove_spam(const EventStream& stream,
                                                  const SuspectSet& suspects);

struct ImpactReport {
  std::int64_t retweeted_authors = 0;
  std::int64_t retweeted_authors_touched = 0;
  double fraction_retweeted_authors_touched = 0.0;
  std::int64_t trending_keywords = 0;
  std::int64_t trending_keywords_touched = 0;
  double fraction_trending_keywords_touched = 0.0;
};

/// How far suspect activity reaches: the share of retweeted authors that at
/// least one suspect retweeted, and the share of trending keywords carried by
/// suspect-authored retweets.
ImpactReport trendsetter_impact(const EventStream& stream,
                                const SuspectSet& suspects,
                                const std::set<std::string>& trending_keywords);

struct TrendsetterEntry {
  std::string root_author_id;
  std::int64_t times_retweeted = 0;
  std::int64_t distinct_tweets_retweeted = 0;
  std::int64_t topics_appeared_in = 0;
  double score = 0.0;  // times_retweeted / topics_appeared_in
};

/// Authors ranked by retweets-per-trending-topic, descending. Authors in
/// fewer than min_topics trending topics are excluded.
std::vector<TrendsetterEntry> rank_trendsetters(
    const EventStream& stream, const std::vector<TrendEpisode>& episodes,
    std::int64_t min_topics = 10);

struct BurstFeatures {
  std::optional<double> median_intra_burst_gap;  // null when all bursts are singletons
  std::int64_t burst_count = 0;
  std::int64_t max_repeats_one_root = 0;
};

/// Bursts are maximal runs of the user's retweets with inter-event gaps
/// <= burst_gap seconds. Throws TooFewEvents when the user has < 2 retweets.
BurstFeatures burst_features(const EventStream& stream,
                             const std::string& user_id,
                             std::int64_t burst_gap = 60);

// JSON/CSV emission.
void write_profiles_csv(const std::map<std::string, RetweetProfile>& profiles,
                        const std::string& path);
std::string suspects_json(const SuspectSet& suspects);
std::string removal_report_json(const RemovalReport& report);
std::string impact_report_json(const ImpactReport& report);
void write_band_activity_csv(const std::vector<BandActivity>& rows,
                             const std::string& path);
void write_trendsetters_csv(const std::vector<TrendsetterEntry>& entries,
                            const std::string& path);

}  // namespace trendkit
