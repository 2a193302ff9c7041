// Acceptance suite: one pass/fail line per criterion.
//
// Usage: acceptance [N...]   (no args runs all criteria)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trendkit/cli.hpp"
#include "trendkit/error.hpp"
#include "trendkit/event.hpp"
#include "trendkit/growth.hpp"
#include "trendkit/ingest.hpp"
#include "trendkit/rng.hpp"
#include "trendkit/spamdetect.hpp"
#include "trendkit/statfit.hpp"
#include "trendkit/synth.hpp"
#include "trendkit/trending.hpp"

namespace {

using namespace trendkit;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

PostEvent make_original(std::string id, std::int64_t ts, std::string author,
                        std::vector<std::string> topics) {
  PostEvent event;
  event.event_id = std::move(id);
  event.timestamp = ts;
  event.author_id = std::move(author);
  event.kind = EventKind::Original;
  event.topic_keys = std::move(topics);
  std::sort(event.topic_keys.begin(), event.topic_keys.end());
  return event;
}

PostEvent make_retweet(std::string id, std::int64_t ts, std::string author,
                       std::string root_post, std::string root_author,
                       std::vector<std::string> topics) {
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

EventStream stream_of(std::vector<PostEvent> events) {
  EventStream stream;
  stream.events = std::move(events);
  stream.metadata.source = "fixture";
  finalize_stream(stream);
  return stream;
}

EventStream random_stream(Rng& rng, std::size_t max_events, int topics,
                          std::int64_t horizon) {
  const std::size_t count = 20 + rng.below(max_events - 19);
  std::vector<PostEvent> events;
  events.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const std::int64_t ts = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(horizon)));
    const std::string topic =
        "top" + std::to_string(rng.below(static_cast<std::uint64_t>(topics)));
    const std::string author = "user" + std::to_string(rng.below(40));
    if (rng.uniform() < 0.6 && n > 0) {
      events.push_back(make_retweet("ev" + std::to_string(n), ts, author,
                                    "post" + std::to_string(rng.below(30)),
                                    "root" + std::to_string(rng.below(20)),
                                    {topic}));
    } else {
      events.push_back(make_original("ev" + std::to_string(n), ts, author,
                                     {topic}));
    }
  }
  return stream_of(std::move(events));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("trendkit_acc_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

CorpusScenario organic_scenario() {
  CorpusScenario scenario;  // synth defaults: 500 topics, T=12, width 600
  return scenario;
}

CorpusScenario infested_scenario() {
  CorpusScenario scenario;
  scenario.infested_topic_fraction = 0.4;
  scenario.bot_template = BotScenario{};  // 2 bursts x 20, gaps 3 s / 3600 s
  scenario.bot_retweet_share_target = 1.0 / 3.0;
  return scenario;
}

double bot_retweet_share(const LabeledCorpus& corpus) {
  std::int64_t bot_retweets = 0;
  std::int64_t retweets = 0;
  for (const PostEvent& event : corpus.stream.events) {
    if (event.kind != EventKind::Retweet) continue;
    ++retweets;
    auto it = corpus.truth.find(event.author_id);
    if (it != corpus.truth.end() && it->second == TruthLabel::Bot) ++bot_retweets;
  }
  return retweets == 0 ? 0.0
                       : static_cast<double>(bot_retweets) /
                             static_cast<double>(retweets);
}

KsResult ks_of(const std::vector<double>& values) {
  const LognormalFit fit = fit_lognormal(values);
  return ks_test_lognormal(values, fit);
}

// ---------------------------------------------------------------------------
// criterion 1: cumulative_series vs brute-force prefix-sum oracle
// ---------------------------------------------------------------------------

bool criterion_1(std::string& detail) {
  Rng rng(101);
  for (int run = 0; run < 100; ++run) {
    const EventStream stream = random_stream(rng, 1000, 8, 36000);
    const std::string topic = "top" + std::to_string(rng.below(8));
    const std::int64_t t0 = static_cast<std::int64_t>(rng.below(3600));
    const std::int64_t width = 60 + static_cast<std::int64_t>(rng.below(600));
    for (Subset subset :
         {Subset::All, Subset::OriginalOnly, Subset::RetweetOnly}) {
      const CumulativeSeries series =
          cumulative_series(stream, topic, t0, width, subset);

      // Oracle: full rescan per interval, then running prefix sum.
      const std::size_t intervals = series.intervals();
      std::vector<std::int64_t> oracle_counts(intervals, 0);
      for (std::size_t i = 0; i < intervals; ++i) {
        const std::int64_t lo = t0 + static_cast<std::int64_t>(i) * width;
        const std::int64_t hi = lo + width;
        for (const PostEvent& event : stream.events) {
          const bool in_subset =
              subset == Subset::All ||
              (subset == Subset::OriginalOnly &&
               event.kind == EventKind::Original) ||
              (subset == Subset::RetweetOnly && event.kind == EventKind::Retweet);
          if (in_subset && event.has_topic(topic) && event.timestamp >= lo &&
              event.timestamp < hi) {
            ++oracle_counts[i];
          }
        }
      }
      std::vector<std::int64_t> oracle_cumulative(intervals, 0);
      std::int64_t running = 0;
      for (std::size_t i = 0; i < intervals; ++i) {
        running += oracle_counts[i];
        oracle_cumulative[i] = running;
      }
      if (series.interval_counts != oracle_counts ||
          series.cumulative != oracle_cumulative) {
        detail = "mismatch at run " + std::to_string(run);
        return false;
      }
      // And the covered range catches every matching event at/after t0.
      std::int64_t expected_total = 0;
      for (const PostEvent& event : stream.events) {
        const bool in_subset =
            subset == Subset::All ||
            (subset == Subset::OriginalOnly &&
             event.kind == EventKind::Original) ||
            (subset == Subset::RetweetOnly && event.kind == EventKind::Retweet);
        if (in_subset && event.has_topic(topic) && event.timestamp >= t0) {
          ++expected_total;
        }
      }
      if (series.cumulative.back() != expected_total) {
        detail = "total mismatch at run " + std::to_string(run);
        return false;
      }
    }
  }
  detail = "100 random streams, 3 subsets each, exact";
  return true;
}

// ---------------------------------------------------------------------------
// criterion 2: log-normal emergence on organic corpora
// ---------------------------------------------------------------------------

bool criterion_2(std::string& detail) {
  int pass_10_2 = 0;
  int pass_8_3 = 0;
  const CorpusScenario scenario = organic_scenario();
  for (int run = 0; run < 100; ++run) {
    const LabeledCorpus corpus =
        generate_corpus(scenario, 0xC2000u + static_cast<std::uint64_t>(run));
    const RatioSample s_10_2 = ratio_distribution(
        corpus.stream, corpus.anchors, {10, 2}, 600, Subset::All);
    const RatioSample s_8_3 = ratio_distribution(
        corpus.stream, corpus.anchors, {8, 3}, 600, Subset::All);
    if (ks_of(s_10_2.values).passed) ++pass_10_2;
    if (ks_of(s_8_3.values).passed) ++pass_8_3;
  }
  detail = "C(10,2) passed " + std::to_string(pass_10_2) + "/100, C(8,3) passed " +
           std::to_string(pass_8_3) + "/100 (need >= 90)";
  return pass_10_2 >= 90 && pass_8_3 >= 90;
}

// ---------------------------------------------------------------------------
// criteria 3-5 share the spam-injected corpus family
// ---------------------------------------------------------------------------

struct FamilyResults {
  int runs = 0;
  int ret_failed = 0;
  int orig_passed = 0;
  int d_decreased = 0;
  int after_passed = 0;
  double min_share = 1.0;
  double min_precision = 1.0;
  double min_recall = 1.0;
  std::int64_t pooled_tp = 0, pooled_fp = 0, pooled_fn = 0;
  bool computed = false;
};

const FamilyResults& family_results() {
  static FamilyResults results;
  if (results.computed) return results;
  const CorpusScenario scenario = infested_scenario();
  for (int run = 0; run < 100; ++run) {
    const LabeledCorpus corpus =
        generate_corpus(scenario, 0xC345u + static_cast<std::uint64_t>(run));
    results.min_share = std::min(results.min_share, bot_retweet_share(corpus));

    const RatioSample ret_before = ratio_distribution(
        corpus.stream, corpus.anchors, {10, 2}, 600, Subset::RetweetOnly);
    const RatioSample orig = ratio_distribution(
        corpus.stream, corpus.anchors, {10, 2}, 600, Subset::OriginalOnly);
    const KsResult ks_before = ks_of(ret_before.values);
    if (!ks_before.passed) ++results.ret_failed;
    if (ks_of(orig.values).passed) ++results.orig_passed;

    // ground-truth removal
    std::vector<std::string> bots;
    for (const auto& [user, label] : corpus.truth) {
      if (label == TruthLabel::Bot) bots.push_back(user);
    }
    const SuspectSet truth_suspects = suspects_from_truth(bots);
    const auto [cleaned, report] = remove_spam(corpus.stream, truth_suspects);
    const RatioSample ret_after = ratio_distribution(
        cleaned, corpus.anchors, {10, 2}, 600, Subset::RetweetOnly);
    const KsResult ks_after = ks_of(ret_after.values);
    if (ks_after.d_stat < ks_before.d_stat) ++results.d_decreased;
    if (ks_after.passed) ++results.after_passed;

    // detection at the default threshold
    const auto profiles = user_retweet_profiles(corpus.stream);
    const SuspectSet flagged =
        flag_suspects(profiles, {}, SpamPolicy{5.0, false});
    const DetectionReport detection = evaluate_detection(corpus, flagged);
    results.pooled_tp += detection.true_positives;
    results.pooled_fp += detection.false_positives;
    results.pooled_fn += detection.false_negatives;
    if (detection.precision.has_value()) {
      results.min_precision = std::min(results.min_precision, *detection.precision);
    } else {
      results.min_precision = 0.0;
    }
    results.min_recall = std::min(results.min_recall, detection.recall);
    ++results.runs;
  }
  results.computed = true;
  return results;
}

bool criterion_3(std::string& detail) {
  const FamilyResults& results = family_results();
  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "retweet-only failed %d/100, original-only passed %d/100 "
                "(need >= 90), min bot share %.3f (need >= 0.30)",
                results.ret_failed, results.orig_passed, results.min_share);
  detail = buffer;
  return results.ret_failed >= 90 && results.orig_passed >= 90 &&
         results.min_share >= 0.30;
}

bool criterion_4(std::string& detail) {
  const FamilyResults& results = family_results();
  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "KS statistic decreased %d/100 (need 100), cleaned sample "
                "passed %d/100 (need >= 90)",
                results.d_decreased, results.after_passed);
  detail = buffer;
  return results.d_decreased == 100 && results.after_passed >= 90;
}

bool criterion_5(std::string& detail) {
  const FamilyResults& results = family_results();
  const double pooled_precision =
      static_cast<double>(results.pooled_tp) /
      static_cast<double>(results.pooled_tp + results.pooled_fp);
  const double pooled_recall =
      static_cast<double>(results.pooled_tp) /
      static_cast<double>(results.pooled_tp + results.pooled_fn);
  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "pooled precision %.4f recall %.4f over 100 seeds (need >= "
                "0.95), per-run minima %.4f / %.4f",
                pooled_precision, pooled_recall, results.min_precision,
                results.min_recall);
  detail = buffer;
  return pooled_precision >= 0.95 && pooled_recall >= 0.95;
}

// ---------------------------------------------------------------------------
// criterion 6: estimator recovery
// ---------------------------------------------------------------------------

bool criterion_6(std::string& detail) {
  Rng rng(606);
  std::vector<double> pareto_draws(10000);
  for (double& x : pareto_draws) x = rng.pareto(2.5, 1.0);
  const PowerlawFit powerlaw = fit_powerlaw(pareto_draws, 1.0);

  std::vector<double> lognormal_draws(10000);
  for (double& x : lognormal_draws) x = rng.lognormal(0.4, 0.7);
  const LognormalFit lognormal = fit_lognormal(lognormal_draws);

  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "alpha %.4f (true 2.5 +/- 0.1), mu %.4f (0.4 +/- 0.03), sigma "
                "%.4f (0.7 +/- 0.03)",
                powerlaw.alpha, lognormal.mu, lognormal.sigma);
  detail = buffer;
  return std::abs(powerlaw.alpha - 2.5) <= 0.1 &&
         std::abs(lognormal.mu - 0.4) <= 0.03 &&
         std::abs(lognormal.sigma - 0.7) <= 0.03;
}

// ---------------------------------------------------------------------------
// criterion 7: fixture-exact arithmetic
// ---------------------------------------------------------------------------

bool criterion_7(std::string& detail) {
  // (a) one user, 134 retweets of a single author
  {
    std::vector<PostEvent> events;
    for (int n = 0; n < 134; ++n) {
      events.push_back(make_retweet("rt" + std::to_string(n), 100 + n,
                                    "1840241580", "post" + std::to_string(n % 5),
                                    "celeb", {"gala"}));
    }
    const auto profiles = user_retweet_profiles(stream_of(std::move(events)));
    const RetweetProfile& profile = profiles.at("1840241580");
    if (profile.retweet_count != 134 || profile.distinct_targets != 1 ||
        profile.ratio != 134.0) {
      detail = "(a) failed: ratio " + std::to_string(profile.ratio);
      return false;
    }
  }

  // (b) status fixture: 12%/88% in band >= 30, 96%/4% in band [2, 3)
  {
    std::vector<PostEvent> events;
    std::map<std::string, AccountState> statuses;
    int id = 0;
    for (int u = 0; u < 100; ++u) {
      const std::string user = "hi" + std::to_string(u);
      for (int n = 0; n < 40; ++n) {
        ++id;
        events.push_back(make_retweet("b" + std::to_string(id), 1000 + id,
                                      user, "p" + std::to_string(n), "star",
                                      {"show"}));
      }
      statuses[user] = u < 12 ? AccountState::Active : AccountState::Deleted;
    }
    for (int u = 0; u < 100; ++u) {
      const std::string user = "lo" + std::to_string(u);
      for (int n = 0; n < 2; ++n) {
        ++id;
        events.push_back(make_retweet("c" + std::to_string(id), 2000 + id,
                                      user, "q" + std::to_string(n), "star2",
                                      {"show"}));
      }
      statuses[user] = u < 96 ? AccountState::Active : AccountState::Deleted;
    }
    const auto profiles = user_retweet_profiles(stream_of(std::move(events)));
    const auto rows =
        active_fraction_by_ratio(profiles, statuses, default_ratio_bands());
    double active_30 = -1.0, inactive_30 = -1.0, active_2 = -1.0,
           inactive_2 = -1.0;
    for (const BandActivity& row : rows) {
      if (row.band.lo == 30.0 && row.users > 0) {
        active_30 = *row.active_pct;
        inactive_30 = *row.inactive_pct;
      }
      if (row.band.lo == 2.0 && row.users > 0) {
        active_2 = *row.active_pct;
        inactive_2 = *row.inactive_pct;
      }
    }
    if (active_30 != 12.0 || inactive_30 != 88.0 || active_2 != 96.0 ||
        inactive_2 != 4.0) {
      detail = "(b) failed: " + std::to_string(active_30) + "/" +
               std::to_string(inactive_30) + ", " + std::to_string(active_2) +
               "/" + std::to_string(inactive_2);
      return false;
    }
  }

  // (c) suspects own exactly 49 of 100 retweets
  {
    std::vector<PostEvent> events;
    std::vector<std::string> suspect_ids;
    int id = 0;
    for (int s = 0; s < 7; ++s) {
      const std::string user = "spam" + std::to_string(s);
      suspect_ids.push_back(user);
      for (int n = 0; n < 7; ++n) {
        ++id;
        events.push_back(make_retweet("s" + std::to_string(id), 500 + id,
                                      user, "p" + std::to_string(n),
                                      "clean-root", {"buzz"}));
      }
    }
    for (int o = 0; o < 51; ++o) {
      ++id;
      events.push_back(make_retweet("o" + std::to_string(id), 900 + id,
                                    "fan" + std::to_string(o),
                                    "p" + std::to_string(o % 7), "clean-root",
                                    {"buzz"}));
    }
    for (int o = 0; o < 20; ++o) {
      ++id;
      events.push_back(make_original("g" + std::to_string(id), 300 + id,
                                     "writer" + std::to_string(o), {"buzz"}));
    }
    const EventStream stream = stream_of(std::move(events));
    const auto [cleaned, report] =
        remove_spam(stream, suspects_from_truth(suspect_ids));
    if (report.removed_retweets != 49 ||
        report.removed_fraction_of_retweets != 0.49) {
      detail = "(c) failed: fraction " +
               std::to_string(report.removed_fraction_of_retweets);
      return false;
    }
    if (static_cast<std::size_t>(report.remaining_events) !=
        cleaned.events.size()) {
      detail = "(c) failed: conservation";
      return false;
    }
  }

  // (d) 1194999 retweets across 12 trending topics -> score 99583.25
  {
    std::vector<std::string> topics;
    for (int t = 0; t < 12; ++t) topics.push_back("tk" + std::to_string(t));
    std::vector<PostEvent> events;
    events.reserve(1194999);
    for (int n = 0; n < 1194999; ++n) {
      events.push_back(make_retweet(
          "d" + std::to_string(n), n % 3600,
          "fan" + std::to_string(n % 50000), "p" + std::to_string(n % 37),
          "magazine", {topics[static_cast<std::size_t>(n % 12)]}));
    }
    const EventStream stream = stream_of(std::move(events));
    const auto episodes = build_episodes(compute_snapshots(stream, 50));
    const auto ranking = rank_trendsetters(stream, episodes, 10);
    if (ranking.empty() || ranking[0].root_author_id != "magazine" ||
        ranking[0].times_retweeted != 1194999 ||
        ranking[0].topics_appeared_in != 12 ||
        ranking[0].distinct_tweets_retweeted != 37 ||
        ranking[0].score != 1194999.0 / 12.0) {
      detail = "(d) failed";
      return false;
    }
  }

  detail = "ratio 134, bands 12/88 and 96/4, removal 0.49, score 1194999/12";
  return true;
}

// ---------------------------------------------------------------------------
// criterion 8: trending snapshots and episodes vs oracles
// ---------------------------------------------------------------------------

bool criterion_8(std::string& detail) {
  Rng rng(808);
  for (int run = 0; run < 100; ++run) {
    const EventStream stream = random_stream(rng, 400, 12, 48 * 3600);
    const int k = 1 + static_cast<int>(rng.below(6));
    const auto snapshots = compute_snapshots(stream, k);

    // Oracle: per-hour exhaustive count, sort, truncate.
    std::map<std::int64_t, std::map<std::string, std::int64_t>> hour_counts;
    for (const PostEvent& event : stream.events) {
      for (const std::string& topic : event.topic_keys) {
        ++hour_counts[event.timestamp / 3600 * 3600][topic];
      }
    }
    const std::int64_t first = stream.events.front().timestamp / 3600 * 3600;
    const std::int64_t last = stream.events.back().timestamp / 3600 * 3600;
    std::size_t index = 0;
    for (std::int64_t hour = first; hour <= last; hour += 3600, ++index) {
      if (index >= snapshots.size() || snapshots[index].hour_start != hour) {
        detail = "missing hour " + std::to_string(hour);
        return false;
      }
      std::vector<std::pair<std::string, std::int64_t>> expected;
      if (auto it = hour_counts.find(hour); it != hour_counts.end()) {
        expected.assign(it->second.begin(), it->second.end());
      }
      std::stable_sort(expected.begin(), expected.end(),
                       [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                       });
      if (expected.size() > static_cast<std::size_t>(k)) {
        expected.resize(static_cast<std::size_t>(k));
      }
      if (snapshots[index].ranked != expected) {
        detail = "rank mismatch at hour " + std::to_string(hour);
        return false;
      }
    }
    if (index != snapshots.size()) {
      detail = "extra snapshots";
      return false;
    }

    // Episode oracle: per-topic appearance hours from the oracle snapshots.
    std::map<std::string, std::vector<std::int64_t>> appearances;
    for (std::int64_t hour = first; hour <= last; hour += 3600) {
      auto it = hour_counts.find(hour);
      if (it == hour_counts.end()) continue;
      std::vector<std::pair<std::string, std::int64_t>> ranked(
          it->second.begin(), it->second.end());
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                       });
      if (ranked.size() > static_cast<std::size_t>(k)) {
        ranked.resize(static_cast<std::size_t>(k));
      }
      for (const auto& [topic, count] : ranked) {
        appearances[topic].push_back(hour);
      }
    }
    const auto episodes = build_episodes(snapshots);
    if (episodes.size() != appearances.size()) {
      detail = "episode count mismatch";
      return false;
    }
    for (const TrendEpisode& episode : episodes) {
      const auto& hours = appearances.at(episode.topic);
      std::int64_t gaps = 0;
      for (std::size_t i = 1; i < hours.size(); ++i) {
        if (hours[i] - hours[i - 1] > 3600) ++gaps;
      }
      if (episode.hours_on_list != static_cast<std::int64_t>(hours.size()) ||
          episode.reappearances != gaps) {
        detail = "episode stats mismatch for " + episode.topic;
        return false;
      }
    }
  }
  detail = "100 random streams, snapshots and episodes match oracles";
  return true;
}

// ---------------------------------------------------------------------------
// criterion 9: byte-identical reruns through the CLI
// ---------------------------------------------------------------------------

bool criterion_9(std::string& detail) {
  TempDir dir("det");
  const fs::path scenario_path = dir.path / "scenario.json";
  {
    std::ofstream out(scenario_path);
    out << R"({"topics": 40,
               "organic": {"intervals": 12, "seed_count": 10},
               "bots": {"infested_topic_fraction": 0.4,
                        "retweet_share_target": 0.33}})";
  }
  const std::string sim_a = (dir.path / "sim_a").string();
  const std::string sim_b = (dir.path / "sim_b").string();
  for (const std::string& out : {sim_a, sim_b}) {
    const int rc = run_command({"simulate", "--scenario", scenario_path.string(),
                                "--seed", "7", "--out", out});
    if (rc != 0) {
      detail = "simulate exited " + std::to_string(rc);
      return false;
    }
  }
  for (const char* name : {"corpus.jsonl", "truth.csv", "corpus_summary.json"}) {
    if (read_file(fs::path(sim_a) / name) != read_file(fs::path(sim_b) / name)) {
      detail = std::string("simulate outputs differ: ") + name;
      return false;
    }
  }

  const std::string eval_a = (dir.path / "eval_a").string();
  const std::string eval_b = (dir.path / "eval_b").string();
  for (const std::string& out : {eval_a, eval_b}) {
    const int rc = run_command({"evaluate", "--input", sim_a + "/corpus.jsonl",
                                "--truth", sim_a + "/truth.csv", "--out", out});
    if (rc != 0) {
      detail = "evaluate exited " + std::to_string(rc);
      return false;
    }
  }
  if (read_file(fs::path(eval_a) / "evaluation.json") !=
      read_file(fs::path(eval_b) / "evaluation.json")) {
    detail = "evaluate outputs differ";
    return false;
  }

  // Re-running into the same directory must reproduce the manifest too.
  const std::string manifest_before = read_file(fs::path(sim_a) / "manifest.json");
  run_command({"simulate", "--scenario", scenario_path.string(), "--seed", "7",
               "--out", sim_a});
  if (read_file(fs::path(sim_a) / "manifest.json") != manifest_before) {
    detail = "manifest differs on rerun";
    return false;
  }
  detail = "simulate and evaluate reruns byte-identical";
  return true;
}

struct Criterion {
  int number;
  const char* name;
  bool (*run)(std::string& detail);
};

const Criterion kCriteria[] = {
    {1, "cumulative series oracle equivalence", criterion_1},
    {2, "log-normal emergence of ratio distributions", criterion_2},
    {3, "spam signature in retweet-only ratios", criterion_3},
    {4, "distribution recovery after spam removal", criterion_4},
    {5, "detection precision and recall", criterion_5},
    {6, "power-law and log-normal estimator recovery", criterion_6},
    {7, "fixture-exact arithmetic", criterion_7},
    {8, "trending snapshots and episodes oracle", criterion_8},
    {9, "seeded runs are byte-identical", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_passed = true;
  for (const Criterion& criterion : kCriteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
    }
    std::printf("criterion %d %s — %s: %s\n", criterion.number,
                passed ? "PASS" : "FAIL", criterion.name, detail.c_str());
    std::fflush(stdout);
    all_passed = all_passed && passed;
  }
  return all_passed ? 0 : 1;
}
