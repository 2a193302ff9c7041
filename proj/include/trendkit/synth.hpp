#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trendkit/event.hpp"
#include "trendkit/growth.hpp"
#include "trendkit/spamdetect.hpp"

namespace trendkit {

/// Multiplicative growth-with-decay topic model. Interval 1 gets seed_count
/// events; for t >= 2,
///
///   n(t) = round(N(t-1) * X_t * t^(-decay_theta)),   ln X_t ~ Normal(mu, sigma)
///
/// where N is the cumulative count. New activity is proportional to the
/// audience accumulated so far, scaled by a random growth factor and a
/// novelty-decay term, which makes cumulative ratios N(t_i)/N(t_j)
/// log-normal across topics.
struct OrganicTopicParams {
  std::string topic = "topic";
  std::int64_t start_time = 0;
  int intervals = 12;            // T
  std::int64_t seed_count = 5;   // n_1
  double growth_mu = 0.05;
  double growth_sigma = 0.3;
  double decay_theta = 0.5;
  double retweet_share = 0.65;
  int author_pool = 200;
  std::int64_t interval_width = 600;
  // Caps retweets authored per organic user, so organic user-retweet ratios
  // are bounded by construction (the pool grows when saturated).
  int max_retweets_per_user = 4;
};

/// Author id of a generated topic's first original post (the bot target).
std::string organic_seed_author(const std::string& topic);

/// Deterministic given (params, seed). Events come out in (timestamp,
/// event_id) order; the first event is an original; retweet roots are drawn
/// uniformly from the topic's earlier originals.
std::vector<PostEvent> generate_organic_topic(const OrganicTopicParams& params,
                                              std::uint64_t seed);

/// A coordinated amplification campaign: n_bots accounts each retweet the
/// target's earliest original post in bursts_per_bot bursts of burst_size,
/// intra_burst_gap seconds apart within a burst and inter_burst_gap seconds
/// between bursts.
struct BotScenario {
  int n_bots = 5;
  std::string target_author;
  int bursts_per_bot = 2;
  int burst_size = 20;
  std::int64_t intra_burst_gap = 3;
  std::int64_t inter_burst_gap = 3600;
};

enum class TruthLabel { Bot, Organic };

const char* truth_label_name(TruthLabel label);

/// Event stream plus ground-truth labels for every author, and per generated
/// topic its t0 anchor (generation start time).
struct LabeledCorpus {
  EventStream stream;
  std::map<std::string, TruthLabel> truth;
  std::vector<TopicAnchor> anchors;
  std::vector<BotScenario> scenarios;
};

LabeledCorpus label_all_organic(EventStream stream);

/// Adds bot accounts per the scenario. Existing labels are preserved; new bot
/// authors are labeled Bot. Deterministic given seed. Throws TargetNotFound
/// when the target author has no original post in the stream.
LabeledCorpus inject_bots(const LabeledCorpus& corpus,
                          const BotScenario& scenario, std::uint64_t seed);
LabeledCorpus inject_bots(const EventStream& stream, const BotScenario& scenario,
                          std::uint64_t seed);

/// Whole-corpus scenario: `topics` organic topics (named t0..tN-1, started
/// uniformly inside [0, start_spread]), optionally with a bot campaign
/// against a fraction of them. Bot volume comes from bot_template.n_bots per
/// infested topic, or is auto-sized so bots contribute
/// bot_retweet_share_target of all retweets.
struct CorpusScenario {
  int topics = 500;
  OrganicTopicParams organic;
  std::int64_t start_spread = 0;
  double infested_topic_fraction = 0.0;
  std::optional<BotScenario> bot_template;
  std::optional<double> bot_retweet_share_target;
};

LabeledCorpus generate_corpus(const CorpusScenario& scenario,
                              std::uint64_t master_seed);

/// Scenario file: JSON mirroring CorpusScenario (see README for the schema).
CorpusScenario load_scenario(const std::string& path);

struct DetectionReport {
  std::optional<double> precision;  // null when nothing was flagged
  double recall = 0.0;
  std::int64_t true_positives = 0;
  std::int64_t false_positives = 0;
  std::int64_t false_negatives = 0;
  std::int64_t true_negatives = 0;
  std::int64_t flagged = 0;
  std::int64_t bots = 0;
};

DetectionReport evaluate_detection(const LabeledCorpus& corpus,
                                   const SuspectSet& suspects);

std::string detection_report_json(const DetectionReport& report);

void write_truth_csv(const std::map<std::string, TruthLabel>& truth,
                     const std::string& path);
std::map<std::string, TruthLabel> load_truth_csv(const std::string& path);

}  // namespace trendkit
