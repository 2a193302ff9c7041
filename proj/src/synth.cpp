#include "trendkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"
#include "trendkit/rng.hpp"

namespace trendkit {

namespace {

// Hard stop against runaway growth parameters before llround overflows.
constexpr std::int64_t kMaxTopicEvents = 50'000'000;

std::string padded_index(std::size_t index) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%06zu", index);
  return buffer;
}

void validate_params(const OrganicTopicParams& params) {
  if (params.topic.empty()) {
    throw Error(ErrorCode::ParamError, "topic key must be non-empty");
  }
  if (params.start_time < 0) {
    throw Error(ErrorCode::ParamError, "start_time must be >= 0");
  }
  if (params.intervals < 2) {
    throw Error(ErrorCode::ParamError, "intervals must be >= 2");
  }
  if (params.seed_count < 1) {
    throw Error(ErrorCode::ParamError, "seed_count must be >= 1");
  }
  if (!(params.growth_sigma > 0.0)) {
    throw Error(ErrorCode::ParamError, "growth_sigma must be > 0");
  }
  if (params.decay_theta < 0.0) {
    throw Error(ErrorCode::ParamError, "decay_theta must be >= 0");
  }
  if (params.retweet_share < 0.0 || params.retweet_share > 1.0) {
    throw Error(ErrorCode::ParamError, "retweet_share must be in [0, 1]");
  }
  if (params.author_pool < 1) {
    throw Error(ErrorCode::ParamError, "author_pool must be >= 1");
  }
  if (params.interval_width < 1) {
    throw Error(ErrorCode::ParamError, "interval_width must be >= 1");
  }
  if (params.max_retweets_per_user < 1) {
    throw Error(ErrorCode::ParamError, "max_retweets_per_user must be >= 1");
  }
}

void validate_scenario(const BotScenario& scenario) {
  if (scenario.n_bots < 0) {
    throw Error(ErrorCode::ParamError, "n_bots must be >= 0");
  }
  if (scenario.bursts_per_bot < 1) {
    throw Error(ErrorCode::ParamError, "bursts_per_bot must be >= 1");
  }
  if (scenario.burst_size < 2) {
    throw Error(ErrorCode::ParamError, "burst_size must be >= 2");
  }
  if (scenario.intra_burst_gap < 0) {
    throw Error(ErrorCode::ParamError, "intra_burst_gap must be >= 0");
  }
  if (scenario.intra_burst_gap >= scenario.inter_burst_gap) {
    throw Error(ErrorCode::ParamError,
                "intra_burst_gap must be smaller than inter_burst_gap");
  }
}

struct BotBatch {
  std::vector<PostEvent> events;
  std::vector<std::string> authors;
};

// Emits one campaign's retweet events against `root`. Registries keep ids and
// author names unique across campaigns.
BotBatch make_bot_events(const PostEvent& root, const BotScenario& scenario,
                         Rng& rng, std::unordered_set<std::string>& authors_in_use,
                         std::unordered_set<std::string>& ids_in_use) {
  BotBatch batch;
  for (int k = 0; k < scenario.n_bots; ++k) {
    std::string author = "bot-" + root.author_id + "-" + std::to_string(k);
    while (!authors_in_use.insert(author).second) author += "x";
    batch.authors.push_back(author);

    std::int64_t t = root.timestamp + 1 + k +
                     static_cast<std::int64_t>(rng.below(30));
    std::size_t counter = 0;
    for (int burst = 0; burst < scenario.bursts_per_bot; ++burst) {
      for (int s = 0; s < scenario.burst_size; ++s) {
        PostEvent event;
        event.event_id = author + "-e" + padded_index(counter++);
        while (!ids_in_use.insert(event.event_id).second) event.event_id += "x";
        event.timestamp = t;
        event.author_id = author;
        event.kind = EventKind::Retweet;
        event.root_post_id = root.event_id;
        event.root_author_id = root.author_id;
        event.topic_keys = root.topic_keys;
        event.comment_text = "...";
        batch.events.push_back(std::move(event));
        if (s + 1 < scenario.burst_size) t += scenario.intra_burst_gap;
      }
      if (burst + 1 < scenario.bursts_per_bot) t += scenario.inter_burst_gap;
    }
  }
  return batch;
}

const PostEvent* find_earliest_original(const EventStream& stream,
                                        const std::string& author) {
  for (const PostEvent& event : stream.events) {
    if (event.kind == EventKind::Original && event.author_id == author) {
      return &event;
    }
  }
  return nullptr;
}

}  // namespace

std::string organic_seed_author(const std::string& topic) {
  return "u-" + topic + "-0";
}

std::vector<PostEvent> generate_organic_topic(const OrganicTopicParams& params,
                                              std::uint64_t seed) {
  validate_params(params);
  Rng rng(seed);

  // Interval counts from the growth model.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(params.intervals), 0);
  counts[0] = params.seed_count;
  std::int64_t cumulative = params.seed_count;
  for (int t = 2; t <= params.intervals; ++t) {
    const double factor = std::exp(rng.normal(params.growth_mu, params.growth_sigma));
    const double decay = std::pow(static_cast<double>(t), -params.decay_theta);
    const double expected = static_cast<double>(cumulative) * factor * decay;
    if (expected > static_cast<double>(kMaxTopicEvents)) {
      throw Error(ErrorCode::ParamError,
                  "topic '" + params.topic + "' grows past " +
                      std::to_string(kMaxTopicEvents) + " events");
    }
    const std::int64_t n = std::llround(expected);
    counts[static_cast<std::size_t>(t - 1)] = n;
    cumulative += n;
    if (cumulative > kMaxTopicEvents) {
      throw Error(ErrorCode::ParamError,
                  "topic '" + params.topic + "' grows past " +
                      std::to_string(kMaxTopicEvents) + " events");
    }
  }

  // Timestamps spread uniformly inside each interval.
  std::vector<std::int64_t> times;
  times.reserve(static_cast<std::size_t>(cumulative));
  for (int t = 1; t <= params.intervals; ++t) {
    const std::int64_t interval_start =
        params.start_time + static_cast<std::int64_t>(t - 1) * params.interval_width;
    for (std::int64_t c = 0; c < counts[static_cast<std::size_t>(t - 1)]; ++c) {
      times.push_back(interval_start +
                      static_cast<std::int64_t>(rng.below(
                          static_cast<std::uint64_t>(params.interval_width))));
    }
  }
  std::sort(times.begin(), times.end());

  // Kind, author and root assignment in time order.
  std::vector<std::pair<std::string, std::string>> originals;  // (id, author)
  std::vector<int> retweets_by_user;                           // per pool index
  std::vector<int> available;  // pool indices still under the retweet cap
  retweets_by_user.assign(static_cast<std::size_t>(params.author_pool), 0);
  available.resize(static_cast<std::size_t>(params.author_pool));
  for (int i = 0; i < params.author_pool; ++i) available[static_cast<std::size_t>(i)] = i;
  int next_user = params.author_pool;

  const std::string author_prefix = "u-" + params.topic + "-";
  const std::string event_prefix = params.topic + "-e";
  std::vector<std::string> author_names;
  author_names.reserve(static_cast<std::size_t>(params.author_pool));
  auto author_name = [&](int user) -> const std::string& {
    while (static_cast<std::size_t>(user) >= author_names.size()) {
      author_names.push_back(author_prefix +
                             std::to_string(author_names.size()));
    }
    return author_names[static_cast<std::size_t>(user)];
  };

  std::vector<PostEvent> events;
  events.reserve(times.size());
  for (std::size_t index = 0; index < times.size(); ++index) {
    PostEvent event;
    event.event_id = event_prefix + padded_index(index);
    event.timestamp = times[index];
    event.topic_keys = {params.topic};

    const bool retweet = index > 0 && !originals.empty() &&
                         rng.uniform() < params.retweet_share;
    if (retweet) {
      event.kind = EventKind::Retweet;
      const auto& [root_id, root_author] =
          originals[rng.below(originals.size())];
      event.root_post_id = root_id;
      event.root_author_id = root_author;

      if (available.empty()) {
        available.push_back(next_user);
        retweets_by_user.push_back(0);
        ++next_user;
      }
      const std::size_t pos = rng.below(available.size());
      const int user = available[pos];
      if (++retweets_by_user[static_cast<std::size_t>(user)] >=
          params.max_retweets_per_user) {
        available[pos] = available.back();
        available.pop_back();
      }
      event.author_id = author_name(user);
    } else {
      event.kind = EventKind::Original;
      const int user = index == 0
                           ? 0
                           : static_cast<int>(rng.below(
                                 static_cast<std::uint64_t>(params.author_pool)));
      event.author_id = author_name(user);
      originals.emplace_back(event.event_id, event.author_id);
    }
    events.push_back(std::move(event));
  }
  return events;
}

const char* truth_label_name(TruthLabel label) {
  return label == TruthLabel::Bot ? "bot" : "organic";
}

LabeledCorpus label_all_organic(EventStream stream) {
  LabeledCorpus corpus;
  corpus.stream = std::move(stream);
  for (const PostEvent& event : corpus.stream.events) {
    corpus.truth.emplace(event.author_id, TruthLabel::Organic);
  }
  return corpus;
}

LabeledCorpus inject_bots(const LabeledCorpus& corpus,
                          const BotScenario& scenario, std::uint64_t seed) {
  validate_scenario(scenario);
  const PostEvent* root =
      find_earliest_original(corpus.stream, scenario.target_author);
  if (root == nullptr) {
    throw Error(ErrorCode::TargetNotFound,
                "no original post by '" + scenario.target_author + "'");
  }

  std::unordered_set<std::string> authors;
  std::unordered_set<std::string> ids;
  authors.reserve(corpus.truth.size());
  ids.reserve(corpus.stream.events.size());
  for (const PostEvent& event : corpus.stream.events) {
    authors.insert(event.author_id);
    ids.insert(event.event_id);
  }

  Rng rng(seed);
  BotBatch batch = make_bot_events(*root, scenario, rng, authors, ids);

  LabeledCorpus result;
  result.stream.metadata.source = corpus.stream.metadata.source;
  result.stream.metadata.duplicates_dropped =
      corpus.stream.metadata.duplicates_dropped;
  result.stream.events = corpus.stream.events;
  result.stream.events.insert(result.stream.events.end(),
                              std::make_move_iterator(batch.events.begin()),
                              std::make_move_iterator(batch.events.end()));
  finalize_stream(result.stream);

  result.truth = corpus.truth;
  for (const PostEvent& event : result.stream.events) {
    result.truth.emplace(event.author_id, TruthLabel::Organic);
  }
  for (const std::string& bot : batch.authors) {
    result.truth[bot] = TruthLabel::Bot;
  }
  result.anchors = corpus.anchors;
  result.scenarios = corpus.scenarios;
  result.scenarios.push_back(scenario);
  return result;
}

LabeledCorpus inject_bots(const EventStream& stream, const BotScenario& scenario,
                          std::uint64_t seed) {
  return inject_bots(label_all_organic(stream), scenario, seed);
}

LabeledCorpus generate_corpus(const CorpusScenario& scenario,
                              std::uint64_t master_seed) {
  if (scenario.topics < 1) {
    throw Error(ErrorCode::ParamError, "topics must be >= 1");
  }
  if (scenario.start_spread < 0) {
    throw Error(ErrorCode::ParamError, "start_spread must be >= 0");
  }
  if (scenario.infested_topic_fraction < 0.0 ||
      scenario.infested_topic_fraction > 1.0) {
    throw Error(ErrorCode::ParamError,
                "infested_topic_fraction must be in [0, 1]");
  }

  LabeledCorpus corpus;
  corpus.stream.metadata.source = "synthetic";

  const bool want_bots =
      scenario.bot_template.has_value() && scenario.infested_topic_fraction > 0.0;
  if (want_bots) validate_scenario(*scenario.bot_template);

  std::unordered_map<std::string, PostEvent> topic_roots;
  std::int64_t organic_retweets = 0;
  for (int i = 0; i < scenario.topics; ++i) {
    OrganicTopicParams params = scenario.organic;
    params.topic = "t" + std::to_string(i);
    if (scenario.start_spread > 0) {
      params.start_time =
          scenario.organic.start_time +
          static_cast<std::int64_t>(
              mix_seed(master_seed, 0x535441ULL + static_cast<std::uint64_t>(i)) %
              static_cast<std::uint64_t>(scenario.start_spread + 1));
    }
    std::vector<PostEvent> events = generate_organic_topic(
        params, mix_seed(master_seed, static_cast<std::uint64_t>(i)));
    if (want_bots) topic_roots.emplace(params.topic, events.front());
    corpus.anchors.push_back({params.topic, params.start_time});
    for (const PostEvent& event : events) {
      if (event.kind == EventKind::Retweet) ++organic_retweets;
    }
    corpus.stream.events.insert(corpus.stream.events.end(),
                                std::make_move_iterator(events.begin()),
                                std::make_move_iterator(events.end()));
  }

  if (want_bots) {
    int infested = static_cast<int>(std::ceil(scenario.infested_topic_fraction *
                                              static_cast<double>(scenario.topics)));
    infested = std::min(infested, scenario.topics);

    // Seeded shuffle, first `infested` topics get a campaign.
    std::vector<int> indices(static_cast<std::size_t>(scenario.topics));
    for (int i = 0; i < scenario.topics; ++i) {
      indices[static_cast<std::size_t>(i)] = i;
    }
    Rng shuffle_rng(mix_seed(master_seed, 0xB075ULL));
    for (std::size_t i = indices.size(); i > 1; --i) {
      std::swap(indices[i - 1], indices[shuffle_rng.below(i)]);
    }
    std::vector<int> targets(indices.begin(), indices.begin() + infested);
    std::sort(targets.begin(), targets.end());

    int bots_per_topic = scenario.bot_template->n_bots;
    if (scenario.bot_retweet_share_target.has_value()) {
      const double share = *scenario.bot_retweet_share_target;
      if (share <= 0.0 || share >= 1.0) {
        throw Error(ErrorCode::ParamError,
                    "bot_retweet_share_target must be in (0, 1)");
      }
      const double needed =
          share / (1.0 - share) * static_cast<double>(organic_retweets);
      const double per_bot =
          static_cast<double>(scenario.bot_template->bursts_per_bot) *
          static_cast<double>(scenario.bot_template->burst_size);
      bots_per_topic = std::max(
          1, static_cast<int>(std::ceil(
                 needed / (static_cast<double>(targets.size()) * per_bot))));
    }

    std::unordered_set<std::string> authors;
    std::unordered_set<std::string> ids;
    ids.reserve(corpus.stream.events.size() * 2);
    for (const PostEvent& event : corpus.stream.events) {
      authors.insert(event.author_id);
      ids.insert(event.event_id);
    }

    for (int topic_index : targets) {
      BotScenario campaign = *scenario.bot_template;
      campaign.n_bots = bots_per_topic;
      campaign.target_author =
          organic_seed_author("t" + std::to_string(topic_index));
      Rng rng(mix_seed(master_seed,
                       0xB0B0ULL + static_cast<std::uint64_t>(topic_index)));
      BotBatch batch =
          make_bot_events(topic_roots.at("t" + std::to_string(topic_index)),
                          campaign, rng, authors, ids);
      for (std::string& bot : batch.authors) {
        corpus.truth.emplace(std::move(bot), TruthLabel::Bot);
      }
      corpus.stream.events.insert(corpus.stream.events.end(),
                                  std::make_move_iterator(batch.events.begin()),
                                  std::make_move_iterator(batch.events.end()));
      corpus.scenarios.push_back(campaign);
    }
  }

  finalize_stream(corpus.stream);
  {
    std::unordered_set<std::string> authors;
    authors.reserve(corpus.stream.events.size() / 2);
    for (const PostEvent& event : corpus.stream.events) {
      authors.insert(event.author_id);
    }
    for (const std::string& author : authors) {
      corpus.truth.emplace(author, TruthLabel::Organic);
    }
  }
  return corpus;
}

CorpusScenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorCode::ParseError,
                "bad scenario JSON in '" + path + "': " + err.what());
  }

  CorpusScenario scenario;
  try {
    scenario.topics = doc.value("topics", scenario.topics);
    scenario.start_spread = doc.value("start_spread", scenario.start_spread);
    if (doc.contains("organic")) {
      const auto& organic = doc.at("organic");
      OrganicTopicParams& params = scenario.organic;
      params.intervals = organic.value("intervals", params.intervals);
      params.seed_count = organic.value("seed_count", params.seed_count);
      params.growth_mu = organic.value("growth_mu", params.growth_mu);
      params.growth_sigma = organic.value("growth_sigma", params.growth_sigma);
      params.decay_theta = organic.value("decay_theta", params.decay_theta);
      params.retweet_share = organic.value("retweet_share", params.retweet_share);
      params.author_pool = organic.value("author_pool", params.author_pool);
      params.interval_width = organic.value("interval_width", params.interval_width);
      params.max_retweets_per_user =
          organic.value("max_retweets_per_user", params.max_retweets_per_user);
      params.start_time = organic.value("start_time", params.start_time);
    }
    if (doc.contains("bots")) {
      const auto& bots = doc.at("bots");
      BotScenario bot_template;
      bot_template.n_bots = bots.value("bots_per_topic", bot_template.n_bots);
      bot_template.bursts_per_bot =
          bots.value("bursts_per_bot", bot_template.bursts_per_bot);
      bot_template.burst_size = bots.value("burst_size", bot_template.burst_size);
      bot_template.intra_burst_gap =
          bots.value("intra_burst_gap", bot_template.intra_burst_gap);
      bot_template.inter_burst_gap =
          bots.value("inter_burst_gap", bot_template.inter_burst_gap);
      scenario.bot_template = bot_template;
      scenario.infested_topic_fraction =
          bots.value("infested_topic_fraction", 0.4);
      if (bots.contains("retweet_share_target")) {
        scenario.bot_retweet_share_target =
            bots.at("retweet_share_target").get<double>();
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorCode::ParseError,
                "bad scenario field in '" + path + "': " + err.what());
  }
  return scenario;
}

DetectionReport evaluate_detection(const LabeledCorpus& corpus,
                                   const SuspectSet& suspects) {
  DetectionReport report;
  for (const auto& [user, label] : corpus.truth) {
    const bool is_bot = label == TruthLabel::Bot;
    const bool flagged = suspects.contains(user);
    if (is_bot) ++report.bots;
    if (flagged) ++report.flagged;
    if (flagged && is_bot) ++report.true_positives;
    if (flagged && !is_bot) ++report.false_positives;
    if (!flagged && is_bot) ++report.false_negatives;
    if (!flagged && !is_bot) ++report.true_negatives;
  }
  if (report.flagged > 0) {
    report.precision = static_cast<double>(report.true_positives) /
                       static_cast<double>(report.flagged);
  }
  report.recall = report.bots == 0
                      ? 1.0
                      : static_cast<double>(report.true_positives) /
                            static_cast<double>(report.bots);
  return report;
}

std::string detection_report_json(const DetectionReport& report) {
  nlohmann::json out;
  if (report.precision.has_value()) {
    out["precision"] = *report.precision;
  } else {
    out["precision"] = nullptr;
  }
  out["recall"] = report.recall;
  out["true_positives"] = report.true_positives;
  out["false_positives"] = report.false_positives;
  out["false_negatives"] = report.false_negatives;
  out["true_negatives"] = report.true_negatives;
  out["flagged"] = report.flagged;
  out["bots"] = report.bots;
  return out.dump();
}

void write_truth_csv(const std::map<std::string, TruthLabel>& truth,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "user_id,label\n";
  for (const auto& [user, label] : truth) {
    out << csv::escape(user) << ',' << truth_label_name(label) << '\n';
  }
}

std::map<std::string, TruthLabel> load_truth_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::map<std::string, TruthLabel> truth;
  std::vector<std::string> fields;
  std::size_t lines = 0;
  std::size_t line_number = 1;
  bool first = true;
  while (csv::read_record(in, fields, lines)) {
    if (!(fields.size() == 1 && fields[0].empty())) {
      if (first && fields.size() >= 2 && fields[0] == "user_id") {
        // header
      } else if (fields.size() < 2) {
        throw Error(ErrorCode::ParseError,
                    "truth row needs user_id,label (line " +
                        std::to_string(line_number) + ")",
                    line_number);
      } else if (fields[1] == "bot") {
        truth[fields[0]] = TruthLabel::Bot;
      } else if (fields[1] == "organic") {
        truth[fields[0]] = TruthLabel::Organic;
      } else {
        throw Error(ErrorCode::ParseError,
                    "unknown label '" + fields[1] + "' (line " +
                        std::to_string(line_number) + ")",
                    line_number);
      }
      first = false;
    }
    line_number += lines;
  }
  return truth;
}

}  // namespace trendkit
