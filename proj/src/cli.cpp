#include "trendkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "trendkit/csv.hpp"
#include "trendkit/error.hpp"
#include "trendkit/event.hpp"
#include "trendkit/growth.hpp"
#include "trendkit/ingest.hpp"
#include "trendkit/spamdetect.hpp"
#include "trendkit/statfit.hpp"
#include "trendkit/synth.hpp"
#include "trendkit/trending.hpp"

namespace trendkit {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Written to the output directory before any other file and rewritten once
/// the run finished, so an interrupted run leaves status "incomplete".
class Manifest {
 public:
  Manifest(fs::path dir, std::string command, json config)
      : dir_(std::move(dir)), command_(std::move(command)),
        config_(std::move(config)) {
    fs::create_directories(dir_);
    write("incomplete");
  }

  fs::path emit(const std::string& name) {
    files_.push_back(name);
    return dir_ / name;
  }

  void finalize() { write("complete"); }

 private:
  void write(const char* status) {
    json doc;
    doc["command"] = command_;
    doc["config"] = config_;
    doc["status"] = status;
    doc["files"] = files_;
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::IoError,
                  "cannot write manifest in '" + dir_.string() + "'");
    }
    out << doc.dump(2) << '\n';
  }

  fs::path dir_;
  std::string command_;
  json config_;
  std::vector<std::string> files_;
};

EventStream load_input(const std::string& path, const std::string& format) {
  StreamFormat stream_format;
  if (format == "jsonl") {
    stream_format = StreamFormat::Jsonl;
  } else if (format == "csv") {
    stream_format = StreamFormat::Csv;
  } else {
    stream_format = format_from_path(path);
  }
  return load_stream(path, stream_format);
}

std::vector<FramePair> parse_frames(const std::string& text) {
  std::vector<FramePair> frames;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t colon = part.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ParamError,
                  "frame pair '" + part + "' must look like i:j");
    }
    try {
      FramePair pair;
      pair.i = static_cast<std::size_t>(std::stoul(part.substr(0, colon)));
      pair.j = static_cast<std::size_t>(std::stoul(part.substr(colon + 1)));
      if (pair.j < 1 || pair.i <= pair.j) {
        throw Error(ErrorCode::ParamError,
                    "frame pair '" + part + "' needs i > j >= 1");
      }
      frames.push_back(pair);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParamError, "frame pair '" + part + "' must be numeric");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (frames.empty()) {
    throw Error(ErrorCode::ParamError, "no frame pairs given");
  }
  return frames;
}

std::string frames_validator(const std::string& text) {
  try {
    parse_frames(text);
  } catch (const Error& err) {
    return err.what();
  }
  return {};
}

struct SuspectFlags {
  double ratio_threshold = 5.0;
  std::string status_file;
  std::string allowlist_file;
  std::string suspects_file;
};

void add_suspect_flags(CLI::App* cmd, SuspectFlags& flags) {
  cmd->add_option("--ratio-threshold", flags.ratio_threshold,
                  "flag users with user-retweet ratio >= this")
      ->capture_default_str();
  cmd->add_option("--status-file", flags.status_file,
                  "account-status oracle CSV (user_id,status)");
  cmd->add_option("--allowlist", flags.allowlist_file,
                  "users never flagged, one id per line");
  cmd->add_option("--suspects-file", flags.suspects_file,
                  "take the suspect set from this file (one user_id per line) "
                  "instead of detecting");
}

SuspectSet resolve_suspects(const std::map<std::string, RetweetProfile>& profiles,
                            const SuspectFlags& flags) {
  if (!flags.suspects_file.empty()) {
    const std::set<std::string> listed = load_allowlist(flags.suspects_file);
    SuspectSet suspects =
        suspects_from_truth({listed.begin(), listed.end()});
    suspects.policy = "file:" + flags.suspects_file;
    return suspects;
  }
  std::map<std::string, AccountState> statuses;
  if (!flags.status_file.empty()) statuses = load_status_file(flags.status_file);
  std::set<std::string> allowlist;
  if (!flags.allowlist_file.empty()) allowlist = load_allowlist(flags.allowlist_file);
  const SpamPolicy policy{flags.ratio_threshold, !flags.status_file.empty()};
  return flag_suspects(profiles, statuses, policy, allowlist);
}

json suspect_flags_config(const SuspectFlags& flags) {
  json config;
  config["ratio_threshold"] = flags.ratio_threshold;
  config["status_file"] = flags.status_file;
  config["allowlist"] = flags.allowlist_file;
  config["suspects_file"] = flags.suspects_file;
  return config;
}

json stream_summary(const EventStream& stream) {
  const StreamMetadata& meta = stream.metadata;
  json summary;
  summary["source"] = meta.source;
  summary["total_events"] = meta.total_events;
  summary["original_count"] = meta.original_count;
  summary["retweet_count"] = meta.retweet_count;
  summary["retweet_share"] = meta.retweet_share();
  summary["duplicates_dropped"] = meta.duplicates_dropped;
  summary["first_timestamp"] = meta.first_timestamp;
  summary["last_timestamp"] = meta.last_timestamp;
  return summary;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  }
  out << text << '\n';
}

std::set<std::string> episode_topics(const std::vector<TrendEpisode>& episodes) {
  std::set<std::string> topics;
  for (const TrendEpisode& episode : episodes) topics.insert(episode.topic);
  return topics;
}

// Generic CSV table for the fit subcommand.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw Error(ErrorCode::ParamError, "input has no column '" + name + "'");
  }
  bool has_column(const std::string& name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
  }
};

CsvTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  CsvTable table;
  std::vector<std::string> fields;
  std::size_t lines = 0;
  if (!csv::read_record(in, fields, lines)) {
    throw Error(ErrorCode::EmptyInput, "empty CSV '" + path + "'");
  }
  table.header = fields;
  while (csv::read_record(in, fields, lines)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    table.rows.push_back(fields);
  }
  return table;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  }
}

json lognormal_group_report(const std::vector<double>& values) {
  json entry;
  try {
    const LognormalFit fit = fit_lognormal(values);
    const KsResult ks = ks_test_lognormal(values, fit);
    entry = json::parse(lognormal_report_json(fit, &ks));
  } catch (const Error& err) {
    entry["type"] = "lognormal";
    entry["error"] = err.what();
    entry["n"] = values.size();
  }
  return entry;
}

// --- subcommand handlers -------------------------------------------------

struct IngestArgs {
  std::string input, out, format = "auto";
};

int run_ingest(const IngestArgs& args) {
  json config{{"input", args.input}, {"format", args.format}};
  Manifest manifest(args.out, "ingest", config);
  const EventStream stream = load_input(args.input, args.format);
  write_jsonl(stream, manifest.emit("events.jsonl").string());
  write_text(manifest.emit("summary.json"), stream_summary(stream).dump(2));
  manifest.finalize();
  return 0;
}

struct TrendsArgs {
  std::string input, out, format = "auto";
  int k = 50;
  std::int64_t bucket = kHourSeconds;
};

int run_trends(const TrendsArgs& args) {
  json config{{"input", args.input}, {"k", args.k}, {"bucket", args.bucket}};
  Manifest manifest(args.out, "trends", config);
  const EventStream stream = load_input(args.input, args.format);
  const auto snapshots = compute_snapshots(stream, args.k, args.bucket);
  const auto episodes = build_episodes(snapshots, args.bucket);
  write_snapshots_csv(snapshots, manifest.emit("snapshots.csv").string());
  write_episodes_csv(episodes, manifest.emit("episodes.csv").string());
  if (args.k % 2 == 0) {
    const auto bands = band_persistence(episodes, args.k);
    write_band_persistence_csv(bands,
                               manifest.emit("band_persistence.csv").string());
  }
  manifest.finalize();
  return 0;
}

struct RatiosArgs {
  std::string input, out, format = "auto";
  int k = 50;
  std::int64_t bucket = 600;
  std::string frames = "10:2,8:3";
  std::string subset = "all";
};

int run_ratios(const RatiosArgs& args) {
  json config{{"input", args.input}, {"k", args.k},      {"bucket", args.bucket},
              {"frames", args.frames}, {"subset", args.subset}};
  Manifest manifest(args.out, "ratios", config);
  const EventStream stream = load_input(args.input, args.format);
  const auto snapshots = compute_snapshots(stream, args.k);
  const auto anchors = trend_anchors(snapshots);
  const Subset subset = subset_from_name(args.subset);

  std::vector<RatioSample> samples;
  json summary = json::array();
  for (const FramePair& frames : parse_frames(args.frames)) {
    RatioSample sample =
        ratio_distribution(stream, anchors, frames, args.bucket, subset);
    summary.push_back({{"i", frames.i},
                       {"j", frames.j},
                       {"subset", subset_name(subset)},
                       {"values", sample.values.size()},
                       {"skipped", sample.skipped}});
    samples.push_back(std::move(sample));
  }
  write_ratios_csv(samples, manifest.emit("ratios.csv").string());
  write_text(manifest.emit("ratios_summary.json"), summary.dump(2));
  manifest.finalize();
  return 0;
}

struct FitArgs {
  std::string input, out;
  std::string kind = "lognormal";
  std::string column = "ratio";
  int bins = 30;
  double xmin = 0.0;  // 0 = scan
};

int run_fit(const FitArgs& args) {
  json config{{"input", args.input},
              {"kind", args.kind},
              {"column", args.column},
              {"bins", args.bins},
              {"xmin", args.xmin}};
  Manifest manifest(args.out, "fit", config);
  const CsvTable table = load_table(args.input);
  const std::size_t value_column = table.column(args.column);

  // Group by (i, j, subset) when those columns exist (ratios.csv layout),
  // otherwise fit the whole column at once.
  const bool grouped = table.has_column("i") && table.has_column("j") &&
                       table.has_column("subset");
  std::map<std::string, std::vector<double>> groups;
  if (grouped) {
    const std::size_t ci = table.column("i");
    const std::size_t cj = table.column("j");
    const std::size_t cs = table.column("subset");
    for (const auto& row : table.rows) {
      groups[row[ci] + "_" + row[cj] + "_" + row[cs]].push_back(
          parse_double(row[value_column]));
    }
  } else {
    for (const auto& row : table.rows) {
      groups[args.column].push_back(parse_double(row[value_column]));
    }
  }
  if (groups.empty()) {
    throw Error(ErrorCode::EmptySample, "no rows in '" + args.input + "'");
  }

  json fits = json::array();
  for (const auto& [name, values] : groups) {
    json entry;
    if (args.kind == "powerlaw") {
      try {
        const PowerlawFit fit = fit_powerlaw(
            values, args.xmin > 0.0 ? std::optional<double>(args.xmin)
                                    : std::nullopt);
        entry = json::parse(powerlaw_report_json(fit));
      } catch (const Error& err) {
        entry["type"] = "powerlaw";
        entry["error"] = err.what();
      }
    } else {
      entry = lognormal_group_report(values);
    }
    entry["group"] = name;
    fits.push_back(entry);

    try {
      const Histogram hist = histogram(values, Binning::log(args.bins));
      write_histogram_csv(hist, manifest.emit("hist_" + name + ".csv").string());
    } catch (const Error&) {
      // histogram is best-effort plot output (e.g. log bins on zero values)
    }
  }
  write_text(manifest.emit("fits.json"), fits.dump(2));
  manifest.finalize();
  return 0;
}

struct SpamDetectArgs {
  std::string input, out, format = "auto";
  SuspectFlags suspects;
};

int run_spam_detect(const SpamDetectArgs& args) {
  json config = suspect_flags_config(args.suspects);
  config["input"] = args.input;
  Manifest manifest(args.out, "spam-detect", config);
  const EventStream stream = load_input(args.input, args.format);
  const auto profiles = user_retweet_profiles(stream);
  const SuspectSet suspects = resolve_suspects(profiles, args.suspects);
  write_profiles_csv(profiles, manifest.emit("profiles.csv").string());
  write_text(manifest.emit("suspects.json"), suspects_json(suspects));
  if (!args.suspects.status_file.empty()) {
    const auto statuses = load_status_file(args.suspects.status_file);
    const auto bands =
        active_fraction_by_ratio(profiles, statuses, default_ratio_bands());
    write_band_activity_csv(bands, manifest.emit("active_by_ratio.csv").string());
  }
  manifest.finalize();
  return 0;
}

struct SpamRemoveArgs {
  std::string input, out, format = "auto";
  SuspectFlags suspects;
};

int run_spam_remove(const SpamRemoveArgs& args) {
  json config = suspect_flags_config(args.suspects);
  config["input"] = args.input;
  Manifest manifest(args.out, "spam-remove", config);
  const EventStream stream = load_input(args.input, args.format);
  const auto profiles = user_retweet_profiles(stream);
  const SuspectSet suspects = resolve_suspects(profiles, args.suspects);
  auto [cleaned, report] = remove_spam(stream, suspects);
  write_jsonl(cleaned, manifest.emit("cleaned.jsonl").string());
  write_text(manifest.emit("removal_report.json"), removal_report_json(report));
  manifest.finalize();
  return 0;
}

struct ImpactArgs {
  std::string input, out, format = "auto";
  int k = 50;
  SuspectFlags suspects;
};

int run_impact(const ImpactArgs& args) {
  json config = suspect_flags_config(args.suspects);
  config["input"] = args.input;
  config["k"] = args.k;
  Manifest manifest(args.out, "impact", config);
  const EventStream stream = load_input(args.input, args.format);
  const auto profiles = user_retweet_profiles(stream);
  const SuspectSet suspects = resolve_suspects(profiles, args.suspects);
  const auto snapshots = compute_snapshots(stream, args.k);
  const auto episodes = build_episodes(snapshots);
  const ImpactReport report =
      trendsetter_impact(stream, suspects, episode_topics(episodes));
  write_text(manifest.emit("impact.json"), impact_report_json(report));
  manifest.finalize();
  return 0;
}

struct SimulateArgs {
  std::string scenario, out;
  std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& args) {
  const CorpusScenario scenario = load_scenario(args.scenario);
  json config{{"scenario", args.scenario}, {"seed", args.seed}};
  config["topics"] = scenario.topics;
  config["infested_topic_fraction"] = scenario.infested_topic_fraction;
  Manifest manifest(args.out, "simulate", config);
  const LabeledCorpus corpus = generate_corpus(scenario, args.seed);
  write_jsonl(corpus.stream, manifest.emit("corpus.jsonl").string());
  write_truth_csv(corpus.truth, manifest.emit("truth.csv").string());
  write_text(manifest.emit("corpus_summary.json"),
             stream_summary(corpus.stream).dump(2));
  manifest.finalize();
  return 0;
}

struct EvaluateArgs {
  std::string input, truth, out, format = "auto";
  double ratio_threshold = 5.0;
};

int run_evaluate(const EvaluateArgs& args) {
  json config{{"input", args.input},
              {"truth", args.truth},
              {"ratio_threshold", args.ratio_threshold}};
  Manifest manifest(args.out, "evaluate", config);
  LabeledCorpus corpus = label_all_organic(load_input(args.input, args.format));
  for (const auto& [user, label] : load_truth_csv(args.truth)) {
    corpus.truth[user] = label;
  }
  const auto profiles = user_retweet_profiles(corpus.stream);
  const SuspectSet suspects =
      flag_suspects(profiles, {}, SpamPolicy{args.ratio_threshold, false});
  const DetectionReport report = evaluate_detection(corpus, suspects);
  write_text(manifest.emit("evaluation.json"), detection_report_json(report));
  manifest.finalize();
  return 0;
}

struct ReportArgs {
  std::string input, out, format = "auto";
  int k = 50;
  std::int64_t bucket = 600;
  std::string frames = "10:2,8:3";
  std::int64_t min_topics = 10;
  std::string truth;
  SuspectFlags suspects;
};

int run_report(const ReportArgs& args) {
  json config = suspect_flags_config(args.suspects);
  config["input"] = args.input;
  config["k"] = args.k;
  config["bucket"] = args.bucket;
  config["frames"] = args.frames;
  config["min_topics"] = args.min_topics;
  config["truth"] = args.truth;
  Manifest manifest(args.out, "report", config);

  const EventStream stream = load_input(args.input, args.format);
  write_text(manifest.emit("summary.json"), stream_summary(stream).dump(2));

  const auto snapshots = compute_snapshots(stream, args.k);
  const auto episodes = build_episodes(snapshots);
  write_snapshots_csv(snapshots, manifest.emit("snapshots.csv").string());
  write_episodes_csv(episodes, manifest.emit("episodes.csv").string());
  if (args.k % 2 == 0) {
    write_band_persistence_csv(band_persistence(episodes, args.k),
                               manifest.emit("band_persistence.csv").string());
  }

  const auto anchors = trend_anchors(snapshots);
  const auto frames = parse_frames(args.frames);
  std::vector<RatioSample> samples;
  json fits = json::array();
  for (const FramePair& pair : frames) {
    for (Subset subset : {Subset::All, Subset::OriginalOnly, Subset::RetweetOnly}) {
      try {
        RatioSample sample =
            ratio_distribution(stream, anchors, pair, args.bucket, subset);
        json entry = lognormal_group_report(sample.values);
        entry["group"] = std::to_string(pair.i) + "_" + std::to_string(pair.j) +
                         "_" + subset_name(subset);
        entry["skipped"] = sample.skipped;
        fits.push_back(entry);
        samples.push_back(std::move(sample));
      } catch (const Error& err) {
        fits.push_back({{"group", std::to_string(pair.i) + "_" +
                                      std::to_string(pair.j) + "_" +
                                      subset_name(subset)},
                        {"error", err.what()}});
      }
    }
  }
  write_ratios_csv(samples, manifest.emit("ratios.csv").string());

  // Episode-duration tail.
  {
    std::vector<double> durations;
    for (const TrendEpisode& episode : episodes) {
      durations.push_back(static_cast<double>(episode.hours_on_list));
    }
    json entry;
    try {
      const PowerlawFit fit = fit_powerlaw(durations);
      entry = json::parse(powerlaw_report_json(fit));
    } catch (const Error& err) {
      entry["type"] = "powerlaw";
      entry["error"] = err.what();
    }
    entry["group"] = "episode_durations";
    fits.push_back(entry);
  }

  const auto profiles = user_retweet_profiles(stream);
  write_profiles_csv(profiles, manifest.emit("profiles.csv").string());
  write_trendsetters_csv(rank_trendsetters(stream, episodes, args.min_topics),
                         manifest.emit("trendsetters.csv").string());

  const SuspectSet suspects = resolve_suspects(profiles, args.suspects);
  write_text(manifest.emit("suspects.json"), suspects_json(suspects));
  if (!args.suspects.status_file.empty()) {
    const auto statuses = load_status_file(args.suspects.status_file);
    write_band_activity_csv(
        active_fraction_by_ratio(profiles, statuses, default_ratio_bands()),
        manifest.emit("active_by_ratio.csv").string());
  }

  if (!suspects.empty()) {
    auto [cleaned, removal] = remove_spam(stream, suspects);
    write_text(manifest.emit("removal_report.json"),
               removal_report_json(removal));
    const ImpactReport impact =
        trendsetter_impact(stream, suspects, episode_topics(episodes));
    write_text(manifest.emit("impact.json"), impact_report_json(impact));

    // Distribution recovery on the cleaned stream.
    json recovery = json::array();
    for (const FramePair& pair : frames) {
      for (Subset subset :
           {Subset::All, Subset::OriginalOnly, Subset::RetweetOnly}) {
        try {
          RatioSample sample =
              ratio_distribution(cleaned, anchors, pair, args.bucket, subset);
          json entry = lognormal_group_report(sample.values);
          entry["group"] = std::to_string(pair.i) + "_" + std::to_string(pair.j) +
                           "_" + subset_name(subset);
          entry["skipped"] = sample.skipped;
          recovery.push_back(entry);
        } catch (const Error& err) {
          recovery.push_back({{"group", std::to_string(pair.i) + "_" +
                                            std::to_string(pair.j) + "_" +
                                            subset_name(subset)},
                              {"error", err.what()}});
        }
      }
    }
    write_text(manifest.emit("recovery_fits.json"), recovery.dump(2));
  }
  write_text(manifest.emit("fits.json"), fits.dump(2));

  if (!args.truth.empty()) {
    LabeledCorpus corpus = label_all_organic(stream);
    for (const auto& [user, label] : load_truth_csv(args.truth)) {
      corpus.truth[user] = label;
    }
    write_text(manifest.emit("evaluation.json"),
               detection_report_json(evaluate_detection(corpus, suspects)));
  }
  manifest.finalize();
  return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"trendkit: microblog trend dynamics and spam analytics"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest_cmd = app.add_subcommand(
      "ingest", "load, validate, sort and deduplicate an event log");
  ingest_cmd->add_option("--input", ingest_args.input)->required();
  ingest_cmd->add_option("--out", ingest_args.out)->required();
  add_format_flag(ingest_cmd, ingest_args.format);

  TrendsArgs trends_args;
  auto* trends_cmd = app.add_subcommand(
      "trends", "hourly top-K lists and episode lifecycle stats");
  trends_cmd->add_option("--input", trends_args.input)->required();
  trends_cmd->add_option("--out", trends_args.out)->required();
  trends_cmd->add_option("--k", trends_args.k)->capture_default_str();
  trends_cmd->add_option("--bucket", trends_args.bucket)->capture_default_str();
  add_format_flag(trends_cmd, trends_args.format);

  RatiosArgs ratios_args;
  auto* ratios_cmd = app.add_subcommand(
      "ratios", "cumulative-count ratio distributions C_q(t_i, t_j)");
  ratios_cmd->add_option("--input", ratios_args.input)->required();
  ratios_cmd->add_option("--out", ratios_args.out)->required();
  ratios_cmd->add_option("--k", ratios_args.k)->capture_default_str();
  ratios_cmd->add_option("--bucket", ratios_args.bucket)->capture_default_str();
  ratios_cmd->add_option("--frames", ratios_args.frames, "i:j[,i:j...]")
      ->capture_default_str()
      ->check(frames_validator);
  ratios_cmd->add_option("--subset", ratios_args.subset)
      ->check(CLI::IsMember({"all", "original", "retweet"}))
      ->capture_default_str();
  add_format_flag(ratios_cmd, ratios_args.format);

  FitArgs fit_args;
  auto* fit_cmd =
      app.add_subcommand("fit", "distribution fitting on a CSV column");
  fit_cmd->add_option("--input", fit_args.input)->required();
  fit_cmd->add_option("--out", fit_args.out)->required();
  fit_cmd->add_option("--kind", fit_args.kind)
      ->check(CLI::IsMember({"lognormal", "powerlaw"}))
      ->capture_default_str();
  fit_cmd->add_option("--column", fit_args.column)->capture_default_str();
  fit_cmd->add_option("--bins", fit_args.bins)->capture_default_str();
  fit_cmd->add_option("--xmin", fit_args.xmin,
                      "power-law tail cutoff (0 scans for it)")
      ->capture_default_str();

  SpamDetectArgs detect_args;
  auto* detect_cmd = app.add_subcommand(
      "spam-detect", "user-retweet profiles and suspect flagging");
  detect_cmd->add_option("--input", detect_args.input)->required();
  detect_cmd->add_option("--out", detect_args.out)->required();
  add_suspect_flags(detect_cmd, detect_args.suspects);
  add_format_flag(detect_cmd, detect_args.format);

  SpamRemoveArgs remove_args;
  auto* remove_cmd = app.add_subcommand(
      "spam-remove", "drop suspect-associated events, report fractions");
  remove_cmd->add_option("--input", remove_args.input)->required();
  remove_cmd->add_option("--out", remove_args.out)->required();
  add_suspect_flags(remove_cmd, remove_args.suspects);
  add_format_flag(remove_cmd, remove_args.format);

  ImpactArgs impact_args;
  auto* impact_cmd = app.add_subcommand(
      "impact", "suspect reach over retweeted authors and trending keywords");
  impact_cmd->add_option("--input", impact_args.input)->required();
  impact_cmd->add_option("--out", impact_args.out)->required();
  impact_cmd->add_option("--k", impact_args.k)->capture_default_str();
  add_suspect_flags(impact_cmd, impact_args.suspects);
  add_format_flag(impact_cmd, impact_args.format);

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "generate a labeled synthetic corpus from a scenario file");
  simulate_cmd->add_option("--scenario", simulate_args.scenario)->required();
  simulate_cmd->add_option("--out", simulate_args.out)->required();
  simulate_cmd->add_option("--seed", simulate_args.seed, "master seed")
      ->required();

  EvaluateArgs evaluate_args;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "score detection against ground-truth labels");
  evaluate_cmd->add_option("--input", evaluate_args.input)->required();
  evaluate_cmd->add_option("--truth", evaluate_args.truth)->required();
  evaluate_cmd->add_option("--out", evaluate_args.out)->required();
  evaluate_cmd->add_option("--ratio-threshold", evaluate_args.ratio_threshold)
      ->capture_default_str();
  add_format_flag(evaluate_cmd, evaluate_args.format);

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand(
      "report", "full measurement pipeline into one output directory");
  report_cmd->add_option("--input", report_args.input)->required();
  report_cmd->add_option("--out", report_args.out)->required();
  report_cmd->add_option("--k", report_args.k)->capture_default_str();
  report_cmd->add_option("--bucket", report_args.bucket)->capture_default_str();
  report_cmd->add_option("--frames", report_args.frames)
      ->capture_default_str()
      ->check(frames_validator);
  report_cmd->add_option("--min-topics", report_args.min_topics)
      ->capture_default_str();
  report_cmd->add_option("--truth", report_args.truth,
                         "ground-truth labels for evaluation");
  add_suspect_flags(report_cmd, report_args.suspects);
  add_format_flag(report_cmd, report_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (ingest_cmd->parsed()) return run_ingest(ingest_args);
    if (trends_cmd->parsed()) return run_trends(trends_args);
    if (ratios_cmd->parsed()) return run_ratios(ratios_args);
    if (fit_cmd->parsed()) return run_fit(fit_args);
    if (detect_cmd->parsed()) return run_spam_detect(detect_args);
    if (remove_cmd->parsed()) return run_spam_remove(remove_args);
    if (impact_cmd->parsed()) return run_impact(impact_args);
    if (simulate_cmd->parsed()) return run_simulate(simulate_args);
    if (evaluate_cmd->parsed()) return run_evaluate(evaluate_args);
    if (report_cmd->parsed()) return run_report(report_args);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return 1;
  }
  std::cerr << "error: no subcommand" << std::endl;
  return 2;
}

}  // namespace trendkit
