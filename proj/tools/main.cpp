#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gramburst/aggregate.hpp"
#include "gramburst/detect.hpp"
#include "gramburst/errors.hpp"
#include "gramburst/ingest.hpp"
#include "gramburst/rng.hpp"
#include "gramburst/sentiment.hpp"
#include "gramburst/synthbench.hpp"
#include "gramburst/textproc.hpp"
#include "gramburst/util.hpp"

namespace gb = gramburst;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSynopsis =
    "usage: gramburst <ingest|ngrams|timeline|scatter|detect|sentiment|synth|eval> [options]\n"
    "       gramburst <subcommand> --help";

// Provenance block embedded in every artifact. Output paths and thread
// counts are deliberately absent: the same analysis must produce the same
// bytes wherever it is written and however it is parallelized.
struct Meta {
  std::string subcommand;
  ordered_json config = ordered_json::object();
  ordered_json inputs = ordered_json::array();

  void add_input(const std::string& path) {
    inputs.push_back({{"path", path}, {"fnv1a64", gb::fnv1a64_hex(gb::read_file(path))}});
  }

  ordered_json json() const {
    return {{"tool", "gramburst"}, {"subcommand", subcommand}, {"config", config},
            {"inputs", inputs}};
  }

  // CSV and gnuplot artifacts carry the same provenance as '#' comments.
  std::string comment_block() const {
    std::string out = "# gramburst " + subcommand + "\n";
    out += "# config " + config.dump() + "\n";
    for (const auto& in : inputs)
      out += "# input " + in["path"].get<std::string>() + " fnv1a64=" +
             in["fnv1a64"].get<std::string>() + "\n";
    return out;
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    gb::write_file(out_path, content);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// Shared input flags for every corpus-consuming subcommand.
struct CorpusArgs {
  std::string in;
  std::string format;  // empty = derive from extension
  std::string granularity = "day";
  std::int64_t window_start = 0;
  std::int64_t window_end = 0;
  CLI::Option* window_start_opt = nullptr;
  CLI::Option* window_end_opt = nullptr;
  std::string filter_hashtag;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in, "input corpus file (JSONL or CSV)")->required();
    cmd->add_option("--format", format, "record format (default: csv for *.csv, else jsonl)")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--granularity", granularity, "bucket size")
        ->check(CLI::IsMember({"day", "hour"}));
    window_start_opt = cmd->add_option("--window-start", window_start,
                                       "keep records with timestamp >= this epoch second");
    window_end_opt = cmd->add_option("--window-end", window_end,
                                     "keep records with timestamp <= this epoch second");
  }

  void attach_filter(CLI::App* cmd) {
    cmd->add_option("--filter-hashtag", filter_hashtag,
                    "restrict to records carrying this hashtag");
  }
};

std::string fold_tag(const std::string& raw) {
  std::string_view sv = raw;
  while (!sv.empty() && sv.front() == '#') sv.remove_prefix(1);
  std::string out;
  std::size_t i = 0;
  while (i < sv.size()) gb::unicode::encode(gb::unicode::fold(gb::unicode::decode(sv, i)), out);
  return out;
}

gb::Corpus load_input(const CorpusArgs& a, Meta& meta, gb::IngestReport* report_out = nullptr) {
  const gb::RecordFormat format = a.format.empty() ? gb::format_from_path(a.in)
                                  : a.format == "csv" ? gb::RecordFormat::Csv
                                                      : gb::RecordFormat::Jsonl;
  const gb::Granularity gran = gb::granularity_from_name(a.granularity);

  const bool has_start = a.window_start_opt && a.window_start_opt->count() > 0;
  const bool has_end = a.window_end_opt && a.window_end_opt->count() > 0;
  if (has_start != has_end)
    throw gb::UsageError("--window-start and --window-end must be given together");
  std::optional<gb::TimeWindow> window;
  if (has_start) {
    if (a.window_start > a.window_end)
      throw gb::UsageError("--window-start must be <= --window-end");
    window = gb::TimeWindow{a.window_start, a.window_end};
  }

  meta.config["format"] = format == gb::RecordFormat::Csv ? "csv" : "jsonl";
  meta.config["granularity"] = gb::granularity_name(gran);
  meta.config["window"] =
      window ? ordered_json::array({window->start, window->end}) : ordered_json(nullptr);
  meta.add_input(a.in);

  gb::IngestReport report;
  gb::Corpus corpus = gb::load_corpus(a.in, format, gran, window, &report);
  if (report.malformed > 0)
    std::cerr << "warning: skipped " << report.malformed << " malformed line(s) in " << a.in
              << "\n";
  if (report_out) *report_out = report;

  if (!a.filter_hashtag.empty()) {
    const std::string tag = fold_tag(a.filter_hashtag);
    meta.config["filter_hashtag"] = tag;
    std::vector<gb::TweetRecord> kept;
    for (auto& rec : corpus.records) {
      if (std::find(rec.hashtags.begin(), rec.hashtags.end(), tag) != rec.hashtags.end())
        kept.push_back(std::move(rec));
    }
    corpus = gb::make_corpus(std::move(kept), gran, nullptr);
  } else {
    meta.config["filter_hashtag"] = nullptr;
  }
  return corpus;
}

// Tokenizer flags for subcommands that build an index or score text.
struct TokArgs {
  bool keep_urls = false;
  bool segment_hashtags = false;
  std::string dict_path;
  gb::WordsegDictionary dict;  // storage backing the options pointer

  void attach(CLI::App* cmd) {
    cmd->add_flag("--keep-urls", keep_urls,
                  "tokenize URLs instead of dropping them (pic.twitter.com/x -> pic twitter com x)");
    cmd->add_flag("--segment-hashtags", segment_hashtags,
                  "split single-token hashtags into dictionary words");
    cmd->add_option("--dict", dict_path, "word-frequency dictionary (word<TAB>weight)");
  }

  gb::TokenizerOptions resolve(Meta& meta) {
    if (segment_hashtags && dict_path.empty())
      throw gb::UsageError("--segment-hashtags requires --dict");
    gb::TokenizerOptions opt;
    opt.keep_urls = keep_urls;
    meta.config["keep_urls"] = keep_urls;
    meta.config["segment_hashtags"] = segment_hashtags;
    if (!dict_path.empty()) {
      dict = gb::load_wordseg_dictionary(dict_path);
      opt.dictionary = &dict;
      opt.segment_hashtags = segment_hashtags;
      meta.config["dict"] = dict_path;
      meta.add_input(dict_path);
    } else {
      meta.config["dict"] = nullptr;
    }
    return opt;
  }
};

ordered_json candidate_json(const gb::EventCandidate& c) {
  ordered_json j{{"gram", c.gram},
                 {"n", c.n},
                 {"total_count", c.total_count},
                 {"distinct_tweets", c.distinct_tweets},
                 {"distinct_accounts", c.distinct_accounts},
                 {"raw_duration", c.raw_duration},
                 {"effective_duration", c.effective_duration},
                 {"density", c.density},
                 {"category", gb::category_name(c.category)},
                 {"peak_bucket", c.peak_bucket},
                 {"window", ordered_json::array({c.window_first, c.window_last})}};
  j["popularity"] = c.popularity ? ordered_json(*c.popularity) : ordered_json(nullptr);
  return j;
}

std::string candidates_csv(const std::vector<gb::EventCandidate>& candidates, const Meta& meta) {
  std::string out = meta.comment_block();
  out +=
      "gram,n,total_count,distinct_tweets,distinct_accounts,raw_duration,"
      "effective_duration,density,category,peak_bucket,window_first,window_last,popularity\n";
  for (const auto& c : candidates) {
    out += gb::csv_escape(c.gram) + ',' + std::to_string(c.n) + ',' +
           std::to_string(c.total_count) + ',' + std::to_string(c.distinct_tweets) + ',' +
           std::to_string(c.distinct_accounts) + ',' + std::to_string(c.raw_duration) + ',' +
           std::to_string(c.effective_duration) + ',' + gb::format_double(c.density) + ',' +
           gb::category_name(c.category) + ',' + std::to_string(c.peak_bucket) + ',' +
           std::to_string(c.window_first) + ',' + std::to_string(c.window_last) + ',' +
           (c.popularity ? gb::format_double(*c.popularity) : std::string()) + '\n';
  }
  return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run(int argc, char** argv) {
  CLI::App app{"n-gram burst and sustained event detection over tweet corpora"};
  app.name("gramburst");
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "validate and canonicalize a corpus file");
  CorpusArgs ingest_corpus;
  ingest_corpus.attach(ingest);
  std::string ingest_out, ingest_report_path;
  ingest->add_option("--out", ingest_out, "canonical JSONL corpus destination (default: stdout)");
  ingest->add_option("--report", ingest_report_path,
                     "ingestion report destination (default: stdout, or stderr when the corpus "
                     "goes to stdout)");
  ingest->callback([&] {
    Meta meta;
    meta.subcommand = "ingest";
    gb::IngestReport report;
    gb::Corpus corpus = load_input(ingest_corpus, meta, &report);

    std::ostringstream corpus_text;
    gb::write_corpus_jsonl(corpus, corpus_text);
    emit(ingest_out, corpus_text.str());

    ordered_json doc{{"meta", meta.json()},
                     {"report",
                      {{"total", report.total},
                       {"accepted", report.accepted},
                       {"duplicates", report.duplicates},
                       {"malformed", report.malformed},
                       {"out_of_window", report.out_of_window}}}};
    const std::string text = dump_json(doc);
    if (!ingest_report_path.empty())
      gb::write_file(ingest_report_path, text);
    else if (ingest_out.empty())
      std::cerr << text;
    else
      std::cout << text;
  });

  // ngrams
  auto* ngrams = app.add_subcommand("ngrams", "top-k gram counts as CSV");
  CorpusArgs ngrams_corpus;
  ngrams_corpus.attach(ngrams);
  ngrams_corpus.attach_filter(ngrams);
  TokArgs ngrams_tok;
  ngrams_tok.attach(ngrams);
  int ngrams_n = 2;
  std::size_t ngrams_k = 10;
  std::int64_t ngrams_from = 0, ngrams_to = 0;
  unsigned ngrams_threads = 1;
  std::string ngrams_out;
  ngrams->add_option("--n", ngrams_n, "gram length")->required()->check(CLI::Range(1, 5));
  ngrams->add_option("--k", ngrams_k, "rows to emit")->check(CLI::PositiveNumber);
  auto* ngrams_from_opt = ngrams->add_option("--from", ngrams_from, "first bucket of the scope");
  auto* ngrams_to_opt = ngrams->add_option("--to", ngrams_to, "last bucket of the scope");
  ngrams->add_option("--threads", ngrams_threads, "worker threads")->check(CLI::PositiveNumber);
  ngrams->add_option("--out", ngrams_out, "output file (default: stdout)");
  ngrams->callback([&] {
    Meta meta;
    meta.subcommand = "ngrams";
    meta.config["n"] = ngrams_n;
    meta.config["k"] = ngrams_k;
    const bool has_from = ngrams_from_opt->count() > 0;
    const bool has_to = ngrams_to_opt->count() > 0;
    if (has_from != has_to) throw gb::UsageError("--from and --to must be given together");
    std::optional<gb::BucketRange> scope;
    if (has_from) {
      if (ngrams_from > ngrams_to) throw gb::UsageError("--from must be <= --to");
      scope = gb::BucketRange{ngrams_from, ngrams_to};
    }
    meta.config["scope"] =
        scope ? ordered_json::array({scope->lo, scope->hi}) : ordered_json(nullptr);

    gb::Corpus corpus = load_input(ngrams_corpus, meta);
    gb::TokenizerOptions tok = ngrams_tok.resolve(meta);
    gb::AggregateIndex index = gb::build_index(corpus, ngrams_n, ngrams_n, tok, ngrams_threads);

    std::string out = meta.comment_block() + "gram,count\n";
    for (const auto& row : gb::top_k(index, ngrams_n, ngrams_k, scope))
      out += gb::csv_escape(row.gram) + ',' + std::to_string(row.count) + '\n';
    emit(ngrams_out, out);
  });

  // timeline
  auto* timeline = app.add_subcommand("timeline", "per-bucket counts for one gram");
  CorpusArgs timeline_corpus;
  timeline_corpus.attach(timeline);
  timeline_corpus.attach_filter(timeline);
  TokArgs timeline_tok;
  timeline_tok.attach(timeline);
  std::string timeline_gram;
  bool timeline_gnuplot = false;
  unsigned timeline_threads = 1;
  std::string timeline_out;
  timeline->add_option("--gram", timeline_gram, "gram text, tokens separated by spaces")
      ->required();
  timeline->add_flag("--gnuplot", timeline_gnuplot,
                     "space-separated columns without a header row");
  timeline->add_option("--threads", timeline_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  timeline->add_option("--out", timeline_out, "output file (default: stdout)");
  timeline->callback([&] {
    Meta meta;
    meta.subcommand = "timeline";

    gb::Corpus corpus = load_input(timeline_corpus, meta);
    gb::TokenizerOptions tok = timeline_tok.resolve(meta);

    // The gram argument goes through the same tokenizer as the corpus, so
    // "I'm home" asks for the gram "i m home".
    const std::vector<std::string> tokens = gb::normalize(timeline_gram, tok);
    if (tokens.empty() || tokens.size() > 5)
      throw gb::UsageError("--gram must normalize to between 1 and 5 tokens");
    const int n = static_cast<int>(tokens.size());
    const std::string gram = gb::join(tokens, " ");
    meta.config["gram"] = gram;
    meta.config["gnuplot"] = timeline_gnuplot;

    gb::AggregateIndex index = gb::build_index(corpus, n, n, tok, timeline_threads);
    std::string out = meta.comment_block();
    if (!timeline_gnuplot) out += "bucket,count\n";
    const char sep = timeline_gnuplot ? ' ' : ',';
    for (const auto& [bucket, count] : gb::timeline(index, gram))
      out += std::to_string(bucket) + sep + std::to_string(count) + '\n';
    emit(timeline_out, out);
  });

  // scatter
  auto* scatter = app.add_subcommand("scatter", "duration/count pairs for the top-k grams");
  CorpusArgs scatter_corpus;
  scatter_corpus.attach(scatter);
  scatter_corpus.attach_filter(scatter);
  TokArgs scatter_tok;
  scatter_tok.attach(scatter);
  int scatter_n = 3;
  std::size_t scatter_k = 138;
  unsigned scatter_threads = 1;
  std::string scatter_out;
  scatter->add_option("--n", scatter_n, "gram length")->check(CLI::Range(1, 5));
  scatter->add_option("--k", scatter_k, "rows to emit")->check(CLI::PositiveNumber);
  scatter->add_option("--threads", scatter_threads, "worker threads")->check(CLI::PositiveNumber);
  scatter->add_option("--out", scatter_out, "output file (default: stdout)");
  scatter->callback([&] {
    Meta meta;
    meta.subcommand = "scatter";
    meta.config["n"] = scatter_n;
    meta.config["k"] = scatter_k;

    gb::Corpus corpus = load_input(scatter_corpus, meta);
    gb::TokenizerOptions tok = scatter_tok.resolve(meta);
    gb::AggregateIndex index = gb::build_index(corpus, scatter_n, scatter_n, tok, scatter_threads);

    std::string out = meta.comment_block() + "gram,duration,count\n";
    for (const auto& row : gb::scatter_data(index, scatter_n, scatter_k))
      out += gb::csv_escape(row.gram) + ',' + std::to_string(row.effective_duration) + ',' +
             std::to_string(row.total_count) + '\n';
    emit(scatter_out, out);
  });

  // detect
  auto* detect = app.add_subcommand("detect", "rank burst and sustained event candidates");
  CorpusArgs detect_corpus;
  detect_corpus.attach(detect);
  detect_corpus.attach_filter(detect);
  TokArgs detect_tok;
  detect_tok.attach(detect);
  std::string detect_config, detect_oracle, detect_out;
  bool detect_require_conf = false;
  double detect_floor = 50.0;
  int detect_nmin = 2, detect_nmax = 5;
  unsigned detect_threads = 1;
  detect->add_option("--config", detect_config, "threshold config (key = value lines)");
  detect->add_option("--oracle", detect_oracle, "popularity table (query,score CSV)");
  detect->add_flag("--require-confirmation", detect_require_conf,
                   "drop candidates the oracle does not confirm");
  detect->add_option("--popularity-floor", detect_floor,
                     "minimum confirming score when confirmation is required");
  detect->add_option("--nmin", detect_nmin, "shortest gram length")->check(CLI::Range(1, 5));
  detect->add_option("--nmax", detect_nmax, "longest gram length")->check(CLI::Range(1, 5));
  detect->add_option("--threads", detect_threads, "worker threads")->check(CLI::PositiveNumber);
  detect->add_option("--out", detect_out, "output file, *.csv for CSV (default: stdout JSON)");
  detect->callback([&] {
    Meta meta;
    meta.subcommand = "detect";
    if (detect_nmin > detect_nmax) throw gb::UsageError("--nmin must be <= --nmax");
    if (detect_require_conf && detect_oracle.empty())
      throw gb::UsageError("--require-confirmation needs --oracle");
    meta.config["nmin"] = detect_nmin;
    meta.config["nmax"] = detect_nmax;

    gb::ThresholdConfig cfg;
    if (!detect_config.empty()) {
      cfg = gb::load_threshold_config(detect_config);
      meta.add_input(detect_config);
    }
    cfg.validate();
    meta.config["thresholds"] = {{"min_distinct_tweets", cfg.min_distinct_tweets},
                                 {"min_distinct_accounts", cfg.min_distinct_accounts},
                                 {"top_m", cfg.top_m},
                                 {"min_consecutive", cfg.min_consecutive},
                                 {"burst_min_count", cfg.burst_min_count},
                                 {"burst_max_duration", cfg.burst_max_duration},
                                 {"sustained_min_count", cfg.sustained_min_count},
                                 {"sustained_min_duration", cfg.sustained_min_duration}};

    gb::PopularityOracle oracle;
    gb::DetectOptions opt;
    opt.require_confirmation = detect_require_conf;
    opt.popularity_floor = detect_floor;
    if (!detect_oracle.empty()) {
      oracle = gb::load_popularity_oracle(detect_oracle);
      opt.oracle = &oracle;
      meta.add_input(detect_oracle);
    }
    meta.config["require_confirmation"] = detect_require_conf;
    meta.config["popularity_floor"] = detect_floor;

    gb::Corpus corpus = load_input(detect_corpus, meta);
    gb::TokenizerOptions tok = detect_tok.resolve(meta);
    gb::AggregateIndex index =
        gb::build_index(corpus, detect_nmin, detect_nmax, tok, detect_threads);
    const std::vector<gb::EventCandidate> candidates = gb::detect_events(index, cfg, opt);

    if (ends_with(detect_out, ".csv")) {
      emit(detect_out, candidates_csv(candidates, meta));
    } else {
      ordered_json doc{{"meta", meta.json()}, {"candidates", ordered_json::array()}};
      for (const auto& c : candidates) doc["candidates"].push_back(candidate_json(c));
      emit(detect_out, dump_json(doc));
    }
  });

  // sentiment
  auto* sentiment = app.add_subcommand("sentiment", "per-hashtag average sentiment as CSV");
  CorpusArgs sentiment_corpus;
  sentiment_corpus.attach(sentiment);
  sentiment_corpus.attach_filter(sentiment);
  TokArgs sentiment_tok;
  sentiment_tok.attach(sentiment);
  std::string sentiment_lexicon, sentiment_out;
  sentiment->add_option("--lexicon", sentiment_lexicon, "polarity lexicon (token<TAB>polarity)")
      ->required();
  sentiment->add_option("--out", sentiment_out, "output file (default: stdout)");
  sentiment->callback([&] {
    Meta meta;
    meta.subcommand = "sentiment";
    meta.config["lexicon"] = sentiment_lexicon;

    gb::Corpus corpus = load_input(sentiment_corpus, meta);
    gb::TokenizerOptions tok = sentiment_tok.resolve(meta);
    const gb::PolarityLexicon lexicon = gb::load_polarity_lexicon(sentiment_lexicon);
    meta.add_input(sentiment_lexicon);

    std::string out = meta.comment_block() + "hashtag,tweets,avg_pos,avg_neg\n";
    char num[32];
    for (const auto& row : gb::hashtag_averages(corpus, lexicon, tok)) {
      out += gb::csv_escape(row.hashtag) + ',' + std::to_string(row.tweets);
      std::snprintf(num, sizeof(num), ",%.6f,%.6f\n", row.avg_pos, row.avg_neg);
      out += num;
    }
    emit(sentiment_out, out);
  });

  // synth
  auto* synth = app.add_subcommand("synth", "generate a corpus with known injected events");
  std::string synth_spec, synth_out;
  synth->add_option("--spec", synth_spec, "synthetic corpus spec (JSON)")->required();
  synth->add_option("--out", synth_out, "corpus JSONL destination")->required();
  synth->callback([&] {
    Meta meta;
    meta.subcommand = "synth";
    meta.add_input(synth_spec);

    const gb::SyntheticSpec spec = gb::load_synthetic_spec(synth_spec);
    meta.config["spec"] = synth_spec;
    meta.config["generator"] = gb::kGeneratorId;
    meta.config["seed"] = spec.seed;
    meta.config["days"] = spec.days;

    const gb::Corpus corpus = gb::generate(spec);
    std::ostringstream corpus_text;
    gb::write_corpus_jsonl(corpus, corpus_text);
    gb::write_file(synth_out, corpus_text.str());

    meta.config["records"] = corpus.records.size();
    gb::write_file(synth_out + ".meta.json", dump_json(ordered_json{{"meta", meta.json()}}));
  });

  // eval
  auto* eval = app.add_subcommand("eval", "score detect output against a synthetic spec");
  std::string eval_candidates, eval_spec, eval_out;
  std::int64_t eval_slack = 1;
  eval->add_option("--candidates", eval_candidates, "detect JSON output")->required();
  eval->add_option("--spec", eval_spec, "the spec the corpus was generated from")->required();
  eval->add_option("--slack", eval_slack, "window slack in buckets")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--out", eval_out, "output file (default: stdout)");
  eval->callback([&] {
    Meta meta;
    meta.subcommand = "eval";
    meta.config["slack"] = eval_slack;
    meta.add_input(eval_candidates);
    meta.add_input(eval_spec);

    const gb::SyntheticSpec spec = gb::load_synthetic_spec(eval_spec);

    ordered_json doc = ordered_json::parse(gb::read_file(eval_candidates), nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("candidates") ||
        !doc["candidates"].is_array())
      throw gb::DataError(eval_candidates + ": not a detect JSON artifact");
    std::vector<gb::EventCandidate> candidates;
    for (const auto& c : doc["candidates"]) {
      if (!c.is_object() || !c.contains("gram") || !c.contains("window") ||
          !c["window"].is_array() || c["window"].size() != 2)
        throw gb::DataError(eval_candidates + ": candidate entries need gram and window");
      gb::EventCandidate cand;
      cand.gram = c["gram"].get<std::string>();
      cand.window_first = c["window"][0].get<std::int64_t>();
      cand.window_last = c["window"][1].get<std::int64_t>();
      candidates.push_back(std::move(cand));
    }

    const gb::EvalReport report = gb::evaluate(candidates, spec, eval_slack);
    ordered_json matches = ordered_json::array();
    for (const auto& m : report.matches) {
      ordered_json entry{{"event_index", m.event_index}, {"gram", m.gram}};
      entry["candidate_index"] =
          m.candidate_index ? ordered_json(*m.candidate_index) : ordered_json(nullptr);
      matches.push_back(std::move(entry));
    }
    ordered_json out{{"meta", meta.json()},
                     {"report",
                      {{"true_positives", report.true_positives},
                       {"false_positives", report.false_positives},
                       {"false_negatives", report.false_negatives},
                       {"precision", report.precision},
                       {"recall", report.recall},
                       {"f1", report.f1},
                       {"matches", matches}}}};
    emit(eval_out, dump_json(out));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << kSynopsis << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gb::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kSynopsis << "\n";
    return 1;
  } catch (const gb::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
