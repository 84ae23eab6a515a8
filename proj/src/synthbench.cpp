#include "gramburst/synthbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "gramburst/rng.hpp"
#include "gramburst/util.hpp"

namespace gramburst {

std::string InjectedEvent::gram_text() const { return join(gram, " "); }

void SyntheticSpec::validate() const {
  auto fail = [](const std::string& what) { throw BadSpec("invalid synthetic spec: " + what); };
  if (days < 1) fail("days must be >= 1");
  const BackgroundSpec& bg = background;
  if (bg.tweets_per_day > 0) {
    if (bg.vocabulary_size < 1) fail("background vocabulary_size must be >= 1");
    if (bg.tokens_per_tweet < 1) fail("background tokens_per_tweet must be >= 1");
    if (bg.account_pool < 1) fail("background account_pool must be >= 1");
    if (!(bg.zipf_exponent > 0.0)) fail("background zipf_exponent must be > 0");
  }
  if (bg.active_days && (*bg.active_days < 1 || *bg.active_days > days))
    fail("background active_days must be in [1, days]");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const InjectedEvent& ev = events[i];
    const std::string at = "events[" + std::to_string(i) + "]";
    if (ev.gram.size() < 2 || ev.gram.size() > 5) fail(at + ".gram must have 2..5 tokens");
    for (const auto& tok : ev.gram) {
      if (tok.empty()) fail(at + ".gram tokens must be non-empty");
      if (tok.find_first_of(" \t\n\r") != std::string::npos)
        fail(at + ".gram tokens must not contain whitespace");
    }
    if (ev.start_bucket < 0) fail(at + ".start must be >= 0");
    if (ev.duration_buckets < 1) fail(at + ".duration must be >= 1");
    if (ev.start_bucket + ev.duration_buckets > days) fail(at + " does not fit inside [0, days)");
    if (ev.occurrences < 1) fail(at + ".occurrences must be >= 1");
    if (ev.account_spread < 1) fail(at + ".account_spread must be >= 1");
  }
}

namespace {

std::uint64_t get_u64(const nlohmann::json& j, const char* key, std::uint64_t fallback,
                      bool required = false) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) throw BadSpec(std::string("synthetic spec: missing field '") + key + "'");
    return fallback;
  }
  if (!it->is_number_integer() && !it->is_number_unsigned())
    throw BadSpec(std::string("synthetic spec: field '") + key + "' must be an integer");
  return it->get<std::uint64_t>();
}

}  // namespace

SyntheticSpec parse_synthetic_spec(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw BadSpec("synthetic spec is not a JSON object");

  SyntheticSpec spec;
  spec.seed = get_u64(j, "seed", 0, true);
  spec.days = static_cast<std::int64_t>(get_u64(j, "days", 0, true));

  if (auto it = j.find("background"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw BadSpec("synthetic spec: background must be an object");
    const nlohmann::json& b = *it;
    spec.background.vocabulary_size = get_u64(b, "vocabulary_size", 0);
    spec.background.tweets_per_day = get_u64(b, "tweets_per_day", 0);
    spec.background.tokens_per_tweet = get_u64(b, "tokens_per_tweet", 0);
    spec.background.account_pool = get_u64(b, "account_pool", 0);
    if (auto z = b.find("zipf_exponent"); z != b.end()) {
      if (!z->is_number()) throw BadSpec("synthetic spec: zipf_exponent must be a number");
      spec.background.zipf_exponent = z->get<double>();
    }
    if (b.contains("active_days"))
      spec.background.active_days = static_cast<std::int64_t>(get_u64(b, "active_days", 0));
  }

  if (auto it = j.find("events"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw BadSpec("synthetic spec: events must be an array");
    for (const auto& e : *it) {
      if (!e.is_object()) throw BadSpec("synthetic spec: events entries must be objects");
      InjectedEvent ev;
      auto g = e.find("gram");
      if (g == e.end() || !g->is_array()) throw BadSpec("synthetic spec: event gram must be an array");
      for (const auto& tok : *g) {
        if (!tok.is_string()) throw BadSpec("synthetic spec: event gram tokens must be strings");
        ev.gram.push_back(tok.get<std::string>());
      }
      ev.start_bucket = static_cast<std::int64_t>(get_u64(e, "start", 0, true));
      ev.duration_buckets = static_cast<std::int64_t>(get_u64(e, "duration", 0, true));
      ev.occurrences = get_u64(e, "occurrences", 0, true);
      ev.account_spread = get_u64(e, "account_spread", 1);
      spec.events.push_back(std::move(ev));
    }
  }

  spec.validate();
  return spec;
}

SyntheticSpec load_synthetic_spec(const std::string& path) {
  return parse_synthetic_spec(read_file(path));
}

Corpus generate(const SyntheticSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  std::vector<TweetRecord> records;

  const BackgroundSpec& bg = spec.background;
  if (bg.tweets_per_day > 0) {
    // Power-law weights w_i = (i+1)^-s; draws invert the cumulative sum.
    std::vector<double> cum(bg.vocabulary_size);
    double total = 0.0;
    for (std::uint64_t i = 0; i < bg.vocabulary_size; ++i) {
      total += std::pow(static_cast<double>(i + 1), -bg.zipf_exponent);
      cum[i] = total;
    }

    const std::int64_t active = bg.active_days.value_or(spec.days);
    records.reserve(static_cast<std::size_t>(active) * bg.tweets_per_day);
    std::uint64_t seq = 0;
    char idbuf[32];
    for (std::int64_t day = 0; day < active; ++day) {
      for (std::uint64_t t = 0; t < bg.tweets_per_day; ++t) {
        TweetRecord rec;
        std::snprintf(idbuf, sizeof(idbuf), "bg-%08llu",
                      static_cast<unsigned long long>(seq++));
        rec.tweet_id = idbuf;
        rec.account_id = "u" + std::to_string(rng.below(bg.account_pool));
        rec.timestamp = day * 86400 + static_cast<std::int64_t>(rng.below(86400));
        std::string text;
        for (std::uint64_t k = 0; k < bg.tokens_per_tweet; ++k) {
          const double u = rng.unit() * total;
          const auto it = std::upper_bound(cum.begin(), cum.end(), u);
          const std::size_t idx = std::min<std::size_t>(
              static_cast<std::size_t>(it - cum.begin()), bg.vocabulary_size - 1);
          if (k) text += ' ';
          text += 'w';
          text += std::to_string(idx);
        }
        rec.text = std::move(text);
        records.push_back(std::move(rec));
      }
    }
  }

  char idbuf[48];
  for (std::size_t e = 0; e < spec.events.size(); ++e) {
    const InjectedEvent& ev = spec.events[e];
    const std::string text = ev.gram_text();
    for (std::uint64_t i = 0; i < ev.occurrences; ++i) {
      TweetRecord rec;
      std::snprintf(idbuf, sizeof(idbuf), "ev%llu-%08llu", static_cast<unsigned long long>(e),
                    static_cast<unsigned long long>(i));
      rec.tweet_id = idbuf;
      rec.account_id = "e" + std::to_string(e) + "u" + std::to_string(i % ev.account_spread);
      // Stratified placement covers the whole window evenly.
      const std::int64_t bucket =
          ev.start_bucket +
          static_cast<std::int64_t>(i * static_cast<std::uint64_t>(ev.duration_buckets) /
                                    ev.occurrences);
      rec.timestamp = bucket * 86400 + static_cast<std::int64_t>(rng.below(86400));
      rec.text = text;
      records.push_back(std::move(rec));
    }
  }

  return make_corpus(std::move(records), Granularity::Day, nullptr);
}

EvalReport evaluate(const std::vector<EventCandidate>& candidates, const SyntheticSpec& spec,
                    std::int64_t window_slack) {
  std::vector<std::optional<std::size_t>> matched_by(spec.events.size());
  std::vector<bool> candidate_used(candidates.size(), false);

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const EventCandidate& cand = candidates[ci];
    for (std::size_t ei = 0; ei < spec.events.size(); ++ei) {
      if (matched_by[ei]) continue;
      const InjectedEvent& ev = spec.events[ei];
      if (cand.gram != ev.gram_text()) continue;
      const std::int64_t lo = ev.start_bucket - window_slack;
      const std::int64_t hi = ev.start_bucket + ev.duration_buckets - 1 + window_slack;
      if (cand.window_last < lo || cand.window_first > hi) continue;
      matched_by[ei] = ci;
      candidate_used[ci] = true;
      break;
    }
  }

  EvalReport report;
  for (std::size_t ei = 0; ei < spec.events.size(); ++ei) {
    EventMatch match;
    match.event_index = ei;
    match.gram = spec.events[ei].gram_text();
    match.candidate_index = matched_by[ei];
    if (matched_by[ei])
      ++report.true_positives;
    else
      ++report.false_negatives;
    report.matches.push_back(std::move(match));
  }
  for (std::size_t ci = 0; ci < candidates.size(); ++ci)
    if (!candidate_used[ci]) ++report.false_positives;

  const std::uint64_t tp = report.true_positives;
  report.precision = (tp + report.false_positives) == 0
                         ? 1.0
                         : static_cast<double>(tp) / static_cast<double>(tp + report.false_positives);
  report.recall = (tp + report.false_negatives) == 0
                      ? 1.0
                      : static_cast<double>(tp) / static_cast<double>(tp + report.false_negatives);
  report.f1 = (report.precision + report.recall) == 0.0
                  ? 0.0
                  : 2.0 * report.precision * report.recall / (report.precision + report.recall);
  return report;
}

}  // namespace gramburst
