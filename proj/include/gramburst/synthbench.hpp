#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gramburst/detect.hpp"
#include "gramburst/ingest.hpp"

namespace gramburst {

struct BackgroundSpec {
  std::uint64_t vocabulary_size = 0;
  std::uint64_t tweets_per_day = 0;  // 0 turns the background off
  std::uint64_t tokens_per_tweet = 0;
  std::uint64_t account_pool = 0;
  double zipf_exponent = 1.1;
  // Days carrying background tweets; defaults to the whole horizon.
  std::optional<std::int64_t> active_days;
};

struct InjectedEvent {
  std::vector<std::string> gram;  // 2..5 tokens
  std::int64_t start_bucket = 0;
  std::int64_t duration_buckets = 1;
  std::uint64_t occurrences = 1;
  std::uint64_t account_spread = 1;

  std::string gram_text() const;
};

struct SyntheticSpec {
  std::uint64_t seed = 0;
  std::int64_t days = 1;
  BackgroundSpec background;
  std::vector<InjectedEvent> events;

  void validate() const;  // BadSpec
};

SyntheticSpec parse_synthetic_spec(const std::string& json_text);
SyntheticSpec load_synthetic_spec(const std::string& path);

// Deterministic corpus for the spec: background tweets draw tokens from a
// power-law vocabulary (day granularity); each event contributes exactly
// `occurrences` tweets whose text is its gram, spread round-robin over
// `account_spread` accounts and evenly over its window. splitmix64 draws in
// a fixed order (see rng.hpp).
Corpus generate(const SyntheticSpec& spec);

struct EventMatch {
  std::size_t event_index = 0;
  std::string gram;
  std::optional<std::size_t> candidate_index;  // absent = missed
};

struct EvalReport {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  double precision = 1.0;  // 1 when TP+FP = 0
  double recall = 1.0;     // 1 when TP+FN = 0
  double f1 = 1.0;         // 0 when precision+recall = 0
  std::vector<EventMatch> matches;
};

// Greedy one-to-one matching in candidate rank order: a candidate matches an
// injected event iff the gram text is equal and the candidate window overlaps
// the injected window widened by +-window_slack buckets.
EvalReport evaluate(const std::vector<EventCandidate>& candidates, const SyntheticSpec& spec,
                    std::int64_t window_slack);

}  // namespace gramburst
