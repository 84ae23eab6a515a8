#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gramburst/aggregate.hpp"

namespace gramburst {

struct ThresholdConfig {
  std::uint64_t min_distinct_tweets = 10;
  std::uint64_t min_distinct_accounts = 5;
  int top_m = 10;
  int min_consecutive = 3;
  std::uint64_t burst_min_count = 1000;
  std::int64_t burst_max_duration = 31;  // effective buckets
  std::uint64_t sustained_min_count = 500;
  std::int64_t sustained_min_duration = 90;  // effective buckets

  // All fields >= 1 and burst_max_duration < sustained_min_duration
  // (disjoint duration bands). Throws DataError.
  void validate() const;
};

// `key = value` lines, '#' comments; unknown keys rejected.
ThresholdConfig load_threshold_config(const std::string& path);

struct GramDuration {
  std::int64_t raw = 0;        // last_bucket - first_bucket
  std::int64_t effective = 0;  // raw + 1; the density denominator
};

GramDuration duration(const NGramStats& stats);

// total_count / effective_duration.
double density(const NGramStats& stats);

enum class EventCategory { Burst, Sustained };
enum class Classification { None, Burst, Sustained };

const char* category_name(EventCategory c);

// Burst: total >= burst_min_count and effective <= burst_max_duration.
// Sustained: total >= sustained_min_count and effective >= sustained_min_duration.
// Burst is checked first.
Classification classify(const NGramStats& stats, const ThresholdConfig& cfg);

// Ranked per-bucket gram lists over a contiguous bucket range, truncated to
// the top m (count descending, gram ascending).
struct DailyTopLists {
  std::int64_t lo = 0;  // bucket index of lists[0]
  int m = 0;
  std::vector<std::vector<std::string>> lists;
};

DailyTopLists build_daily_top(const AggregateIndex& index, int n, int m);

// True iff the gram holds a rank <= m slot on at least `run` consecutive
// buckets.
bool consecutive_top_m(const DailyTopLists& tops, const std::string& gram, int run);

// Offline stand-in for search-engine popularity, loaded from a
// `query,score` CSV with scores in [0, 100].
struct PopularityOracle {
  std::unordered_map<std::string, double> score_by_query;  // lowercase query
};

PopularityOracle load_popularity_oracle(const std::string& path);

// Case-insensitive exact lookup of the gram's query string.
std::optional<double> confirm_popularity(const std::string& gram, const PopularityOracle& oracle);

struct DetectOptions {
  bool require_confirmation = false;
  double popularity_floor = 50.0;
  const PopularityOracle* oracle = nullptr;
};

struct EventCandidate {
  std::string gram;
  int n = 0;
  std::uint64_t total_count = 0;
  std::uint64_t distinct_tweets = 0;
  std::uint64_t distinct_accounts = 0;
  std::int64_t raw_duration = 0;
  std::int64_t effective_duration = 0;
  double density = 0.0;
  EventCategory category = EventCategory::Burst;
  std::int64_t peak_bucket = 0;  // earliest bucket with the maximum count
  std::int64_t window_first = 0;
  std::int64_t window_last = 0;
  std::optional<double> popularity;
};

// Grams passing every floor (tweets, accounts, consecutive top-m, category,
// optional popularity confirmation), ranked by density descending, ties by
// total count descending then gram ascending. Throws OracleUnavailable when
// confirmation is required without an oracle.
std::vector<EventCandidate> detect_events(const AggregateIndex& index, const ThresholdConfig& cfg,
                                          const DetectOptions& opt = {});

struct ScatterRow {
  std::string gram;
  std::int64_t effective_duration = 0;
  std::uint64_t total_count = 0;
};

// Duration/count pairs for the top k grams of length n by total count.
std::vector<ScatterRow> scatter_data(const AggregateIndex& index, int n, std::size_t k);

}  // namespace gramburst
