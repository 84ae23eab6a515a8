#include "gramburst/detect.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gramburst {

void ThresholdConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DataError(std::string("invalid threshold config: ") + what);
  };
  require(min_distinct_tweets >= 1, "min_distinct_tweets must be >= 1");
  require(min_distinct_accounts >= 1, "min_distinct_accounts must be >= 1");
  require(top_m >= 1, "top_m must be >= 1");
  require(min_consecutive >= 1, "min_consecutive must be >= 1");
  require(burst_min_count >= 1, "burst_min_count must be >= 1");
  require(burst_max_duration >= 1, "burst_max_duration must be >= 1");
  require(sustained_min_count >= 1, "sustained_min_count must be >= 1");
  require(sustained_min_duration >= 1, "sustained_min_duration must be >= 1");
  require(burst_max_duration < sustained_min_duration,
          "burst_max_duration must be < sustained_min_duration");
}

ThresholdConfig load_threshold_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  ThresholdConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (strip(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    std::int64_t v = 0;
    try {
      v = std::stoll(value);
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(lineno) + ": bad value '" + value + "'");
    }
    if (key == "min_distinct_tweets")
      cfg.min_distinct_tweets = static_cast<std::uint64_t>(v);
    else if (key == "min_distinct_accounts")
      cfg.min_distinct_accounts = static_cast<std::uint64_t>(v);
    else if (key == "top_m")
      cfg.top_m = static_cast<int>(v);
    else if (key == "min_consecutive")
      cfg.min_consecutive = static_cast<int>(v);
    else if (key == "burst_min_count")
      cfg.burst_min_count = static_cast<std::uint64_t>(v);
    else if (key == "burst_max_duration")
      cfg.burst_max_duration = v;
    else if (key == "sustained_min_count")
      cfg.sustained_min_count = static_cast<std::uint64_t>(v);
    else if (key == "sustained_min_duration")
      cfg.sustained_min_duration = v;
    else
      throw DataError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

GramDuration duration(const NGramStats& stats) {
  GramDuration d;
  d.raw = stats.last_bucket() - stats.first_bucket();
  d.effective = d.raw + 1;
  return d;
}

double density(const NGramStats& stats) {
  return static_cast<double>(stats.total_count) / static_cast<double>(duration(stats).effective);
}

const char* category_name(EventCategory c) {
  return c == EventCategory::Burst ? "burst" : "sustained";
}

Classification classify(const NGramStats& stats, const ThresholdConfig& cfg) {
  const std::int64_t effective = duration(stats).effective;
  if (stats.total_count >= cfg.burst_min_count && effective <= cfg.burst_max_duration)
    return Classification::Burst;
  if (stats.total_count >= cfg.sustained_min_count && effective >= cfg.sustained_min_duration)
    return Classification::Sustained;
  return Classification::None;
}

DailyTopLists build_daily_top(const AggregateIndex& index, int n, int m) {
  const auto& grams = index.grams_for(n);
  DailyTopLists tops;
  tops.m = m;
  if (index.empty()) return tops;
  tops.lo = index.min_bucket;

  const std::size_t nbuckets = static_cast<std::size_t>(index.max_bucket - index.min_bucket + 1);
  std::vector<std::vector<std::pair<const std::string*, std::uint64_t>>> per(nbuckets);
  for (const auto& [gram, st] : grams)
    for (auto [b, c] : st.bucket_counts)
      per[static_cast<std::size_t>(b - tops.lo)].emplace_back(&gram, c);

  tops.lists.resize(nbuckets);
  for (std::size_t i = 0; i < nbuckets; ++i) {
    auto& bucket = per[i];
    std::sort(bucket.begin(), bucket.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return *a.first < *b.first;
    });
    if (bucket.size() > static_cast<std::size_t>(m)) bucket.resize(static_cast<std::size_t>(m));
    tops.lists[i].reserve(bucket.size());
    for (const auto& [gram, _] : bucket) tops.lists[i].push_back(*gram);
  }
  return tops;
}

bool consecutive_top_m(const DailyTopLists& tops, const std::string& gram, int run) {
  int streak = 0;
  for (const auto& list : tops.lists) {
    if (std::find(list.begin(), list.end(), gram) != list.end()) {
      if (++streak >= run) return true;
    } else {
      streak = 0;
    }
  }
  return false;
}

PopularityOracle load_popularity_oracle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open oracle " + path);
  PopularityOracle oracle;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected query,score");
    std::string query = line.substr(0, comma);
    if (query == "query") continue;  // header row
    double score = 0.0;
    try {
      score = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(lineno) + ": bad score");
    }
    if (score < 0.0 || score > 100.0)
      throw DataError(path + ":" + std::to_string(lineno) + ": score outside [0,100]");
    for (auto& c : query) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    oracle.score_by_query[query] = score;
  }
  return oracle;
}

std::optional<double> confirm_popularity(const std::string& gram, const PopularityOracle& oracle) {
  std::string key = gram;
  for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto it = oracle.score_by_query.find(key);
  if (it == oracle.score_by_query.end()) return std::nullopt;
  return it->second;
}

std::vector<EventCandidate> detect_events(const AggregateIndex& index, const ThresholdConfig& cfg,
                                          const DetectOptions& opt) {
  cfg.validate();
  if (opt.require_confirmation && opt.oracle == nullptr)
    throw OracleUnavailable("popularity confirmation required but no oracle loaded");

  std::vector<EventCandidate> candidates;
  for (int n = index.nmin; n <= index.nmax; ++n) {
    const auto& grams = index.grams_for(n);
    if (grams.empty()) continue;
    // Rankings are per gram length; comparing counts across lengths would
    // let short grams crowd out every longer one.
    const DailyTopLists tops = build_daily_top(index, n, cfg.top_m);
    for (const auto& [gram, st] : grams) {
      if (st.distinct_tweets < cfg.min_distinct_tweets) continue;
      if (st.distinct_accounts < cfg.min_distinct_accounts) continue;
      const Classification cls = classify(st, cfg);
      if (cls == Classification::None) continue;
      if (!consecutive_top_m(tops, gram, cfg.min_consecutive)) continue;

      std::optional<double> popularity;
      if (opt.oracle) popularity = confirm_popularity(gram, *opt.oracle);
      if (opt.require_confirmation && (!popularity || *popularity < opt.popularity_floor))
        continue;

      EventCandidate cand;
      cand.gram = gram;
      cand.n = n;
      cand.total_count = st.total_count;
      cand.distinct_tweets = st.distinct_tweets;
      cand.distinct_accounts = st.distinct_accounts;
      const GramDuration dur = duration(st);
      cand.raw_duration = dur.raw;
      cand.effective_duration = dur.effective;
      cand.density = density(st);
      cand.category = cls == Classification::Burst ? EventCategory::Burst : EventCategory::Sustained;
      std::uint64_t peak = 0;
      for (auto [b, c] : st.bucket_counts) {
        if (c > peak) {
          peak = c;
          cand.peak_bucket = b;
        }
      }
      cand.window_first = st.first_bucket();
      cand.window_last = st.last_bucket();
      cand.popularity = popularity;
      candidates.push_back(std::move(cand));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const EventCandidate& a, const EventCandidate& b) {
              if (a.density != b.density) return a.density > b.density;
              if (a.total_count != b.total_count) return a.total_count > b.total_count;
              return a.gram < b.gram;
            });
  return candidates;
}

std::vector<ScatterRow> scatter_data(const AggregateIndex& index, int n, std::size_t k) {
  std::vector<ScatterRow> rows;
  for (const auto& ranked : top_k(index, n, k)) {
    const NGramStats& st = index.grams_for(n).at(ranked.gram);
    rows.push_back({ranked.gram, duration(st).effective, st.total_count});
  }
  return rows;
}

}  // namespace gramburst
