#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "gramburst/detect.hpp"
#include "oracles.hpp"

using namespace gramburst;

namespace {

std::string temp_file(const char* name, const std::string& content) {
  std::string path = std::string("/tmp/gramburst_detect_") + std::to_string(::getpid()) + "_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

NGramStats stats_with(std::uint64_t total, std::int64_t first, std::int64_t last,
                      std::uint64_t tweets = 0, std::uint64_t accounts = 0) {
  NGramStats st;
  st.gram = "x y";
  st.n = 2;
  st.total_count = total;
  st.bucket_counts[first] = 1;
  if (last != first) st.bucket_counts[last] = 1;
  st.distinct_tweets = tweets ? tweets : total;
  st.distinct_accounts = accounts ? accounts : st.distinct_tweets;
  return st;
}

// Tweets/day for `gram` over [start, start+days), `per_day` each from
// rotating accounts. Extra singleton records pad the daily rankings.
void add_gram_days(std::vector<TweetRecord>& records, const std::string& gram,
                   std::int64_t start, int days, int per_day, int accounts,
                   const std::string& id_prefix) {
  int seq = 0;
  for (int d = 0; d < days; ++d) {
    for (int i = 0; i < per_day; ++i, ++seq) {
      TweetRecord rec;
      rec.tweet_id = id_prefix + std::to_string(seq);
      rec.account_id = id_prefix + "u" + std::to_string(seq % accounts);
      rec.timestamp = (start + d) * 86400 + i;
      rec.text = gram;
      records.push_back(std::move(rec));
    }
  }
}

}  // namespace

TEST_CASE("duration and density") {
  CHECK(duration(stats_with(5, 10, 10)).raw == 0);
  CHECK(duration(stats_with(5, 10, 10)).effective == 1);
  CHECK(duration(stats_with(5, 3, 37)).raw == 34);
  CHECK(duration(stats_with(5, 3, 37)).effective == 35);
  CHECK(density(stats_with(500, 0, 1)) == 250.0);
  CHECK(density(stats_with(7, 4, 4)) == 7.0);
}

TEST_CASE("classification against the default thresholds") {
  const ThresholdConfig cfg;
  CHECK(classify(stats_with(10000, 0, 29), cfg) == Classification::Burst);
  CHECK(classify(stats_with(3, 0, 0), cfg) == Classification::None);
  CHECK(classify(stats_with(600, 0, 199), cfg) == Classification::Sustained);
  CHECK(classify(stats_with(600, 0, 50), cfg) == Classification::None);  // between the bands
  CHECK(classify(stats_with(999, 0, 5), cfg) == Classification::None);   // under the burst floor
  SUBCASE("the duration bands cannot overlap") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      ThresholdConfig c;
      c.burst_max_duration = 1 + static_cast<std::int64_t>(rng.below(100));
      c.sustained_min_duration = c.burst_max_duration + 1 + static_cast<std::int64_t>(rng.below(100));
      c.burst_min_count = 1 + rng.below(2000);
      c.sustained_min_count = 1 + rng.below(2000);
      c.validate();
      const auto st = stats_with(1 + rng.below(5000), 0, static_cast<std::int64_t>(rng.below(300)));
      const std::int64_t eff = duration(st).effective;
      const bool burst_band = eff <= c.burst_max_duration;
      const bool sustained_band = eff >= c.sustained_min_duration;
      CHECK_FALSE((burst_band && sustained_band));
      if (classify(st, c) == Classification::Burst) CHECK(burst_band);
      if (classify(st, c) == Classification::Sustained) CHECK(sustained_band);
    }
  }
}

TEST_CASE("threshold config validation") {
  ThresholdConfig cfg;
  cfg.validate();  // defaults are valid
  cfg.top_m = 0;
  CHECK_THROWS_AS(cfg.validate(), DataError);
  cfg = {};
  cfg.burst_max_duration = 90;
  CHECK_THROWS_AS(cfg.validate(), DataError);  // bands must stay disjoint
  cfg = {};
  cfg.sustained_min_duration = 31;
  CHECK_THROWS_AS(cfg.validate(), DataError);
}

TEST_CASE("threshold config files") {
  SUBCASE("overrides with comments") {
    const std::string path = temp_file("cfg_ok", R"(# tuned for short corpora
min_distinct_tweets = 2
min_distinct_accounts = 1
top_m = 5          # per-day ranking width
min_consecutive = 2
burst_min_count = 40
burst_max_duration = 3
sustained_min_count = 20
sustained_min_duration = 6
)");
    const ThresholdConfig cfg = load_threshold_config(path);
    CHECK(cfg.min_distinct_tweets == 2);
    CHECK(cfg.top_m == 5);
    CHECK(cfg.burst_max_duration == 3);
    CHECK(cfg.sustained_min_duration == 6);
    std::remove(path.c_str());
  }
  SUBCASE("partial files keep defaults") {
    const std::string path = temp_file("cfg_partial", "top_m = 7\n");
    const ThresholdConfig cfg = load_threshold_config(path);
    CHECK(cfg.top_m == 7);
    CHECK(cfg.burst_min_count == 1000);
    std::remove(path.c_str());
  }
  SUBCASE("unknown keys name the line") {
    const std::string path = temp_file("cfg_bad", "not_a_knob = 3\n");
    try {
      load_threshold_config(path);
      FAIL_CHECK("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find(":1") != std::string::npos);
      CHECK(std::string(e.what()).find("not_a_knob") != std::string::npos);
    }
    std::remove(path.c_str());
  }
  SUBCASE("bad values") {
    const std::string path = temp_file("cfg_badval", "top_m = lots\n");
    CHECK_THROWS_AS(load_threshold_config(path), DataError);
    std::remove(path.c_str());
  }
  CHECK_THROWS_AS(load_threshold_config("/nonexistent.cfg"), IoError);
}

TEST_CASE("consecutive_top_m needs an unbroken streak") {
  DailyTopLists tops;
  tops.lo = 0;
  tops.m = 10;
  tops.lists = {{}, {}, {}, {}, {}, {"g"}, {"g"}, {"g"}, {}, {}};
  CHECK(consecutive_top_m(tops, "g", 3));
  CHECK_FALSE(consecutive_top_m(tops, "g", 4));
  tops.lists = {{}, {}, {}, {}, {}, {"g"}, {}, {"g"}, {}, {}};
  CHECK_FALSE(consecutive_top_m(tops, "g", 2));
  CHECK(consecutive_top_m(tops, "g", 1));
  CHECK_FALSE(consecutive_top_m(tops, "absent", 1));

  SUBCASE("equals the brute-force longest run") {
    SplitMix64 rng(13);
    const std::vector<std::string> pool = {"a", "b", "c"};
    for (int trial = 0; trial < 100; ++trial) {
      DailyTopLists t;
      t.m = 2;
      t.lists.resize(8);
      for (auto& list : t.lists)
        for (const auto& g : pool)
          if (rng.below(2)) list.push_back(g);
      for (const auto& g : pool)
        for (int run = 1; run <= 4; ++run)
          CHECK(consecutive_top_m(t, g, run) == (oracle::longest_run(t.lists, g) >= run));
    }
  }
}

TEST_CASE("build_daily_top matches a per-day re-count") {
  const Corpus corpus = oracle::random_corpus(51, 40);
  const AggregateIndex index = build_index(corpus, 2, 2);
  if (index.empty()) return;
  const oracle::TallyMap tallies = oracle::tally(corpus, 2);
  for (int m : {1, 3, 10}) {
    const DailyTopLists tops = build_daily_top(index, 2, m);
    CHECK(tops.lo == index.min_bucket);
    REQUIRE(tops.lists.size() ==
            static_cast<std::size_t>(index.max_bucket - index.min_bucket + 1));
    for (std::size_t i = 0; i < tops.lists.size(); ++i) {
      const std::int64_t bucket = tops.lo + static_cast<std::int64_t>(i);
      const auto expected = oracle::top_k(tallies, m, BucketRange{bucket, bucket});
      REQUIRE(tops.lists[i].size() == expected.size());
      for (std::size_t r = 0; r < expected.size(); ++r)
        CHECK(tops.lists[i][r] == expected[r].gram);
    }
  }
}

TEST_CASE("popularity oracle lookup") {
  const std::string path = temp_file("oracle.csv", "query,score\nPrayForMizzou,100\npray for mizzou,97\nlow ball,10\n");
  const PopularityOracle oracle = load_popularity_oracle(path);
  CHECK(confirm_popularity("prayformizzou", oracle) == 100.0);
  CHECK(confirm_popularity("PRAY FOR MIZZOU", oracle) == 97.0);
  CHECK_FALSE(confirm_popularity("unknown", oracle).has_value());
  std::remove(path.c_str());

  const std::string bad = temp_file("oracle_bad.csv", "flood,200\n");
  CHECK_THROWS_AS(load_popularity_oracle(bad), DataError);
  std::remove(bad.c_str());
  CHECK_THROWS_AS(load_popularity_oracle("/nonexistent.csv"), IoError);
}

TEST_CASE("detect_events end to end") {
  // A sharp 3-day spike plus a long slow drip, over a thin background.
  ThresholdConfig cfg;
  cfg.min_distinct_tweets = 10;
  cfg.min_distinct_accounts = 5;
  cfg.top_m = 10;
  cfg.min_consecutive = 3;
  cfg.burst_min_count = 60;
  cfg.burst_max_duration = 5;
  cfg.sustained_min_count = 24;
  cfg.sustained_min_duration = 20;

  std::vector<TweetRecord> records;
  add_gram_days(records, "boom blast", 10, 3, 30, 8, "spike");
  add_gram_days(records, "slow drip", 0, 30, 1, 6, "drip");
  add_gram_days(records, "just noise", 4, 2, 3, 2, "noise");  // too few accounts
  const Corpus corpus = make_corpus(std::move(records), Granularity::Day, nullptr);
  const AggregateIndex index = build_index(corpus, 2, 3);

  const auto candidates = detect_events(index, cfg);
  REQUIRE(candidates.size() == 2);

  const EventCandidate& burst = candidates[0];
  CHECK(burst.gram == "boom blast");
  CHECK(burst.category == EventCategory::Burst);
  CHECK(burst.total_count == 90);
  CHECK(burst.raw_duration == 2);
  CHECK(burst.effective_duration == 3);
  CHECK(burst.density == 30.0);
  CHECK(burst.window_first == 10);
  CHECK(burst.window_last == 12);
  CHECK(burst.peak_bucket == 10);  // counts tie at 30; the earliest wins
  CHECK_FALSE(burst.popularity.has_value());

  const EventCandidate& sustained = candidates[1];
  CHECK(sustained.gram == "slow drip");
  CHECK(sustained.category == EventCategory::Sustained);
  CHECK(sustained.total_count == 30);
  CHECK(sustained.effective_duration == 30);
  CHECK(sustained.density == 1.0);

  CHECK(burst.density > sustained.density);  // ranking puts the burst first

  SUBCASE("every candidate clears every floor") {
    for (const auto& c : candidates) {
      CHECK(c.distinct_tweets >= cfg.min_distinct_tweets);
      CHECK(c.distinct_accounts >= cfg.min_distinct_accounts);
      CHECK(classify(index.grams_for(c.n).at(c.gram), cfg) != Classification::None);
      CHECK(c.window_first <= c.peak_bucket);
      CHECK(c.peak_bucket <= c.window_last);
      CHECK(std::llround(c.density * static_cast<double>(c.effective_duration)) ==
            static_cast<std::int64_t>(c.total_count));
    }
  }

  SUBCASE("popularity scores attach without filtering") {
    PopularityOracle oracle;
    oracle.score_by_query["boom blast"] = 80.0;
    DetectOptions opt;
    opt.oracle = &oracle;
    const auto scored = detect_events(index, cfg, opt);
    REQUIRE(scored.size() == 2);
    CHECK(scored[0].popularity == 80.0);
    CHECK_FALSE(scored[1].popularity.has_value());
  }

  SUBCASE("required confirmation filters unconfirmed candidates") {
    PopularityOracle oracle;
    oracle.score_by_query["boom blast"] = 80.0;
    oracle.score_by_query["slow drip"] = 20.0;
    DetectOptions opt;
    opt.oracle = &oracle;
    opt.require_confirmation = true;
    opt.popularity_floor = 50.0;
    const auto confirmed = detect_events(index, cfg, opt);
    REQUIRE(confirmed.size() == 1);
    CHECK(confirmed[0].gram == "boom blast");
  }

  SUBCASE("confirmation without an oracle is refused") {
    DetectOptions opt;
    opt.require_confirmation = true;
    CHECK_THROWS_AS(detect_events(index, cfg, opt), OracleUnavailable);
  }

  SUBCASE("repeated runs are identical") {
    const auto again = detect_events(index, cfg);
    REQUIRE(again.size() == candidates.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
      CHECK(again[i].gram == candidates[i].gram);
      CHECK(again[i].density == candidates[i].density);
    }
  }
}

TEST_CASE("detect_events breaks ranking ties by count then gram") {
  ThresholdConfig cfg;
  cfg.min_distinct_tweets = 1;
  cfg.min_distinct_accounts = 1;
  cfg.top_m = 10;
  cfg.min_consecutive = 1;
  cfg.burst_min_count = 4;
  cfg.burst_max_duration = 2;
  cfg.sustained_min_count = 1000000;
  cfg.sustained_min_duration = 1000;

  // Identical shapes for two grams; a third matches density via 8/2 = 4/1.
  std::vector<TweetRecord> records;
  add_gram_days(records, "zed zulu", 0, 1, 4, 4, "z");
  add_gram_days(records, "alfa apple", 0, 1, 4, 4, "a");
  add_gram_days(records, "mid mike", 0, 2, 4, 4, "m");
  const Corpus corpus = make_corpus(std::move(records), Granularity::Day, nullptr);
  const auto candidates = detect_events(build_index(corpus, 2, 2), cfg);
  REQUIRE(candidates.size() == 3);
  CHECK(candidates[0].gram == "mid mike");    // density 4.0, count 8
  CHECK(candidates[1].gram == "alfa apple");  // density 4.0, count 4, lexicographically first
  CHECK(candidates[2].gram == "zed zulu");
}

TEST_CASE("tightening any threshold never adds candidates") {
  const Corpus corpus = oracle::random_corpus(77, 50);
  const AggregateIndex index = build_index(corpus, 2, 3);
  ThresholdConfig base;
  base.min_distinct_tweets = 1;
  base.min_distinct_accounts = 1;
  base.top_m = 10;
  base.min_consecutive = 1;
  base.burst_min_count = 2;
  base.burst_max_duration = 5;
  base.sustained_min_count = 2;
  base.sustained_min_duration = 6;

  auto gram_set = [](const std::vector<EventCandidate>& cs) {
    std::set<std::string> s;
    for (const auto& c : cs) s.insert(c.gram);
    return s;
  };
  const auto base_set = gram_set(detect_events(index, base));

  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ThresholdConfig tight = base;
    if (rng.below(2)) tight.min_distinct_tweets += rng.below(3);
    if (rng.below(2)) tight.min_distinct_accounts += rng.below(3);
    if (rng.below(2)) tight.top_m = std::max(1, tight.top_m - static_cast<int>(rng.below(5)));
    if (rng.below(2)) tight.min_consecutive += static_cast<int>(rng.below(2));
    if (rng.below(2)) tight.burst_min_count += rng.below(5);
    if (rng.below(2))
      tight.burst_max_duration = std::max<std::int64_t>(1, tight.burst_max_duration - 2);
    if (rng.below(2)) tight.sustained_min_count += rng.below(5);
    if (rng.below(2)) tight.sustained_min_duration += rng.below(4);
    tight.validate();

    const auto tight_set = gram_set(detect_events(index, tight));
    for (const auto& gram : tight_set) CHECK(base_set.count(gram) == 1);
  }
}

TEST_CASE("scatter_data pairs durations with counts") {
  std::vector<TweetRecord> records;
  add_gram_days(records, "one two three", 2, 4, 5, 3, "a");
  add_gram_days(records, "four five six", 0, 1, 3, 3, "b");
  const Corpus corpus = make_corpus(std::move(records), Granularity::Day, nullptr);
  const AggregateIndex index = build_index(corpus, 3, 3);

  const auto one = scatter_data(index, 3, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].gram == "one two three");
  CHECK(one[0].total_count == 20);
  CHECK(one[0].effective_duration == 4);

  const auto all = scatter_data(index, 3, 138);
  CHECK(all.size() == 2);
  for (const auto& row : all) {
    const NGramStats& st = index.grams_for(3).at(row.gram);
    CHECK(row.effective_duration == duration(st).effective);
    CHECK(row.total_count == st.total_count);
  }
}
