#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gramburst/ingest.hpp"
#include "gramburst/textproc.hpp"

namespace gramburst {

struct NGramStats {
  std::string gram;
  int n = 0;
  std::uint64_t total_count = 0;  // every occurrence, overlaps included
  std::map<std::int64_t, std::uint64_t> bucket_counts;
  std::uint64_t distinct_tweets = 0;
  std::uint64_t distinct_accounts = 0;

  std::int64_t first_bucket() const { return bucket_counts.begin()->first; }
  std::int64_t last_bucket() const { return bucket_counts.rbegin()->first; }

  friend bool operator==(const NGramStats&, const NGramStats&) = default;
};

struct AggregateIndex {
  int nmin = 2;
  int nmax = 5;
  Granularity granularity = Granularity::Day;
  std::vector<std::unordered_map<std::string, NGramStats>> by_n;  // [n - nmin]
  std::int64_t min_bucket = 0;  // over all records; valid when !empty()
  std::int64_t max_bucket = -1;

  bool empty() const { return max_bucket < min_bucket; }
  const std::unordered_map<std::string, NGramStats>& grams_for(int n) const;  // BadN
};

// Exact counts for every n in [nmin, nmax] over every record. Records may be
// sharded across `threads` workers; the merge is commutative, so the result
// is independent of the shard boundaries.
AggregateIndex build_index(const Corpus& corpus, int nmin, int nmax,
                           const TokenizerOptions& opt = {}, unsigned threads = 1);

struct RankedGram {
  std::string gram;
  std::uint64_t count = 0;

  friend bool operator==(const RankedGram&, const RankedGram&) = default;
};

// Inclusive bucket range.
struct BucketRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Top k grams of length n by count (within `scope` when given), ties broken
// lexicographically ascending. Scoped counts are recomputed from
// bucket_counts; grams with zero in-scope count are not listed.
std::vector<RankedGram> top_k(const AggregateIndex& index, int n, std::size_t k,
                              std::optional<BucketRange> scope = {});

// Dense per-bucket series over [first_bucket, last_bucket], zero-filled.
// Throws UnknownGram.
std::vector<std::pair<std::int64_t, std::uint64_t>> timeline(const AggregateIndex& index,
                                                             const std::string& gram);

}  // namespace gramburst
