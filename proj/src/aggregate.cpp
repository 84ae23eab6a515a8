#include "gramburst/aggregate.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace gramburst {

const std::unordered_map<std::string, NGramStats>& AggregateIndex::grams_for(int n) const {
  if (n < nmin || n > nmax)
    throw BadN("n=" + std::to_string(n) + " outside index range [" + std::to_string(nmin) + "," +
               std::to_string(nmax) + "]");
  return by_n[static_cast<std::size_t>(n - nmin)];
}

namespace {

struct PartialStats {
  std::uint64_t total = 0;
  std::map<std::int64_t, std::uint64_t> buckets;
  std::uint64_t distinct_tweets = 0;
  std::int64_t last_record = -1;  // distinct-tweet tracking; records arrive in order
  std::unordered_set<std::uint32_t> accounts;
};

using PartialMap = std::unordered_map<std::string, PartialStats>;

// One contiguous record range -> per-n partial maps. Tweet indices are
// global, so distinct-tweet counts add across shards; account sets union.
void count_shard(const Corpus& corpus, const std::vector<std::uint32_t>& account_of,
                 std::size_t lo, std::size_t hi, int nmin, int nmax,
                 const TokenizerOptions& opt, std::vector<PartialMap>& out) {
  out.assign(static_cast<std::size_t>(nmax - nmin + 1), PartialMap{});
  for (std::size_t r = lo; r < hi; ++r) {
    const TweetRecord& rec = corpus.records[r];
    const std::int64_t bucket = bucket_of(rec.timestamp, corpus.granularity);
    const std::vector<std::string> tokens = normalize(rec.text, opt);
    for (int n = nmin; n <= nmax; ++n) {
      PartialMap& map = out[static_cast<std::size_t>(n - nmin)];
      for (auto& gram : extract_ngrams(tokens, n)) {
        PartialStats& st = map[std::move(gram)];
        ++st.total;
        ++st.buckets[bucket];
        if (st.last_record != static_cast<std::int64_t>(r)) {
          ++st.distinct_tweets;
          st.last_record = static_cast<std::int64_t>(r);
        }
        st.accounts.insert(account_of[r]);
      }
    }
  }
}

void merge_partial(PartialMap& into, PartialMap& from) {
  for (auto& [gram, st] : from) {
    auto [it, inserted] = into.try_emplace(gram, std::move(st));
    if (inserted) continue;
    PartialStats& dst = it->second;
    dst.total += st.total;
    for (auto [b, c] : st.buckets) dst.buckets[b] += c;
    dst.distinct_tweets += st.distinct_tweets;
    dst.accounts.insert(st.accounts.begin(), st.accounts.end());
  }
}

}  // namespace

AggregateIndex build_index(const Corpus& corpus, int nmin, int nmax, const TokenizerOptions& opt,
                           unsigned threads) {
  if (nmin < 1 || nmax > 5 || nmin > nmax)
    throw BadN("n range [" + std::to_string(nmin) + "," + std::to_string(nmax) +
               "] outside [1,5]");

  AggregateIndex index;
  index.nmin = nmin;
  index.nmax = nmax;
  index.granularity = corpus.granularity;
  index.by_n.assign(static_cast<std::size_t>(nmax - nmin + 1), {});
  if (corpus.records.empty()) return index;

  index.min_bucket = bucket_of(corpus.records.front().timestamp, corpus.granularity);
  index.max_bucket = bucket_of(corpus.records.back().timestamp, corpus.granularity);

  // Intern accounts up front; ids are record-order based and shared read-only.
  std::vector<std::uint32_t> account_of(corpus.records.size());
  {
    std::unordered_map<std::string, std::uint32_t> ids;
    for (std::size_t r = 0; r < corpus.records.size(); ++r) {
      auto [it, _] = ids.try_emplace(corpus.records[r].account_id,
                                     static_cast<std::uint32_t>(ids.size()));
      account_of[r] = it->second;
    }
  }

  if (threads == 0) threads = 1;
  const std::size_t nrec = corpus.records.size();
  const std::size_t nshards = std::min<std::size_t>(threads, nrec);

  std::vector<std::vector<PartialMap>> shard_maps(nshards);
  if (nshards == 1) {
    count_shard(corpus, account_of, 0, nrec, nmin, nmax, opt, shard_maps[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(nshards);
    for (std::size_t s = 0; s < nshards; ++s) {
      const std::size_t lo = nrec * s / nshards;
      const std::size_t hi = nrec * (s + 1) / nshards;
      workers.emplace_back([&, s, lo, hi] {
        count_shard(corpus, account_of, lo, hi, nmin, nmax, opt, shard_maps[s]);
      });
    }
    for (auto& w : workers) w.join();
  }

  for (int n = nmin; n <= nmax; ++n) {
    const std::size_t slot = static_cast<std::size_t>(n - nmin);
    PartialMap merged = std::move(shard_maps[0][slot]);
    for (std::size_t s = 1; s < nshards; ++s) merge_partial(merged, shard_maps[s][slot]);

    auto& final_map = index.by_n[slot];
    final_map.reserve(merged.size());
    for (auto& [gram, st] : merged) {
      NGramStats stats;
      stats.gram = gram;
      stats.n = n;
      stats.total_count = st.total;
      stats.bucket_counts = std::move(st.buckets);
      stats.distinct_tweets = st.distinct_tweets;
      stats.distinct_accounts = st.accounts.size();
      final_map.emplace(gram, std::move(stats));
    }
  }
  return index;
}

std::vector<RankedGram> top_k(const AggregateIndex& index, int n, std::size_t k,
                              std::optional<BucketRange> scope) {
  const auto& grams = index.grams_for(n);
  std::vector<RankedGram> rows;
  rows.reserve(grams.size());
  for (const auto& [gram, st] : grams) {
    std::uint64_t count = 0;
    if (!scope) {
      count = st.total_count;
    } else {
      auto it = st.bucket_counts.lower_bound(scope->lo);
      for (; it != st.bucket_counts.end() && it->first <= scope->hi; ++it) count += it->second;
    }
    if (count > 0) rows.push_back({gram, count});
  }
  std::sort(rows.begin(), rows.end(), [](const RankedGram& a, const RankedGram& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.gram < b.gram;
  });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

std::vector<std::pair<std::int64_t, std::uint64_t>> timeline(const AggregateIndex& index,
                                                             const std::string& gram) {
  const int n = 1 + static_cast<int>(std::count(gram.begin(), gram.end(), ' '));
  if (n < index.nmin || n > index.nmax)
    throw UnknownGram("gram not in index: '" + gram + "'");
  const auto& grams = index.by_n[static_cast<std::size_t>(n - index.nmin)];
  auto it = grams.find(gram);
  if (it == grams.end()) throw UnknownGram("gram not in index: '" + gram + "'");

  const NGramStats& st = it->second;
  std::vector<std::pair<std::int64_t, std::uint64_t>> series;
  const std::int64_t first = st.first_bucket();
  const std::int64_t last = st.last_bucket();
  series.reserve(static_cast<std::size_t>(last - first + 1));
  auto bc = st.bucket_counts.begin();
  for (std::int64_t b = first; b <= last; ++b) {
    std::uint64_t c = 0;
    if (bc != st.bucket_counts.end() && bc->first == b) {
      c = bc->second;
      ++bc;
    }
    series.emplace_back(b, c);
  }
  return series;
}

}  // namespace gramburst
