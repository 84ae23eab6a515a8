#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gramburst/errors.hpp"

namespace gramburst {

enum class Granularity { Hour, Day };
enum class RecordFormat { Jsonl, Csv };

std::int64_t bucket_seconds(Granularity g);

// Day granularity: floor(timestamp / 86400); hour: floor(timestamp / 3600).
std::int64_t bucket_of(std::int64_t timestamp, Granularity g);

const char* granularity_name(Granularity g);
Granularity granularity_from_name(const std::string& name);  // UsageError
RecordFormat format_from_path(const std::string& path);      // *.csv -> Csv, else Jsonl

struct TweetRecord {
  std::string tweet_id;
  std::string account_id;  // optional in the input; empty counts as one account
  std::int64_t timestamp = 0;
  std::string text;
  std::vector<std::string> hashtags;  // lowercase, no '#'

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

// Inclusive epoch-second range.
struct TimeWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct IngestReport {
  std::uint64_t total = 0;  // non-blank lines read
  std::uint64_t accepted = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t malformed = 0;
  std::uint64_t out_of_window = 0;
};

struct Corpus {
  std::vector<TweetRecord> records;  // ascending (timestamp, tweet_id)
  Granularity granularity = Granularity::Day;
  std::int64_t origin_bucket = 0;  // bucket of records[0] when non-empty

  bool empty() const { return records.empty(); }
};

// One record in the given format.
//
// JSONL object fields: tweet_id, account_id (optional), timestamp, text,
// hashtags (optional array). CSV columns in that order, hashtags
// space-separated inside the field. When no explicit hashtags are given
// they are derived from '#'-prefixed tokens in the text.
//
// Throws RecordError: Malformed (unparseable), MissingField (no id,
// timestamp, or text), BadTimestamp (non-integer or negative).
TweetRecord parse_record(const std::string& line, RecordFormat format);

// '#'-prefixed tokens of the raw text, lowercased, '#' stripped.
std::vector<std::string> hashtags_from_text(std::string_view text);

// Canonicalize arrival-ordered records: drop duplicate ids (first occurrence
// kept), then sort by (timestamp, tweet_id). `duplicates`, when given,
// receives the number of dropped records.
Corpus make_corpus(std::vector<TweetRecord> records, Granularity granularity,
                   std::uint64_t* duplicates = nullptr);

// Streaming load with skip-and-report semantics; never aborts on dirty lines.
// An empty result is a reported condition, not an error.
Corpus load_corpus(const std::string& path, RecordFormat format, Granularity granularity,
                   const std::optional<TimeWindow>& window, IngestReport* report);

// Canonical JSONL form (field order tweet_id, account_id, timestamp, text,
// hashtags), one record per line.
void write_corpus_jsonl(const Corpus& corpus, std::ostream& os);

}  // namespace gramburst
