#include "gramburst/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "gramburst/textproc.hpp"

namespace gramburst {

std::int64_t bucket_seconds(Granularity g) { return g == Granularity::Day ? 86400 : 3600; }

std::int64_t bucket_of(std::int64_t timestamp, Granularity g) {
  return timestamp / bucket_seconds(g);
}

const char* granularity_name(Granularity g) { return g == Granularity::Day ? "day" : "hour"; }

Granularity granularity_from_name(const std::string& name) {
  if (name == "day") return Granularity::Day;
  if (name == "hour") return Granularity::Hour;
  throw UsageError("unknown granularity '" + name + "' (expected day or hour)");
}

RecordFormat format_from_path(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return RecordFormat::Csv;
  return RecordFormat::Jsonl;
}

namespace {

bool is_tag_char(char32_t cp) { return cp == U'_' || unicode::is_word(cp); }

// CSV line -> fields, RFC-4180 quoting. Returns false on broken quoting.
bool split_csv_line(const std::string& line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool in_quotes = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        cur += c;
        ++i;
      }
    } else if (c == '"') {
      if (!cur.empty()) return false;  // quote in the middle of a bare field
      in_quotes = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      ++i;
    } else {
      cur += c;
      ++i;
    }
  }
  if (in_quotes) return false;
  fields.push_back(std::move(cur));
  return true;
}

std::int64_t parse_timestamp_string(const std::string& s) {
  if (s.empty()) throw RecordError(RecordErrorKind::BadTimestamp, "empty timestamp");
  std::size_t i = 0;
  if (s[0] == '-') throw RecordError(RecordErrorKind::BadTimestamp, "negative timestamp: " + s);
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw RecordError(RecordErrorKind::BadTimestamp, "non-integer timestamp: " + s);
    v = v * 10 + (s[i] - '0');
    if (v < 0) throw RecordError(RecordErrorKind::BadTimestamp, "timestamp overflow: " + s);
  }
  return v;
}

// Lowercase an explicit hashtag entry and strip leading '#'; empty or
// whitespace-carrying entries are dropped by the caller.
std::string sanitize_tag(const std::string& raw) {
  std::size_t start = 0;
  while (start < raw.size() && raw[start] == '#') ++start;
  std::string out;
  std::size_t i = start;
  while (i < raw.size()) {
    char32_t cp = unicode::decode(raw, i);
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r') return {};
    unicode::encode(unicode::fold(cp), out);
  }
  return out;
}

TweetRecord parse_record_jsonl(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw RecordError(RecordErrorKind::Malformed, "not a JSON object");

  TweetRecord rec;

  auto id_it = j.find("tweet_id");
  if (id_it == j.end()) throw RecordError(RecordErrorKind::MissingField, "no tweet_id");
  if (id_it->is_string())
    rec.tweet_id = id_it->get<std::string>();
  else if (id_it->is_number_integer() || id_it->is_number_unsigned())
    rec.tweet_id = std::to_string(id_it->get<std::uint64_t>());
  else
    throw RecordError(RecordErrorKind::Malformed, "tweet_id must be a string or integer");
  if (rec.tweet_id.empty()) throw RecordError(RecordErrorKind::MissingField, "empty tweet_id");

  if (auto it = j.find("account_id"); it != j.end()) {
    if (it->is_string())
      rec.account_id = it->get<std::string>();
    else if (it->is_number_integer() || it->is_number_unsigned())
      rec.account_id = std::to_string(it->get<std::uint64_t>());
    else if (!it->is_null())
      throw RecordError(RecordErrorKind::Malformed, "account_id must be a string or integer");
  }

  auto ts_it = j.find("timestamp");
  if (ts_it == j.end()) throw RecordError(RecordErrorKind::MissingField, "no timestamp");
  if (ts_it->is_number_unsigned()) {
    rec.timestamp = static_cast<std::int64_t>(ts_it->get<std::uint64_t>());
    if (rec.timestamp < 0) throw RecordError(RecordErrorKind::BadTimestamp, "timestamp overflow");
  } else if (ts_it->is_number_integer()) {
    rec.timestamp = ts_it->get<std::int64_t>();
    if (rec.timestamp < 0) throw RecordError(RecordErrorKind::BadTimestamp, "negative timestamp");
  } else if (ts_it->is_string()) {
    rec.timestamp = parse_timestamp_string(ts_it->get<std::string>());
  } else {
    throw RecordError(RecordErrorKind::BadTimestamp, "non-integer timestamp");
  }

  auto text_it = j.find("text");
  if (text_it == j.end() || text_it->is_null())
    throw RecordError(RecordErrorKind::MissingField, "no text");
  if (!text_it->is_string()) throw RecordError(RecordErrorKind::Malformed, "text must be a string");
  rec.text = text_it->get<std::string>();

  if (auto it = j.find("hashtags"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw RecordError(RecordErrorKind::Malformed, "hashtags must be an array");
    for (const auto& tag : *it) {
      if (!tag.is_string())
        throw RecordError(RecordErrorKind::Malformed, "hashtags entries must be strings");
      std::string clean = sanitize_tag(tag.get<std::string>());
      if (!clean.empty()) rec.hashtags.push_back(std::move(clean));
    }
  } else {
    rec.hashtags = hashtags_from_text(rec.text);
  }
  return rec;
}

TweetRecord parse_record_csv(const std::string& line) {
  std::vector<std::string> fields;
  if (!split_csv_line(line, fields))
    throw RecordError(RecordErrorKind::Malformed, "broken CSV quoting");
  if (fields.size() < 4) throw RecordError(RecordErrorKind::MissingField, "fewer than 4 columns");
  if (fields.size() > 5) throw RecordError(RecordErrorKind::Malformed, "more than 5 columns");

  TweetRecord rec;
  rec.tweet_id = fields[0];
  if (rec.tweet_id.empty()) throw RecordError(RecordErrorKind::MissingField, "empty tweet_id");
  rec.account_id = fields[1];
  rec.timestamp = parse_timestamp_string(fields[2]);
  rec.text = fields[3];

  if (fields.size() == 5 && !fields[4].empty()) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        std::string clean = sanitize_tag(cur);
        if (!clean.empty()) rec.hashtags.push_back(std::move(clean));
        cur.clear();
      }
    };
    for (char c : fields[4]) {
      if (c == ' ')
        flush();
      else
        cur += c;
    }
    flush();
  } else {
    rec.hashtags = hashtags_from_text(rec.text);
  }
  return rec;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

TweetRecord parse_record(const std::string& line, RecordFormat format) {
  return format == RecordFormat::Jsonl ? parse_record_jsonl(line) : parse_record_csv(line);
}

std::vector<std::string> hashtags_from_text(std::string_view text) {
  std::vector<std::string> tags;
  std::size_t i = 0;
  char32_t prev = U' ';
  while (i < text.size()) {
    if (text[i] == '#' && !is_tag_char(prev) && prev != U'#') {
      ++i;
      std::string tag;
      while (i < text.size()) {
        std::size_t j = i;
        char32_t cp = unicode::decode(text, j);
        if (!is_tag_char(cp)) break;
        unicode::encode(unicode::fold(cp), tag);
        i = j;
      }
      if (!tag.empty()) tags.push_back(std::move(tag));
      prev = U'#';
    } else {
      prev = unicode::decode(text, i);
    }
  }
  return tags;
}

Corpus make_corpus(std::vector<TweetRecord> records, Granularity granularity,
                   std::uint64_t* duplicates) {
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  std::uint64_t dropped = 0;
  std::vector<TweetRecord> kept;
  kept.reserve(records.size());
  for (auto& rec : records) {
    if (seen.insert(rec.tweet_id).second)
      kept.push_back(std::move(rec));
    else
      ++dropped;
  }
  std::sort(kept.begin(), kept.end(), [](const TweetRecord& a, const TweetRecord& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.tweet_id < b.tweet_id;
  });

  Corpus corpus;
  corpus.records = std::move(kept);
  corpus.granularity = granularity;
  if (!corpus.records.empty())
    corpus.origin_bucket = bucket_of(corpus.records.front().timestamp, granularity);
  if (duplicates) *duplicates = dropped;
  return corpus;
}

Corpus load_corpus(const std::string& path, RecordFormat format, Granularity granularity,
                   const std::optional<TimeWindow>& window, IngestReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  IngestReport rep;
  std::vector<TweetRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    ++rep.total;
    TweetRecord rec;
    try {
      rec = parse_record(line, format);
    } catch (const RecordError&) {
      ++rep.malformed;
      continue;
    }
    if (window && (rec.timestamp < window->start || rec.timestamp > window->end)) {
      ++rep.out_of_window;
      continue;
    }
    if (!seen.insert(rec.tweet_id).second) {
      ++rep.duplicates;
      continue;
    }
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read failed: " + path);

  rep.accepted = records.size();
  Corpus corpus = make_corpus(std::move(records), granularity, nullptr);
  if (report) *report = rep;
  return corpus;
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& os) {
  for (const auto& rec : corpus.records) {
    nlohmann::ordered_json j;
    j["tweet_id"] = rec.tweet_id;
    j["account_id"] = rec.account_id;
    j["timestamp"] = rec.timestamp;
    j["text"] = rec.text;
    j["hashtags"] = rec.hashtags;
    os << j.dump() << '\n';
  }
}

}  // namespace gramburst
