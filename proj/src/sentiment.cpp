#include "gramburst/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

namespace gramburst {

PolarityLexicon load_polarity_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon " + path);
  PolarityLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected token<TAB>polarity");
    std::string token = line.substr(0, tab);
    for (auto& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    double polarity = 0.0;
    try {
      polarity = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(lineno) + ": bad polarity");
    }
    if (polarity < -1.0 || polarity > 1.0)
      throw DataError(path + ":" + std::to_string(lineno) + ": polarity outside [-1,1]");
    lex.polarity[token] = polarity;
  }
  return lex;
}

SentimentScore score_text(const std::vector<std::string>& tokens, const PolarityLexicon& lexicon) {
  double sum = 0.0;
  std::uint64_t hits = 0;
  for (const auto& tok : tokens) {
    auto it = lexicon.polarity.find(tok);
    if (it != lexicon.polarity.end()) {
      sum += it->second;
      ++hits;
    }
  }
  const double p = hits ? sum / static_cast<double>(hits) : 0.0;
  return {(1.0 + p) / 2.0, (1.0 - p) / 2.0};
}

std::vector<HashtagSentimentRow> hashtag_averages(const Corpus& corpus,
                                                  const PolarityLexicon& lexicon,
                                                  const TokenizerOptions& opt) {
  struct Accum {
    std::uint64_t tweets = 0;
    double pos_sum = 0.0;
    double neg_sum = 0.0;
  };
  std::map<std::string, Accum> by_tag;
  std::vector<std::string> tags;
  for (const auto& rec : corpus.records) {
    if (rec.hashtags.empty()) continue;
    const SentimentScore score = score_text(normalize(rec.text, opt), lexicon);
    // A tweet counts once per hashtag even when it repeats the tag.
    tags = rec.hashtags;
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    for (const auto& tag : tags) {
      Accum& acc = by_tag[tag];
      ++acc.tweets;
      acc.pos_sum += score.pos;
      acc.neg_sum += score.neg;
    }
  }

  std::vector<HashtagSentimentRow> rows;
  rows.reserve(by_tag.size());
  for (const auto& [tag, acc] : by_tag) {
    HashtagSentimentRow row;
    row.hashtag = tag;
    row.tweets = acc.tweets;
    row.avg_pos = acc.pos_sum / static_cast<double>(acc.tweets);
    row.avg_neg = acc.neg_sum / static_cast<double>(acc.tweets);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const HashtagSentimentRow& a, const HashtagSentimentRow& b) {
    if (a.tweets != b.tweets) return a.tweets > b.tweets;
    return a.hashtag < b.hashtag;
  });
  return rows;
}

}  // namespace gramburst
