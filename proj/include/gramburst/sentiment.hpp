#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gramburst/ingest.hpp"
#include "gramburst/textproc.hpp"

namespace gramburst {

struct PolarityLexicon {
  std::unordered_map<std::string, double> polarity;  // lowercase token -> [-1, +1]
};

// `token<TAB>polarity` lines; '#' comments and blanks allowed; polarities
// outside [-1, 1] rejected.
PolarityLexicon load_polarity_lexicon(const std::string& path);

struct SentimentScore {
  double pos = 0.5;
  double neg = 0.5;  // pos + neg = 1
};

// Mean polarity p over tokens found in the lexicon (0 when none), mapped to
// ((1+p)/2, (1-p)/2).
SentimentScore score_text(const std::vector<std::string>& tokens, const PolarityLexicon& lexicon);

struct HashtagSentimentRow {
  std::string hashtag;
  std::uint64_t tweets = 0;
  double avg_pos = 0.5;
  double avg_neg = 0.5;
};

// One row per hashtag in the corpus: per-tweet scores averaged over the
// tweets carrying that hashtag. Rows ordered by tweet count descending,
// hashtag ascending.
std::vector<HashtagSentimentRow> hashtag_averages(const Corpus& corpus,
                                                  const PolarityLexicon& lexicon,
                                                  const TokenizerOptions& opt = {});

}  // namespace gramburst
