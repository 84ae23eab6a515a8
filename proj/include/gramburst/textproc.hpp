#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gramburst/errors.hpp"

namespace gramburst {

// Word-break dictionary for hashtag segmentation. Scores are log frequency
// weights, held as integer micro-nats so the split optimum is exact and
// associativity-independent.
struct WordsegDictionary {
  std::unordered_map<std::string, std::int64_t> microlog;  // word -> round(1e6 * ln weight)
  std::size_t max_word_len = 0;                            // bytes

  void add(const std::string& word, double weight);
  bool contains(const std::string& word) const { return microlog.count(word) != 0; }
  bool empty() const { return microlog.empty(); }
};

// Plain text, one `word<TAB>weight` per line; '#' comments and blank lines
// allowed; weights must be positive.
WordsegDictionary load_wordseg_dictionary(const std::string& path);

struct TokenizerOptions {
  // Keep URL-shaped tokens and let punctuation split them
  // ("pic.twitter.com/x" -> pic twitter com x). Off by default: such
  // tokens are dropped whole.
  bool keep_urls = false;
  // Replace single-token hashtags by their dictionary segmentation.
  bool segment_hashtags = false;
  const WordsegDictionary* dictionary = nullptr;  // required when segment_hashtags
};

// Lowercased token sequence: URL tokens removed (see keep_urls), '#'/'@'
// prefixes stripped, every non-alphanumeric codepoint a separator, stop
// words retained. Apostrophes separate ("don't" -> don t).
std::vector<std::string> normalize(std::string_view text, const TokenizerOptions& opt = {});

// True for tokens shaped like links: http(s):// or www. prefixes, or a
// t.co / twitter.com path.
bool is_url_token(std::string_view raw_token);

// All width-n windows of the sequence, each joined by single spaces.
// Throws BadN outside [1,5].
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens, int n);

// Best split of `tag` into dictionary words, maximizing the summed log
// weights; ties prefer fewer words, then the lexicographically smallest
// split. Returns {tag} when no full segmentation exists.
std::vector<std::string> segment_hashtag(const std::string& tag, const WordsegDictionary& dict);

namespace unicode {

// Decodes one UTF-8 codepoint at `i`; advances `i`. Invalid bytes decode
// as U+FFFD one byte at a time.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

// Lowercase fold over ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic.
char32_t fold(char32_t cp);

// Token-constituent codepoints: digits and letters of the common scripts.
bool is_word(char32_t cp);

bool is_combining_mark(char32_t cp);

// Precomposed form for (base, combining mark) pairs in the Latin-1 range,
// or 0 when none exists.
char32_t compose(char32_t base, char32_t mark);

}  // namespace unicode

}  // namespace gramburst
