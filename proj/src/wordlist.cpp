// SPDX-License-Identifier: Apache-2.0
//
// Deterministic English-like prose generator. Words come from a built-in
// list of common English words and are drawn with a Zipf-shaped
// distribution, so the character statistics (word lengths, letter bigrams,
// whitespace rhythm) resemble ordinary lowercase text without shipping a
// corpus.
#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>
#include <vector>

#include "vcr/data.hpp"
#include "vcr/tensor.hpp"

namespace vcr {

namespace {

// Roughly frequency-ordered; rank feeds the Zipf weights below.
constexpr std::array<std::string_view, 240> kWords = {
    "the",     "of",      "and",      "to",        "a",        "in",
    "that",    "is",      "was",      "he",        "for",      "it",
    "with",    "as",      "his",      "on",        "be",       "at",
    "by",      "had",     "not",      "are",       "but",      "from",
    "or",      "have",    "an",       "they",      "which",    "one",
    "you",     "were",    "her",      "all",       "she",      "there",
    "would",   "their",   "we",       "him",       "been",     "has",
    "when",    "who",     "will",     "more",      "no",       "if",
    "out",     "so",      "said",     "what",      "up",       "its",
    "about",   "into",    "than",     "them",      "can",      "only",
    "other",   "new",     "some",     "could",     "time",     "these",
    "two",     "may",     "then",     "do",        "first",    "any",
    "my",      "now",     "such",     "like",      "our",      "over",
    "man",     "me",      "even",     "most",      "made",     "after",
    "also",    "did",     "many",     "before",    "must",     "through",
    "back",    "years",   "where",    "much",      "your",     "way",
    "well",    "down",    "should",   "because",   "each",     "just",
    "those",   "people",  "how",      "too",       "little",   "state",
    "good",    "very",    "make",     "world",     "still",    "own",
    "see",     "men",     "work",     "long",      "get",      "here",
    "between", "both",    "life",     "being",     "under",    "never",
    "day",     "same",    "another",  "know",      "while",    "last",
    "might",   "us",      "great",    "old",       "year",     "off",
    "come",    "since",   "against",  "go",        "came",     "right",
    "used",    "take",    "three",    "states",    "himself",  "few",
    "house",   "use",     "during",   "without",   "again",    "place",
    "around",  "however", "home",     "small",     "found",    "thought",
    "went",    "say",     "part",     "once",      "general",  "high",
    "upon",    "school",  "every",    "does",      "got",      "united",
    "left",    "number",  "course",   "war",       "until",    "always",
    "away",    "something", "fact",   "though",    "water",    "less",
    "public",  "put",     "think",    "almost",    "hand",     "enough",
    "far",     "took",    "head",     "yet",       "government", "system",
    "better",  "set",     "told",     "nothing",   "night",    "end",
    "why",     "called",  "didnt",    "eyes",      "find",     "going",
    "look",    "asked",   "later",    "knew",      "point",    "next",
    "city",    "business", "give",    "group",     "toward",   "young",
    "days",    "let",     "room",     "within",    "christmas", "means",
    "others",  "word",    "although", "turned",    "large",    "early",
    "want",    "member",  "along",    "company",   "case",     "become",
};

}  // namespace

std::string generate_text(size_t n_bytes, uint64_t seed) {
  Rng rng(seed);
  // Zipf weights 1/(rank+2), sampled by inverse transform on the cumsum.
  std::vector<double> cum(kWords.size());
  double total = 0.0;
  for (size_t i = 0; i < kWords.size(); ++i) {
    total += 1.0 / static_cast<double>(i + 2);
    cum[i] = total;
  }

  auto draw_word = [&]() -> std::string_view {
    const double u = rng.next_unit() * total;
    const auto it = std::lower_bound(cum.begin(), cum.end(), u);
    return kWords[static_cast<size_t>(it - cum.begin())];
  };

  std::string out;
  out.reserve(n_bytes + 16);
  while (out.size() < n_bytes) {
    const int sentence_words = 4 + rng.next_below(12);
    for (int w = 0; w < sentence_words; ++w) {
      out += draw_word();
      if (w + 1 < sentence_words) out += ' ';
    }
    out += ". ";
  }
  out.resize(n_bytes);
  return out;
}

}  // namespace vcr
