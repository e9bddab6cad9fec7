// SPDX-License-Identifier: Apache-2.0
//
// Corpus ingestion and synthetic-sequence generation: byte streams expanded
// to bit tokens, character vocabularies, generic symbol streams, buffer-bit
// constructions, and a deterministic English-like text generator for
// self-contained experiments.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vcr {

enum class Level { bit, character, generic };

const char* level_name(Level level);
Level level_from_name(const std::string& name);

struct SplitRange {
  size_t begin = 0;
  size_t end = 0;  // half-open
  size_t size() const { return end - begin; }
};

struct Splits {
  bool assigned = false;
  SplitRange train, valid, test;
};

struct TokenStream {
  std::vector<int> tokens;
  std::vector<std::string> vocab;
  Level level = Level::generic;
  Splits splits;

  size_t size() const { return tokens.size(); }
  int vocab_size() const { return static_cast<int>(vocab.size()); }
};

// Per-position flags; every vector has the same length as the token stream.
struct PositionAnnotations {
  std::vector<uint8_t> is_boundary;
  std::vector<uint8_t> is_buffer;
  std::vector<uint8_t> is_whitespace;

  size_t size() const { return is_boundary.size(); }
  static PositionAnnotations zeros(size_t n);
  PositionAnnotations slice(size_t begin, size_t len) const;
};

// Each byte expands MSB-first into 8 bit tokens; vocab is exactly {"0","1"}.
// Optionally marks the first bit of every byte as a boundary.
TokenStream bytes_to_bits(std::span<const uint8_t> bytes,
                          PositionAnnotations* ann = nullptr);

// Inverse of bytes_to_bits; requires a bit-level stream of length 8*n.
std::vector<uint8_t> bits_to_bytes(const TokenStream& stream);

// After every 8 original bits, k zero bits are inserted and flagged as
// buffer positions. Boundary flags mark the first bit of each 8-bit group.
std::pair<TokenStream, PositionAnnotations> insert_buffer_bits(
    const TokenStream& stream, int k);

// Character stream over bytes of `text`. Vocabulary keeps characters with
// count >= min_count ordered by count descending then byte value, with an
// <unk> token appended last. Whitespace positions are flagged.
std::pair<TokenStream, PositionAnnotations> build_char_stream(
    const std::string& text, int min_count = 1);

// Whitespace-separated symbols, one token per occurrence. Vocabulary ordered
// by count descending, ties by first occurrence in the input.
TokenStream load_generic_tokens(const std::string& text);

// Decode token ids back to the input text form (symbols joined by spaces for
// generic streams, concatenated otherwise).
std::string decode_tokens(const TokenStream& stream);

// Contiguous train|valid|test split. Train and valid sizes are floored;
// when the fractions sum to 1 the remainder goes to test. Throws if any
// split would be empty.
TokenStream split_corpus(TokenStream stream, double train_frac,
                         double valid_frac, double test_frac);

// Deterministic English-like prose: lowercase words drawn from a built-in
// common-word list with a Zipf-shaped distribution, sentence punctuation
// included. Same (n_bytes, seed) always yields the same text.
std::string generate_text(size_t n_bytes, uint64_t seed);

// Bit stream with one Bernoulli(1/2) information bit at the start of each
// period and zeros elsewhere; boundary flags mark the period starts.
std::pair<TokenStream, PositionAnnotations> generate_periodic_bits(
    int period, size_t length, uint64_t seed);

std::string read_text_file(const std::string& path);
std::vector<uint8_t> read_binary_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace vcr
