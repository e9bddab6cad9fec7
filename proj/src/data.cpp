// SPDX-License-Identifier: Apache-2.0
#include "vcr/data.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vcr/errors.hpp"
#include "vcr/tensor.hpp"

namespace vcr {

const char* level_name(Level level) {
  switch (level) {
    case Level::bit: return "bit";
    case Level::character: return "char";
    case Level::generic: return "generic";
  }
  return "?";
}

Level level_from_name(const std::string& name) {
  if (name == "bit") return Level::bit;
  if (name == "char") return Level::character;
  if (name == "generic") return Level::generic;
  throw ConfigError("unknown data level '" + name + "' (want bit|char|generic)");
}

PositionAnnotations PositionAnnotations::zeros(size_t n) {
  PositionAnnotations ann;
  ann.is_boundary.assign(n, 0);
  ann.is_buffer.assign(n, 0);
  ann.is_whitespace.assign(n, 0);
  return ann;
}

PositionAnnotations PositionAnnotations::slice(size_t begin, size_t len) const {
  PositionAnnotations out;
  auto cut = [&](const std::vector<uint8_t>& v) {
    return std::vector<uint8_t>(v.begin() + begin, v.begin() + begin + len);
  };
  out.is_boundary = cut(is_boundary);
  out.is_buffer = cut(is_buffer);
  out.is_whitespace = cut(is_whitespace);
  return out;
}

TokenStream bytes_to_bits(std::span<const uint8_t> bytes,
                          PositionAnnotations* ann) {
  if (bytes.empty()) throw std::invalid_argument("bytes_to_bits: empty input");
  TokenStream stream;
  stream.level = Level::bit;
  stream.vocab = {"0", "1"};
  stream.tokens.reserve(bytes.size() * 8);
  for (uint8_t b : bytes) {
    for (int bit = 7; bit >= 0; --bit) {
      stream.tokens.push_back((b >> bit) & 1);
    }
  }
  if (ann) {
    *ann = PositionAnnotations::zeros(stream.tokens.size());
    for (size_t i = 0; i < stream.tokens.size(); i += 8) {
      ann->is_boundary[i] = 1;
    }
  }
  return stream;
}

std::vector<uint8_t> bits_to_bytes(const TokenStream& stream) {
  if (stream.level != Level::bit) {
    throw std::invalid_argument("bits_to_bytes: stream is not bit-level");
  }
  if (stream.tokens.size() % 8 != 0) {
    throw std::invalid_argument("bits_to_bytes: length " +
                                std::to_string(stream.tokens.size()) +
                                " is not a multiple of 8");
  }
  std::vector<uint8_t> bytes(stream.tokens.size() / 8, 0);
  for (size_t i = 0; i < stream.tokens.size(); ++i) {
    bytes[i / 8] = static_cast<uint8_t>((bytes[i / 8] << 1) | stream.tokens[i]);
  }
  return bytes;
}

std::pair<TokenStream, PositionAnnotations> insert_buffer_bits(
    const TokenStream& stream, int k) {
  if (stream.level != Level::bit) {
    throw std::invalid_argument("insert_buffer_bits: stream is not bit-level");
  }
  if (k < 0) throw std::invalid_argument("insert_buffer_bits: negative k");

  TokenStream out;
  out.level = Level::bit;
  out.vocab = stream.vocab;
  const size_t n = stream.tokens.size();
  out.tokens.reserve(n + (n / 8) * k);
  PositionAnnotations ann = PositionAnnotations::zeros(0);
  std::vector<uint8_t> boundary, buffer;

  for (size_t i = 0; i < n; ++i) {
    boundary.push_back(i % 8 == 0);
    buffer.push_back(0);
    out.tokens.push_back(stream.tokens[i]);
    const bool group_done = (i % 8 == 7);
    if (group_done) {
      for (int j = 0; j < k; ++j) {
        out.tokens.push_back(0);
        boundary.push_back(0);
        buffer.push_back(1);
      }
    }
  }
  ann = PositionAnnotations::zeros(out.tokens.size());
  ann.is_boundary = std::move(boundary);
  ann.is_buffer = std::move(buffer);
  ann.is_whitespace.assign(out.tokens.size(), 0);
  return {std::move(out), std::move(ann)};
}

namespace {

bool is_ws_char(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

}  // namespace

std::pair<TokenStream, PositionAnnotations> build_char_stream(
    const std::string& text, int min_count) {
  if (text.empty()) throw std::invalid_argument("build_char_stream: empty text");

  size_t counts[256] = {};
  for (unsigned char c : text) counts[c]++;

  // Kept characters ordered by count descending, ties by byte value.
  std::vector<int> kept;
  for (int c = 0; c < 256; ++c) {
    if (counts[c] >= static_cast<size_t>(min_count) && counts[c] > 0) {
      kept.push_back(c);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return a < b;
  });

  TokenStream stream;
  stream.level = Level::character;
  int id_of[256];
  std::fill(std::begin(id_of), std::end(id_of), -1);
  for (size_t i = 0; i < kept.size(); ++i) {
    stream.vocab.push_back(std::string(1, static_cast<char>(kept[i])));
    id_of[kept[i]] = static_cast<int>(i);
  }
  const int unk = static_cast<int>(stream.vocab.size());
  stream.vocab.push_back("<unk>");

  stream.tokens.reserve(text.size());
  PositionAnnotations ann = PositionAnnotations::zeros(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    const int id = id_of[c];
    stream.tokens.push_back(id >= 0 ? id : unk);
    ann.is_whitespace[i] = is_ws_char(c);
  }
  return {std::move(stream), std::move(ann)};
}

TokenStream load_generic_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> symbols;
  std::string sym;
  while (in >> sym) symbols.push_back(sym);
  if (symbols.empty()) {
    throw std::invalid_argument("load_generic_tokens: no symbols in input");
  }

  // Count and remember first occurrence for the tie order.
  std::map<std::string, std::pair<size_t, size_t>> table;  // sym -> (count, first)
  for (size_t i = 0; i < symbols.size(); ++i) {
    auto [it, fresh] = table.try_emplace(symbols[i], std::make_pair(0, i));
    it->second.first++;
    if (fresh) it->second.second = i;
  }
  std::vector<const std::string*> order;
  order.reserve(table.size());
  for (auto& [s, _] : table) order.push_back(&s);
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    const auto& ca = table.at(*a);
    const auto& cb = table.at(*b);
    if (ca.first != cb.first) return ca.first > cb.first;
    return ca.second < cb.second;
  });

  TokenStream stream;
  stream.level = Level::generic;
  std::map<std::string, int> ids;
  for (const auto* s : order) {
    ids[*s] = static_cast<int>(stream.vocab.size());
    stream.vocab.push_back(*s);
  }
  stream.tokens.reserve(symbols.size());
  for (const auto& s : symbols) stream.tokens.push_back(ids.at(s));
  return stream;
}

std::string decode_tokens(const TokenStream& stream) {
  std::string out;
  for (size_t i = 0; i < stream.tokens.size(); ++i) {
    if (stream.level == Level::generic && i > 0) out += ' ';
    out += stream.vocab.at(stream.tokens[i]);
  }
  return out;
}

TokenStream split_corpus(TokenStream stream, double train_frac,
                         double valid_frac, double test_frac) {
  if (train_frac <= 0 || valid_frac <= 0 || test_frac <= 0) {
    throw std::invalid_argument("split_corpus: fractions must be positive");
  }
  const double sum = train_frac + valid_frac + test_frac;
  if (sum > 1.0 + 1e-9) {
    throw std::invalid_argument("split_corpus: fractions sum to " +
                                std::to_string(sum) + " > 1");
  }
  const size_t n = stream.tokens.size();
  const size_t n_train = static_cast<size_t>(train_frac * n);
  const size_t n_valid = static_cast<size_t>(valid_frac * n);
  const bool exhaustive = sum > 1.0 - 1e-9;
  const size_t n_test = exhaustive ? n - n_train - n_valid
                                   : static_cast<size_t>(test_frac * n);
  if (n_train == 0 || n_valid == 0 || n_test == 0 ||
      n_train + n_valid + n_test > n) {
    throw std::invalid_argument(
        "split_corpus: empty split (sizes " + std::to_string(n_train) + "/" +
        std::to_string(n_valid) + "/" + std::to_string(n_test) + " of " +
        std::to_string(n) + ")");
  }
  stream.splits.assigned = true;
  stream.splits.train = {0, n_train};
  stream.splits.valid = {n_train, n_train + n_valid};
  stream.splits.test = {n_train + n_valid, n_train + n_valid + n_test};
  return stream;
}

std::pair<TokenStream, PositionAnnotations> generate_periodic_bits(
    int period, size_t length, uint64_t seed) {
  if (period <= 0) throw std::invalid_argument("generate_periodic_bits: period");
  if (length == 0) throw std::invalid_argument("generate_periodic_bits: length");
  TokenStream stream;
  stream.level = Level::bit;
  stream.vocab = {"0", "1"};
  stream.tokens.assign(length, 0);
  PositionAnnotations ann = PositionAnnotations::zeros(length);
  Rng rng(seed);
  for (size_t i = 0; i < length; ++i) {
    if (i % static_cast<size_t>(period) == 0) {
      stream.tokens[i] = rng.next_below(2);
      ann.is_boundary[i] = 1;
    }
  }
  return {std::move(stream), std::move(ann)};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<uint8_t> read_binary_file(const std::string& path) {
  const std::string s = read_text_file(path);
  return std::vector<uint8_t>(s.begin(), s.end());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace vcr
