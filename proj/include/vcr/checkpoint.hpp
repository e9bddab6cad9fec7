// SPDX-License-Identifier: Apache-2.0
//
// Checkpoint file: a text header of `key value` lines terminated by a line
// reading `tensors`, followed by each parameter tensor as raw little-endian
// 64-bit floats in the parameter_list order. Round-trips byte-exactly.
#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "vcr/data.hpp"
#include "vcr/model.hpp"

namespace vcr {

struct CheckpointMeta {
  int version = 1;
  int epoch = 0;
  uint64_t seed = 0;
  uint64_t vocab_hash = 0;
  Level level = Level::generic;
};

uint64_t hash_vocab(const std::vector<std::string>& vocab);

void save_checkpoint(const std::string& path, const Model& model,
                     const CheckpointMeta& meta);

// Throws IoError on missing/truncated files, ConfigError on malformed
// headers or shape-inconsistent tensors.
std::pair<Model, CheckpointMeta> load_checkpoint(const std::string& path);

}  // namespace vcr
