// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: a flat key = value file with [sections]. Every default
// is materialized on parse and echoed back to the output directory, so a
// finished run can be reproduced from its echo alone.
#pragma once

#include <cstdint>
#include <string>

#include "vcr/data.hpp"
#include "vcr/model.hpp"
#include "vcr/training.hpp"

namespace vcr {

struct DataConfig {
  std::string path;
  Level level = Level::character;
  int buffer_k = 0;   // bit level only: zero bits inserted after each byte
  int min_count = 1;  // character level: rare-char threshold
  double train_frac = 0.8;
  double valid_frac = 0.1;
  double test_frac = 0.1;
};

struct RunConfig {
  UnitKind unit = UnitKind::elman;
  int hidden = 64;
  uint64_t seed = 1;
  double init_scale = 0.1;
  bool elman_bias = false;
  GateOverride gate_override = GateOverride::none;
  double epsilon = 0.01;
  std::string outdir;

  DataConfig data;
  TrainConfig train;

  bool has_penalty = false;
  PenaltyConfig penalty;
  // Multiplier applied to the penalty weight on whitespace positions (the
  // guided setting); 1.0 means unguided.
  double guide_whitespace = 1.0;
};

// Parses, applies defaults, validates (throws ConfigError with the file line
// when possible). VCR_SEED in the environment overrides the config seed.
RunConfig parse_run_config(const std::string& path);

// The effective config, including defaults, as a parseable file.
std::string format_run_config(const RunConfig& cfg);

// Loads cfg.data.path at cfg.data.level, applies buffer insertion for bit
// streams, splits, and returns stream-aligned annotations.
std::pair<TokenStream, PositionAnnotations> load_dataset(const RunConfig& cfg);

}  // namespace vcr
