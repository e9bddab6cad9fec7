// SPDX-License-Identifier: Apache-2.0
//
// A trainable sequence model: one recurrent unit (constant or variable
// computation), a softmax output layer, and, for VC units, the scheduler.
// Inputs are one-hot token encodings, so the unit's input width equals the
// vocabulary size.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcr/cost.hpp"
#include "vcr/units.hpp"

namespace vcr {

struct OutputParams {
  Mat O;       // vocab x D
  Vec bias_o;  // vocab
};

struct Model {
  UnitKind kind = UnitKind::elman;
  int hidden = 0;
  int input = 0;  // == vocab, one-hot inputs

  ElmanParams elman;      // elman | vcrnn
  GruParams gru;          // gru | vcgru
  SchedulerParams sched;  // VC units only
  GateConfig gate;        // VC units only; lambda is annealed per epoch
  OutputParams out;

  int vocab_size() const { return out.O.rows; }
};

// Gradients, one tensor per parameter tensor with identical shapes. The
// tensor structs are reused as plain storage here.
struct GradientBundle {
  UnitKind kind = UnitKind::elman;
  ElmanParams elman;
  GruParams gru;
  SchedulerParams sched;
  OutputParams out;
};

GradientBundle zero_gradients(const Model& model);

struct ParamRef {
  const char* name;
  double* data;
  size_t len;
};

// Every trainable tensor in the documented fixed order (the same order the
// checkpoint serializes):
//   elman/vcrnn: U, V, [bias], O, bias_o, [u, v, b]
//   gru/vcgru:   U_r, V_r, U_z, V_z, U, V, O, bias_o, [u, v, b]
std::vector<ParamRef> parameter_list(Model& model);
std::vector<ParamRef> parameter_list(GradientBundle& grads);

size_t parameter_count(const Model& model);

// Seeded uniform [-init_scale, +init_scale] weights; output bias starts at
// zero. elman_bias enables the optional Elman bias vector (also zero-init).
Model init_model(UnitKind kind, int hidden, int vocab, uint64_t seed,
                 double init_scale = 0.1, bool elman_bias = false);

}  // namespace vcr
