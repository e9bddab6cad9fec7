// SPDX-License-Identifier: Apache-2.0
//
// Forward semantics of the four recurrent units. The variable-computation
// units pair an inner Elman/GRU cell with a scheduler that picks a fraction
// m of dimensions to update and a soft mask e that approximates updating
// exactly the first ceil(m*D) coordinates. hard_partial_update is the exact
// first-d-dimensions reference the soft mask converges to as lambda grows.
#pragma once

#include "vcr/tensor.hpp"

namespace vcr {

struct ElmanParams {
  Mat U;     // D x D recurrent
  Mat V;     // D x D_in input
  Vec bias;  // optional; empty means disabled

  int hidden_dim() const { return U.rows; }
  int input_dim() const { return V.cols; }
};

struct GruParams {
  Mat U_r, U_z, U;  // D x D
  Mat V_r, V_z, V;  // D x D_in

  int hidden_dim() const { return U.rows; }
  int input_dim() const { return V.cols; }
};

// Log-linear scheduler m = sigmoid(u.h_prev + v.x + b).
struct SchedulerParams {
  Vec u;  // len D
  Vec v;  // len D_in
  double b = 0.0;
};

// Test/diagnostic override of the soft mask: full_update forces e == 1,
// full_carry forces e == 0. The scheduler still runs so m stays traceable.
enum class GateOverride { none, full_update, full_carry };

struct GateConfig {
  double lambda = 0.1;    // mask sharpness
  double epsilon = 0.01;  // threshold: > 1-eps snaps to 1, < eps snaps to 0
  GateOverride override_mode = GateOverride::none;
};

struct GateVector {
  Vec e;                 // entries in {0} u [eps, 1-eps] u {1}, non-increasing
  double m = 0.0;        // scheduler fraction that produced the mask
  int active_count = 0;  // number of entries > 0
};

double scheduler_m(const SchedulerParams& s, const Vec& h_prev, const Vec& x);

// Entry i (1-indexed) of the mask over `dim` positions:
//   Thres_eps(sigmoid(lambda * (m*dim - i))).
GateVector gate_vector(double m, int dim, const GateConfig& g);

// h_t = tanh(U h_prev + V x [+ bias]).
Vec elman_step(const ElmanParams& p, const Vec& h_prev, const Vec& x);

// r = sig(U_r h + V_r x); z = sig(U_z h + V_z x);
// hc = tanh(U (r*h) + V x); h_t = z*hc + (1-z)*h.
Vec gru_step(const GruParams& p, const Vec& h_prev, const Vec& x);

template <typename Inner>
struct VcParams {
  Inner inner;
  SchedulerParams scheduler;
  GateConfig gate;
};

using VcElmanParams = VcParams<ElmanParams>;
using VcGruParams = VcParams<GruParams>;

struct VcStepTrace {
  double m = 0.0;
  GateVector gate;        // hidden-dimension mask
  GateVector input_gate;  // same functional form over D_in positions
};

// h = e * elman(e*h_prev, f*x) + (1-e) * h_prev, where e masks hidden dims
// and f is the same mask shape computed over the input width.
Vec vcrnn_step(const VcElmanParams& p, const Vec& h_prev, const Vec& x,
               VcStepTrace* trace = nullptr);

// r = sig(U_r hb + V_r xb); z = e * sig(U_z hb + V_z xb);
// hc = tanh(U (r*hb) + V xb); h = z*hc + (1-z)*h_prev,
// with hb = e*h_prev, xb = f*x.
Vec vcgru_step(const VcGruParams& p, const Vec& h_prev, const Vec& x,
               VcStepTrace* trace = nullptr);

// Exact partial update: first d output dims come from the unit applied to
// the first d dims of h_prev and x through the top-left submatrices; dims
// d+1..D are carried from h_prev. Oracle for the lambda -> infinity limit.
Vec hard_partial_update(int d, const ElmanParams& p, const Vec& h_prev,
                        const Vec& x);
Vec hard_partial_update(int d, const GruParams& p, const Vec& h_prev,
                        const Vec& x);

}  // namespace vcr
