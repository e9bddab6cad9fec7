// SPDX-License-Identifier: Apache-2.0
//
// Exact multiplication counting per timestep and scheduler-trace analysis.
//
// The ops metric counts multiplications inside the recurrent unit's matrix
// products only, restricted to active dimensions, plus the scheduler's own
// dot products for variable-computation units. The output softmax layer is
// excluded: it is identical across every model being compared, so including
// it would only dilute the quantity of interest. This is an operation count,
// not a wall-clock proxy.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcr/data.hpp"

namespace vcr {

enum class UnitKind { elman, gru, vcrnn, vcgru };

const char* unit_name(UnitKind k);
UnitKind unit_from_name(const std::string& name);
bool is_variable_computation(UnitKind k);

struct TraceRow {
  int64_t t = 0;        // step index within the traced pass
  int token = 0;        // input token id consumed at this step
  double m = 0.0;       // scheduler output (1.0 for constant units)
  int active_dims = 0;  // gate entries > 0 (D for constant units)
  int64_t ops = 0;      // step_ops(active_dims, ...)
};

struct SchedulerTrace {
  UnitKind unit = UnitKind::elman;
  int hidden = 0;
  int input = 0;
  std::vector<TraceRow> rows;
};

struct CostReport {
  int64_t total_ops = 0;
  double mean_m = 0.0;
  double mean_m_sq = 0.0;
  double equivalent_dim = 0.0;
  // Per-annotation-class means, e.g. {"mean_m_buffer", 0.21}.
  std::vector<std::pair<std::string, double>> extra;
};

// Multiplications for one step with `active` live hidden dimensions:
//   elman:  active^2 + active*min(active, D_in)
//   gru:    3 * (active^2 + active*min(active, D_in))
// VC variants add D + D_in for the scheduler, paid even on a full carry.
int64_t step_ops(int active, int hidden, int input, UnitKind kind);

// Hidden size of a constant-computation Elman unit whose average per-step
// recurrent multiplication count matches this trace under the quadratic
// cost model: D * sqrt(mean of m_t^2).
double equivalent_rnn_dim(const SchedulerTrace& trace);

// Global means plus per-flag-class breakdowns when annotations are given
// (lengths must match). Pass nullptr for global stats only.
CostReport aggregate_by_annotation(const SchedulerTrace& trace,
                                   const PositionAnnotations* ann);

// CSV: header `t,token,m,active_dims,ops[,buffer,whitespace,boundary]`,
// one row per step, floats at 6 significant digits, LF newlines.
void export_trace(const SchedulerTrace& trace, const PositionAnnotations* ann,
                  const std::string& path);

// Key: value lines for machine diffing.
std::string format_cost_report(const CostReport& report);

}  // namespace vcr
