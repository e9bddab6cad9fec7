// SPDX-License-Identifier: Apache-2.0
#include "vcr/cost.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vcr/errors.hpp"

namespace vcr {

const char* unit_name(UnitKind k) {
  switch (k) {
    case UnitKind::elman: return "elman";
    case UnitKind::gru: return "gru";
    case UnitKind::vcrnn: return "vcrnn";
    case UnitKind::vcgru: return "vcgru";
  }
  return "?";
}

UnitKind unit_from_name(const std::string& name) {
  if (name == "elman") return UnitKind::elman;
  if (name == "gru") return UnitKind::gru;
  if (name == "vcrnn") return UnitKind::vcrnn;
  if (name == "vcgru") return UnitKind::vcgru;
  throw ConfigError("unknown unit '" + name + "' (want elman|gru|vcrnn|vcgru)");
}

bool is_variable_computation(UnitKind k) {
  return k == UnitKind::vcrnn || k == UnitKind::vcgru;
}

int64_t step_ops(int active, int hidden, int input, UnitKind kind) {
  if (active < 0 || active > hidden) {
    throw std::invalid_argument("step_ops: active=" + std::to_string(active) +
                                " out of range [0, " + std::to_string(hidden) +
                                "]");
  }
  const int64_t d = active;
  const int64_t unit = d * d + d * std::min<int64_t>(d, input);
  int64_t ops = 0;
  switch (kind) {
    case UnitKind::elman: ops = unit; break;
    case UnitKind::gru: ops = 3 * unit; break;
    case UnitKind::vcrnn: ops = unit + hidden + input; break;
    case UnitKind::vcgru: ops = 3 * unit + hidden + input; break;
  }
  return ops;
}

double equivalent_rnn_dim(const SchedulerTrace& trace) {
  if (trace.rows.empty()) {
    throw std::invalid_argument("equivalent_rnn_dim: empty trace");
  }
  double sum_sq = 0.0;
  for (const TraceRow& r : trace.rows) sum_sq += r.m * r.m;
  return trace.hidden * std::sqrt(sum_sq / trace.rows.size());
}

namespace {

struct ClassMean {
  double sum = 0.0;
  int64_t n = 0;
  double mean() const { return n ? sum / n : 0.0; }
};

void add_class(CostReport& report, const char* flag,
               const std::vector<uint8_t>& flags,
               const SchedulerTrace& trace) {
  ClassMean on, off;
  for (size_t i = 0; i < trace.rows.size(); ++i) {
    (flags[i] ? on : off).sum += trace.rows[i].m;
    (flags[i] ? on : off).n++;
  }
  report.extra.emplace_back(std::string("count_") + flag, double(on.n));
  report.extra.emplace_back(std::string("mean_m_") + flag, on.mean());
  report.extra.emplace_back(std::string("mean_m_non") + flag, off.mean());
}

}  // namespace

CostReport aggregate_by_annotation(const SchedulerTrace& trace,
                                   const PositionAnnotations* ann) {
  if (trace.rows.empty()) {
    throw std::invalid_argument("aggregate_by_annotation: empty trace");
  }
  if (ann && ann->size() != trace.rows.size()) {
    throw std::invalid_argument(
        "aggregate_by_annotation: annotation length " +
        std::to_string(ann->size()) + " != trace length " +
        std::to_string(trace.rows.size()));
  }
  CostReport report;
  for (const TraceRow& r : trace.rows) {
    report.total_ops += r.ops;
    report.mean_m += r.m;
    report.mean_m_sq += r.m * r.m;
  }
  report.mean_m /= trace.rows.size();
  report.mean_m_sq /= trace.rows.size();
  report.equivalent_dim = trace.hidden * std::sqrt(report.mean_m_sq);

  if (ann) {
    add_class(report, "buffer", ann->is_buffer, trace);
    add_class(report, "whitespace", ann->is_whitespace, trace);
    add_class(report, "boundary", ann->is_boundary, trace);
    // Boundary neighborhood: the flagged position or its successor step.
    ClassMean adj, rest;
    for (size_t i = 0; i < trace.rows.size(); ++i) {
      const bool near_ws =
          ann->is_whitespace[i] || (i > 0 && ann->is_whitespace[i - 1]);
      (near_ws ? adj : rest).sum += trace.rows[i].m;
      (near_ws ? adj : rest).n++;
    }
    report.extra.emplace_back("mean_m_whitespace_adjacent", adj.mean());
    report.extra.emplace_back("mean_m_whitespace_distant", rest.mean());
  }
  return report;
}

namespace {

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

void export_trace(const SchedulerTrace& trace, const PositionAnnotations* ann,
                  const std::string& path) {
  if (ann && ann->size() != trace.rows.size()) {
    throw std::invalid_argument("export_trace: annotation length mismatch");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "t,token,m,active_dims,ops";
  if (ann) out << ",buffer,whitespace,boundary";
  out << "\n";
  for (size_t i = 0; i < trace.rows.size(); ++i) {
    const TraceRow& r = trace.rows[i];
    out << r.t << ',' << r.token << ',' << fmt6(r.m) << ',' << r.active_dims
        << ',' << r.ops;
    if (ann) {
      out << ',' << int(ann->is_buffer[i]) << ',' << int(ann->is_whitespace[i])
          << ',' << int(ann->is_boundary[i]);
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string format_cost_report(const CostReport& report) {
  std::ostringstream out;
  out << "total_ops: " << report.total_ops << "\n";
  out << "mean_m: " << fmt6(report.mean_m) << "\n";
  out << "mean_m_sq: " << fmt6(report.mean_m_sq) << "\n";
  out << "equivalent_dim: " << fmt6(report.equivalent_dim) << "\n";
  for (const auto& [key, value] : report.extra) {
    out << key << ": " << fmt6(value) << "\n";
  }
  return out.str();
}

}  // namespace vcr
