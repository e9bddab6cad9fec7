// SPDX-License-Identifier: Apache-2.0
#include "vcr/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vcr {

namespace {

void check_len(const char* who, const char* what, size_t got, size_t want) {
  if (got != want) {
    throw std::invalid_argument(std::string(who) + ": " + what + " has length " +
                                std::to_string(got) + ", expected " +
                                std::to_string(want));
  }
}

Vec add(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec hadamard(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

double scheduler_m(const SchedulerParams& s, const Vec& h_prev, const Vec& x) {
  check_len("scheduler_m", "h_prev", h_prev.size(), s.u.size());
  check_len("scheduler_m", "x", x.size(), s.v.size());
  return sigmoid(dot(s.u, h_prev) + dot(s.v, x) + s.b);
}

GateVector gate_vector(double m, int dim, const GateConfig& g) {
  GateVector out;
  out.m = m;
  out.e.assign(dim, 0.0);
  if (g.override_mode == GateOverride::full_update) {
    out.e.assign(dim, 1.0);
    out.active_count = dim;
    return out;
  }
  if (g.override_mode == GateOverride::full_carry) {
    out.active_count = 0;
    return out;
  }
  for (int i = 1; i <= dim; ++i) {
    const double p = sigmoid(g.lambda * (m * dim - i));
    double e = p;
    if (p > 1.0 - g.epsilon) {
      e = 1.0;
    } else if (p < g.epsilon) {
      // Entries are non-increasing in i; once one clips to zero the rest do.
      break;
    }
    out.e[i - 1] = e;
    out.active_count = i;
  }
  return out;
}

Vec elman_step(const ElmanParams& p, const Vec& h_prev, const Vec& x) {
  Vec pre = add(matvec(p.U, h_prev), matvec(p.V, x));
  if (!p.bias.empty()) {
    check_len("elman_step", "bias", p.bias.size(), pre.size());
    pre = add(std::move(pre), p.bias);
  }
  return tanh(std::move(pre));
}

Vec gru_step(const GruParams& p, const Vec& h_prev, const Vec& x) {
  const Vec r = sigmoid(add(matvec(p.U_r, h_prev), matvec(p.V_r, x)));
  const Vec z = sigmoid(add(matvec(p.U_z, h_prev), matvec(p.V_z, x)));
  const Vec hc = tanh(add(matvec(p.U, hadamard(r, h_prev)), matvec(p.V, x)));
  Vec h(h_prev.size());
  for (size_t i = 0; i < h.size(); ++i) {
    h[i] = z[i] * hc[i] + (1.0 - z[i]) * h_prev[i];
  }
  return h;
}

Vec vcrnn_step(const VcElmanParams& p, const Vec& h_prev, const Vec& x,
               VcStepTrace* trace) {
  const int d_hidden = p.inner.hidden_dim();
  const int d_input = p.inner.input_dim();
  check_len("vcrnn_step", "h_prev", h_prev.size(), d_hidden);
  check_len("vcrnn_step", "x", x.size(), d_input);

  const double m = scheduler_m(p.scheduler, h_prev, x);
  const GateVector gate = gate_vector(m, d_hidden, p.gate);
  const GateVector input_gate = gate_vector(m, d_input, p.gate);

  const Vec h_bar = hadamard(gate.e, h_prev);
  const Vec x_bar = hadamard(input_gate.e, x);
  const Vec g = elman_step(p.inner, h_bar, x_bar);

  Vec h(h_prev.size());
  for (size_t i = 0; i < h.size(); ++i) {
    h[i] = gate.e[i] * g[i] + (1.0 - gate.e[i]) * h_prev[i];
  }
  if (trace) {
    trace->m = m;
    trace->gate = gate;
    trace->input_gate = input_gate;
  }
  return h;
}

Vec vcgru_step(const VcGruParams& p, const Vec& h_prev, const Vec& x,
               VcStepTrace* trace) {
  const int d_hidden = p.inner.hidden_dim();
  const int d_input = p.inner.input_dim();
  check_len("vcgru_step", "h_prev", h_prev.size(), d_hidden);
  check_len("vcgru_step", "x", x.size(), d_input);

  const double m = scheduler_m(p.scheduler, h_prev, x);
  const GateVector gate = gate_vector(m, d_hidden, p.gate);
  const GateVector input_gate = gate_vector(m, d_input, p.gate);

  const Vec h_bar = hadamard(gate.e, h_prev);
  const Vec x_bar = hadamard(input_gate.e, x);

  const Vec r = sigmoid(add(matvec(p.inner.U_r, h_bar), matvec(p.inner.V_r, x_bar)));
  Vec z = sigmoid(add(matvec(p.inner.U_z, h_bar), matvec(p.inner.V_z, x_bar)));
  z = hadamard(gate.e, z);
  const Vec hc =
      tanh(add(matvec(p.inner.U, hadamard(r, h_bar)), matvec(p.inner.V, x_bar)));

  Vec h(h_prev.size());
  for (size_t i = 0; i < h.size(); ++i) {
    h[i] = z[i] * hc[i] + (1.0 - z[i]) * h_prev[i];
  }
  if (trace) {
    trace->m = m;
    trace->gate = gate;
    trace->input_gate = input_gate;
  }
  return h;
}

namespace {

void check_partial(int d, int D, size_t h_len, size_t x_len, int d_in) {
  if (d < 1 || d > D) {
    throw std::invalid_argument("hard_partial_update: d=" + std::to_string(d) +
                                " out of range [1, " + std::to_string(D) + "]");
  }
  check_len("hard_partial_update", "h_prev", h_len, D);
  check_len("hard_partial_update", "x", x_len, d_in);
}

// Dot of matrix row with a prefix of v.
double prefix_dot(const Mat& m, int row, const Vec& v, int n) {
  const double* r = m.row(row);
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += r[j] * v[j];
  return s;
}

}  // namespace

Vec hard_partial_update(int d, const ElmanParams& p, const Vec& h_prev,
                        const Vec& x) {
  const int D = p.hidden_dim();
  check_partial(d, D, h_prev.size(), x.size(), p.input_dim());
  const int dx = std::min(d, p.input_dim());

  Vec h = h_prev;
  for (int i = 0; i < d; ++i) {
    double s = prefix_dot(p.U, i, h_prev, d) + prefix_dot(p.V, i, x, dx);
    if (!p.bias.empty()) s += p.bias[i];
    h[i] = std::tanh(s);
  }
  return h;
}

Vec hard_partial_update(int d, const GruParams& p, const Vec& h_prev,
                        const Vec& x) {
  const int D = p.hidden_dim();
  check_partial(d, D, h_prev.size(), x.size(), p.input_dim());
  const int dx = std::min(d, p.input_dim());

  Vec r(d), z(d), c(d);
  for (int i = 0; i < d; ++i) {
    r[i] = sigmoid(prefix_dot(p.U_r, i, h_prev, d) + prefix_dot(p.V_r, i, x, dx));
    z[i] = sigmoid(prefix_dot(p.U_z, i, h_prev, d) + prefix_dot(p.V_z, i, x, dx));
  }
  for (int i = 0; i < d; ++i) c[i] = r[i] * h_prev[i];

  Vec h = h_prev;
  for (int i = 0; i < d; ++i) {
    const double hc = std::tanh(prefix_dot(p.U, i, c, d) + prefix_dot(p.V, i, x, dx));
    h[i] = z[i] * hc + (1.0 - z[i]) * h_prev[i];
  }
  return h;
}

}  // namespace vcr
