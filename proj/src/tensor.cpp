// SPDX-License-Identifier: Apache-2.0
#include "vcr/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vcr {

Mat::Mat(int r, int c) : rows(r), cols(c) {
  if (r <= 0 || c <= 0) {
    throw std::invalid_argument("Mat: non-positive shape " + std::to_string(r) +
                                "x" + std::to_string(c));
  }
  data.assign(static_cast<size_t>(r) * c, 0.0);
}

Vec matvec(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) {
    throw std::invalid_argument(
        "matvec: shape mismatch, matrix " + std::to_string(m.rows) + "x" +
        std::to_string(m.cols) + " vs vector of length " +
        std::to_string(v.size()));
  }
  Vec out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    const double* r = m.row(i);
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

double sigmoid(double x) {
  // Branch keeps exp() argument non-positive so huge |x| saturates to 0 or 1
  // instead of overflowing.
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Vec sigmoid(Vec v) {
  for (double& x : v) x = sigmoid(x);
  return v;
}

Vec tanh(Vec v) {
  for (double& x : v) x = std::tanh(x);
  return v;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {
uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

double Rng::next_unit() {
  // 53 top bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_unit();
}

int Rng::next_below(int n) {
  return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
}

Rng Rng::split(uint64_t stream) const {
  // Derive a decorrelated seed; streams never overlap the parent counter walk.
  return Rng(mix64(state_ ^ (0xA0761D6478BD642Full * (stream + 1))));
}

Mat init_uniform(Rng& rng, int rows, int cols, double scale) {
  if (scale <= 0.0) {
    throw std::invalid_argument("init_uniform: scale must be positive, got " +
                                std::to_string(scale));
  }
  Mat m(rows, cols);
  for (double& x : m.data) x = rng.uniform(-scale, scale);
  return m;
}

Vec init_uniform_vec(Rng& rng, int len, double scale) {
  if (scale <= 0.0) {
    throw std::invalid_argument("init_uniform_vec: scale must be positive");
  }
  if (len <= 0) {
    throw std::invalid_argument("init_uniform_vec: non-positive length");
  }
  Vec v(len);
  for (double& x : v) x = rng.uniform(-scale, scale);
  return v;
}

bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool all_finite(const Mat& m) {
  for (double x : m.data) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace vcr
