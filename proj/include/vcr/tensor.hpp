// SPDX-License-Identifier: Apache-2.0
//
// Minimal dense numeric kernel: vectors, row-major matrices, matrix-vector
// products, elementwise nonlinearities, and a counter-based seeded RNG.
// Everything is 64-bit floating point.
#pragma once

#include <cstdint>
#include <vector>

namespace vcr {

using Vec = std::vector<double>;

// Row-major dense matrix.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c);

  double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const {
    return data.data() + static_cast<size_t>(i) * cols;
  }
  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return data[static_cast<size_t>(r) * cols + c];
  }
  bool empty() const { return data.empty(); }
  size_t size() const { return data.size(); }
};

// result[i] = sum_j m[i,j] * v[j]. Throws std::invalid_argument on shape
// mismatch, with both shapes in the message.
Vec matvec(const Mat& m, const Vec& v);

double sigmoid(double x);

// Value-taking elementwise forms; saturate cleanly for any finite input.
Vec sigmoid(Vec v);
Vec tanh(Vec v);

double dot(const Vec& a, const Vec& b);

// SplitMix64: a counter-based generator. Identical seeds give identical
// sequences on every platform, and split() derives an independent stream
// for a separate purpose (init vs. data synthesis) without sharing state.
struct Rng {
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();
  // Uniform in [0, 1).
  double next_unit();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n).
  int next_below(int n);

  Rng split(uint64_t stream) const;

 private:
  uint64_t state_;
};

// rows x cols matrix with entries i.i.d. uniform in [-scale, +scale].
// Throws on non-positive dimensions or scale.
Mat init_uniform(Rng& rng, int rows, int cols, double scale);
Vec init_uniform_vec(Rng& rng, int len, double scale);

bool all_finite(const Vec& v);
bool all_finite(const Mat& m);

}  // namespace vcr
