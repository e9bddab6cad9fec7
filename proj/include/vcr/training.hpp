// SPDX-License-Identifier: Apache-2.0
//
// Sequence NLL objective, scheduler penalty, full backpropagation through
// time for all four units (including the path through the soft mask into
// the scheduler), SGD with global-norm clipping, the lambda annealing
// schedule, and a finite-difference gradient oracle.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vcr/data.hpp"
#include "vcr/model.hpp"

namespace vcr {

// Total negative log likelihood in nats: sum_t -log softmax(logits_t)[y_t].
double nll_loss(const std::vector<Vec>& logits_seq,
                const std::vector<int>& targets);

// nats / (n * ln 2).
double bits_per_token(double nats, size_t n_predictions);

enum class PenaltyMode { l1_symmetric, l1_above_target, l2_symmetric };

PenaltyMode penalty_mode_from_name(const std::string& name);
const char* penalty_mode_name(PenaltyMode mode);

struct PenaltyConfig {
  double m_bar = 0.3;   // target computation fraction
  double weight = 0.1;  // global coefficient
  PenaltyMode mode = PenaltyMode::l1_symmetric;
  // Optional per-position weights (the "guide" setting). When used with
  // penalty_omega / forward_backward the length must equal the sequence
  // length; train_epochs holds stream-aligned weights and slices them.
  std::vector<double> per_position_weights;
};

// l1_symmetric:    weight * sum_t w_t * |m_t - m_bar|
// l1_above_target: weight * sum_t w_t * max(0, m_t - m_bar)
// l2_symmetric:    weight * sum_t w_t * (m_t - m_bar)^2
double penalty_omega(const std::vector<double>& m_seq,
                     const PenaltyConfig& cfg);

struct TrainConfig {
  double learning_rate = 0.5;
  double grad_clip = 1.0;
  int epochs = 10;
  int bptt_len = 128;
  double lambda_start = 0.1;
  double lambda_step_per_epoch = 0.1;
  double lambda_max = 1.0;
  uint64_t seed = 1;
};

// min(lambda_start + epoch * lambda_step_per_epoch, lambda_max); constant
// within an epoch.
double anneal_lambda(int epoch, const TrainConfig& cfg);

struct ForwardBackwardResult {
  double loss = 0.0;   // nats
  double omega = 0.0;  // penalty value
  GradientBundle grads;
  SchedulerTrace trace;
  Vec h_final;
};

// Gradients of (loss + omega) w.r.t. every parameter, by reverse-mode
// accumulation through one segment. inputs[t] is consumed at step t to
// predict targets[t]; h0 is treated as constant (truncated BPTT). The mask
// threshold contributes subgradient zero in its clipped regions. Throws
// NumericError naming the step if a non-finite intermediate appears.
ForwardBackwardResult forward_backward(const Model& model,
                                       std::span<const int> inputs,
                                       std::span<const int> targets,
                                       const Vec& h0,
                                       const PenaltyConfig& penalty);

struct EvalResult {
  double loss = 0.0;  // nats over n_predictions
  size_t n_predictions = 0;
  SchedulerTrace trace;  // one row per consumed token
  Vec h_final;
};

// Forward-only pass over a token span: consumes every token (so the trace
// has tokens.size() rows) and scores the tokens.size()-1 transitions.
EvalResult evaluate(const Model& model, std::span<const int> tokens,
                    const Vec& h0);

// Worst relative gradient error over every scalar parameter, central
// differences with the given step against the analytic gradients;
// denominator max(|analytic|, |numeric|, 1e-8).
double finite_diff_check(Model& model, std::span<const int> inputs,
                         std::span<const int> targets, const Vec& h0,
                         const PenaltyConfig& penalty, double step);

// Generic core of the oracle, reused by the toy-objective self-test:
// given parameter references, an objective closure, and analytic
// gradients aligned with the flattened parameter order.
double finite_diff_max_rel_error(std::span<const ParamRef> params,
                                 const std::function<double()>& objective,
                                 std::span<const double> analytic,
                                 double step);

// Global-norm clipping to `clip`, then params -= lr * grads. Throws
// NumericError on non-finite gradients.
void sgd_step(Model& model, GradientBundle& grads, double lr, double clip);

struct EpochMetrics {
  int epoch = 0;
  double lambda = 0.0;
  double train_bits = 0.0;  // bits/token, full pass with post-epoch params
  double valid_bits = 0.0;
  double mean_m = 0.0;      // over the validation pass
  double mean_m_sq = 0.0;
  double equivalent_dim = 0.0;
};

struct TrainResult {
  std::vector<EpochMetrics> metrics;
  int best_epoch = -1;  // argmin valid_bits
  Model best_model;
  Model final_model;
};

// Truncated BPTT over contiguous segments of bptt_len with hidden-state
// carryover inside each epoch (state resets at epoch boundaries). Lambda is
// re-annealed at each epoch start. penalty.per_position_weights, when
// non-empty, must be stream-aligned (length == corpus.tokens.size()).
TrainResult train_epochs(const Model& model, const TokenStream& corpus,
                         const TrainConfig& t_cfg, const PenaltyConfig& p_cfg,
                         const std::function<void(const EpochMetrics&)>&
                             on_epoch = nullptr);

}  // namespace vcr
