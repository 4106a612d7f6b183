#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "editar/tensor.hpp"

namespace editar {

struct AdamWConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.95;
  double weight_decay = 0.05;
  double eps = 1e-8;
};

// First/second moments per parameter, in parameter order.
struct OptimState {
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;
  std::uint64_t t = 0;

  static OptimState for_params(std::span<const Tensor> params);
};

// One decoupled-weight-decay Adam step with bias correction, reading each
// parameter's grad (missing grads count as zero). `decay` selects which
// parameters get weight decay; empty means all of them.
void adamw_step(std::span<Tensor> params, OptimState& state, const AdamWConfig& cfg,
                std::span<const bool> decay = {});

// Scales all grads so their joint L2 norm is at most max_norm; returns the
// norm before scaling.
double clip_grad_norm(std::span<Tensor> params, double max_norm);

}  // namespace editar
