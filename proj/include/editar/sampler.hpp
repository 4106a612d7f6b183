#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "editar/model.hpp"
#include "editar/rng.hpp"
#include "editar/vq.hpp"

namespace editar {

struct SampleConfig {
  double eta = 3.0;
  double temperature = 1.0;
  std::size_t top_k = 0;  // 0 disables filtering
  std::uint64_t seed = 0;

  void validate(std::size_t k) const;
};

// eta * cond + (1 - eta) * uncond, elementwise. Exact at eta = 0 and 1.
std::vector<double> cfg_combine(std::span<const double> cond, std::span<const double> uncond, double eta);

// Temperature, optional top-k, then one categorical draw. Temperatures below
// 1e-6 take the argmax (lowest index on ties) without touching rng.
int sample_next(std::span<const double> logits, const SampleConfig& cfg, Rng& rng);

struct Generation {
  TokenSeq tokens;
  Image image;
};

// Decodes N output tokens from a text-conditioned stream and a null-text
// stream that share the condition tokens and the sampled history.
TokenSeq generate_tokens(const ModelParams& p, const ModelConfig& cfg, const InstructionTokens& text,
                         const std::vector<int>& cond, const SampleConfig& sc, std::size_t grid_w);

Generation generate(const ModelParams& p, const ModelConfig& cfg, const Codebook& cb, const Vocabulary& vocab,
                    const Image& condition, const std::string& instruction, const SampleConfig& sc);

}  // namespace editar
