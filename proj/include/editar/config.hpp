#pragma once

#include <string>

#include "editar/container.hpp"
#include "editar/model.hpp"
#include "editar/sampler.hpp"
#include "editar/synth.hpp"
#include "editar/trainer.hpp"

namespace editar {

struct TokenizerConfig {
  std::size_t k = 256;
  std::size_t iters = 50;
  std::uint64_t seed = 0;
};

// Everything a run needs besides file paths. Unknown keys are rejected at
// every level; missing keys keep their defaults.
struct RunConfig {
  ModelConfig model;
  TrainConfig train;
  SampleConfig sample;
  Mix mix;
  TokenizerConfig tokenizer;
};

// V_text is not part of the JSON form; it comes from the vocabulary.
Json to_json(const ModelConfig& m);
Json to_json(const TrainConfig& t);
Json to_json(const SampleConfig& s);
Json to_json(const Mix& m);
Json to_json(const TokenizerConfig& t);
Json to_json(const RunConfig& r);

ModelConfig model_config_from(const Json& j);
TrainConfig train_config_from(const Json& j);
SampleConfig sample_config_from(const Json& j);
Mix mix_from(const Json& j);
TokenizerConfig tokenizer_config_from(const Json& j);
RunConfig run_config_from(const Json& j);

RunConfig load_run_config(const std::string& path);

}  // namespace editar
