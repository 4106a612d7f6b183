#pragma once

#include <optional>
#include <string>
#include <vector>

#include "editar/checkpoint.hpp"
#include "editar/container.hpp"
#include "editar/metrics.hpp"
#include "editar/sampler.hpp"
#include "editar/synth.hpp"

namespace editar {

inline constexpr const char* kReportFormat = "editar-eval-v1";

// Running mean of one metric over examples.
struct MeanCell {
  std::size_t n = 0;
  double sum = 0.0;
  void add(double v) { ++n, sum += v; }
  Json to_json() const;
};

// PSNR averages dB over non-identical pairs and counts identical ones.
struct PsnrCell {
  std::size_t n = 0;
  std::size_t identical = 0;
  double sum_db = 0.0;
  void add(const Psnr& p);
  Json to_json() const;
};

struct TaskCells {
  PsnrCell psnr_bg, psnr_full;
  MeanCell mse_bg, ssim_bg, mse_full, edit_success, edge_ssim, seg_miou, depth_rmse;
  std::size_t n = 0;
};

struct EvalReport {
  std::optional<SampleConfig> sample;  // absent when scoring supplied images
  std::map<std::string, TaskCells> tasks;
  TaskCells edit_total, all_total;
  MeanCell token_accuracy;        // teacher-forced next-token top-1
  MeanCell identity_token_match;     // per token, identity edits
  MeanCell identity_sequence_match;  // whole output sequence, identity edits

  Json to_json() const;
  // One line naming every column with its aggregate value.
  std::string summary_line() const;
};

// Accumulates metrics for one generated image.
void score_example(EvalReport& report, const TrainingExample& ex, const Image& generated);

// Scores caller-supplied images, e.g. targets or conditions as baselines.
EvalReport score_images(const std::vector<TrainingExample>& examples, const std::vector<Image>& generated);

// Generates once per example with seed derive_seed(sc.seed, i) and scores
// the result; also measures teacher-forced token accuracy.
EvalReport evaluate(const Checkpoint& ck, const std::vector<TrainingExample>& examples, const SampleConfig& sc);

// Teacher-forced top-1 accuracy over the output span with full conditioning.
MeanCell token_accuracy(const ModelParams& p, const ModelConfig& cfg, const std::vector<PackedExample>& data);

}  // namespace editar
