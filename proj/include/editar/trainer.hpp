#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "editar/distill.hpp"
#include "editar/model.hpp"
#include "editar/optim.hpp"
#include "editar/rng.hpp"
#include "editar/synth.hpp"
#include "editar/vq.hpp"

namespace editar {

enum class DropoutBucket { none, text_null, image_null, both_null };
inline constexpr std::size_t kBuckets = 4;
std::string_view to_string(DropoutBucket b);

struct DropoutRates {
  double text_null = 0.05;
  double image_null = 0.05;
  double both_null = 0.05;
  void validate() const;
};

// One exclusive bucket from a single uniform draw.
DropoutBucket draw_dropout_bucket(Rng& rng, const DropoutRates& rates);

struct TrainConfig {
  std::size_t steps = 6000;
  std::size_t batch_size = 32;
  AdamWConfig adamw;
  double lambda_distill = 0.5;
  DropoutRates dropout;
  double clip_norm = 1.0;
  std::uint64_t seed = 0;
  std::size_t checkpoint_interval = 1000;  // 0: final checkpoint only

  void validate() const;
};

// Seeds for the independent random streams of a run.
struct RunSeeds {
  std::uint64_t init, shuffle, dropout, teacher;
  static RunSeeds of(std::uint64_t seed);
};

// A training example reduced to what the trainer consumes.
struct PackedExample {
  TaskKind task = TaskKind::identity;
  InstructionTokens text;
  std::vector<int> cond;
  std::vector<int> target;
  std::vector<std::uint8_t> target_bytes;  // 8-bit target image for the teacher
};

PackedExample pack_example(const TrainingExample& ex, const Vocabulary& vocab, const Codebook& cb,
                           const ModelConfig& cfg);
Image unpack_target(const PackedExample& ex);

struct BatchItem {
  const PackedExample* example = nullptr;
  DropoutBucket bucket = DropoutBucket::none;
};

struct LossParts {
  Tensor ce;
  Tensor distill;  // undefined when lambda is 0
  Tensor total;
};

// Teacher-forced losses for a batch: CE over the N output-predicting
// positions and MSE between aligned output-span hidden states and the
// teacher's features of the target.
LossParts compute_loss(const ModelParams& p, const ModelConfig& cfg, std::span<const BatchItem> batch,
                       const TeacherEncoder& teacher, double lambda_distill);

struct StepRecord {
  std::uint64_t step = 0;
  double ce = 0.0;
  double distill = 0.0;
  double total = 0.0;
  std::array<std::size_t, kBuckets> buckets{};
  double grad_norm = 0.0;
  bool clipped = false;
  double wall_ms = 0.0;

  // One NDJSON line without the newline.
  std::string to_json() const;
};

struct TrainState {
  ModelParams params;
  OptimState opt;
  std::uint64_t step = 0;  // completed steps
};

TrainState init_train_state(const ModelConfig& cfg, std::uint64_t seed);

// Rounds parameters and optimizer moments to 32-bit reals, the precision
// checkpoints store.
void snap_to_f32(TrainState& st);

// Forward, backward, clip, AdamW, zero grads.
StepRecord training_step(TrainState& st, const ModelConfig& cfg, std::span<const BatchItem> batch,
                         const TeacherEncoder& teacher, const TrainConfig& tc);

// Example order is a fresh permutation per epoch; buckets are drawn per
// example. Both depend only on (seed, step).
class BatchSampler {
 public:
  BatchSampler(const std::vector<PackedExample>& data, const TrainConfig& tc);
  std::vector<BatchItem> batch(std::uint64_t step);

 private:
  const std::vector<PackedExample>* data_;
  TrainConfig tc_;
  RunSeeds seeds_;
  std::uint64_t epoch_ = UINT64_MAX;
  std::vector<std::size_t> perm_;
};

using StepCallback = std::function<void(const StepRecord&, const TrainState&)>;

// Continues from st.step up to tc.steps.
void train(TrainState& st, const ModelConfig& cfg, const std::vector<PackedExample>& data,
           const TeacherEncoder& teacher, const TrainConfig& tc, const StepCallback& on_step = {});

}  // namespace editar
