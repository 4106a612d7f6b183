#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "editar/tensor.hpp"
#include "editar/text.hpp"

namespace editar {

struct ModelConfig {
  std::size_t d_model = 128;
  std::size_t n_layers = 4;
  std::size_t n_heads = 4;
  std::size_t K = 256;        // image vocabulary
  std::size_t V_text = 0;     // filled from the vocabulary
  std::size_t L_text = 16;
  std::size_t N = 64;         // image tokens per image
  std::size_t d_teacher = 64;

  std::size_t max_seq() const { return L_text + 2 * N; }
  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

// [0, L) text | [L, L+N) condition | [L+N, L+2N) output. The logit at
// position p predicts the token in slot p+1, so loss positions are
// [L+N-1, L+2N-1).
struct SequenceLayout {
  std::size_t text_begin, cond_begin, out_begin, end, loss_begin, loss_end;
  static SequenceLayout of(const ModelConfig& cfg);
};

struct BlockParams {
  Tensor ln1_g, ln1_b, w_qkv, b_qkv, w_out, b_out;
  Tensor ln2_g, ln2_b, w_in, b_in, w_proj, b_proj;
};

struct ModelParams {
  Tensor tok_emb, pos_cond, pos_out, text_emb, text_pos, null_text, null_image;
  std::vector<BlockParams> blocks;
  Tensor ln_f_g, ln_f_b, head_w, head_b;
  Tensor align_w, align_b;

  // Stable name order used by checkpoints and the optimizer.
  std::vector<std::pair<std::string, Tensor*>> named();
  std::vector<Tensor> list() const;
  std::size_t count() const;
};

ModelParams init_params(const ModelConfig& cfg, std::uint64_t seed);
std::size_t parameter_count(const ModelConfig& cfg);
// Rank >= 2 tensors take weight decay; vectors do not.
std::vector<bool> decay_mask(const ModelParams& p);

struct SequenceInput {
  const InstructionTokens* text = nullptr;  // nullptr: null text
  const std::vector<int>* cond = nullptr;    // nullptr: null image
  std::span<const int> outputs;              // output-slot tokens, at most N
};

// Rows for one sequence padded with zero rows to max_seq.
Tensor assemble_input(const ModelParams& p, const ModelConfig& cfg, const SequenceInput& in);
// `batch` sequences of seq_len rows each, stacked.
Tensor assemble_batch(const ModelParams& p, const ModelConfig& cfg, std::span<const SequenceInput> inputs,
                      std::size_t seq_len);

// Runs the blocks over x [batch*seq_len x d] and returns the final-normed
// hidden state for positions >= tail_begin of every sequence,
// [batch*(seq_len-tail_begin) x d]. Rows before tail_begin still feed keys
// and values.
Tensor hidden_states(const ModelParams& p, const ModelConfig& cfg, const Tensor& x, std::size_t batch,
                     std::size_t seq_len, std::size_t tail_begin = 0);
Tensor logits_from_hidden(const ModelParams& p, const Tensor& hidden);

struct ForwardResult {
  Tensor logits;       // valid_len x K
  Tensor last_hidden;  // valid_len x d
};
ForwardResult forward(const ModelParams& p, const ModelConfig& cfg, const Tensor& x, std::size_t valid_len);

// Incremental decoding without a graph: cached keys and values per layer.
class DecodeState {
 public:
  DecodeState(const ModelParams& p, const ModelConfig& cfg);

  // Feeds text and condition slots; returns logits predicting output token 1.
  std::vector<double> prefill(const InstructionTokens* text, const std::vector<int>* cond);
  // Places `token` in the next output slot and returns the following logits.
  std::vector<double> next_token_logits(int token);
  std::size_t position() const { return pos_; }
  void reset() { pos_ = 0; }

 private:
  std::vector<double> run(const std::vector<double>& rows, std::size_t n);

  const ModelParams* p_;
  ModelConfig cfg_;
  std::size_t pos_ = 0;
  std::vector<std::vector<double>> k_cache_, v_cache_;
};

}  // namespace editar
