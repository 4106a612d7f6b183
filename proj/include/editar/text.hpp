#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "editar/tensor.hpp"

namespace editar {

enum class TaskKind { recolor, remove, add, identity, canny, depth, seg };

bool is_translation(TaskKind k);
std::string_view to_string(TaskKind k);
TaskKind task_from_string(std::string_view s);

// Closed word lists shared with the scene generator.
const std::vector<std::string>& color_words();       // object palette order
const std::vector<std::string>& shape_words();       // square, disc
const std::vector<std::string>& background_words();  // light, dark

class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  // Every word reachable from the instruction templates.
  static Vocabulary build();
  explicit Vocabulary(std::vector<std::string> tokens);

  int id(const std::string& word) const;
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  // CRC-32 of the newline-joined token list; used for compatibility checks.
  std::uint32_t hash() const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

struct InstructionTokens {
  std::vector<int> ids;  // fixed length, PAD-filled
  std::size_t true_len = 0;
};

using Slots = std::map<std::string, std::string>;

// Fills the task's template. Translation tasks take a "desc" slot; edit
// tasks take color/shape/color2 as needed. Missing slots throw.
std::string render_instruction(TaskKind kind, const Slots& slots);

InstructionTokens tokenize(const std::string& text, const Vocabulary& vocab, std::size_t max_len);

// table[id] + pos[j] per slot.
Tensor embed_text(const InstructionTokens& tokens, const Tensor& table, const Tensor& positions);
// One learned vector broadcast over all slots, plus positions.
Tensor null_text_embedding(const Tensor& null_vector, const Tensor& positions);

}  // namespace editar
