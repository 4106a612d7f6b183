#pragma once

#include <optional>
#include <string>
#include <vector>

#include "editar/config.hpp"
#include "editar/container.hpp"
#include "editar/trainer.hpp"
#include "editar/vq.hpp"

namespace editar {

inline constexpr const char* kCheckpointFormat = "editar-ckpt-v1";
inline constexpr const char* kCodebookFormat = "editar-codebook-v1";

struct CodebookFile {
  Codebook codebook;
  std::uint64_t seed = 0;
  std::size_t iters = 0;
  std::vector<double> distortion;
};

std::string encode_codebook(const CodebookFile& f);
CodebookFile decode_codebook(std::string_view bytes, const std::string& what);
void save_codebook(const std::string& path, const CodebookFile& f);
CodebookFile load_codebook(const std::string& path);

struct Checkpoint {
  ModelConfig model;
  TrainConfig train;
  std::vector<std::string> vocabulary;
  std::uint64_t teacher_seed = 0;
  Codebook codebook;
  TrainState state;
};

std::string encode_checkpoint(const Checkpoint& ck);
Checkpoint decode_checkpoint(std::string_view bytes, const std::string& what);
void save_checkpoint(const std::string& path, const Checkpoint& ck);
Checkpoint load_checkpoint(const std::string& path);

// Throws a compatibility error naming the first disagreement.
void check_compatible(const Checkpoint& ck, const Vocabulary& vocab, std::optional<std::size_t> k,
                      std::optional<std::size_t> n, std::optional<std::uint64_t> teacher_seed);

}  // namespace editar
