#pragma once

// On-disk corpus: DIR/manifest.json plus DIR/records.bin. See docs/formats.md.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "editar/container.hpp"
#include "editar/synth.hpp"

namespace editar {

inline constexpr const char* kCorpusFormat = "editar-corpus-v1";

Json scene_to_json(const SceneSpec& s);
SceneSpec scene_from_json(const Json& j);

// Per-example JSON header; images travel separately as PPM.
Json example_header(const TrainingExample& ex, std::uint64_t index);
TrainingExample example_from(const Json& header, Image condition, Image target);

struct CorpusInfo {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string mix;
  std::map<std::string, std::size_t> per_task;
};

// Writes examples [0, count) of the seeded stream; returns the manifest data.
CorpusInfo write_corpus(const std::string& dir, std::size_t count, std::uint64_t seed, const Mix& mix);

CorpusInfo read_corpus_info(const std::string& dir);
// Streams every record in order, verifying the records checksum at the end.
void for_each_example(const std::string& dir, const std::function<void(const TrainingExample&)>& fn);
std::vector<TrainingExample> read_corpus(const std::string& dir);

}  // namespace editar
