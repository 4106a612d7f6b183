#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "editar/image.hpp"
#include "editar/rng.hpp"
#include "editar/text.hpp"

namespace editar {

inline constexpr std::size_t kCanvas = 32;
inline constexpr std::size_t kGrid = 4;
inline constexpr std::size_t kMaxShapes = 3;
// Minimum spacing between shape bounding boxes.
inline constexpr std::size_t kShapeGap = 4;

enum class ShapeKind { square, disc };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::square;
  int color = 0;       // index into object palette
  std::size_t x = 0;   // top-left corner, multiple of kGrid
  std::size_t y = 0;
  std::size_t size = 8;  // 8 or 12
  int z = 1;             // depth level 1..3, higher draws in front

  bool operator==(const ShapeSpec&) const = default;
};

struct SceneSpec {
  int background = 0;  // 0 light, 1 dark
  std::vector<ShapeSpec> shapes;

  bool operator==(const SceneSpec&) const = default;
};

enum class ConditionKind { edit, canny, depth, seg };

std::string_view to_string(ConditionKind k);
ConditionKind condition_kind_of(TaskKind t);

using Rgb = std::array<std::uint8_t, 3>;
const std::array<Rgb, 6>& object_palette();
const std::array<Rgb, 2>& background_palette();
Rgb seg_class_color(ShapeKind k);

// Throws a spec error unless the scene is well formed.
void validate_scene(const SceneSpec& spec);
bool shape_contains(const ShapeSpec& s, std::size_t px, std::size_t py);

Image render_scene(const SceneSpec& spec);
Image derive_condition(const SceneSpec& spec, ConditionKind kind);

struct TrainingExample {
  Image condition;
  ConditionKind kind = ConditionKind::edit;
  TaskKind task = TaskKind::identity;
  std::string instruction;
  Image target;
  Mask edit_mask;  // true = allowed to change
  SceneSpec source;
  SceneSpec result;
  // Shape an edit acts on (taken from `result`, or from `source` for removals).
  std::optional<ShapeSpec> affected;
};

// Bounding box of `s` dilated by 2 px and clipped to the canvas.
Mask dilated_box_mask(const ShapeSpec& s);

// `kind` is recolor, remove, add or identity. A remove pair is flipped into
// an add pair with probability 0.5.
TrainingExample make_edit_pair(const SceneSpec& spec, TaskKind kind, Rng& rng);
TrainingExample make_translation_pair(const SceneSpec& spec, ConditionKind kind, Rng& rng);

// Shapes in raster order of their top-left corners, then the background.
std::string scene_description(const SceneSpec& spec);

SceneSpec random_scene(Rng& rng, std::size_t min_shapes, std::size_t max_shapes);

struct Mix {
  double edit = 0.55;
  double canny = 0.15;
  double depth = 0.15;
  double seg = 0.15;

  // "edit=0.55,canny=0.15,depth=0.15,seg=0.15"; missing kinds are 0.
  static Mix parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

// Example i draws only from derive_seed(seed, i).
TrainingExample sample_example(std::uint64_t seed, std::uint64_t index, const Mix& mix);
std::vector<TrainingExample> sample_corpus(std::size_t n, const Mix& mix, std::uint64_t seed);

}  // namespace editar
