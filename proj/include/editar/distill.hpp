#pragma once

#include <cstdint>

#include "editar/image.hpp"
#include "editar/tensor.hpp"

namespace editar {

// Frozen stand-in for a pretrained vision encoder: a patch projection
// followed by two residual layers that mix each grid cell with its
// 4-neighbourhood. Weights are a pure function of the seed.
class TeacherEncoder {
 public:
  static constexpr std::size_t kMixLayers = 2;

  TeacherEncoder() = default;
  TeacherEncoder(std::uint64_t seed, std::size_t patch_size = 4, std::size_t d_teacher = 64,
                 std::size_t image_size = 32);

  std::uint64_t seed() const { return seed_; }
  std::size_t dim() const { return d_; }
  std::size_t grid() const { return grid_; }

  // (grid*grid) x d_teacher, raster order, no gradient.
  Tensor features(const Image& img) const;

 private:
  std::uint64_t seed_ = 0;
  std::size_t patch_ = 0, d_ = 0, image_ = 0, grid_ = 0;
  std::vector<double> w_patch_, b_patch_;
  std::vector<std::vector<double>> w_mix_;
};

// Position-wise linear map from model width to teacher width. The tensors
// alias the model's parameters.
struct AlignmentNet {
  Tensor w;  // d_model x d_teacher
  Tensor b;  // d_teacher
};

Tensor teacher_features(const Image& img, const TeacherEncoder& t);

// MSE between A(hidden) and the teacher's features; hidden and features may
// stack several examples along rows.
Tensor distill_loss(const Tensor& hidden, const Tensor& features, const AlignmentNet& a);
Tensor distill_loss(const Tensor& hidden, const Image& target, const AlignmentNet& a, const TeacherEncoder& t);

}  // namespace editar
