#pragma once

#include <optional>

#include "editar/image.hpp"
#include "editar/synth.hpp"

namespace editar {

struct Psnr {
  double mse = 0.0;
  double db = 0.0;  // meaningful only when !identical
  bool identical = false;
};

// Peak 1.0. A non-null mask restricts the comparison to its true pixels.
Psnr psnr(const Image& a, const Image& b, const Mask* mask = nullptr);
double mse(const Image& a, const Image& b, const Mask* mask = nullptr);

// Single-scale SSIM, 7x7 Gaussian window (sigma 1.5), C1 = 0.01^2,
// C2 = 0.03^2, averaged over channels and over valid window centres. With a
// mask only centres inside the mask count.
double ssim(const Image& a, const Image& b, const Mask* mask = nullptr);

// White where the max-channel central-difference gradient magnitude exceeds
// 0.3, black elsewhere. Borders use clamped neighbours.
Image edge_map(const Image& img);

// Rule-based check that an edit example's generation performed the edit.
bool edit_success(const Image& gen, const TrainingExample& example);

// Pixels classified to the nearest present class colour; mean IoU over the
// classes present in the ground truth (background included).
double seg_miou(const Image& gen, const TrainingExample& example);
// Mean IoU over classes that occur in `truth`; labels are in [0, n_classes).
double mean_iou(const std::vector<int>& predicted, const std::vector<int>& truth, int n_classes);

}  // namespace editar
