#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "editar/image.hpp"

namespace editar {

// Non-overlapping P x P x 3 patches, each flattened row-major (y, x, channel).
struct PatchFeatures {
  std::size_t grid_h = 0;
  std::size_t grid_w = 0;
  std::size_t dim = 0;
  std::vector<double> values;  // (grid_h * grid_w) x dim

  std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
};

struct TokenSeq {
  std::size_t grid_h = 0;
  std::size_t grid_w = 0;
  std::vector<int> indices;  // raster order

  bool operator==(const TokenSeq&) const = default;
};

class Codebook {
 public:
  static constexpr const char* kVersion = "patch-kmeans-v1";

  Codebook() = default;
  // Validates K >= 2, D == P*P*3 and pairwise-distinct entries.
  Codebook(std::size_t patch_size, std::size_t k, std::vector<double> entries);

  std::size_t size() const { return k_; }
  std::size_t dim() const { return dim_; }
  std::size_t patch_size() const { return patch_; }
  std::span<const double> entries() const { return entries_; }
  std::span<const double> entry(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }

  // Nearest entry under L2; ties go to the lowest index.
  int nearest(std::span<const double> feature) const;

 private:
  std::size_t patch_ = 0;
  std::size_t k_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> entries_;
  // Exact-match shortcut keyed by the entry's bytes.
  std::unordered_map<std::string, int> exact_;
};

PatchFeatures encode_patches(const Image& img, std::size_t patch_size);
// Inverse of encode_patches.
Image assemble_patches(const PatchFeatures& f, std::size_t patch_size);

TokenSeq quantize(const PatchFeatures& features, const Codebook& cb);
// Places entries in raster order; output clamped to [0, 1].
Image decode(const TokenSeq& tokens, const Codebook& cb);

inline TokenSeq tokenize_image(const Image& img, const Codebook& cb) {
  return quantize(encode_patches(img, cb.patch_size()), cb);
}

struct KMeansResult {
  Codebook codebook;
  // Mean squared distance of samples to their centroid, once per Lloyd pass.
  std::vector<double> distortion;
};

// Distinct samples with multiplicities, in first-occurrence order.
struct SampleHistogram {
  explicit SampleHistogram(std::size_t d) : dim(d) {}
  void add(std::span<const double> sample);
  void add_image(const Image& img, std::size_t patch_size);

  std::size_t dim;
  std::vector<double> points;
  std::vector<double> weights;
  std::size_t total = 0;

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

KMeansResult fit_codebook(const SampleHistogram& samples, std::size_t patch_size, std::size_t k,
                          std::size_t iters, std::uint64_t seed);

// Lloyd's k-means with k-means++ seeding over N x dim samples.
KMeansResult fit_codebook(std::span<const double> samples, std::size_t dim, std::size_t patch_size,
                          std::size_t k, std::size_t iters, std::uint64_t seed);

}  // namespace editar
