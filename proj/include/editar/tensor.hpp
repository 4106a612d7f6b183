#pragma once

// Dense row-major tensors of 64-bit reals with tape-free dynamic reverse-mode
// differentiation: every op that sees a gradient-requiring input records its
// parents and a backward closure; `backward` walks the recorded graph.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace editar {

using Shape = std::vector<std::size_t>;

std::size_t element_count(const Shape& shape);

namespace detail {
struct TensorNode;
}

class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  // Throws a numeric error if any value is NaN or infinite.
  static Tensor from(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t dim(std::size_t i) const;
  std::size_t rank() const { return shape().size(); }
  std::size_t size() const;
  // Leading extent for 2-D tensors; columns is the last extent.
  std::size_t rows() const { return dim(0); }
  std::size_t cols() const { return shape().back(); }

  std::span<const double> data() const;
  std::span<double> mutable_data();
  double item() const;
  double at(std::size_t i, std::size_t j) const;

  bool requires_grad() const;
  void set_requires_grad(bool on);
  bool has_grad() const;
  std::span<const double> grad() const;
  std::span<double> mutable_grad();
  void zero_grad();

  bool is_leaf() const;
  bool same_storage(const Tensor& other) const { return node_ == other.node_; }

  detail::TensorNode& node() const { return *node_; }
  const std::shared_ptr<detail::TensorNode>& node_ptr() const { return node_; }
  explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<detail::TensorNode> node_;
};

namespace detail {
struct TensorNode {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty until first accumulation
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorNode>> parents;
  std::function<void(TensorNode&)> backward_fn;

  std::vector<double>& ensure_grad() {
    if (grad.empty()) grad.assign(data.size(), 0.0);
    return grad;
  }
};
}  // namespace detail

// Populates grad on every gradient-requiring ancestor of a scalar `loss`.
// Leaf gradients accumulate across calls; intermediate gradients are freed
// once propagated.
void backward(const Tensor& loss);

// C = A B for 2-D operands.
Tensor matmul(const Tensor& a, const Tensor& b);
// x[R x in] * w[in x out] + bias[out]; bias may be undefined.
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& bias);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);
Tensor gelu(const Tensor& x);

// Row-wise softmax over the last dimension, max-subtracted.
Tensor softmax_rows(const Tensor& x);
// Row-wise normalization with learned gain and bias over the last dimension.
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias, double eps = 1e-5);

// rows of `table` selected by ids.
Tensor embedding(const Tensor& table, std::span<const int> ids);
// v ([D] or [1 x D]) repeated n times.
Tensor broadcast_rows(const Tensor& v, std::size_t n);
Tensor concat_rows(std::span<const Tensor> parts);
Tensor slice_rows(const Tensor& x, std::size_t begin, std::size_t end);
Tensor gather_rows(const Tensor& x, std::span<const std::size_t> rows);

// out[out_row] += tables[table][row] for every term; rows without terms are
// zero. Rank-1 tables act as a single row.
struct RowTerm {
  std::uint32_t out_row;
  std::uint32_t table;
  std::uint32_t row;
};
Tensor sum_table_rows(std::span<const Tensor> tables, std::span<const RowTerm> terms, std::size_t n_rows);

// Strictly causal multi-head self-attention for `batch` stacked sequences of
// length seq_len. qkv is [batch*seq_len x 3d] holding Q | K | V column blocks.
// Only queries at positions >= query_begin are evaluated, so the result is
// [batch*(seq_len-query_begin) x d]. When `probs_out` is non-null it receives
// the attention weights laid out [batch][head][query][key].
Tensor causal_attention(const Tensor& qkv, std::size_t batch, std::size_t seq_len,
                        std::size_t n_heads, std::vector<double>* probs_out = nullptr,
                        std::size_t query_begin = 0);

// Mean over rows with mask[i] of -log softmax(logits[i])[targets[i]].
Tensor cross_entropy_masked(const Tensor& logits, std::span<const int> targets,
                            const std::vector<bool>& mask);

// Mean squared error over all entries.
Tensor mse(const Tensor& prediction, const Tensor& target);

void check_finite(std::span<const double> values, const char* what);

}  // namespace editar
