#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference
// and AVX2 / AVX-512 variants; the best variant supported by the running CPU
// is selected once at startup (override with EDITAR_ISA=scalar|avx2|avx512).

#include <cstddef>
#include <string_view>

namespace editar::kernels {

enum class Isa { scalar, avx2, avx512 };

std::string_view to_string(Isa isa);

struct AdamWCoeffs {
  double lr;
  double beta1;
  double beta2;
  double eps;
  double weight_decay;
  double bias_correction1;  // 1 - beta1^t
  double bias_correction2;  // 1 - beta2^t
};

struct KernelTable {
  Isa isa;
  // C[m x n] += A[m x k] * B[k x n]. A(i,p) = a[i*a_rs + p*a_cs], likewise
  // for B; C is row-major with leading dimension ldc.
  void (*gemm_acc)(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t a_rs,
                   std::size_t a_cs, const double* b, std::size_t b_rs, std::size_t b_cs, double* c,
                   std::size_t ldc);
  // y[i] = exp(x[i] - shift); returns the sum of y. x and y may alias.
  double (*exp_shifted)(std::size_t n, const double* x, double shift, double* y);
  // tanh-approximated GELU.
  void (*gelu)(std::size_t n, const double* x, double* y);
  // dx[i] += dy[i] * gelu'(x[i])
  void (*gelu_backward)(std::size_t n, const double* x, const double* dy, double* dx);
  // Decoupled-weight-decay Adam update of one parameter array.
  void (*adamw)(std::size_t n, double* param, const double* grad, double* m, double* v,
                const AdamWCoeffs& c);
};

bool supported(Isa isa);
Isa best_supported();

// Table for a specific ISA; throws a contract error if the CPU lacks it.
const KernelTable& table(Isa isa);

const KernelTable& active();
void set_active(Isa isa);

enum class Trans { no, yes };

// C = op(A) * op(B) (+ C when accumulate). op(A) is m x k, op(B) is k x n.
// Leading dimensions refer to the stored (untransposed) layout.
void gemm(Trans ta, Trans tb, std::size_t m, std::size_t n, std::size_t k, const double* a,
          std::size_t lda, const double* b, std::size_t ldb, double* c, std::size_t ldc,
          bool accumulate);

namespace detail {
const KernelTable& scalar_table();
const KernelTable& avx2_table();
const KernelTable& avx512_table();
}  // namespace detail

}  // namespace editar::kernels
