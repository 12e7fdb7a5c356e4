// NEON variants for aarch64; reached through the runtime-dispatched table.

#include "hsfuse/kernels.hpp"

#if defined(HSFUSE_HAVE_NEON)

#include <arm_neon.h>

#include <algorithm>

namespace hsfuse::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double sumsq_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    acc0 = vfmaq_f64(acc0, v, v);
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sq_diff_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc0 = vfmaq_f64(acc0, d, d);
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double neg_part_sumsq_neon(const double* x, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vminq_f64(vld1q_f64(x + i), zero);
    acc0 = vfmaq_f64(acc0, d, d);
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) {
    const double d = std::min(x[i], 0.0);
    acc += d * d;
  }
  return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(const double* x, double a, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

void add_neon(const double* a, const double* b, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) y[i] = a[i] + b[i];
}

void sub_neon(const double* a, const double* b, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) y[i] = a[i] - b[i];
}

void lincomb_neon(double a, const double* x, double b, const double* y,
                  double* z, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t r =
        vfmaq_f64(vmulq_f64(vb, vld1q_f64(y + i)), va, vld1q_f64(x + i));
    vst1q_f64(z + i, r);
  }
  for (; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void clamp_min0_neon(const double* x, double* y, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmaxq_f64(vld1q_f64(x + i), zero));
  for (; i < n; ++i) y[i] = std::max(x[i], 0.0);
}

void shift_clamp0_neon(const double* x, double t, double* y, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t vt = vdupq_n_f64(t);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vmaxq_f64(vsubq_f64(vld1q_f64(x + i), vt), zero));
  for (; i < n; ++i) y[i] = std::max(x[i] - t, 0.0);
}

}  // namespace

const KernelTable* neon_table() {
  static const KernelTable table = {
      dot_neon,     sum_neon,     sumsq_neon,      sq_diff_neon,
      neg_part_sumsq_neon, axpy_neon, scale_neon,  add_neon,
      sub_neon,     lincomb_neon, clamp_min0_neon, shift_clamp0_neon,
  };
  return &table;
}

}  // namespace hsfuse::kernels::detail

#else

namespace hsfuse::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace hsfuse::kernels::detail

#endif  // HSFUSE_HAVE_NEON
