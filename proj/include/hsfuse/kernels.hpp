#pragma once

#include <cstddef>
#include <string_view>

namespace hsfuse::kernels {

// Elementwise / reduction kernels over contiguous double arrays. A scalar
// reference implementation always exists; AVX2 (x86-64) and NEON (aarch64)
// variants are selected at runtime and must agree with the reference within
// reduction-reordering tolerance (see tests).

enum class Backend { scalar, avx2, neon };

// Backend chosen for this process (auto-detected on first use).
Backend active();

// Force a specific backend; returns false if unsupported on this host.
// Intended for equivalence tests and benchmarking.
bool set_backend(Backend b);

std::string_view backend_name(Backend b);

// Reductions.
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
// Sum of squared differences, sum_i (a_i - b_i)^2.
double sq_diff(const double* a, const double* b, std::size_t n);
// Sum of squared negative parts, sum_i min(x_i, 0)^2.
double neg_part_sumsq(const double* x, std::size_t n);

// Elementwise maps. Aliasing: y may equal x (and z may equal x or y).
void axpy(double a, const double* x, double* y, std::size_t n);   // y += a*x
void scale(const double* x, double a, double* y, std::size_t n);  // y = a*x
void add(const double* a, const double* b, double* y, std::size_t n);
void sub(const double* a, const double* b, double* y, std::size_t n);
// z = a*x + b*y
void lincomb(double a, const double* x, double b, const double* y, double* z,
             std::size_t n);
void clamp_min0(const double* x, double* y, std::size_t n);  // y = max(x, 0)
// y = max(x - t, 0); soft-threshold for nonnegative inputs.
void shift_clamp0(const double* x, double t, double* y, std::size_t n);

namespace detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*sq_diff)(const double*, const double*, std::size_t);
  double (*neg_part_sumsq)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(const double*, double, double*, std::size_t);
  void (*add)(const double*, const double*, double*, std::size_t);
  void (*sub)(const double*, const double*, double*, std::size_t);
  void (*lincomb)(double, const double*, double, const double*, double*,
                  std::size_t);
  void (*clamp_min0)(const double*, double*, std::size_t);
  void (*shift_clamp0)(const double*, double, double*, std::size_t);
};

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();  // nullptr when not compiled in

}  // namespace detail

}  // namespace hsfuse::kernels
