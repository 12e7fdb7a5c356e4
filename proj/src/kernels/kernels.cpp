#include "hsfuse/kernels.hpp"

#include <atomic>

namespace hsfuse::kernels {
namespace {

using detail::KernelTable;

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table();
    case Backend::avx2:
      return detail::avx2_table();
    case Backend::neon:
      return detail::neon_table();
  }
  return nullptr;
}

Backend detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
      __builtin_cpu_supports("fma"))
    return Backend::avx2;
#endif
  if (detail::neon_table() != nullptr) return Backend::neon;
  return Backend::scalar;
}

struct Dispatch {
  std::atomic<const KernelTable*> table;
  std::atomic<Backend> backend;
  Dispatch() : backend(detect()) { table.store(table_for(backend.load())); }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

const KernelTable& tab() { return *dispatch().table.load(std::memory_order_relaxed); }

}  // namespace

Backend active() { return dispatch().backend.load(); }

bool set_backend(Backend b) {
  const KernelTable* t = table_for(b);
  if (t == nullptr) return false;
#if defined(__x86_64__) || defined(__i386__)
  if (b == Backend::avx2 &&
      !(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")))
    return false;
#endif
  dispatch().table.store(t);
  dispatch().backend.store(b);
  return true;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

double dot(const double* a, const double* b, std::size_t n) { return tab().dot(a, b, n); }
double sum(const double* x, std::size_t n) { return tab().sum(x, n); }
double sumsq(const double* x, std::size_t n) { return tab().sumsq(x, n); }
double sq_diff(const double* a, const double* b, std::size_t n) { return tab().sq_diff(a, b, n); }
double neg_part_sumsq(const double* x, std::size_t n) { return tab().neg_part_sumsq(x, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { tab().axpy(a, x, y, n); }
void scale(const double* x, double a, double* y, std::size_t n) { tab().scale(x, a, y, n); }
void add(const double* a, const double* b, double* y, std::size_t n) { tab().add(a, b, y, n); }
void sub(const double* a, const double* b, double* y, std::size_t n) { tab().sub(a, b, y, n); }
void lincomb(double a, const double* x, double b, const double* y, double* z, std::size_t n) {
  tab().lincomb(a, x, b, y, z, n);
}
void clamp_min0(const double* x, double* y, std::size_t n) { tab().clamp_min0(x, y, n); }
void shift_clamp0(const double* x, double t, double* y, std::size_t n) {
  tab().shift_clamp0(x, t, y, n);
}

}  // namespace hsfuse::kernels
