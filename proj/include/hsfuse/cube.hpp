#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

#include "hsfuse/errors.hpp"

namespace hsfuse {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense third-order tensor (rows x cols x bands) of 64-bit reals.
//
// Storage is band-sequential: band k is a contiguous rows x cols block in
// row-major order, so element (i, j, k) lives at (k*rows + i)*cols + j.
// This matches the on-disk BSQ layout and makes per-band views free.
class Cube {
 public:
  Cube() = default;

  // Zero-initialized cube. Dimensions must be positive.
  Cube(int rows, int cols, int bands) : n1_(rows), n2_(cols), n3_(bands) {
    if (rows <= 0 || cols <= 0 || bands <= 0)
      throw ArgumentError("Cube: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols * bands, 0.0);
  }

  // Adopts `data` (band-sequential layout); rejects wrong length and
  // non-finite entries.
  static Cube from_data(int rows, int cols, int bands, std::vector<double> data);

  int rows() const { return n1_; }
  int cols() const { return n2_; }
  int bands() const { return n3_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double operator()(int i, int j, int k) const {
    return data_[index(i, j, k)];
  }
  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double* band(int k) { return data_.data() + static_cast<std::size_t>(k) * n1_ * n2_; }
  const double* band(int k) const {
    return data_.data() + static_cast<std::size_t>(k) * n1_ * n2_;
  }

  std::size_t band_size() const { return static_cast<std::size_t>(n1_) * n2_; }

  Eigen::Map<RowMat> band_view(int k) { return {band(k), n1_, n2_}; }
  Eigen::Map<const RowMat> band_view(int k) const { return {band(k), n1_, n2_}; }

  bool same_dims(const Cube& o) const {
    return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_;
  }

  bool all_finite() const;

  // Flat index of (i, j, k); no bounds checking in release builds.
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * n1_ + i) * n2_ + j;
  }

 private:
  int n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<double> data_;
};

// Elementwise arithmetic on whole cubes (kernel-dispatched inner loops).

double inner(const Cube& x, const Cube& y);
double frob_norm(const Cube& x);
double frob_dist(const Cube& x, const Cube& y);  // ||x - y||_F

Cube operator+(const Cube& x, const Cube& y);
Cube operator-(const Cube& x, const Cube& y);
Cube operator*(double a, const Cube& x);

// y += a*x
void cube_axpy(double a, const Cube& x, Cube& y);
// a*x + b*y
Cube cube_lincomb(double a, const Cube& x, double b, const Cube& y);

}  // namespace hsfuse
