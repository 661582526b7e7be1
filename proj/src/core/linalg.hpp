#pragma once

#include <span>
#include <vector>

namespace symcap {

/// Small dense square matrix, row-major. Sized for the body algebra
/// (dimensions stay in single digits), not for large-scale work.
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(int n);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<double>& d);

  int size() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Matrix transpose() const;
  Matrix inverse() const;  // throws kDomain if singular
  double determinant() const;
  bool is_diagonal() const;

  std::vector<double> apply(std::span<const double> x) const;
  Matrix operator*(const Matrix& other) const;

 private:
  int n_;
  std::vector<double> a_;
};

}  // namespace symcap
