#include "core/linalg.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace symcap {

Matrix::Matrix(int n) : n_(n) {
  if (n <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "Matrix: size must be positive");
  }
  a_.assign(static_cast<size_t>(n) * n, 0.0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

double Matrix::determinant() const {
  Matrix lu = *this;
  double det = 1.0;
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n_; ++r) {
      if (std::abs(lu.at(r, col)) > std::abs(lu.at(pivot, col))) pivot = r;
    }
    if (lu.at(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(lu.at(pivot, j), lu.at(col, j));
      det = -det;
    }
    det *= lu.at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      const double factor = lu.at(r, col) / lu.at(col, col);
      for (int j = col; j < n_; ++j) lu.at(r, j) -= factor * lu.at(col, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  Matrix work = *this;
  Matrix inv = Matrix::identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n_; ++r) {
      if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
    }
    const double p = work.at(pivot, col);
    if (std::abs(p) < 1e-300) {
      throw Error(ErrorCode::kDomain, "Matrix::inverse: matrix is singular");
    }
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const double scale = 1.0 / work.at(col, col);
    for (int j = 0; j < n_; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      const double factor = work.at(r, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n_; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && at(i, j) != 0.0) return false;
  return true;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw Error(ErrorCode::kDimension,
                "Matrix::apply: vector has size " + std::to_string(x.size()) +
                    ", expected " + std::to_string(n_));
  }
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kDimension, "Matrix::operator*: size mismatch");
  }
  Matrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const double v = at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < n_; ++j) m.at(i, j) += v * other.at(k, j);
    }
  return m;
}

}  // namespace symcap
