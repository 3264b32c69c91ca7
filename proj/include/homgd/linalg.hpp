#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "homgd/scalar.hpp"

namespace homgd {

/// Dense coordinate vector over the rationals.
using Vec = std::vector<Scalar>;

Vec basis_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
std::string to_string(const Vec& v);

/// Square matrix acting on coordinate vectors; column j is the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);

  std::size_t dim() const { return n_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

/// exp(N) = sum N^k / k!; throws Error unless N^dim = 0.
Matrix nilpotent_exp(const Matrix& nilpotent);

/// Structure constants of a bilinear operation: e_i * e_j = sum_k c(i,j,k) e_k.
/// Each (i, j) cell is a sparse map k -> c with no stored zeros.
class StructureTensor {
 public:
  struct Entry {
    std::size_t i, j, k;
    Scalar c;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : n_(dim), cells_(dim * dim) {}

  std::size_t dim() const { return n_; }
  Scalar get(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  void add(std::size_t i, std::size_t j, const Vec& v);

  const std::map<std::size_t, Scalar>& cell(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }
  /// e_i * e_j as a dense vector.
  Vec basis_product(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors; skips zero coordinates.
  Vec apply(const Vec& x, const Vec& y) const;

  bool is_zero() const;
  /// All nonzero entries sorted by (i, j, k).
  std::vector<Entry> entries() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::map<std::size_t, Scalar>> cells_;
};

}  // namespace homgd
