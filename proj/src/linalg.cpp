#include "homgd/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace homgd {

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  return r -= b;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != n_) throw Error("matrix/vector dimension mismatch");
  Vec y(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < n_; ++r)
      if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error("matrix dimension mismatch");
  Matrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error("matrix dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix nilpotent_exp(const Matrix& nilpotent) {
  const std::size_t n = nilpotent.dim();
  Matrix result = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * nilpotent;
    if (power.is_zero()) return result;
    if (k == n) break;
    result = result + (Scalar(1) / factorial(static_cast<unsigned>(k))) * power;
  }
  if (n == 0) return result;
  throw Error("map is not nilpotent");
}

Scalar StructureTensor::get(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& c = cells_.at(i * n_ + j);
  auto it = c.find(k);
  return it == c.end() ? Scalar(0) : it->second;
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= n_ || j >= n_ || k >= n_) throw Error("structure constant index out of range");
  auto& cell = cells_[i * n_ + j];
  if (c.is_zero()) cell.erase(k);
  else cell[k] = c;
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  set(i, j, k, get(i, j, k) + c);
}

void StructureTensor::add(std::size_t i, std::size_t j, const Vec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) add(i, j, k, v[k]);
}

Vec StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  Vec v(n_);
  for (const auto& [k, c] : cell(i, j)) v[k] = c;
  return v;
}

Vec StructureTensor::apply(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw Error("operand dimension mismatch");
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& c = cell(i, j);
      if (c.empty()) continue;
      Scalar w = x[i] * y[j];
      for (const auto& [k, v] : c) r[k] += w * v;
    }
  }
  return r;
}

bool StructureTensor::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.empty(); });
}

std::vector<StructureTensor::Entry> StructureTensor::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : cell(i, j)) out.push_back({i, j, k, c});
  return out;
}

}  // namespace homgd
