#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homgd/scalar.hpp"

namespace homgd {

/// Finitely supported element of A (x) Q[t, t^-1]: the entry at
/// (i, p) is the coefficient of e_i (x) t^p.
class LaurentVec {
 public:
  using Key = std::pair<std::size_t, std::int64_t>;

  LaurentVec() = default;
  static LaurentVec mono(std::size_t index, std::int64_t power, const Scalar& c = Scalar(1));

  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar at(std::size_t index, std::int64_t power) const;
  void add(std::size_t index, std::int64_t power, const Scalar& c);

  LaurentVec& operator+=(const LaurentVec& o);
  LaurentVec& operator-=(const LaurentVec& o);
  LaurentVec& operator*=(const Scalar& c);
  friend LaurentVec operator+(LaurentVec a, const LaurentVec& b) { return a += b; }
  friend LaurentVec operator-(LaurentVec a, const LaurentVec& b) { return a -= b; }
  friend LaurentVec operator*(const Scalar& c, LaurentVec a) { return a *= c; }
  friend bool operator==(const LaurentVec& a, const LaurentVec& b) { return a.entries_ == b.entries_; }

  /// `-b0[-1] + 2*b1[3]` with the supplied basis names, sorted by (index, power).
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::map<Key, Scalar> entries_;
};

}  // namespace homgd
