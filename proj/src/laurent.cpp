#include "homgd/laurent.hpp"

#include <sstream>

namespace homgd {

LaurentVec LaurentVec::mono(std::size_t index, std::int64_t power, const Scalar& c) {
  LaurentVec v;
  v.add(index, power, c);
  return v;
}

Scalar LaurentVec::at(std::size_t index, std::int64_t power) const {
  auto it = entries_.find({index, power});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void LaurentVec::add(std::size_t index, std::int64_t power, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({index, power}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

LaurentVec& LaurentVec::operator+=(const LaurentVec& o) {
  for (const auto& [key, c] : o.entries_) add(key.first, key.second, c);
  return *this;
}

LaurentVec& LaurentVec::operator-=(const LaurentVec& o) {
  for (const auto& [key, c] : o.entries_) add(key.first, key.second, -c);
  return *this;
}

LaurentVec& LaurentVec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= c;
  return *this;
}

std::string LaurentVec::str(const std::vector<std::string>& names) const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : entries_) {
    bool negative = c.sign() < 0;
    Scalar mag = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (!mag.is_one()) os << mag << "*";
    os << (key.first < names.size() ? names[key.first] : std::to_string(key.first)) << "[" << key.second
       << "]";
  }
  return os.str();
}

}  // namespace homgd
