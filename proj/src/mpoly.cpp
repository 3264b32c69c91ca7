#include "homgd/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace homgd {

namespace {

constexpr std::array<char, kNumVars> kSymbols{'d', 'l', 'u', 'm', 'n', 'k'};

std::uint32_t total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponents unit(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return e;
}

// Recursive-descent parser over the ASCII polynomial syntax.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << what << " at column " << (pos_ + 1) << " in '" << s_ << "'";
    throw ParseError(os.str());
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        MPoly den = unary();
        if (!den.is_constant() || den.is_zero()) fail("division by a non-constant or zero");
        acc *= Scalar(1) / den.constant_term();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return pow(base, e);
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly(Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    auto it = std::find(kSymbols.begin(), kSymbols.end(), c);
    if (it != kSymbols.end()) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        fail("unknown identifier");
      return MPoly::var(static_cast<Var>(it - kSymbols.begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

char var_symbol(Var v) { return kSymbols[static_cast<std::size_t>(v)]; }

Var parse_var(std::string_view name) {
  if (name.size() == 1) {
    auto it = std::find(kSymbols.begin(), kSymbols.end(), name[0]);
    if (it != kSymbols.end()) return static_cast<Var>(it - kSymbols.begin());
  }
  throw Error("unknown variable '" + std::string(name) + "'");
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  auto ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

MPoly::MPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(Var v) { return monomial(unit(v), Scalar(1)); }

MPoly MPoly::monomial(const Exponents& e, const Scalar& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse(); }

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Scalar MPoly::constant_term() const { return coefficient(Exponents{}); }

Scalar MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

MPoly MPoly::coefficient_of(Var v, unsigned power) const {
  MPoly r;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents reduced = e;
    reduced[idx] = 0;
    r.add_term(reduced, c);
  }
  return r;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

unsigned MPoly::total_degree() const {
  // Graded order puts the highest total degree first.
  return terms_.empty() ? 0 : total(terms_.begin()->first);
}

bool MPoly::uses_only(std::initializer_list<Var> allowed) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] != 0 && std::find(allowed.begin(), allowed.end(), static_cast<Var>(i)) == allowed.end())
        return false;
  return true;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::subst(Var v, const MPoly& expr) const { return subst(std::map<Var, MPoly>{{v, expr}}); }

MPoly MPoly::subst(const std::map<Var, MPoly>& sigma) const {
  // powers[var][e] caches sigma(var)^e.
  std::array<std::vector<MPoly>, kNumVars> powers;
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const MPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(1);
    const MPoly& base = sigma.at(static_cast<Var>(var));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents kept{};
    MPoly factor(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (sigma.count(static_cast<Var>(i)))
        factor *= power_of(i, e[i]);
      else
        kept[i] = e[i];
    }
    r += factor * monomial(kept, Scalar(1));
  }
  return r;
}

Scalar MPoly::eval(const Assignment& at) const {
  Scalar r(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end())
        throw Error(std::string("no value assigned to variable '") + kSymbols[i] + "'");
      t *= pow(it->second, static_cast<long>(e[i]));
    }
    r += t;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.sign() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = total(e) == 0;
    bool wrote = false;
    if (constant || !mag.is_one()) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << kSymbols[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= p;
  return r;
}

MPoly subst(const MPoly& p, std::string_view var_name, const MPoly& expr) {
  return p.subst(parse_var(var_name), expr);
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

bool is_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const MPoly& p) { return p.is_zero(); });
}

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw Error("polynomial vector length mismatch");
  PolyVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw Error("polynomial vector length mismatch");
  PolyVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

PolyVec operator*(const MPoly& p, const PolyVec& v) {
  PolyVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(p * x);
  return r;
}

PolyVec subst(const PolyVec& v, Var var, const MPoly& expr) {
  PolyVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.subst(var, expr));
  return r;
}

std::string to_string(const PolyVec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << "; ";
    first = false;
    os << "[" << (i < names.size() ? names[i] : std::to_string(i)) << "] " << v[i].str();
  }
  return first ? "0" : os.str();
}

}  // namespace homgd
