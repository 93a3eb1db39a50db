#include "moebius/algebra/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "moebius/errors.hpp"

namespace moebius::algebra {

void MPoly::trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

MPoly::MPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MPoly MPoly::var(int index, int power) {
  MPoly m;
  Exponents e(static_cast<std::size_t>(index) + 1, 0);
  e[static_cast<std::size_t>(index)] = power;
  trim(e);
  m.terms_.emplace(std::move(e), Scalar(1));
  return m;
}

MPoly MPoly::from_poly(const Poly& p, int index) {
  MPoly m;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    m += MPoly(p.coeff(i)) * var(index, i);
  }
  return m;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int MPoly::degree_in(int index) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    if (static_cast<std::size_t>(index) < e.size()) d = std::max(d, e[static_cast<std::size_t>(index)]);
  }
  return d;
}

int MPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::max_var() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()) - 1);
  return m;
}

Scalar MPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Scalar() : it->second;
}

void MPoly::add_term(Exponents e, const Scalar& c) {
  if (c.is_zero()) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
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
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  MPoly result(Scalar(1));
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(int index) const {
  MPoly r;
  auto i = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    if (i >= e.size() || e[i] == 0) continue;
    Exponents f = e;
    f[i] -= 1;
    r.add_term(std::move(f), c * Scalar(static_cast<long>(e[i])));
  }
  return r;
}

std::vector<MPoly> MPoly::split(int index) const {
  int d = std::max(degree_in(index), 0);
  std::vector<MPoly> out(static_cast<std::size_t>(d) + 1);
  auto i = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    int k = i < e.size() ? e[i] : 0;
    Exponents f = e;
    if (i < f.size()) f[i] = 0;
    out[static_cast<std::size_t>(k)].add_term(std::move(f), c);
  }
  return out;
}

MPoly MPoly::substitute(int index, const MPoly& value) const {
  auto parts = split(index);
  MPoly acc;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    acc = acc * value;
    acc += *it;
  }
  return acc;
}

Poly MPoly::to_poly(int index) const {
  std::vector<Scalar> v(static_cast<std::size_t>(std::max(degree_in(index), 0)) + 1);
  auto i = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k != i && e[k] != 0) throw std::invalid_argument("polynomial is not univariate: " + str());
    }
    int deg = i < e.size() ? e[i] : 0;
    v[static_cast<std::size_t>(deg)] += c;
  }
  return Poly(std::move(v));
}

Scalar MPoly::evaluate(const std::vector<Scalar>& values) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int j = 0; j < e[k]; ++j) term *= values.at(k);
    }
    acc += term;
  }
  return acc;
}

hp::Real MPoly::evaluate(const std::vector<hp::Real>& values) const {
  hp::Real acc = 0;
  for (const auto& [e, c] : terms_) {
    hp::Real term = c.to_hp();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) term *= boost::multiprecision::pow(values.at(k), e[k]);
    }
    acc += term;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"b", "t"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (it->first[k] == 0) continue;
      os << "*";
      if (k < 2) os << names[k]; else os << "r" << (k - 2);
      if (it->first[k] > 1) os << "^" << it->first[k];
    }
  }
  return os.str();
}

bool scalar_multiple(const MPoly& a, const MPoly& b, Scalar* factor) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [ea, ca] = *a.terms().rbegin();
  auto it = b.terms().find(ea);
  if (it == b.terms().end()) return false;
  Scalar k = ca / it->second;
  MPoly diff = a - MPoly(k) * b;
  if (!diff.is_zero()) return false;
  if (factor) *factor = k;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts(const std::string& tok) {
    skip();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool eat(const std::string& tok) {
    if (!starts(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'b' || c == 't' ||
           starts("sqrt3") || starts("√3");
  }

  MPoly expr() {
    MPoly acc;
    bool neg = false;
    if (eat("-")) neg = true; else eat("+");
    MPoly first = term();
    acc = neg ? -first : first;
    while (true) {
      if (eat("+")) acc += term();
      else if (eat("-")) acc -= term();
      else break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    while (true) {
      if (eat("*")) {
        acc *= power();
      } else if (eat("/")) {
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc *= MPoly(d.constant_term().inverse());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly power() {
    MPoly base = atom();
    if (eat("^")) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (eat("(")) {
      MPoly r = expr();
      if (!eat(")")) fail("expected )");
      return r;
    }
    if (eat("sqrt3") || eat("√3")) return MPoly(Scalar::sqrt3());
    if (eat("b")) return MPoly::b();
    if (eat("t")) return MPoly::t();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected a number, variable or (");
    return MPoly(Scalar(parse_rational(s_.substr(start, pos_ - start))));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(const std::string& text) { return Parser(text).parse(); }

Poly parse_poly(const std::string& text) { return parse_mpoly(text).to_poly(0); }

}  // namespace moebius::algebra
