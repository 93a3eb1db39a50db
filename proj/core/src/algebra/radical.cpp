#include "moebius/algebra/radical.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "moebius/errors.hpp"

namespace moebius::algebra {

struct RadicalExpr::Node {
  Kind kind;
  Scalar value;
  Var var = Var::b;
  std::vector<std::shared_ptr<const Node>> kids;
};

using NodePtr = std::shared_ptr<const RadicalExpr::Node>;

namespace {

NodePtr make(RadicalExpr::Kind k, std::vector<NodePtr> kids) {
  auto n = std::make_shared<RadicalExpr::Node>();
  n->kind = k;
  n->kids = std::move(kids);
  return n;
}

}  // namespace

RadicalExpr::RadicalExpr(Scalar c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = std::move(c);
  node_ = std::move(n);
}

RadicalExpr RadicalExpr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->var = v;
  return RadicalExpr(NodePtr(std::move(n)));
}

RadicalExpr::Kind RadicalExpr::kind() const { return node_->kind; }

std::size_t RadicalExpr::sqrt_count() const {
  std::function<std::size_t(const NodePtr&)> rec = [&](const NodePtr& n) -> std::size_t {
    std::size_t c = n->kind == Kind::sqrt ? 1 : 0;
    for (const auto& k : n->kids) c += rec(k);
    return c;
  };
  return rec(node_);
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) {
  return RadicalExpr(make(RadicalExpr::Kind::sum, {a.node_, b.node_}));
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
  return RadicalExpr(make(RadicalExpr::Kind::product, {a.node_, b.node_}));
}

RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
  return RadicalExpr(make(RadicalExpr::Kind::quotient, {a.node_, b.node_}));
}

RadicalExpr sqrt(const RadicalExpr& a) { return RadicalExpr(make(RadicalExpr::Kind::sqrt, {a.node_})); }

RadicalExpr RadicalExpr::operator-() const { return RadicalExpr(Scalar(-1)) * *this; }

RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) { return a + (-b); }

RadicalExpr RadicalExpr::substitute(Var v, const RadicalExpr& value) const {
  std::function<NodePtr(const NodePtr&)> rec = [&](const NodePtr& n) -> NodePtr {
    if (n->kind == Kind::variable) return n->var == v ? value.node_ : n;
    if (n->kids.empty()) return n;
    std::vector<NodePtr> kids;
    for (const auto& k : n->kids) kids.push_back(rec(k));
    return make(n->kind, std::move(kids));
  };
  return RadicalExpr(rec(node_));
}

namespace {

template <class R>
R eval_node(const NodePtr& n, const R& b, const R& t, const std::function<R(const Scalar&)>& lift) {
  using K = RadicalExpr::Kind;
  switch (n->kind) {
    case K::constant: return lift(n->value);
    case K::variable: return n->var == Var::b ? b : t;
    case K::sum: return eval_node(n->kids[0], b, t, lift) + eval_node(n->kids[1], b, t, lift);
    case K::product: return eval_node(n->kids[0], b, t, lift) * eval_node(n->kids[1], b, t, lift);
    case K::quotient: return eval_node(n->kids[0], b, t, lift) / eval_node(n->kids[1], b, t, lift);
    case K::sqrt: {
      using std::sqrt;
      return sqrt(eval_node(n->kids[0], b, t, lift));
    }
  }
  return R(0);
}

}  // namespace

double RadicalExpr::evaluate(double b, double t) const {
  return eval_node<double>(node_, b, t, [](const Scalar& s) { return s.to_double(); });
}

hp::Real RadicalExpr::evaluate(const hp::Real& b, const hp::Real& t) const {
  return eval_node<hp::Real>(node_, b, t, [](const Scalar& s) { return s.to_hp(); });
}

std::optional<Scalar> RadicalExpr::evaluate_exact(const Scalar& b, const Scalar& t) const {
  std::function<std::optional<Scalar>(const NodePtr&)> rec = [&](const NodePtr& n) -> std::optional<Scalar> {
    switch (n->kind) {
      case Kind::constant: return n->value;
      case Kind::variable: return n->var == Var::b ? b : t;
      case Kind::sqrt: {
        auto c = rec(n->kids[0]);
        if (!c) return std::nullopt;
        return c->exact_sqrt();
      }
      default: break;
    }
    auto x = rec(n->kids[0]);
    auto y = rec(n->kids[1]);
    if (!x || !y) return std::nullopt;
    if (n->kind == Kind::sum) return *x + *y;
    if (n->kind == Kind::product) return *x * *y;
    if (y->is_zero()) return std::nullopt;
    return *x / *y;
  };
  return rec(node_);
}

double RadicalExpr::min_radicand(const std::vector<std::pair<double, double>>& samples) const {
  double m = std::numeric_limits<double>::infinity();
  std::function<void(const NodePtr&)> rec = [&](const NodePtr& n) {
    for (const auto& k : n->kids) rec(k);
    if (n->kind != Kind::sqrt) return;
    for (const auto& [b, t] : samples) {
      double v = eval_node<double>(n->kids[0], b, t, [](const Scalar& s) { return s.to_double(); });
      m = std::min(m, v);
    }
  };
  rec(node_);
  return m;
}

std::string RadicalExpr::str() const {
  std::function<std::string(const NodePtr&)> rec = [&](const NodePtr& n) -> std::string {
    switch (n->kind) {
      case Kind::constant: return n->value.str();
      case Kind::variable: return n->var == Var::b ? "b" : "t";
      case Kind::sum: return "(" + rec(n->kids[0]) + " + " + rec(n->kids[1]) + ")";
      case Kind::product: return rec(n->kids[0]) + "*" + rec(n->kids[1]);
      case Kind::quotient: return rec(n->kids[0]) + "/(" + rec(n->kids[1]) + ")";
      case Kind::sqrt: return "sqrt(" + rec(n->kids[0]) + ")";
    }
    return "?";
  };
  return rec(node_);
}

struct EliminationBuilder {
  struct Frac {
    MPoly num;
    MPoly den;
  };

  std::vector<MPoly> radicands;  // radical k is variable 2 + k

  MPoly reduce(const MPoly& p) const {
    MPoly cur = p;
    for (int k = static_cast<int>(radicands.size()) - 1; k >= 0; --k) {
      int idx = 2 + k;
      if (cur.degree_in(idx) < 2) continue;
      auto parts = cur.split(idx);
      MPoly acc;
      MPoly r = MPoly::var(idx);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].is_zero()) continue;
        MPoly term = parts[j] * radicands[static_cast<std::size_t>(k)].pow(static_cast<int>(j / 2));
        if (j % 2 == 1) term *= r;
        acc += term;
      }
      cur = std::move(acc);
    }
    return cur;
  }

  int radical_for(const MPoly& radicand) {
    for (std::size_t k = 0; k < radicands.size(); ++k) {
      if (radicands[k] == radicand) return static_cast<int>(2 + k);
    }
    radicands.push_back(radicand);
    return static_cast<int>(radicands.size() + 1);
  }

  Frac convert(const NodePtr& n) {
    using K = RadicalExpr::Kind;
    switch (n->kind) {
      case K::constant: return {MPoly(n->value), MPoly(Scalar(1))};
      case K::variable: return {MPoly::var(static_cast<int>(n->var)), MPoly(Scalar(1))};
      case K::sum: {
        Frac a = convert(n->kids[0]);
        Frac b = convert(n->kids[1]);
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {reduce(a.num * b.den + b.num * a.den), reduce(a.den * b.den)};
      }
      case K::product: {
        Frac a = convert(n->kids[0]);
        Frac b = convert(n->kids[1]);
        return {reduce(a.num * b.num), reduce(a.den * b.den)};
      }
      case K::quotient: {
        Frac a = convert(n->kids[0]);
        Frac b = convert(n->kids[1]);
        if (b.num.is_zero()) throw NotReducible("division by an identically zero expression");
        return {reduce(a.num * b.den), reduce(a.den * b.num)};
      }
      case K::sqrt: {
        Frac a = convert(n->kids[0]);
        if (a.num.is_zero()) return {MPoly(), MPoly(Scalar(1))};
        // sqrt(n/d) = sqrt(n d)/d; the sign of d is irrelevant for the zero set
        // because elimination multiplies over both signs of every radical.
        if (a.den.is_constant()) {
          Scalar d = a.den.constant_term();
          MPoly rad = reduce(a.num * MPoly(d.sign() > 0 ? d.inverse() : -d.inverse()));
          if (d.sign() < 0) rad = -rad;
          return {MPoly::var(radical_for(rad)), MPoly(Scalar(1))};
        }
        return {MPoly::var(radical_for(reduce(a.num * a.den))), a.den};
      }
    }
    throw NotReducible("unknown node");
  }
};

Elimination eliminate_radicals(const RadicalExpr& e) {
  EliminationBuilder builder;
  auto frac = builder.convert(e.node_);
  Elimination out;
  MPoly cur = frac.num;
  out.log.push_back("numerator has " + std::to_string(cur.terms().size()) + " terms over " +
                    std::to_string(builder.radicands.size()) + " radical(s)");
  const int max_rounds = 64;
  while (cur.max_var() >= 2) {
    if (out.rounds >= max_rounds) throw NotReducible("radicals remain after " + std::to_string(max_rounds) + " rounds");
    int idx = cur.max_var();
    auto parts = cur.split(idx);
    if (parts.size() > 2) throw NotReducible("radical power not reduced");
    const MPoly& a = parts[0];
    MPoly b = parts.size() > 1 ? parts[1] : MPoly();
    const MPoly& c = builder.radicands[static_cast<std::size_t>(idx - 2)];
    cur = builder.reduce(a * a - b * b * c);
    ++out.rounds;
    out.log.push_back("round " + std::to_string(out.rounds) + ": A^2 - B^2 C on radical r" +
                      std::to_string(idx - 2) + ", " + std::to_string(cur.terms().size()) +
                      " terms, total degree " + std::to_string(cur.total_degree()));
  }
  if (cur.is_zero()) throw NotReducible("elimination collapsed to the zero polynomial");
  out.polynomial = std::move(cur);
  return out;
}

}  // namespace moebius::algebra
