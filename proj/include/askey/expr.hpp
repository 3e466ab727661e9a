#pragma once
// Serializable exact expression trees over named rational knobs and the gauge
// parameter delta. Contraction data (basis-change matrices, parameter maps,
// representation-saving substitutions) is stored as Expr, evaluated at a bound
// ParamPoint into Laurent scalars.

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "askey/exact.hpp"

namespace askey {

// ParamPoint binds parameter names to exact Laurent values (a plain rational
// is the delta^0 case). Immutable after construction by convention.
struct ParamPoint {
  std::map<std::string, Laurent> b;

  bool has(const std::string& k) const { return b.count(k) != 0; }
  const Laurent& get(const std::string& k) const {
    auto it = b.find(k);
    if (it == b.end()) throw UnboundParameter("unbound parameter: " + k);
    return it->second;
  }
  GRat get_const(const std::string& k) const {
    const Laurent& l = get(k);
    if (!l.is_constant())
      throw AskeyError("parameter not delta-free: " + k);
    return l.coeff(0);
  }
  void set(const std::string& k, Laurent v) { b[k] = std::move(v); }
  void set(const std::string& k, const GRat& v) { b[k] = Laurent(v); }
  void set(const std::string& k, const Rat& v) { b[k] = Laurent(v); }
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum Kind { Num, Param, Delta, Add, Mul, Pow } kind;
  GRat value;              // Num
  std::string name;        // Param
  int expo = 0;            // Delta exponent / Pow exponent (may be negative)
  std::vector<Expr> args;  // Add, Mul, Pow(single arg)
};

inline Expr ex_num(GRat v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Num;
  n->value = std::move(v);
  return n;
}
inline Expr ex_num(long num, long den = 1) { return ex_num(grat(num, den)); }
inline Expr ex_param(std::string name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Param;
  n->name = std::move(name);
  return n;
}
inline Expr ex_delta(int e = 1) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Delta;
  n->expo = e;
  return n;
}
inline Expr ex_add(std::vector<Expr> args) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Add;
  n->args = std::move(args);
  return n;
}
inline Expr ex_mul(std::vector<Expr> args) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Mul;
  n->args = std::move(args);
  return n;
}
// Integer power; negative exponents require the base to evaluate to a Laurent
// unit (single term), which is checked at evaluation time.
inline Expr ex_pow(Expr base, int k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Pow;
  n->expo = k;
  n->args = {std::move(base)};
  return n;
}

inline Expr operator+(Expr a, Expr b) { return ex_add({std::move(a), std::move(b)}); }
inline Expr operator-(Expr a, Expr b) {
  return ex_add({std::move(a), ex_mul({ex_num(-1), std::move(b)})});
}
inline Expr operator*(Expr a, Expr b) { return ex_mul({std::move(a), std::move(b)}); }
inline Expr operator-(Expr a) { return ex_mul({ex_num(-1), std::move(a)}); }

// Evaluate with delta -> delta^gauge_scale (gauge refinement invariance).
inline Laurent ex_eval(const Expr& e, const ParamPoint& p, int gauge_scale = 1) {
  switch (e->kind) {
    case ExprNode::Num:
      return Laurent(e->value);
    case ExprNode::Param:
      return p.get(e->name);  // bindings are already gauge-scaled by the caller
    case ExprNode::Delta:
      return Laurent::delta(e->expo * gauge_scale, GRat(1));
    case ExprNode::Add: {
      Laurent r;
      for (auto& a : e->args) r += ex_eval(a, p, gauge_scale);
      return r;
    }
    case ExprNode::Mul: {
      Laurent r(1);
      for (auto& a : e->args) r *= ex_eval(a, p, gauge_scale);
      return r;
    }
    case ExprNode::Pow:
      return pow_int(ex_eval(e->args[0], p, gauge_scale), e->expo);
  }
  throw AskeyError("ex_eval: bad node");
}

// --- JSON (catalog serialization) ---

inline nlohmann::ordered_json grat_to_json(const GRat& g) {
  if (g.is_real()) return nlohmann::ordered_json(rat_str(g.re));
  return nlohmann::ordered_json{{"re", rat_str(g.re)}, {"im", rat_str(g.im)}};
}
inline GRat grat_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return GRat(r);
  }
  Rat re(j.at("re").get<std::string>()), im(j.at("im").get<std::string>());
  re.canonicalize();
  im.canonicalize();
  return GRat(re, im);
}

inline nlohmann::ordered_json ex_to_json(const Expr& e) {
  using J = nlohmann::ordered_json;
  switch (e->kind) {
    case ExprNode::Num:
      return J{{"num", grat_to_json(e->value)}};
    case ExprNode::Param:
      return J{{"param", e->name}};
    case ExprNode::Delta:
      return J{{"delta", e->expo}};
    case ExprNode::Add: {
      J a = J::array();
      for (auto& x : e->args) a.push_back(ex_to_json(x));
      return J{{"add", a}};
    }
    case ExprNode::Mul: {
      J a = J::array();
      for (auto& x : e->args) a.push_back(ex_to_json(x));
      return J{{"mul", a}};
    }
    case ExprNode::Pow:
      return J{{"pow", ex_to_json(e->args[0])}, {"exp", e->expo}};
  }
  throw AskeyError("ex_to_json: bad node");
}

inline Expr ex_from_json(const nlohmann::json& j) {
  if (j.contains("num")) return ex_num(grat_from_json(j.at("num")));
  if (j.contains("param")) return ex_param(j.at("param").get<std::string>());
  if (j.contains("delta")) return ex_delta(j.at("delta").get<int>());
  if (j.contains("add")) {
    std::vector<Expr> a;
    for (auto& x : j.at("add")) a.push_back(ex_from_json(x));
    return ex_add(std::move(a));
  }
  if (j.contains("mul")) {
    std::vector<Expr> a;
    for (auto& x : j.at("mul")) a.push_back(ex_from_json(x));
    return ex_mul(std::move(a));
  }
  if (j.contains("pow"))
    return ex_pow(ex_from_json(j.at("pow")), j.at("exp").get<int>());
  throw AskeyError("ex_from_json: bad node");
}

// Deterministic small-height rational sampler (splitmix64 core). Numerators
// and denominators stay below 64 to control coefficient growth; values are
// strictly positive so model coefficient denominators stay away from poles.
struct RatSampler {
  unsigned long long s;
  explicit RatSampler(unsigned long long seed) : s(seed) {}

  unsigned long long next_u64() {
    s += 0x9e3779b97f4a7c15ull;
    unsigned long long z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long next_in(long lo, long hi) {  // inclusive
    return lo + (long)(next_u64() % (unsigned long long)(hi - lo + 1));
  }
  // positive rational, num/den <= 63, not an integer multiple of 1/2 to keep
  // generic position relative to half-integer spectra
  Rat positive() {
    for (;;) {
      long num = next_in(1, 63), den = next_in(2, 63);
      Rat q(num, den);
      q.canonicalize();
      if (q.get_den() > 2) return q;
    }
  }
  Rat nonzero_signed() {
    Rat q = positive();
    return next_u64() & 1 ? q : Rat(-q);
  }
};

}  // namespace askey
