#pragma once
// Sparse multivariate polynomials / rational functions in up to 3 variables
// over the Gaussian rationals, with reduction modulo a quadric ideal
// (s1^2+s2^2+s3^2-1 for sphere systems, v^2+w^2-1 for the circle model).

#include <array>
#include <map>
#include <optional>

#include "askey/exact.hpp"

namespace askey {

using Expo = std::array<int, 3>;

struct MPoly {
  std::map<Expo, GRat> t;

  MPoly() = default;
  MPoly(long v) {
    if (v != 0) t[{0, 0, 0}] = GRat(v);
  }
  MPoly(const GRat& c) {
    if (!c.is_zero()) t[{0, 0, 0}] = c;
  }
  static MPoly var(int k, int e = 1, GRat c = GRat(1)) {
    MPoly p;
    Expo x{0, 0, 0};
    x[k] = e;
    if (!c.is_zero()) p.t[x] = std::move(c);
    return p;
  }

  bool is_zero() const { return t.empty(); }
  void add_term(const Expo& e, const GRat& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r;
    for (auto& [e, c] : t) r.t[e] = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    for (auto& [e, c] : o.t) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) { return *this += -o; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const GRat& s) const {
    MPoly r;
    if (s.is_zero()) return r;
    for (auto& [e, c] : t) r.t[e] = c * s;
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t == b.t; }

  MPoly derivative(int k) const {
    MPoly r;
    for (auto& [e, c] : t) {
      if (e[k] == 0) continue;
      Expo d = e;
      d[k] -= 1;
      r.add_term(d, c * GRat(rat(e[k])));
    }
    return r;
  }
};

inline MPoly pow_int(const MPoly& a, int e) {
  MPoly r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Working space: variable names plus an optional quadric substitution
// var[idx]^2 -> rep (used to reduce modulo the sphere/circle relation).
struct Space {
  int nvars = 2;
  std::array<std::string, 3> names{"x", "y", ""};
  std::optional<std::pair<int, MPoly>> quadric;  // (idx, replacement for var^2)

  // Normal form: reduce the exponent of the quadric variable below 2.
  MPoly reduce(const MPoly& p) const {
    if (!quadric) return p;
    int k = quadric->first;
    const MPoly& rep = quadric->second;  // must not contain var k
    MPoly out;
    for (auto& [e, c] : p.t) {
      if (e[k] < 2) {
        out.add_term(e, c);
        continue;
      }
      Expo base = e;
      base[k] = e[k] % 2;
      MPoly mono;
      mono.t[base] = c;
      out += mono * pow_int(rep, e[k] / 2);
    }
    return out;
  }
  bool is_zero_mod(const MPoly& p) const { return reduce(p).is_zero(); }
};

// Rational function over MPoly. Not gcd-reduced (multivariate); zero tests
// and comparisons go through cross-multiplication and ideal reduction.
struct MRat {
  MPoly num, den;

  MRat() : num(), den(1) {}
  MRat(MPoly n) : num(std::move(n)), den(1) {}
  MRat(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZeroInCoefficient("MRat: zero denominator");
    strip();
  }
  MRat(long v) : num(v), den(1) {}
  MRat(const GRat& c) : num(c), den(1) {}

  // Remove common monomial and rational content to tame growth.
  void strip() {
    if (num.is_zero()) {
      den = MPoly(1);
      return;
    }
    Expo g{1 << 20, 1 << 20, 1 << 20};
    for (auto* p : {&num, &den})
      for (auto& [e, c] : p->t)
        for (int k = 0; k < 3; ++k) g[k] = std::min(g[k], e[k]);
    if (g[0] || g[1] || g[2]) {
      auto shift = [&](MPoly& p) {
        MPoly r;
        for (auto& [e, c] : p.t)
          r.t[{e[0] - g[0], e[1] - g[1], e[2] - g[2]}] = c;
        p = r;
      };
      shift(num);
      shift(den);
    }
    GRat lead = den.t.begin()->second;
    if (!(lead == GRat(1))) {
      GRat inv = lead.inv();
      num = num * inv;
      den = den * inv;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  MRat operator-() const {
    MRat r = *this;
    r.num = -r.num;
    return r;
  }
  friend MRat operator+(const MRat& a, const MRat& b) {
    if (a.den == b.den) return MRat(a.num + b.num, a.den);
    return MRat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend MRat operator-(const MRat& a, const MRat& b) { return a + (-b); }
  friend MRat operator*(const MRat& a, const MRat& b) {
    return MRat(a.num * b.num, a.den * b.den);
  }
  friend MRat operator/(const MRat& a, const MRat& b) {
    if (b.is_zero()) throw DivisionByZeroInCoefficient("MRat: division by zero");
    return MRat(a.num * b.den, a.den * b.num);
  }
  MRat derivative(int k) const {
    return MRat(num.derivative(k) * den - num * den.derivative(k), den * den);
  }
};

}  // namespace askey
