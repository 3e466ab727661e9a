#pragma once
// Exact scalar tower: arbitrary-precision rationals, Gaussian rationals, and
// Laurent polynomials in the formal gauge parameter delta. No floating point.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace askey {

struct AskeyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativePowers : AskeyError {
  using AskeyError::AskeyError;
};
struct UnboundParameter : AskeyError {
  using AskeyError::AskeyError;
};
struct DimMismatch : AskeyError {
  using AskeyError::AskeyError;
};
struct BoundaryLeak : AskeyError {
  using AskeyError::AskeyError;
};
struct PoleInCoefficients : AskeyError {
  using AskeyError::AskeyError;
};
struct LowerParameterPole : AskeyError {
  using AskeyError::AskeyError;
};
struct UnknownVariant : AskeyError {
  using AskeyError::AskeyError;
};
struct UnknownFamily : AskeyError {
  using AskeyError::AskeyError;
};
struct RealizationMismatch : AskeyError {
  using AskeyError::AskeyError;
};
struct SingularBasisChange : AskeyError {
  using AskeyError::AskeyError;
};
struct DivisionByZeroInCoefficient : AskeyError {
  using AskeyError::AskeyError;
};

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Gaussian rational: re + i*im with exact rational parts.
struct GRat {
  Rat re, im;

  GRat() : re(0), im(0) {}
  GRat(long v) : re(v), im(0) {}
  GRat(const Rat& r) : re(r), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i_unit() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat conj() const { return GRat(re, -im); }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GRat inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw DivisionByZeroInCoefficient("GRat: division by zero");
    return GRat(re / n, -im / n);
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(const GRat& a, const GRat& b) { return a * b.inv(); }
  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string s = re == 0 ? "" : re.get_str();
    std::string ims = im.get_str();
    if (!s.empty() && im > 0) s += "+";
    return s + ims + "*i";
  }
};

inline GRat grat(long num, long den = 1) { return GRat(rat(num, den)); }

inline GRat pow_int(const GRat& a, long e) {
  if (e < 0) return pow_int(a.inv(), -e);
  GRat r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Laurent polynomial in the gauge parameter delta over GRat.
// Invariant: no stored zero coefficients.
struct Laurent {
  std::map<int, GRat> terms;  // exponent -> coefficient

  Laurent() = default;
  Laurent(long v) {
    if (v != 0) terms[0] = GRat(v);
  }
  Laurent(const GRat& c) {
    if (!c.is_zero()) terms[0] = c;
  }
  Laurent(const Rat& r) {
    if (r != 0) terms[0] = GRat(r);
  }

  static Laurent delta(int e = 1, GRat c = GRat(1)) {
    Laurent l;
    if (!c.is_zero()) l.terms[e] = std::move(c);
    return l;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0);
  }
  bool is_monomial() const { return terms.size() == 1; }

  int min_exp() const { return terms.empty() ? 0 : terms.begin()->first; }
  int max_exp() const { return terms.empty() ? 0 : terms.rbegin()->first; }

  GRat coeff(int e) const {
    auto it = terms.find(e);
    return it == terms.end() ? GRat(0) : it->second;
  }

  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms) {
      auto it = terms.find(e);
      if (it == terms.end()) {
        terms.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, ca] : a.terms)
      for (auto& [eb, cb] : b.terms) {
        GRat p = ca * cb;
        if (p.is_zero()) continue;
        auto it = r.terms.find(ea + eb);
        if (it == r.terms.end()) {
          r.terms.emplace(ea + eb, std::move(p));
        } else {
          it->second += p;
          if (it->second.is_zero()) r.terms.erase(it);
        }
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

  // Exact division; throws when the quotient is not a Laurent polynomial.
  Laurent div_exact(const Laurent& d) const {
    if (d.is_zero())
      throw DivisionByZeroInCoefficient("Laurent: division by zero");
    if (d.is_monomial()) {
      Laurent r;
      int de = d.terms.begin()->first;
      GRat dc = d.terms.begin()->second.inv();
      for (auto& [e, c] : terms) r.terms[e - de] = c * dc;
      return r;
    }
    // long division from the top; works when d divides *this exactly
    Laurent rem = *this, quot;
    int dtop = d.max_exp();
    GRat dlead = d.terms.rbegin()->second;
    long steps = (long)(max_exp() - min_exp()) + (d.max_exp() - d.min_exp()) + 2;
    while (!rem.is_zero()) {
      if (--steps < 0) throw AskeyError("Laurent: inexact division");
      int rtop = rem.max_exp();
      GRat f = rem.terms.rbegin()->second / dlead;
      Laurent t = Laurent::delta(rtop - dtop, f);
      quot += t;
      rem -= t * d;
    }
    return quot;
  }

  // delta -> delta^s (gauge refinement)
  Laurent gauge_scaled(int s) const {
    Laurent r;
    for (auto& [e, c] : terms) r.terms[e * s] = c;
    return r;
  }

  // The delta -> 0 limit: the delta^0 coefficient when no negative powers.
  GRat limit() const {
    if (!terms.empty() && terms.begin()->first < 0)
      throw NegativePowers("laurent_limit: negative powers of delta");
    return coeff(0);
  }
  bool limit_exists() const { return terms.empty() || terms.begin()->first >= 0; }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [e, c] : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      if (e != 0) s += "*d^" + std::to_string(e);
    }
    return s;
  }
};

inline Laurent pow_int(const Laurent& a, long e) {
  if (e < 0) {
    if (!a.is_monomial()) throw AskeyError("Laurent: negative power of non-unit");
    auto& [ex, c] = *a.terms.begin();
    return pow_int(Laurent::delta(-ex, c.inv()), -e);
  }
  Laurent r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Formal quotient of Laurent polynomials in delta. Division by lower
// Pochhammer factors at Laurent-bound parameters lives here; the delta -> 0
// limit is exact valuation comparison (no series expansion needed).
struct LRat {
  Laurent num, den;

  LRat() : num(), den(1) {}
  LRat(long v) : num(v), den(1) {}
  LRat(const GRat& c) : num(c), den(1) {}
  LRat(Laurent n) : num(std::move(n)), den(1) {}
  LRat(Laurent n, Laurent d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZeroInCoefficient("LRat: zero denominator");
    strip();
  }

  void strip() {
    if (num.is_zero()) {
      den = Laurent(1);
      return;
    }
    int sh = den.min_exp();
    GRat lead = den.terms.begin()->second;
    Laurent unit = Laurent::delta(-sh, lead.inv());
    num *= unit;
    den *= unit;
  }

  bool is_zero() const { return num.is_zero(); }

  LRat operator-() const {
    LRat r = *this;
    r.num = -r.num;
    return r;
  }
  friend LRat operator+(const LRat& a, const LRat& b) {
    if (a.den == b.den) return LRat(a.num + b.num, a.den);
    return LRat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend LRat operator-(const LRat& a, const LRat& b) { return a + (-b); }
  LRat& operator+=(const LRat& o) { return *this = *this + o; }
  LRat& operator-=(const LRat& o) { return *this = *this - o; }
  friend LRat operator*(const LRat& a, const LRat& b) {
    return LRat(a.num * b.num, a.den * b.den);
  }
  LRat& operator*=(const LRat& o) { return *this = *this * o; }
  friend LRat operator/(const LRat& a, const LRat& b) {
    if (b.is_zero()) throw DivisionByZeroInCoefficient("LRat: division by zero");
    return LRat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const LRat& a, const LRat& b) {
    return a.num * b.den == b.num * a.den;
  }

  // delta -> 0 limit; exists iff val(num) >= val(den).
  GRat limit() const {
    if (num.is_zero()) return GRat(0);
    int vn = num.min_exp(), vd = den.min_exp();
    if (vn < vd) throw NegativePowers("LRat limit: negative delta order");
    if (vn > vd) return GRat(0);
    return num.terms.begin()->second / den.terms.begin()->second;
  }
  bool limit_exists() const {
    return num.is_zero() || num.min_exp() >= den.min_exp();
  }
};

// --- small scalar trait helpers shared by the templated containers ---

template <class T>
inline bool is_zero(const T& v) {
  return v.is_zero();
}
inline bool is_zero(const Rat& v) { return v == 0; }

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<GRat> {
  static GRat from_grat(const GRat& g) { return g; }
  static GRat div(const GRat& a, const GRat& b) { return a / b; }
};
template <>
struct ScalarOps<Laurent> {
  static Laurent from_grat(const GRat& g) { return Laurent(g); }
  static Laurent div(const Laurent& a, const Laurent& b) {
    return a.div_exact(b);
  }
};
template <>
struct ScalarOps<LRat> {
  static LRat from_grat(const GRat& g) { return LRat(g); }
  static LRat div(const LRat& a, const LRat& b) { return a / b; }
};

// pochhammer (a)_n = a(a+1)...(a+n-1); returns 1 for n = 0.
template <class T>
inline T pochhammer(const T& a, long n) {
  if (n < 0) throw AskeyError("pochhammer: negative n");
  T r(1);
  for (long k = 0; k < n; ++k) r = r * (a + T(k));
  return r;
}

}  // namespace askey
