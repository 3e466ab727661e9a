#pragma once
// Univariate polynomials, rational functions (over the Gaussian rationals),
// and exact dense matrices over an arbitrary scalar ring.

#include <algorithm>
#include <functional>
#include <vector>

#include "askey/exact.hpp"

namespace askey {

template <class T>
struct Poly {
  std::vector<T> c;  // c[k] is the coefficient of x^k

  Poly() = default;
  Poly(T v) {
    if (!askey::is_zero(v)) c.push_back(std::move(v));
  }
  Poly(long v) : Poly(T(v)) {}
  static Poly x(int deg = 1, T coeff = T(1)) {
    Poly p;
    if (!askey::is_zero(coeff)) {
      p.c.assign(deg + 1, T(0));
      p.c[deg] = std::move(coeff);
    }
    return p;
  }

  void trim() {
    while (!c.empty() && askey::is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero poly
  T coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : T(0); }
  const T& lead() const { return c.back(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
  }

  T eval(const T& x) const {
    T r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
  Poly derivative() const {
    Poly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) r.c[k - 1] = c[k] * T((long)k);
    r.trim();
    return r;
  }
  // p(q(x))
  Poly compose(const Poly& q) const {
    Poly r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + Poly(*it);
    return r;
  }
};

// Polynomial gcd over a field scalar (GRat). Result is monic.
inline Poly<GRat> poly_gcd(Poly<GRat> a, Poly<GRat> b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    // a mod b
    Poly<GRat> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      GRat f = r.lead() / b.lead();
      int sh = r.degree() - b.degree();
      Poly<GRat> t = Poly<GRat>::x(sh, f);
      r -= t * b;
      r.trim();
    }
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    GRat inv = a.lead().inv();
    for (auto& v : a.c) v = v * inv;
  }
  return a;
}

inline Poly<GRat> poly_divexact(const Poly<GRat>& a, const Poly<GRat>& b) {
  Poly<GRat> r = a, q;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    GRat f = r.lead() / b.lead();
    int sh = r.degree() - b.degree();
    Poly<GRat> t = Poly<GRat>::x(sh, f);
    q += t;
    r -= t * b;
    r.trim();
  }
  if (!r.is_zero()) throw AskeyError("poly_divexact: not divisible");
  return q;
}

// Rational function num/den over GRat, kept gcd-reduced with monic denominator.
struct RatFun {
  Poly<GRat> num, den;

  RatFun() : num(), den(GRat(1)) {}
  RatFun(Poly<GRat> n) : num(std::move(n)), den(GRat(1)) {}
  RatFun(Poly<GRat> n, Poly<GRat> d) : num(std::move(n)), den(std::move(d)) {
    reduce();
  }
  RatFun(GRat v) : num(Poly<GRat>(std::move(v))), den(GRat(1)) {}
  RatFun(long v) : num(Poly<GRat>(GRat(v))), den(GRat(1)) {}

  static RatFun x() { return RatFun(Poly<GRat>::x()); }

  void reduce() {
    num.trim();
    den.trim();
    if (den.is_zero()) throw DivisionByZeroInCoefficient("RatFun: zero denominator");
    if (num.is_zero()) {
      den = Poly<GRat>(GRat(1));
      return;
    }
    Poly<GRat> g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_divexact(num, g);
      den = poly_divexact(den, g);
    }
    GRat inv = den.lead().inv();
    for (auto& v : num.c) v = v * inv;
    for (auto& v : den.c) v = v * inv;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.degree() == 0; }

  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZeroInCoefficient("RatFun: division by zero");
    return RatFun(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num * b.den == b.num * a.den;
  }
  RatFun derivative() const {
    return RatFun(num.derivative() * den - num * den.derivative(), den * den);
  }
  GRat eval(const GRat& x) const {
    GRat d = den.eval(x);
    if (d.is_zero()) throw DivisionByZeroInCoefficient("RatFun: pole at eval point");
    return num.eval(x) / d;
  }
  // f(x + s)
  RatFun shifted(const GRat& s) const {
    Poly<GRat> lin;
    lin.c = {s, GRat(1)};
    return RatFun(num.compose(lin), den.compose(lin));
  }
};

template <class T>
struct Mat {
  int n = 0, m = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int rows, int cols) : n(rows), m(cols), a(rows * cols, T(0)) {}
  static Mat identity(int k) {
    Mat r(k, k);
    for (int i = 0; i < k; ++i) r(i, i) = T(1);
    return r;
  }
  T& operator()(int i, int j) { return a[i * m + j]; }
  const T& operator()(int i, int j) const { return a[i * m + j]; }

  bool is_zero() const {
    for (auto& v : a)
      if (!askey::is_zero(v)) return false;
    return true;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a) v = -v;
    return r;
  }
  Mat& operator+=(const Mat& o) {
    if (n != o.n || m != o.m) throw DimMismatch("Mat: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) { return *this += -o; }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.m != y.n) throw DimMismatch("Mat: product size mismatch");
    Mat r(x.n, y.m);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.m; ++k) {
        if (askey::is_zero(x(i, k))) continue;
        for (int j = 0; j < y.m; ++j) {
          if (askey::is_zero(y(k, j))) continue;
          r(i, j) += x(i, k) * y(k, j);
        }
      }
    return r;
  }
  Mat scaled(const T& s) const {
    Mat r = *this;
    for (auto& v : r.a) v = v * s;
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.m == y.m && x.a == y.a;
  }
  T trace() const {
    T t(0);
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }
};

template <class T>
Mat<T> commutator(const Mat<T>& A, const Mat<T>& B) {
  return A * B - B * A;
}
template <class T>
Mat<T> symmetrize2(const Mat<T>& A, const Mat<T>& B) {
  return A * B + B * A;
}
template <class T>
Mat<T> symmetrize3(const Mat<T>& A, const Mat<T>& B, const Mat<T>& C) {
  return A * (B * C + C * B) + B * (A * C + C * A) + C * (A * B + B * A);
}

// Solve M x = rhs over GRat by Gaussian elimination. M must be square and
// nonsingular.
inline std::vector<GRat> solve_linear(Mat<GRat> M, std::vector<GRat> rhs) {
  int n = M.n;
  if (M.m != n || (int)rhs.size() != n) throw DimMismatch("solve_linear");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw AskeyError("solve_linear: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(col, j));
      std::swap(rhs[piv], rhs[col]);
    }
    GRat inv = M(col, col).inv();
    for (int j = col; j < n; ++j) M(col, j) *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || M(r, col).is_zero()) continue;
      GRat f = M(r, col);
      for (int j = col; j < n; ++j) M(r, j) -= f * M(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// Least structured overdetermined exact solve: rows x cols with rows >= cols.
// Throws if inconsistent or rank-deficient.
inline std::vector<GRat> solve_overdetermined(Mat<GRat> M,
                                              std::vector<GRat> rhs) {
  int rows = M.n, cols = M.m;
  if ((int)rhs.size() != rows) throw DimMismatch("solve_overdetermined");
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!M(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < cols; ++j) std::swap(M(piv, j), M(rank, j));
      std::swap(rhs[piv], rhs[rank]);
    }
    GRat inv = M(rank, col).inv();
    for (int j = 0; j < cols; ++j) M(rank, j) *= inv;
    rhs[rank] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M(r, col).is_zero()) continue;
      GRat f = M(r, col);
      for (int j = 0; j < cols; ++j) M(r, j) -= f * M(rank, j);
      rhs[r] -= f * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < cols) throw AskeyError("solve_overdetermined: rank deficient");
  for (int r = rank; r < rows; ++r)
    if (!rhs[r].is_zero())
      throw AskeyError("solve_overdetermined: inconsistent system");
  std::vector<GRat> x(cols, GRat(0));
  for (int k = 0; k < rank; ++k) x[pivot_col[k]] = rhs[k];
  return x;
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier (exact; only
// divisions by integers occur).
inline Poly<GRat> char_poly(const Mat<GRat>& A) {
  int n = A.n;
  Poly<GRat> p;
  p.c.assign(n + 1, GRat(0));
  p.c[n] = GRat(1);
  Mat<GRat> M = Mat<GRat>::identity(n);
  GRat c(1);
  for (int k = 1; k <= n; ++k) {
    M = A * M;
    c = M.trace() * GRat(rat(-1, k));
    p.c[n - k] = c;
    for (int i = 0; i < n; ++i) M(i, i) += c;
  }
  return p;
}

}  // namespace askey
