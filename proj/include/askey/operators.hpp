#pragma once
// Exact operator calculus: one-variable difference/differential operators
// acting on polynomials or grids, and ambient multivariate operators for the
// 2D realizations. Composition is realized through application only.

#include <functional>
#include <variant>

#include "askey/algebra.hpp"
#include "askey/multivar.hpp"

namespace askey {

// One term of a 1-variable operator: coeff(x) * d^k/dx^k  or  coeff(x) * E_x^s
// with E_x^s f(x) = f(x + s*unit). Shift amounts are integers in units of the
// operator's shift unit (1/2 for Wilson-type operators in t).
template <class T>
struct OpTerm {
  RatFun coeff_ratfun;      // used when T = GRat (may have poles in x)
  Poly<T> coeff_poly;       // used when coefficient is polynomial
  bool poly_coeff = true;
  bool is_shift = false;    // false: derivative of order k; true: shift by s
  int k = 0;                // derivative order
  int s = 0;                // shift in units
};

template <class T>
struct PolyOp {
  std::vector<OpTerm<T>> terms;
  Rat shift_unit = Rat(1);  // grid step for shift terms

  static PolyOp mult(Poly<T> p) {
    PolyOp op;
    OpTerm<T> t;
    t.coeff_poly = std::move(p);
    t.k = 0;
    op.terms.push_back(std::move(t));
    return op;
  }
  static PolyOp deriv(int order, Poly<T> coeff) {
    PolyOp op;
    OpTerm<T> t;
    t.coeff_poly = std::move(coeff);
    t.k = order;
    op.terms.push_back(std::move(t));
    return op;
  }
  static PolyOp shift(int s, Poly<T> coeff, Rat unit = Rat(1)) {
    PolyOp op;
    op.shift_unit = std::move(unit);
    OpTerm<T> t;
    t.coeff_poly = std::move(coeff);
    t.is_shift = true;
    t.s = s;
    op.terms.push_back(std::move(t));
    return op;
  }

  PolyOp& operator+=(const PolyOp& o) {
    for (auto& t : o.terms) terms.push_back(t);
    if (o.shift_unit != Rat(1)) shift_unit = o.shift_unit;
    return *this;
  }
  friend PolyOp operator+(PolyOp a, const PolyOp& b) { return a += b; }
  PolyOp scaled(const T& s) const {
    PolyOp r = *this;
    for (auto& t : r.terms) {
      if (t.poly_coeff)
        t.coeff_poly = t.coeff_poly * s;
      else if constexpr (std::is_same_v<T, GRat>)
        t.coeff_ratfun = t.coeff_ratfun * RatFun(s);
    }
    return r;
  }

  // Exact image of a polynomial. Shift terms substitute x -> x + s*unit.
  Poly<T> apply(const Poly<T>& p) const {
    Poly<T> out;
    for (auto& t : terms) {
      if (!t.poly_coeff)
        throw AskeyError("PolyOp::apply: rational coefficient needs apply_ratfun");
      Poly<T> img;
      if (!t.is_shift) {
        img = p;
        for (int j = 0; j < t.k; ++j) img = img.derivative();
      } else {
        Poly<T> lin;  // x + s*unit
        Rat off = t.s * shift_unit;
        lin.c = {T(GRat(off)), T(1)};
        img = p.compose(lin);
      }
      out += t.coeff_poly * img;
    }
    return out;
  }
};

using PolyOpQ = PolyOp<GRat>;
using PolyOpL = PolyOp<Laurent>;

// Grid: arithmetic progression points[i] = start + i*step, all distinct.
struct GridSpec {
  std::string var = "x";
  std::vector<GRat> points;
  Rat step = Rat(1);

  static GridSpec range(GRat start, int count, Rat step_ = Rat(1)) {
    GridSpec g;
    g.step = step_;
    for (int i = 0; i < count; ++i)
      g.points.push_back(start + GRat(Rat(i) * step_));
    return g;
  }
};

// Matrix of a difference/multiplication operator in the point-evaluation
// basis. Every shift must stay inside the grid or carry a vanishing
// coefficient at the escaping endpoint (BoundaryLeak otherwise).
template <class T>
Mat<T> grid_realize(const PolyOp<T>& op, const GridSpec& grid) {
  int n = (int)grid.points.size();
  Mat<T> M(n, n);
  for (auto& t : op.terms) {
    if (!t.is_shift && t.k > 0)
      throw AskeyError("grid_realize: derivative term on a grid");
    // shift in grid indices: s * unit / step must be an integer
    Rat ratio = Rat(t.s) * op.shift_unit / grid.step;
    if (ratio.get_den() != 1)
      throw AskeyError("grid_realize: shift not commensurate with grid");
    long ds = ratio.get_num().get_si();
    for (int i = 0; i < n; ++i) {
      T c;
      if (t.poly_coeff)
        c = t.coeff_poly.eval(T(grid.points[i]));
      else if constexpr (std::is_same_v<T, GRat>)
        c = t.coeff_ratfun.eval(grid.points[i]);
      if (askey::is_zero(c)) continue;
      long j = i + ds;
      if (j < 0 || j >= n)
        throw BoundaryLeak("grid_realize: shift escapes the grid at point " +
                           std::to_string(i));
      M((int)j, i) = M((int)j, i) + c;  // column i = image of e_i
    }
  }
  return M;
}

// --- ambient (2- or 3-variable) first/second order operators ---

struct AmbientTerm {
  MRat coeff;
  Expo d{0, 0, 0};  // mixed partial orders
};

struct AmbientOp {
  std::vector<AmbientTerm> terms;

  static AmbientOp mult(MRat c) {
    AmbientOp op;
    op.terms.push_back({std::move(c), {0, 0, 0}});
    return op;
  }
  static AmbientOp partial(int k, MRat c = MRat(1)) {
    AmbientOp op;
    Expo d{0, 0, 0};
    d[k] = 1;
    op.terms.push_back({std::move(c), d});
    return op;
  }
  AmbientOp& operator+=(const AmbientOp& o) {
    for (auto& t : o.terms) terms.push_back(t);
    return *this;
  }
  friend AmbientOp operator+(AmbientOp a, const AmbientOp& b) { return a += b; }
  AmbientOp operator-() const {
    AmbientOp r = *this;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
  }
  friend AmbientOp operator-(AmbientOp a, const AmbientOp& b) {
    return a += -b;
  }
  AmbientOp scaled(const MRat& s) const {
    AmbientOp r = *this;
    for (auto& t : r.terms) t.coeff = t.coeff * s;
    return r;
  }

  MRat apply(const MRat& f) const {
    MRat out;
    for (auto& t : terms) {
      if (t.coeff.den.is_zero())
        throw DivisionByZeroInCoefficient("AmbientOp: zero coefficient denominator");
      MRat g = f;
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < t.d[k]; ++j) g = g.derivative(k);
      out = out + t.coeff * g;
    }
    return out;
  }
};

// First-order derivation D = sum coeff_k * d_k composed with itself stays
// exact; general composition of AmbientOps is realized only by application.
inline AmbientOp ambient_compose_first_order(const AmbientOp& A,
                                             const AmbientOp& B) {
  // A, B first order; returns the (second order) composition A.B as data.
  AmbientOp r;
  for (auto& ta : A.terms)
    for (auto& tb : B.terms) {
      // product rule: coeffA * d_a( coeffB * d_b f )
      // = coeffA * d_a(coeffB) * d_b f + coeffA*coeffB * d_a d_b f
      int a = -1, b = -1;
      for (int k = 0; k < 3; ++k) {
        if (ta.d[k] == 1) a = k;
        if (tb.d[k] == 1) b = k;
      }
      if (a < 0) {  // ta is multiplication
        Expo d = tb.d;
        r.terms.push_back({ta.coeff * tb.coeff, d});
        continue;
      }
      MRat dcoeff = tb.coeff.derivative(a);
      if (!dcoeff.is_zero()) r.terms.push_back({ta.coeff * dcoeff, tb.d});
      Expo d = tb.d;
      d[a] += 1;
      r.terms.push_back({ta.coeff * tb.coeff, d});
    }
  return r;
}

}  // namespace askey
