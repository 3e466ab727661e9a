#pragma once
// Askey-scheme families as terminating hypergeometric series: exact values
// (over GRat or over Laurent quotients for contraction limits), exact
// coefficient lists in the natural variable, three-term recurrences, and the
// classical eigen-operators.
//
// family_value returns the hypergeometric-normalized form (value 1 at the
// natural special point); family_value_prefactored carries the classical
// prefactor (w_n for Wilson, (alpha+1)_n/n! for Jacobi/Laguerre, (2b+1)_k/k!
// for Gegenbauer, ((2l)_n/n!)e^{i n phi} for Meixner-Pollaczek, H_n itself).

#include "askey/hyp.hpp"
#include "askey/operators.hpp"

namespace askey {

enum class Family {
  Wilson,
  Racah,
  ContDualHahn,
  ContHahn,
  Hahn,
  DualHahn,
  Jacobi,
  PseudoJacobi,
  Meixner,
  Krawtchouk,
  MeixnerPollaczek,
  Charlier,
  Laguerre,
  Gegenbauer,
  Hermite,
  GenBessel,
  Tchebicheff
};

const char* family_name(Family f);
Family family_from_name(const std::string& s);
int family_arity(Family f);
const char* family_variable(Family f);  // natural variable convention

template <class T>
T pow_int_generic(const T& a, long e) {
  T r(1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// Generic evaluation. `x` is the point in the family's own variable (t for
// Wilson-type families; the natural polynomial variable is t^2 / lambda(x)).
template <class T>
T family_value(Family f, long n, const std::vector<T>& p, const T& x) {
  using std::function;
  auto lin_shape = [&](std::vector<T> upper, std::vector<T> lower,
                       function<T(long)> fq, T fs) {
    T sum(0), term(1);
    for (long k = 0;; ++k) {
      sum += term;
      if (k == n) break;
      T num(1);
      bool dead = false;
      for (auto& u : upper) {
        T f2 = u + T(k);
        if (askey::is_zero(f2)) {
          dead = true;
          break;
        }
        num = num * f2;
      }
      if (dead) break;
      T den(1);
      for (auto& l : lower) {
        T f2 = l + T(k);
        if (askey::is_zero(f2))
          throw LowerParameterPole("lower parameter pole before termination");
        den = den * f2;
      }
      den = den * T(k + 1);
      term = ScalarOps<T>::div(term * num * (fq(k) + fs * x), den);
    }
    return sum;
  };
  T mn = T(-(long)n);
  switch (f) {
    case Family::Wilson: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      T s = a + b + c + d;
      return hyp_wilson_shape_eval<T>(
          {mn, s + T(n - 1)}, {a + b, a + c, a + d},
          [&](long j) { T aj = a + T(j); return aj * aj; }, x * x, n);
    }
    case Family::Racah: {
      const T &al = p[0], &be = p[1], &ga = p[2], &de = p[3];
      T c1 = ga + de + T(1);
      return hyp_wilson_shape_eval<T>(
          {mn, al + be + T(n + 1)}, {al + T(1), be + de + T(1), ga + T(1)},
          [&](long j) { return T(j) * (T(j) + c1); }, x * (x + c1), n);
    }
    case Family::ContDualHahn: {
      const T &a = p[0], &b = p[1], &c = p[2];
      return hyp_wilson_shape_eval<T>(
          {mn}, {a + b, a + c},
          [&](long j) { T aj = a + T(j); return aj * aj; }, x * x, n);
    }
    case Family::ContHahn: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      T s = a + b + c + d;
      T i = T(GRat::i_unit());
      return lin_shape({mn, s + T(n - 1)}, {a + c, a + d},
                       [&](long j) { return a + T(j); }, i);
    }
    case Family::Hahn: {
      const T &al = p[0], &be = p[1], &N = p[2];
      return lin_shape({mn, al + be + T(n + 1)}, {al + T(1), -N},
                       [&](long j) { return T(j); }, T(-1));
    }
    case Family::DualHahn: {
      const T &ga = p[0], &de = p[1], &N = p[2];
      T c1 = ga + de + T(1);
      return hyp_wilson_shape_eval<T>(
          {mn}, {ga + T(1), -N},
          [&](long j) { return T(j) * (T(j) + c1); }, x * (x + c1), n);
    }
    case Family::Jacobi:
    case Family::PseudoJacobi: {
      const T &al = p[0], &be = p[1];
      HypSeriesSpec<T> s{{mn, al + be + T(n + 1)},
                         {al + T(1)},
                         ScalarOps<T>::div(T(1) - x, T(2)),
                         n};
      return hyp_terminating_eval(s);
    }
    case Family::Meixner: {
      const T &be = p[0], &c = p[1];
      T z = T(1) - ScalarOps<T>::div(T(1), c);
      return lin_shape({mn}, {be}, [&](long j) { return T(j) * z; }, -z);
    }
    case Family::Krawtchouk: {
      const T &pp = p[0], &N = p[1];
      T z = ScalarOps<T>::div(T(1), pp);
      return lin_shape({mn}, {-N}, [&](long j) { return T(j) * z; }, -z);
    }
    case Family::MeixnerPollaczek: {
      const T &la = p[0], &co = p[1], &si = p[2];
      T i = T(GRat::i_unit());
      T emi2 = (co - i * si) * (co - i * si);  // e^{-2 i phi}
      T z = T(1) - emi2;
      return lin_shape({mn}, {la * T(2)},
                       [&](long j) { return (la + T(j)) * z; }, i * z);
    }
    case Family::Charlier: {
      const T& a = p[0];
      T z = ScalarOps<T>::div(T(-1), a);
      return lin_shape({mn}, {}, [&](long j) { return T(j) * z; }, -z);
    }
    case Family::Laguerre: {
      const T& al = p[0];
      HypSeriesSpec<T> s{{mn}, {al + T(1)}, x, n};
      return hyp_terminating_eval(s);
    }
    case Family::Gegenbauer: {
      const T& be = p[0];
      HypSeriesSpec<T> s{{mn, be * T(2) + T(n + 1)},
                         {be + T(1)},
                         ScalarOps<T>::div(T(1) - x, T(2)),
                         n};
      return hyp_terminating_eval(s);
    }
    case Family::Hermite: {
      // H_n(x)/prefactorless form is H_n itself; normalized = H_n / (2^n)
      // is not standard, so family_value(Hermite) = H_n(x).
      T sum(0);
      Rat fact_n = 1;
      for (long j = 2; j <= n; ++j) fact_n *= j;
      for (long m2 = 0; 2 * m2 <= n; ++m2) {
        Rat c = fact_n;
        Rat fm = 1, f2 = 1;
        for (long j = 2; j <= m2; ++j) fm *= j;
        for (long j = 2; j <= n - 2 * m2; ++j) f2 *= j;
        c /= fm * f2;
        if (m2 % 2) c = -c;
        T mono = pow_int_generic(x * T(2), n - 2 * m2);
        sum += mono * T(GRat(c));
      }
      return sum;
    }
    case Family::GenBessel: {
      const T& a = p[0];
      HypSeriesSpec<T> s{{mn, a + T(n - 1)}, {}, -x, n};
      return hyp_terminating_eval(s);
    }
    case Family::Tchebicheff: {
      HypSeriesSpec<T> s{{mn, T(n)},
                         {T(GRat(rat(1, 2)))},
                         ScalarOps<T>::div(T(1) - x, T(2)),
                         n};
      return hyp_terminating_eval(s);
    }
  }
  throw UnknownFamily("family_value");
}

// Classical prefactor multiplying the normalized form.
template <class T>
T family_prefactor(Family f, long n, const std::vector<T>& p) {
  auto over_fact = [&](T x) {
    Rat fn = 1;
    for (long j = 2; j <= n; ++j) fn *= j;
    return ScalarOps<T>::div(x, T(GRat(fn)));
  };
  switch (f) {
    case Family::Wilson: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
    }
    case Family::Jacobi:
    case Family::PseudoJacobi:
      return over_fact(pochhammer(p[0] + T(1), n));
    case Family::Laguerre:
      return over_fact(pochhammer(p[0] + T(1), n));
    case Family::Gegenbauer:
      return over_fact(pochhammer(p[0] * T(2) + T(1), n));
    case Family::MeixnerPollaczek: {
      const T &la = p[0], &co = p[1], &si = p[2];
      T ei = co + T(GRat::i_unit()) * si;
      return over_fact(pochhammer(la * T(2), n) * pow_int_generic(ei, n));
    }
    default:
      return T(1);
  }
}

template <class T>
T family_value_prefactored(Family f, long n, const std::vector<T>& p,
                           const T& x) {
  return family_prefactor(f, n, p) * family_value(f, n, p, x);
}

// Exact coefficient list of the normalized family in its natural variable
// (t^2 for Wilson/ContDualHahn, lambda(x) for Racah/DualHahn, x otherwise).
Poly<GRat> family_poly(Family f, long n, const std::vector<GRat>& p);

// Three-term recurrence in the natural variable V:
//   V * p_n = up * p_{n+1} + diag * p_n + down * p_{n-1}
// in the normalized convention (prefactored for MeixnerPollaczek / Hermite).
struct ThreeTerm {
  GRat up, diag, down;
};
ThreeTerm recurrence_coeffs(Family f, long n, const std::vector<GRat>& p);

// Classical second-order eigen-operator in the family's own variable and the
// matching eigenvalue; only for the differential families.
PolyOpQ family_eigenop(Family f, const std::vector<GRat>& p);
GRat family_eigenvalue(Family f, long n, const std::vector<GRat>& p);

// Expand q (polynomial in the natural variable) in the family basis
// {p_0, ..., p_k}: exact, by repeated leading-term elimination.
std::vector<GRat> expand_in_family(Family f, const std::vector<GRat>& p,
                                   Poly<GRat> q);

// Wilson tau*tau difference operator: exact pointwise application at rational
// t, for a callable F of t (F must be defined at t +- 1 and t +- 1/2... the
// needed shifted points).
GRat wilson_tau_star_tau(const std::vector<GRat>& abcd,
                         const std::function<GRat(const GRat&)>& F,
                         const GRat& t);

// Same with the dual Hahn tau'_* tau' of the first E1 model: tau' = tau and
// tau'_* carries beta1 and the (a',b',c') triple.
GRat dualhahn_tau_star_tau(const GRat& beta1, const std::vector<GRat>& abc,
                           const std::function<GRat(const GRat&)>& F,
                           const GRat& t);

}  // namespace askey
