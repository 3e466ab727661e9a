#pragma once
// Terminating hypergeometric series with exact evaluation. Two shapes cover
// every family in the catalog:
//   (A) generalized pFq with scalar parameters and argument,
//   (B) Wilson-shape series whose k-th term carries prod_{j<k}(q_j - V) in
//       the natural variable V (t^2 for Wilson, lambda(x) for Racah-type).

#include "askey/algebra.hpp"

namespace askey {

template <class T>
struct HypSeriesSpec {
  std::vector<T> upper;
  std::vector<T> lower;
  T argument = T(0);
  long n = 0;  // termination index; the sum has at most n+1 terms
};

// Exact finite sum. An upper parameter hitting zero ends the series early; a
// lower parameter hitting zero before that is an error.
template <class T>
T hyp_terminating_eval(const HypSeriesSpec<T>& s) {
  if (s.n < 0) throw AskeyError("hyp: negative termination index");
  T sum(0), term(1);
  for (long k = 0;; ++k) {
    sum += term;
    if (k == s.n) break;
    T num(1);
    bool dead = false;
    for (auto& u : s.upper) {
      T f = u + T(k);
      if (askey::is_zero(f)) {
        dead = true;
        break;
      }
      num = num * f;
    }
    if (dead) break;
    T den(1);
    for (auto& l : s.lower) {
      T f = l + T(k);
      if (askey::is_zero(f))
        throw LowerParameterPole("lower parameter pole before termination");
      den = den * f;
    }
    den = den * T(k + 1);
    term = ScalarOps<T>::div(term * num * s.argument, den);
  }
  return sum;
}

// Wilson-shape: sum_k [prod (u_i)_k / (prod (l_j)_k k!)] * prod_{j<k}(q_j - V).
// q_j is supplied as a callback so families can use (a+j)^2 or j(j+c).
template <class T>
T hyp_wilson_shape_eval(const std::vector<T>& upper, const std::vector<T>& lower,
                        const std::function<T(long)>& q, const T& V, long n) {
  T sum(0), term(1);
  for (long k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    T num(1);
    bool dead = false;
    for (auto& u : upper) {
      T f = u + T(k);
      if (askey::is_zero(f)) {
        dead = true;
        break;
      }
      num = num * f;
    }
    if (dead) break;
    T den(1);
    for (auto& l : lower) {
      T f = l + T(k);
      if (askey::is_zero(f))
        throw LowerParameterPole("lower parameter pole before termination");
      den = den * f;
    }
    den = den * T(k + 1);
    term = ScalarOps<T>::div(term * num * (q(k) - V), den);
  }
  return sum;
}

// Wilson-shape as an exact polynomial in the natural variable V (over GRat).
inline Poly<GRat> hyp_wilson_shape_poly(const std::vector<GRat>& upper,
                                        const std::vector<GRat>& lower,
                                        const std::function<GRat(long)>& q,
                                        long n) {
  Poly<GRat> sum, term(GRat(1));
  for (long k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    GRat num(1);
    bool dead = false;
    for (auto& u : upper) {
      GRat f = u + GRat(k);
      if (f.is_zero()) {
        dead = true;
        break;
      }
      num = num * f;
    }
    if (dead) break;
    GRat den(1);
    for (auto& l : lower) {
      GRat f = l + GRat(k);
      if (f.is_zero())
        throw LowerParameterPole("lower parameter pole before termination");
      den = den * f;
    }
    den = den * GRat(k + 1);
    Poly<GRat> factor;
    factor.c = {q(k), GRat(-1)};  // q_k - V
    term = term * factor * (num / den);
  }
  return sum;
}

// pFq as an exact polynomial in x when the argument is arg_poly(x).
inline Poly<GRat> hyp_poly(const std::vector<GRat>& upper,
                           const std::vector<GRat>& lower,
                           const Poly<GRat>& arg_poly, long n) {
  Poly<GRat> sum, term(GRat(1));
  for (long k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    GRat num(1);
    bool dead = false;
    for (auto& u : upper) {
      GRat f = u + GRat(k);
      if (f.is_zero()) {
        dead = true;
        break;
      }
      num = num * f;
    }
    if (dead) break;
    GRat den(1);
    for (auto& l : lower) {
      GRat f = l + GRat(k);
      if (f.is_zero())
        throw LowerParameterPole("lower parameter pole before termination");
      den = den * f;
    }
    den = den * GRat(k + 1);
    term = term * arg_poly * (num / den);
  }
  return sum;
}

}  // namespace askey
