#pragma once
// The special-function identities exposed by the S9 -> S3 contraction and the
// E1 -> E6 quadratic transformation, verified exactly.

#include "askey/families.hpp"

namespace askey {

enum class IdentityName { gauge_S3, singh_limit, gegenbauer_quadratic };

struct IdentityReport {
  std::string name;
  bool holds = false;
  int cases = 0;
};

// Phi_{-M/2}(t^2) f_{N,M}(t^2) = Phi_{-M/2+N}(t^2) on the spectrum
// t = alpha/2 + 1/4 + M/2 - k, k = 0..M/2 (M even).
IdentityReport verify_gauge_s3(long M, const GRat& alpha, long N);

// 4F3(-n, n+alpha+1/2, -m-t, -m+t; -m, 1/2-m, alpha+1; 1)
//   = 3F2(-2n, 2n+2alpha+1, -t-m; alpha+1, -2m; 1) for t = -m..m.
IdentityReport verify_singh_limit(long m, const GRat& alpha, long n);

// 2F1(-k, beta+k+1/2; beta+1; 1-t^2) = 2F1(-2k, 2beta+1+2k; beta+1; (1-t)/2)
// as an exact polynomial identity in t.
IdentityReport verify_gegenbauer_quadratic(long k, const GRat& beta);

// restricted Wilson basis of the S9 -> S3 contraction (upper pair (-n, n))
GRat s3_restricted_wilson(long n, long m, const GRat& alpha, const GRat& t);

// special dual Hahn f_{N,M}(t^2) with its Pochhammer prefactor; s = 2t-alpha-1/2
template <class T>
T s3_special_dual_hahn(long N, long M, const T& alpha, const T& s) {
  T pref = ScalarOps<T>::div(pochhammer(alpha + T(1), N),
                             pochhammer(-alpha - T(M), N));
  T c1 = T(2) * alpha + T(1);
  T val = hyp_wilson_shape_eval<T>(
      {T(-N)}, {T(-M), T(1) + alpha},
      [&](long j) { return T(j) * (T(j) + c1); }, s * (s + c1), N);
  return pref * val;
}

}  // namespace askey
