#include "askey/identities.hpp"

namespace askey {

GRat s3_restricted_wilson(long n, long m, const GRat& alpha, const GRat& t) {
  // Phi_n(t^2) = 4F3(-n, n, -(4m+2alpha+1)/4 - t, -(4m+2alpha+1)/4 + t;
  //                  -m, -m-alpha, 1/2; 1)
  GRat wa = -(GRat(4 * m) + GRat(2) * alpha + GRat(1)) / GRat(4);
  HypSeriesSpec<GRat> s;
  long term = n >= 0 ? n : -n;  // termination from whichever of (-n, n) is <= 0
  s.upper = {GRat(-n), GRat(n), wa - t, wa + t};
  s.lower = {GRat(-m), GRat(-m) - alpha, grat(1, 2)};
  s.argument = GRat(1);
  s.n = term;
  return hyp_terminating_eval(s);
}

IdentityReport verify_gauge_s3(long M, const GRat& alpha, long N) {
  IdentityReport rep{"gauge_S3", true, 0};
  if (M % 2 != 0) throw AskeyError("gauge_S3 needs even M");
  long m = M / 2;
  for (long k = 0; k <= m; ++k) {
    GRat t = alpha / GRat(2) + grat(1, 4) + GRat(m) - GRat(k);
    GRat lhs = s3_restricted_wilson(-m, m, alpha, t) *
               s3_special_dual_hahn<GRat>(N, M, alpha,
                                          GRat(2) * t - alpha - grat(1, 2));
    GRat rhs = s3_restricted_wilson(N - m, m, alpha, t);
    rep.cases += 1;
    if (!(lhs == rhs)) rep.holds = false;
  }
  return rep;
}

IdentityReport verify_singh_limit(long m, const GRat& alpha, long n) {
  IdentityReport rep{"singh_limit", true, 0};
  for (long tt = -m; tt <= m; ++tt) {
    GRat t(tt);
    // lhs: 4F3(-n, n+alpha+1/2, -m-t, -m+t; -m, 1/2-m, alpha+1; 1)
    HypSeriesSpec<GRat> L;
    L.upper = {GRat(-n), GRat(n) + alpha + grat(1, 2), GRat(-m) - t,
               GRat(-m) + t};
    L.lower = {GRat(-m), grat(1, 2) - GRat(m), alpha + GRat(1)};
    L.argument = GRat(1);
    L.n = n;
    GRat lhs = hyp_terminating_eval(L);
    // rhs: 3F2(-2n, 2n+2alpha+1, -t-m; alpha+1, -2m; 1)
    HypSeriesSpec<GRat> R;
    R.upper = {GRat(-2 * n), GRat(2 * n) + GRat(2) * alpha + GRat(1),
               -t - GRat(m)};
    R.lower = {alpha + GRat(1), GRat(-2 * m)};
    R.argument = GRat(1);
    R.n = 2 * n;
    GRat rhs = hyp_terminating_eval(R);
    rep.cases += 1;
    if (!(lhs == rhs)) rep.holds = false;
  }
  return rep;
}

IdentityReport verify_gegenbauer_quadratic(long k, const GRat& beta) {
  IdentityReport rep{"gegenbauer_quadratic", true, 0};
  // lhs as polynomial in t: 2F1(-k, beta+k+1/2; beta+1; 1-t^2)
  Poly<GRat> one_minus_t2;
  one_minus_t2.c = {grat(1), grat(0), grat(-1)};
  Poly<GRat> lhs = hyp_poly({GRat(-k), beta + GRat(k) + grat(1, 2)},
                            {beta + GRat(1)}, one_minus_t2, k);
  // rhs: 2F1(-2k, 2beta+1+2k; beta+1; (1-t)/2)
  Poly<GRat> half_one_minus_t;
  half_one_minus_t.c = {grat(1, 2), grat(-1, 2)};
  Poly<GRat> rhs =
      hyp_poly({GRat(-2 * k), GRat(2) * beta + GRat(1) + GRat(2 * k)},
               {beta + GRat(1)}, half_one_minus_t, 2 * k);
  rep.cases = 1;
  rep.holds = (lhs == rhs);
  return rep;
}

}  // namespace askey
