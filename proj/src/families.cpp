#include "askey/families.hpp"

#include <array>

namespace askey {

namespace {
struct FamRow {
  Family f;
  const char* name;
  int arity;
  const char* var;
};
constexpr int kFamilies = 17;
const std::array<FamRow, kFamilies>& table() {
  static const std::array<FamRow, kFamilies> t{{
      {Family::Wilson, "Wilson", 4, "t^2"},
      {Family::Racah, "Racah", 4, "lambda(x)"},
      {Family::ContDualHahn, "ContDualHahn", 3, "t^2"},
      {Family::ContHahn, "ContHahn", 4, "x"},
      {Family::Hahn, "Hahn", 3, "x"},
      {Family::DualHahn, "DualHahn", 3, "lambda(x)"},
      {Family::Jacobi, "Jacobi", 2, "x"},
      {Family::PseudoJacobi, "PseudoJacobi", 2, "x"},
      {Family::Meixner, "Meixner", 2, "x"},
      {Family::Krawtchouk, "Krawtchouk", 2, "x"},
      {Family::MeixnerPollaczek, "MeixnerPollaczek", 3, "x"},
      {Family::Charlier, "Charlier", 1, "x"},
      {Family::Laguerre, "Laguerre", 1, "x"},
      {Family::Gegenbauer, "Gegenbauer", 1, "t"},
      {Family::Hermite, "Hermite", 0, "u"},
      {Family::GenBessel, "GenBessel", 1, "t"},
      {Family::Tchebicheff, "Tchebicheff", 0, "v"},
  }};
  return t;
}
}  // namespace

const char* family_name(Family f) {
  for (auto& r : table())
    if (r.f == f) return r.name;
  throw UnknownFamily("family_name");
}
Family family_from_name(const std::string& s) {
  for (auto& r : table())
    if (s == r.name) return r.f;
  throw UnknownFamily("unknown family: " + s);
}
int family_arity(Family f) {
  for (auto& r : table())
    if (r.f == f) return r.arity;
  throw UnknownFamily("family_arity");
}
const char* family_variable(Family f) {
  for (auto& r : table())
    if (r.f == f) return r.var;
  throw UnknownFamily("family_variable");
}

Poly<GRat> family_poly(Family f, long n, const std::vector<GRat>& p) {
  GRat mn(-(long)n);
  auto lin_poly = [&](std::vector<GRat> upper, std::vector<GRat> lower, GRat q0,
                      GRat qstep, GRat fs) {
    // factor_k = (q0 + k*qstep) + fs * x
    Poly<GRat> sum, term(GRat(1));
    for (long k = 0;; ++k) {
      sum += term;
      if (k == n) break;
      GRat num(1);
      bool dead = false;
      for (auto& u : upper) {
        GRat f2 = u + GRat(k);
        if (f2.is_zero()) {
          dead = true;
          break;
        }
        num = num * f2;
      }
      if (dead) break;
      GRat den(1);
      for (auto& l : lower) {
        GRat f2 = l + GRat(k);
        if (f2.is_zero())
          throw LowerParameterPole("lower parameter pole before termination");
        den = den * f2;
      }
      den = den * GRat(k + 1);
      Poly<GRat> factor;
      factor.c = {q0 + GRat(k) * qstep, fs};
      term = term * factor * (num / den);
    }
    return sum;
  };
  switch (f) {
    case Family::Wilson: {
      const GRat &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      GRat s = a + b + c + d;
      return hyp_wilson_shape_poly(
          {mn, s + GRat(n - 1)}, {a + b, a + c, a + d},
          [&](long j) { GRat aj = a + GRat(j); return aj * aj; }, n);
    }
    case Family::Racah: {
      const GRat &al = p[0], &be = p[1], &ga = p[2], &de = p[3];
      GRat c1 = ga + de + GRat(1);
      return hyp_wilson_shape_poly(
          {mn, al + be + GRat(n + 1)},
          {al + GRat(1), be + de + GRat(1), ga + GRat(1)},
          [&](long j) { return GRat(j) * (GRat(j) + c1); }, n);
    }
    case Family::ContDualHahn: {
      const GRat &a = p[0], &b = p[1], &c = p[2];
      return hyp_wilson_shape_poly(
          {mn}, {a + b, a + c},
          [&](long j) { GRat aj = a + GRat(j); return aj * aj; }, n);
    }
    case Family::ContHahn: {
      const GRat &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      GRat s = a + b + c + d;
      return lin_poly({mn, s + GRat(n - 1)}, {a + c, a + d}, a, GRat(1),
                      GRat::i_unit());
    }
    case Family::Hahn: {
      const GRat &al = p[0], &be = p[1], &N = p[2];
      return lin_poly({mn, al + be + GRat(n + 1)}, {al + GRat(1), -N}, GRat(0),
                      GRat(1), GRat(-1));
    }
    case Family::DualHahn: {
      const GRat &ga = p[0], &de = p[1], &N = p[2];
      GRat c1 = ga + de + GRat(1);
      return hyp_wilson_shape_poly(
          {mn}, {ga + GRat(1), -N},
          [&](long j) { return GRat(j) * (GRat(j) + c1); }, n);
    }
    case Family::Jacobi:
    case Family::PseudoJacobi: {
      const GRat &al = p[0], &be = p[1];
      Poly<GRat> arg;  // (1-x)/2
      arg.c = {grat(1, 2), grat(-1, 2)};
      return hyp_poly({mn, al + be + GRat(n + 1)}, {al + GRat(1)}, arg, n);
    }
    case Family::Meixner: {
      const GRat &be = p[0], &c = p[1];
      GRat z = GRat(1) - GRat(1) / c;
      return lin_poly({mn}, {be}, GRat(0), z, -z);
    }
    case Family::Krawtchouk: {
      const GRat &pp = p[0], &N = p[1];
      GRat z = GRat(1) / pp;
      return lin_poly({mn}, {-N}, GRat(0), z, -z);
    }
    case Family::MeixnerPollaczek: {
      const GRat &la = p[0], &co = p[1], &si = p[2];
      GRat i = GRat::i_unit();
      GRat emi = co - i * si;
      GRat z = GRat(1) - emi * emi;
      Poly<GRat> phi = lin_poly({mn}, {la * GRat(2)}, la * z, z, i * z);
      return phi * family_prefactor(Family::MeixnerPollaczek, n, p);
    }
    case Family::Charlier: {
      const GRat& a = p[0];
      GRat z = GRat(-1) / a;
      return lin_poly({mn}, {}, GRat(0), z, -z);
    }
    case Family::Laguerre: {
      const GRat& al = p[0];
      return hyp_poly({mn}, {al + GRat(1)}, Poly<GRat>::x(), n);
    }
    case Family::Gegenbauer: {
      const GRat& be = p[0];
      Poly<GRat> arg;
      arg.c = {grat(1, 2), grat(-1, 2)};
      return hyp_poly({mn, be * GRat(2) + GRat(n + 1)}, {be + GRat(1)}, arg, n);
    }
    case Family::Hermite: {
      Poly<GRat> sum;
      Rat fact_n = 1;
      for (long j = 2; j <= n; ++j) fact_n *= j;
      for (long m2 = 0; 2 * m2 <= n; ++m2) {
        Rat c = fact_n;
        Rat fm = 1, f2 = 1;
        for (long j = 2; j <= m2; ++j) fm *= j;
        for (long j = 2; j <= n - 2 * m2; ++j) f2 *= j;
        c /= fm * f2;
        if (m2 % 2) c = -c;
        Rat two_pow = 1;
        for (long j = 0; j < n - 2 * m2; ++j) two_pow *= 2;
        sum += Poly<GRat>::x((int)(n - 2 * m2), GRat(c * two_pow));
      }
      return sum;
    }
    case Family::GenBessel: {
      const GRat& a = p[0];
      return hyp_poly({mn, a + GRat(n - 1)}, {}, Poly<GRat>::x(1, GRat(-1)), n);
    }
    case Family::Tchebicheff: {
      Poly<GRat> arg;
      arg.c = {grat(1, 2), grat(-1, 2)};
      return hyp_poly({mn, GRat(n)}, {grat(1, 2)}, arg, n);
    }
  }
  throw UnknownFamily("family_poly");
}

ThreeTerm recurrence_coeffs(Family f, long n, const std::vector<GRat>& p) {
  GRat N(n);
  auto guard = [](const GRat& d) {
    if (d.is_zero()) throw PoleInCoefficients("recurrence denominator vanishes");
    return d;
  };
  switch (f) {
    case Family::Wilson: {
      const GRat &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      GRat s = a + b + c + d;
      GRat A = (N + a + b) * (N + a + c) * (N + a + d) * (N + s - GRat(1)) /
               guard((GRat(2) * N + s - GRat(1)) * (GRat(2) * N + s));
      GRat C = N * (N + b + c - GRat(1)) * (N + b + d - GRat(1)) *
               (N + c + d - GRat(1)) /
               guard((GRat(2) * N + s - GRat(2)) * (GRat(2) * N + s - GRat(1)));
      return {A, a * a - A - C, C};
    }
    case Family::ContDualHahn: {
      const GRat &a = p[0], &b = p[1], &c = p[2];
      GRat A = (N + a + b) * (N + a + c);
      GRat C = N * (N + b + c - GRat(1));
      return {A, a * a - A - C, C};
    }
    case Family::Racah: {
      const GRat &al = p[0], &be = p[1], &ga = p[2], &de = p[3];
      GRat A = (N + al + GRat(1)) * (N + al + be + GRat(1)) *
               (N + be + de + GRat(1)) * (N + ga + GRat(1)) /
               guard((GRat(2) * N + al + be + GRat(1)) *
                     (GRat(2) * N + al + be + GRat(2)));
      GRat C = N * (N + be) * (N + al + be - ga) * (N + al - de) /
               guard((GRat(2) * N + al + be) * (GRat(2) * N + al + be + GRat(1)));
      return {A, -(A + C), C};
    }
    case Family::Hahn: {
      const GRat &al = p[0], &be = p[1], &Np = p[2];
      GRat A = (N + al + be + GRat(1)) * (N + al + GRat(1)) * (Np - N) /
               guard((GRat(2) * N + al + be + GRat(1)) *
                     (GRat(2) * N + al + be + GRat(2)));
      GRat C = N * (N + al + be + Np + GRat(1)) * (N + be) /
               guard((GRat(2) * N + al + be) * (GRat(2) * N + al + be + GRat(1)));
      return {-A, A + C, -C};
    }
    case Family::DualHahn: {
      const GRat &ga = p[0], &de = p[1], &Np = p[2];
      GRat A = (N + ga + GRat(1)) * (N - Np);
      GRat C = N * (N - de - Np - GRat(1));
      return {A, -(A + C), C};
    }
    case Family::Jacobi:
    case Family::PseudoJacobi:
    case Family::Gegenbauer: {
      GRat al, be;
      if (f == Family::Gegenbauer) {
        al = p[0];
        be = p[0];
      } else {
        al = p[0];
        be = p[1];
      }
      GRat s = al + be;
      GRat A = GRat(2) * (N + s + GRat(1)) * (N + al + GRat(1)) /
               guard((GRat(2) * N + s + GRat(1)) * (GRat(2) * N + s + GRat(2)));
      GRat C = GRat(2) * N * (N + be) /
               guard((GRat(2) * N + s) * (GRat(2) * N + s + GRat(1)));
      return {A, GRat(1) - A - C, C};
    }
    case Family::Meixner: {
      const GRat &be = p[0], &c = p[1];
      GRat cm1 = guard(c - GRat(1));
      GRat A = c * (N + be) / cm1;
      GRat C = N / cm1;
      return {A, -(N + (N + be) * c) / cm1, C};
    }
    case Family::Krawtchouk: {
      const GRat &pp = p[0], &Np = p[1];
      GRat A = -pp * (Np - N);
      GRat C = -N * (GRat(1) - pp);
      return {A, pp * (Np - N) + N * (GRat(1) - pp), C};
    }
    case Family::Charlier: {
      const GRat& a = p[0];
      return {-a, N + a, -N};
    }
    case Family::Laguerre: {
      const GRat& al = p[0];
      return {-(N + al + GRat(1)), GRat(2) * N + al + GRat(1), -N};
    }
    case Family::Hermite:
      return {grat(1, 2), GRat(0), GRat(n)};
    case Family::MeixnerPollaczek: {
      const GRat &la = p[0], &co = p[1], &si = p[2];
      GRat s2 = guard(GRat(2) * si);
      return {GRat(n + 1) / s2, -(N + la) * co / guard(si),
              (N + GRat(2) * la - GRat(1)) / s2};
    }
    case Family::GenBessel:
    case Family::ContHahn: {
      // derived exactly from the polynomials (unique since degrees differ)
      Poly<GRat> pn = family_poly(f, n, p);
      Poly<GRat> pu = family_poly(f, n + 1, p);
      Poly<GRat> xpn = Poly<GRat>::x() * pn;
      GRat up = xpn.coeff(n + 1) / pu.coeff(n + 1);
      Poly<GRat> rem = xpn - pu * up;
      GRat diag = rem.coeff((int)n) / pn.coeff((int)n);
      rem = rem - pn * diag;
      GRat down(0);
      if (n > 0) {
        Poly<GRat> pd = family_poly(f, n - 1, p);
        down = rem.coeff((int)n - 1) / pd.coeff((int)n - 1);
        rem = rem - pd * down;
      }
      if (!rem.is_zero()) throw AskeyError("recurrence fit: residual");
      return {up, diag, down};
    }
    case Family::Tchebicheff: {
      if (n == 0) return {GRat(1), GRat(0), GRat(0)};
      return {grat(1, 2), GRat(0), grat(1, 2)};
    }
  }
  throw UnknownFamily("recurrence_coeffs");
}

GRat family_eigenvalue(Family f, long n, const std::vector<GRat>& p) {
  GRat N(n);
  switch (f) {
    case Family::Jacobi:
    case Family::PseudoJacobi:
      return -N * (N + p[0] + p[1] + GRat(1));
    case Family::Gegenbauer:
      return -N * (N + GRat(2) * p[0] + GRat(1));
    case Family::Laguerre:
      return -N;
    case Family::Hermite:
      return GRat(-2) * N;
    case Family::GenBessel:
      return N * (N + p[0] - GRat(1));
    case Family::Tchebicheff:
      return -N * N;
    default:
      throw UnknownFamily("family_eigenvalue: not a differential family");
  }
}

PolyOpQ family_eigenop(Family f, const std::vector<GRat>& p) {
  auto poly = [](std::initializer_list<GRat> cs) {
    Poly<GRat> q;
    q.c = cs;
    q.trim();
    return q;
  };
  switch (f) {
    case Family::Jacobi:
    case Family::PseudoJacobi: {
      const GRat &al = p[0], &be = p[1];
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(1), GRat(0), GRat(-1)}));
      op += PolyOpQ::deriv(1, poly({be - al, -(al + be + GRat(2))}));
      return op;
    }
    case Family::Gegenbauer: {
      const GRat& be = p[0];
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(1), GRat(0), GRat(-1)}));
      op += PolyOpQ::deriv(1, poly({GRat(0), -(GRat(2) * be + GRat(2))}));
      return op;
    }
    case Family::Laguerre: {
      const GRat& al = p[0];
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(0), GRat(1)}));
      op += PolyOpQ::deriv(1, poly({al + GRat(1), GRat(-1)}));
      return op;
    }
    case Family::Hermite: {
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(1)}));
      op += PolyOpQ::deriv(1, poly({GRat(0), GRat(-2)}));
      return op;
    }
    case Family::GenBessel: {
      const GRat& a = p[0];
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(0), GRat(0), GRat(1)}));
      op += PolyOpQ::deriv(1, poly({GRat(1), a}));
      return op;
    }
    case Family::Tchebicheff: {
      PolyOpQ op = PolyOpQ::deriv(2, poly({GRat(1), GRat(0), GRat(-1)}));
      op += PolyOpQ::deriv(1, poly({GRat(0), GRat(-1)}));
      return op;
    }
    default:
      throw UnknownFamily("family_eigenop: not a differential family");
  }
}

std::vector<GRat> expand_in_family(Family f, const std::vector<GRat>& p,
                                   Poly<GRat> q) {
  q.trim();
  int deg = q.degree();
  std::vector<GRat> coeffs(std::max(0, deg + 1), GRat(0));
  for (int k = deg; k >= 0; --k) {
    if (q.is_zero()) break;
    if (q.degree() < k) continue;
    Poly<GRat> pk = family_poly(f, k, p);
    GRat c = q.coeff(k) / pk.coeff(k);
    coeffs[k] = c;
    q -= pk * c;
    q.trim();
  }
  if (!q.is_zero()) throw AskeyError("expand_in_family: residual");
  return coeffs;
}

GRat wilson_tau_star_tau(const std::vector<GRat>& abcd,
                         const std::function<GRat(const GRat&)>& F,
                         const GRat& t) {
  const GRat &a = abcd[0], &b = abcd[1], &c = abcd[2], &d = abcd[3];
  auto tau = [&](const GRat& s) {
    GRat h = grat(1, 2);
    return (F(s + h) - F(s - h)) / (GRat(2) * s);
  };
  GRat h = grat(1, 2);
  GRat up = (a + t) * (b + t) * (c + t) * (d + t);
  GRat dn = (a - t) * (b - t) * (c - t) * (d - t);
  return (up * tau(t + h) - dn * tau(t - h)) / (GRat(2) * t);
}

GRat dualhahn_tau_star_tau(const GRat& beta1, const std::vector<GRat>& abc,
                           const std::function<GRat(const GRat&)>& F,
                           const GRat& t) {
  const GRat &a = abc[0], &b = abc[1], &c = abc[2];
  auto tau = [&](const GRat& s) {
    GRat h = grat(1, 2);
    return (F(s + h) - F(s - h)) / (GRat(2) * s);
  };
  GRat h = grat(1, 2);
  GRat up = (a + t) * (b + t) * (c + t);
  GRat dn = (a - t) * (b - t) * (c - t);
  return beta1 * (up * tau(t + h) - dn * tau(t - h)) / (GRat(2) * t);
}

}  // namespace askey
