#include "askey/models.hpp"

#include "askey/expr.hpp"

namespace askey {

namespace {

// tridiagonal matrix with column action M e_n = up(n) e_{n+1} + diag(n) e_n
// + down(n) e_{n-1}
template <class T>
Mat<T> tridiag(long dim, const std::function<T(long)>& up,
               const std::function<T(long)>& diag,
               const std::function<T(long)>& down) {
  Mat<T> M((int)dim, (int)dim);
  for (long n = 0; n < dim; ++n) {
    M((int)n, (int)n) = diag(n);
    if (n + 1 < dim) M((int)(n + 1), (int)n) = up(n);
    if (n > 0) M((int)(n - 1), (int)n) = down(n);
  }
  return M;
}

template <class T>
Mat<T> scalar_mat(long dim, const T& v) {
  Mat<T> M((int)dim, (int)dim);
  for (long n = 0; n < dim; ++n) M((int)n, (int)n) = v;
  return M;
}

template <class T>
void guard_pole(const T& denom) {
  if (askey::is_zero(denom))
    throw PoleInCoefficients("model coefficient denominator vanishes");
}

template <class T>
T div_checked(const T& a, const T& b) {
  guard_pole(b);
  return ScalarOps<T>::div(a, b);
}

}  // namespace

const std::vector<ModelVariantInfo>& model_variants() {
  static const std::vector<ModelVariantInfo> v = {
      {SystemId::S9, "wilson", ModelKind::Eigenbasis, Family::Wilson, "m+1"},
      {SystemId::E1, "dual_hahn", ModelKind::Eigenbasis, Family::ContDualHahn,
       "m+1"},
      {SystemId::E1, "hahn", ModelKind::Eigenbasis, Family::Hahn, "m+1"},
      {SystemId::E1, "jacobi", ModelKind::Differential, Family::Jacobi,
       "infinite"},
      {SystemId::E8, "jacobi_param", ModelKind::Eigenbasis, Family::Jacobi,
       "m+1"},
      {SystemId::E8, "gen_bessel", ModelKind::Differential, Family::GenBessel,
       "infinite"},
      {SystemId::S3, "dual_hahn_grid", ModelKind::GridDifference,
       Family::DualHahn, "M+1"},
      {SystemId::S3, "hahn_grid", ModelKind::GridDifference, Family::Hahn,
       "2m+1"},
      {SystemId::E3p, "meixner", ModelKind::GridDifference, Family::Meixner,
       "m+1"},
      {SystemId::E6, "gegenbauer", ModelKind::Differential, Family::Gegenbauer,
       "infinite"},
  };
  return v;
}

template <class T>
BuiltModel<T> build_s9_wilson(long m, const std::vector<T>& al) {
  const T &a1 = al[0], &a2 = al[1], &a3 = al[2];
  long dim = m + 1;
  T half = T(GRat(rat(1, 2)));
  // Wilson parameters of the S9 model
  T wa = (a1 + a3 + T(1)) * (-half) - T(m);
  T wb = (a1 + a3 + T(1)) * half;
  T wc = (a3 - a1 + T(1)) * half;
  T wd = a2 + T(m + 1) + (a1 + a3 + T(1)) * half;
  T s = wa + wb + wc + wd;
  auto A = [&](long n) {
    T N(n);
    return div_checked((N + wa + wb) * (N + wa + wc) * (N + wa + wd) *
                           (N + s - T(1)),
                       (T(2) * N + s - T(1)) * (T(2) * N + s));
  };
  auto C = [&](long n) {
    T N(n);
    return div_checked(
        N * (N + wb + wc - T(1)) * (N + wb + wd - T(1)) * (N + wc + wd - T(1)),
        (T(2) * N + s - T(2)) * (T(2) * N + s - T(1)));
  };
  T l2c = a1 * a1 + a3 * a3 - half;
  BuiltModel<T> model;
  model.system = SystemId::S9;
  model.variant = "wilson";
  model.rep.dim = (int)dim;
  model.rep.gens[gL1] = scalar_mat(dim, T(0));
  for (long n = 0; n < dim; ++n) {
    T N(n);
    T lam = -(T(4) * N * N + T(4) * N * (a2 + a3 + T(1)) +
              T(2) * (a2 + T(1)) * (a3 + T(1)) - half);
    model.rep.gens[gL1]((int)n, (int)n) = lam;
  }
  model.rep.gens[gL2] = tridiag<T>(
      dim, [&](long n) { return T(-4) * A(n); },
      [&](long n) {
        return T(-4) * (wa * wa - A(n) - C(n)) + l2c;
      },
      [&](long n) { return T(-4) * C(n); });
  // energy solved against the catalog relations (the published display's
  // quadratic terms carry the opposite sign)
  T E = T(-4) * T(m + 1) * (T(m + 1) + a1 + a2 + a3) -
        T(2) * (a1 * a2 + a1 * a3 + a2 * a3) -
        (a1 * a1 + a2 * a2 + a3 * a3) + T(GRat(rat(1, 4)));
  model.energy = E;
  model.rep.gens[gH] = scalar_mat(dim, E);
  model.sys_params = {T(GRat(rat(1, 4))) - a1 * a1, T(GRat(rat(1, 4))) - a2 * a2,
                      T(GRat(rat(1, 4))) - a3 * a3};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_e1_dual_hahn(long m, const std::vector<T>& be) {
  const T &b1 = be[0], &b2 = be[1], &b3 = be[2];
  long dim = m + 1;
  T half = T(GRat(rat(1, 2)));
  T qa = (b2 + b3 + T(1)) * (-half) - T(m);
  auto A = [&](long n) { T N(n); return (T(m) - N) * (T(m) - N + b2); };
  auto C = [&](long n) { T N(n); return N * (N + b3); };
  T l2c = b2 * b2 + b3 * b3 - half;
  BuiltModel<T> model;
  model.system = SystemId::E1;
  model.variant = "dual_hahn";
  model.rep.dim = (int)dim;
  model.rep.gens[gL1] = scalar_mat(dim, T(0));
  for (long n = 0; n < dim; ++n)
    model.rep.gens[gL1]((int)n, (int)n) =
        T(-2) * b1 * (T(2 * n) + b3 + T(1));
  model.rep.gens[gL2] = tridiag<T>(
      dim, [&](long n) { return T(-4) * A(n); },
      [&](long n) { return T(-4) * (qa * qa - A(n) - C(n)) + l2c; },
      [&](long n) { return T(-4) * C(n); });
  T E = T(-2) * b1 * (T(2 * m + 2) + b2 + b3);
  model.energy = E;
  model.rep.gens[gH] = scalar_mat(dim, E);
  T quarter = T(GRat(rat(1, 4)));
  model.sys_params = {-(b1 * b1), quarter - b2 * b2, quarter - b3 * b3};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_e1_hahn(long m, const std::vector<T>& be) {
  const T &b1 = be[0], &b2 = be[1], &b3 = be[2];
  long dim = m + 1;
  T half = T(GRat(rat(1, 2)));
  auto A = [&](long n) {
    T N(n);
    return div_checked(
        (N + b2 + b3 + T(1)) * (N + b2 + T(1)) * (T(m) - N),
        (T(2) * N + b2 + b3 + T(1)) * (T(2) * N + b2 + b3 + T(2)));
  };
  auto C = [&](long n) {
    T N(n);
    return div_checked(N * (N + b2 + b3 + T(m + 1)) * (N + b3),
                       (T(2) * N + b2 + b3) * (T(2) * N + b2 + b3 + T(1)));
  };
  BuiltModel<T> model;
  model.system = SystemId::E1;
  model.variant = "hahn";
  model.rep.dim = (int)dim;
  // L1 = 2 b1 (2x - 2m - b3 - 1) acting on the Hahn eigenbasis: tridiagonal
  // via x Q_n = -A_n Q_{n+1} + (A_n + C_n) Q_n - C_n Q_{n-1}.
  model.rep.gens[gL1] = tridiag<T>(
      dim, [&](long n) { return T(-4) * b1 * A(n); },
      [&](long n) {
        return T(4) * b1 * (A(n) + C(n)) +
               T(2) * b1 * (T(-2 * m) - b3 - T(1));
      },
      [&](long n) { return T(-4) * b1 * C(n); });
  model.rep.gens[gL2] = scalar_mat(dim, T(0));
  for (long n = 0; n < dim; ++n) {
    T N(n);
    model.rep.gens[gL2]((int)n, (int)n) =
        -(T(4) * N * N + T(4) * N * (b2 + b3 + T(1)) +
          T(2) * (b2 + T(1)) * (b3 + T(1)) - half);
  }
  T E = T(-2) * b1 * (T(2 * m + 2) + b2 + b3);
  model.energy = E;
  model.rep.gens[gH] = scalar_mat(dim, E);
  T quarter = T(GRat(rat(1, 4)));
  model.sys_params = {-(b1 * b1), quarter - b2 * b2, quarter - b3 * b3};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_e8_jacobi(long m, const std::vector<T>& ga) {
  const T &g1 = ga[0], &g2 = ga[1], &g3 = ga[2];
  long dim = m + 1;
  // f_n = 2F1(-n, n+g2-1; -m; (1-t)/2), Jacobi (alpha,beta) = (-m-1, g2+m-1)
  auto A = [&](long n) {
    T N(n);
    return div_checked(T(2) * (N + g2 - T(1)) * (N - T(m)),
                       (T(2) * N + g2 - T(1)) * (T(2) * N + g2));
  };
  auto C = [&](long n) {
    T N(n);
    return div_checked(T(2) * N * (N + g2 + T(m - 1)),
                       (T(2) * N + g2 - T(2)) * (T(2) * N + g2 - T(1)));
  };
  T s = T(-2) * g1 * g3;
  BuiltModel<T> model;
  model.system = SystemId::E8;
  model.variant = "jacobi_param";
  model.rep.dim = (int)dim;
  model.rep.gens[gL1] = tridiag<T>(
      dim, [&](long n) { return s * A(n); },
      [&](long n) { return s * (T(1) - A(n) - C(n)); },
      [&](long n) { return s * C(n); });
  model.rep.gens[gL2] = scalar_mat(dim, T(0));
  for (long n = 0; n < dim; ++n) {
    T N(n);
    model.rep.gens[gL2]((int)n, (int)n) =
        T(-4) * N * (N + g2 - T(1)) - (g2 - T(1)) * (g2 - T(1));
  }
  T E = T(-2) * g1 * (T(2 * m) + g2);
  model.energy = E;
  model.rep.gens[gH] = scalar_mat(dim, E);
  model.sys_params = {-(g1 * g1), T(16) * g3 * g3,
                      T(8) * g3 * (g2 - T(2))};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_s3_dual_hahn_grid(long M, const T& alpha) {
  long dim = M + 1;
  const T i = T(GRat::i_unit());
  auto B = [&](long sp) {
    T S(sp);
    return div_checked((S + T(2) * alpha + T(1)) * (T(M) - S),
                       T(2) * S + T(2) * alpha + T(1));
  };
  auto C = [&](long sp) {
    T S(sp);
    return div_checked(S * (S + T(M) + T(2) * alpha + T(1)),
                       T(2) * S + T(2) * alpha + T(1));
  };
  BuiltModel<T> model;
  model.system = SystemId::S3;
  model.variant = "dual_hahn_grid";
  model.rep.dim = (int)dim;
  // X = i(B(s)E_s + C(s)E_s^{-1}) on the point basis of s in {0..M}
  Mat<T> X((int)dim, (int)dim);
  for (long sp = 0; sp < dim; ++sp) {
    T b = B(sp), cc = C(sp);
    if (sp + 1 < dim)
      X((int)(sp + 1), (int)sp) = i * b;
    else if (!askey::is_zero(b))
      throw BoundaryLeak("S3 grid: B does not vanish at the top");
    if (sp > 0)
      X((int)(sp - 1), (int)sp) = i * cc;
    else if (!askey::is_zero(cc))
      throw BoundaryLeak("S3 grid: C does not vanish at the bottom");
  }
  Mat<T> L1((int)dim, (int)dim);
  for (long sp = 0; sp < dim; ++sp) {
    T S(sp);
    T v = -(S + alpha + T(GRat(rat(1, 2)))) * (S + alpha + T(GRat(rat(1, 2)))) +
          alpha * alpha - T(GRat(rat(1, 4)));
    L1((int)sp, (int)sp) = v;
  }
  Mat<T> L2 = commutator(L1, X).scaled(T(GRat(rat(1, 2))));
  T a = T(GRat(rat(1, 4))) - alpha * alpha;
  // H is synthesized from the verified relation [X,L2] = X^2 + 2L1 - H + a
  Mat<T> Hm = X * X + L1.scaled(T(2)) + scalar_mat(dim, a) - commutator(X, L2);
  model.rep.gens = {{gX, X}, {gL1, L1}, {gL2, L2}, {gH, Hm}};
  model.energy = Hm(0, 0);
  model.sys_params = {a};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_s3_hahn_grid(long m, const T& alpha) {
  long dim = 2 * m + 1;
  const T i = T(GRat::i_unit());
  auto B = [&](long x) { T X(x); return (X - T(2 * m)) * (X + alpha + T(1)); };
  auto C = [&](long x) {
    T X(x);
    return X * (X - T(2 * m) - alpha - T(1));
  };
  BuiltModel<T> model;
  model.system = SystemId::S3;
  model.variant = "hahn_grid";
  model.rep.dim = (int)dim;
  Mat<T> L1((int)dim, (int)dim);
  for (long x = 0; x < dim; ++x) {
    T b = B(x), cc = C(x);
    L1((int)x, (int)x) = b + cc - alpha - T(GRat(rat(1, 2)));
    if (x + 1 < dim) L1((int)(x + 1), (int)x) = -b;
    if (x > 0) L1((int)(x - 1), (int)x) = -cc;
  }
  Mat<T> X((int)dim, (int)dim);
  for (long x = 0; x < dim; ++x) X((int)x, (int)x) = T(2) * i * (T(x) - T(m));
  Mat<T> L2 = commutator(L1, X).scaled(T(GRat(rat(1, 2))));
  T a = T(GRat(rat(1, 4))) - alpha * alpha;
  Mat<T> Hm = X * X + L1.scaled(T(2)) + scalar_mat(dim, a) - commutator(X, L2);
  model.rep.gens = {{gX, X}, {gL1, L1}, {gL2, L2}, {gH, Hm}};
  model.energy = Hm(0, 0);
  model.sys_params = {a};
  model.rep.params = model.sys_params;
  return model;
}

template <class T>
BuiltModel<T> build_e3p_meixner(long m, const std::vector<T>& par) {
  const T &om = par[0], &u = par[1], &v = par[2], &w = par[3];
  T c1 = u * u * w, c2 = v * v * w, root = u * v * w;  // root = sqrt(c1 c2)
  long dim = m + 1;
  BuiltModel<T> model;
  model.system = SystemId::E3p;
  model.variant = "meixner";
  model.rep.dim = (int)dim;
  auto B = [&](long x) {
    T X(x);
    return div_checked(-(c1 * (X - T(m))), c2);
  };
  auto C = [&](long x) { return T(x); };
  T scale = div_checked(T(2) * om * c2, c1 + c2);
  Mat<T> L1((int)dim, (int)dim);
  for (long x = 0; x < dim; ++x) {
    T b = B(x), cc = C(x);
    L1((int)x, (int)x) = scale * (-(b + cc)) - om;
    if (x + 1 < dim) L1((int)(x + 1), (int)x) = scale * b;
    if (x > 0) L1((int)(x - 1), (int)x) = scale * cc;
  }
  Mat<T> L2((int)dim, (int)dim);
  for (long x = 0; x < dim; ++x)
    L2((int)x, (int)x) =
        div_checked(om * (c1 + c2), root) * (T(2 * x) - T(2 * m) - T(1));
  T E = T(-2) * om * T(m + 1);
  Mat<T> Hm = scalar_mat(dim, E);
  model.energy = E;
  model.rep.gens = {{gL1, L1}, {gL2, L2}, {gH, Hm}};
  model.sys_params = {-(om * om) * T(GRat(rat(1, 4))), T(0), T(0)};
  model.rep.params = model.sys_params;
  return model;
}

template BuiltModel<GRat> build_s9_wilson(long, const std::vector<GRat>&);
template BuiltModel<LRat> build_s9_wilson(long, const std::vector<LRat>&);
template BuiltModel<GRat> build_e1_dual_hahn(long, const std::vector<GRat>&);
template BuiltModel<LRat> build_e1_dual_hahn(long, const std::vector<LRat>&);
template BuiltModel<GRat> build_e1_hahn(long, const std::vector<GRat>&);
template BuiltModel<LRat> build_e1_hahn(long, const std::vector<LRat>&);
template BuiltModel<GRat> build_e8_jacobi(long, const std::vector<GRat>&);
template BuiltModel<LRat> build_e8_jacobi(long, const std::vector<LRat>&);
template BuiltModel<GRat> build_s3_dual_hahn_grid(long, const GRat&);
template BuiltModel<LRat> build_s3_dual_hahn_grid(long, const LRat&);
template BuiltModel<GRat> build_s3_hahn_grid(long, const GRat&);
template BuiltModel<LRat> build_s3_hahn_grid(long, const LRat&);
template BuiltModel<GRat> build_e3p_meixner(long, const std::vector<GRat>&);
template BuiltModel<LRat> build_e3p_meixner(long, const std::vector<LRat>&);

DiffModel build_e1_jacobi(const std::vector<GRat>& p) {
  const GRat &b2 = p[0], &b3 = p[1], &E = p[2];
  DiffModel m;
  m.system = SystemId::E1;
  m.variant = "jacobi";
  auto poly = [](std::initializer_list<GRat> cs) {
    Poly<GRat> q;
    q.c = cs;
    q.trim();
    return q;
  };
  // L1 = (E/2)(x+1), L2 = 4(1-x^2)dxx + 4[b3-b2-(b2+b3+2)x]dx
  //      - 2(b2+1)(b3+1) + 1/2, H = E
  PolyOpQ L1 = PolyOpQ::mult(poly({E / GRat(2), E / GRat(2)}));
  PolyOpQ L2 = PolyOpQ::deriv(2, poly({GRat(4), GRat(0), GRat(-4)}));
  L2 += PolyOpQ::deriv(
      1, poly({GRat(4) * (b3 - b2), GRat(-4) * (b2 + b3 + GRat(2))}));
  L2 += PolyOpQ::mult(
      poly({GRat(-2) * (b2 + GRat(1)) * (b3 + GRat(1)) + grat(1, 2)}));
  PolyOpQ H = PolyOpQ::mult(poly({E}));
  m.rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
  GRat quarter = grat(1, 4);
  m.sys_params = {GRat(0), quarter - b2 * b2, quarter - b3 * b3};
  m.rep.params = m.sys_params;
  return m;
}

DiffModel build_e8_bessel(const std::vector<GRat>& p) {
  const GRat &g2 = p[0], &g3 = p[1], &E = p[2];
  DiffModel m;
  m.system = SystemId::E8;
  m.variant = "gen_bessel";
  auto poly = [](std::initializer_list<GRat> cs) {
    Poly<GRat> q;
    q.c = cs;
    q.trim();
    return q;
  };
  // L1 = -g3 E t, L2 = -4t^2 dtt - 4(1+g2 t)dt - (g2-1)^2, H = E
  PolyOpQ L1 = PolyOpQ::mult(poly({GRat(0), -(g3 * E)}));
  PolyOpQ L2 = PolyOpQ::deriv(2, poly({GRat(0), GRat(0), GRat(-4)}));
  L2 += PolyOpQ::deriv(1, poly({GRat(-4), GRat(-4) * g2}));
  L2 += PolyOpQ::mult(poly({-(g2 - GRat(1)) * (g2 - GRat(1))}));
  PolyOpQ H = PolyOpQ::mult(poly({E}));
  m.rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
  m.sys_params = {GRat(0), GRat(16) * g3 * g3, GRat(8) * g3 * (g2 - GRat(2))};
  m.rep.params = m.sys_params;
  return m;
}

DiffModel build_e6_gegenbauer(const std::vector<GRat>& p) {
  const GRat &be = p[0], &eta = p[1];
  DiffModel m;
  m.system = SystemId::E6;
  m.variant = "gegenbauer";
  auto poly = [](std::initializer_list<GRat> cs) {
    Poly<GRat> q;
    q.c = cs;
    q.trim();
    return q;
  };
  // X = eta t, L1 = (1-t^2)dtt - 2t(1+be)dt - be - 1/2, L2 = [L1,X]/2,
  // H = eta^2
  PolyOpQ X = PolyOpQ::mult(poly({GRat(0), eta}));
  PolyOpQ L1 = PolyOpQ::deriv(2, poly({GRat(1), GRat(0), GRat(-1)}));
  L1 += PolyOpQ::deriv(1, poly({GRat(0), GRat(-2) * (GRat(1) + be)}));
  L1 += PolyOpQ::mult(poly({-be - grat(1, 2)}));
  // [L1, X] = (1-t^2) (2 eta) dt + eta(-2t(1+be)) - ... computed exactly:
  // [L1, eta t] f = eta[(1-t^2)(2 f') - 2t(1+be) f] ... encode directly
  PolyOpQ L2 = PolyOpQ::deriv(1, poly({eta, GRat(0), -eta}));
  L2 += PolyOpQ::mult(poly({GRat(0), -eta * (GRat(1) + be)}));
  PolyOpQ H = PolyOpQ::mult(poly({eta * eta}));
  m.rep.gens = {{gX, X}, {gL1, L1}, {gL2, L2}, {gH, H}};
  m.sys_params = {grat(1, 4) - be * be};
  m.rep.params = m.sys_params;
  return m;
}

bool spectrum_matches(const Mat<GRat>& M, const std::vector<GRat>& eigs) {
  Poly<GRat> cp = char_poly(M);
  Poly<GRat> expect(GRat(1));
  for (auto& e : eigs) {
    Poly<GRat> lin;
    lin.c = {-e, GRat(1)};
    expect = expect * lin;
  }
  return cp == expect;
}

ResidualReport verify_model_variant(const std::string& system,
                                    const std::string& variant, long m,
                                    unsigned long long seed) {
  RatSampler rs(seed);
  const auto& cat = system_catalog();
  auto rels = [&](SystemId id) { return cat.at(id).relations; };
  if (system == "S9" && variant == "wilson") {
    std::vector<GRat> al = {GRat(rs.positive()), GRat(rs.positive()),
                            GRat(rs.positive())};
    auto mod = build_s9_wilson<GRat>(m, al);
    return check_structure(mod.rep, rels(SystemId::S9));
  }
  if (system == "E1" && variant == "dual_hahn") {
    std::vector<GRat> be = {GRat(rs.positive()), GRat(rs.positive()),
                            GRat(rs.positive())};
    auto mod = build_e1_dual_hahn<GRat>(m, be);
    return check_structure(mod.rep, rels(SystemId::E1));
  }
  if (system == "E1" && variant == "hahn") {
    std::vector<GRat> be = {GRat(rs.positive()), GRat(rs.positive()),
                            GRat(rs.positive())};
    auto mod = build_e1_hahn<GRat>(m, be);
    return check_structure(mod.rep, rels(SystemId::E1));
  }
  if (system == "E1" && variant == "jacobi") {
    std::vector<GRat> p = {GRat(rs.positive()), GRat(rs.positive()),
                           GRat(rs.positive())};
    auto mod = build_e1_jacobi(p);
    return check_structure(mod.rep, rels(SystemId::E1));
  }
  if (system == "E8" && variant == "jacobi_param") {
    std::vector<GRat> ga = {GRat(rs.positive()), GRat(rs.positive()),
                            GRat(rs.positive())};
    auto mod = build_e8_jacobi<GRat>(m, ga);
    return check_structure(mod.rep, rels(SystemId::E8));
  }
  if (system == "E8" && variant == "gen_bessel") {
    std::vector<GRat> p = {GRat(rs.positive()), GRat(rs.positive()),
                           GRat(rs.positive())};
    auto mod = build_e8_bessel(p);
    return check_structure(mod.rep, rels(SystemId::E8));
  }
  if (system == "S3" && variant == "dual_hahn_grid") {
    auto mod = build_s3_dual_hahn_grid<GRat>(2 * m, GRat(rs.positive()));
    return check_structure(mod.rep, rels(SystemId::S3));
  }
  if (system == "S3" && variant == "hahn_grid") {
    auto mod = build_s3_hahn_grid<GRat>(m, GRat(rs.positive()));
    return check_structure(mod.rep, rels(SystemId::S3));
  }
  if (system == "E3'" && variant == "meixner") {
    std::vector<GRat> p = {GRat(rs.positive()), GRat(rs.positive()),
                           GRat(rs.positive()), GRat(rs.positive())};
    auto mod = build_e3p_meixner<GRat>(m, p);
    return check_structure(mod.rep, rels(SystemId::E3p));
  }
  if (system == "E6" && variant == "gegenbauer") {
    std::vector<GRat> p = {GRat(rs.positive()), GRat(rs.positive())};
    auto mod = build_e6_gegenbauer(p);
    return check_structure(mod.rep, rels(SystemId::E6));
  }
  throw UnknownVariant("verify_model_variant: " + system + "/" + variant);
}

}  // namespace askey
