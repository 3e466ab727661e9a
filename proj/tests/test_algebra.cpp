#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/algebra.hpp"
#include "askey/expr.hpp"
#include "askey/multivar.hpp"

using namespace askey;

TEST_CASE("poly arithmetic, eval, compose") {
  Poly<GRat> p;  // 1 + 2x + x^3
  p.c = {grat(1), grat(2), grat(0), grat(1)};
  CHECK(p.eval(grat(2)) == grat(13));
  CHECK(p.derivative().eval(grat(2)) == grat(14));
  Poly<GRat> q;  // x^2 - 1
  q.c = {grat(-1), grat(0), grat(1)};
  CHECK(p.compose(q).eval(grat(2)) == p.eval(grat(3)));
}

TEST_CASE("ratfun reduces and compares exactly") {
  Poly<GRat> num;  // x^2 - 1
  num.c = {grat(-1), grat(0), grat(1)};
  Poly<GRat> den;  // x - 1
  den.c = {grat(-1), grat(1)};
  RatFun f(num, den);
  Poly<GRat> xp1;
  xp1.c = {grat(1), grat(1)};
  CHECK(f == RatFun(xp1));
  CHECK(f.is_polynomial());
  RatFun g = RatFun(Poly<GRat>(grat(1))) / RatFun(Poly<GRat>::x());
  CHECK((g * RatFun(Poly<GRat>::x())) == RatFun(Poly<GRat>(grat(1))));
  CHECK(!g.is_polynomial());
}

TEST_CASE("matrix commutator and symmetrizers") {
  Mat<GRat> E(2, 2), F(2, 2);
  E(0, 1) = grat(1);
  F(1, 0) = grat(1);
  Mat<GRat> H = commutator(E, F);  // sl(2): [E,F] = H = diag(1,-1)
  CHECK(H(0, 0) == grat(1));
  CHECK(H(1, 1) == grat(-1));
  CHECK(H(0, 1) == grat(0));
  CHECK(H.trace() == grat(0));

  Mat<GRat> I = Mat<GRat>::identity(2);
  CHECK(commutator(I, F).is_zero());
  CHECK(symmetrize2(E, I) == E.scaled(grat(2)));

  // 1x1 scalars: {a,b} = 2ab, {a,b,c} = 6abc
  Mat<GRat> a(1, 1), b(1, 1), c(1, 1);
  a(0, 0) = grat(2);
  b(0, 0) = grat(3);
  c(0, 0) = grat(5);
  CHECK(symmetrize2(a, b)(0, 0) == grat(12));
  CHECK(symmetrize3(a, b, c)(0, 0) == grat(180));
}

TEST_CASE("commutator antisymmetry and jacobi identity on random 4x4") {
  RatSampler rs(5);
  auto rnd = [&]() {
    Mat<GRat> M(4, 4);
    for (auto& v : M.a) v = GRat(rs.nonzero_signed());
    return M;
  };
  for (int it = 0; it < 25; ++it) {
    Mat<GRat> A = rnd(), B = rnd(), C = rnd();
    CHECK((commutator(A, B) + commutator(B, A)).is_zero());
    Mat<GRat> jac = commutator(A, commutator(B, C)) +
                    commutator(B, commutator(C, A)) +
                    commutator(C, commutator(A, B));
    CHECK(jac.is_zero());
    CHECK(commutator(A, B).trace() == grat(0));
  }
}

TEST_CASE("linear solve and char poly") {
  Mat<GRat> M(2, 2);
  M(0, 0) = grat(2);
  M(0, 1) = grat(1);
  M(1, 0) = grat(1);
  M(1, 1) = grat(3);
  auto x = solve_linear(M, {grat(5), grat(10)});
  CHECK(x[0] == grat(1));
  CHECK(x[1] == grat(3));

  // char poly of diag(1,2,3): (x-1)(x-2)(x-3)
  Mat<GRat> D(3, 3);
  D(0, 0) = grat(1);
  D(1, 1) = grat(2);
  D(2, 2) = grat(3);
  Poly<GRat> cp = char_poly(D);
  CHECK(cp.eval(grat(1)) == grat(0));
  CHECK(cp.eval(grat(2)) == grat(0));
  CHECK(cp.eval(grat(3)) == grat(0));
  CHECK(cp.eval(grat(0)) == grat(-6));
}

TEST_CASE("mpoly sphere reduction") {
  Space sphere;
  sphere.nvars = 3;
  sphere.names = {"s1", "s2", "s3"};
  MPoly one_minus = MPoly(1) - pow_int(MPoly::var(0), 2) - pow_int(MPoly::var(1), 2);
  sphere.quadric = {{2, one_minus}};
  // s1^2 + s2^2 + s3^2 - 1 reduces to zero
  MPoly rel = pow_int(MPoly::var(0), 2) + pow_int(MPoly::var(1), 2) +
              pow_int(MPoly::var(2), 2) - MPoly(1);
  CHECK(sphere.is_zero_mod(rel));
  // s3^4 reduces to (1 - s1^2 - s2^2)^2
  MPoly s3_4 = pow_int(MPoly::var(2), 4);
  CHECK(sphere.is_zero_mod(s3_4 - one_minus * one_minus));
  CHECK(!sphere.is_zero_mod(MPoly::var(2)));
}

TEST_CASE("mrat derivative quotient rule") {
  // d/dx (x^2 / y) = 2x / y
  MRat f(pow_int(MPoly::var(0), 2), MPoly::var(1));
  MRat df = f.derivative(0);
  MRat expect(MPoly::var(0, 1, grat(2)), MPoly::var(1));
  CHECK((df - expect).is_zero());
  // d/dy (x^2 / y) = -x^2 / y^2
  MRat dy = f.derivative(1);
  MRat expect2(pow_int(MPoly::var(0), 2) * GRat(grat(-1)),
               pow_int(MPoly::var(1), 2));
  CHECK((dy - expect2).is_zero());
}
