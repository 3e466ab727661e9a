#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/expr.hpp"
#include "askey/operators.hpp"
#include "askey/systems.hpp"

using namespace askey;

namespace {
Poly<GRat> P(std::initializer_list<GRat> cs) {
  Poly<GRat> q;
  q.c = cs;
  q.trim();
  return q;
}
}  // namespace

TEST_CASE("apply_poly_operator basics") {
  // d^2 applied to x^3 -> 6x
  PolyOpQ dxx = PolyOpQ::deriv(2, P({grat(1)}));
  CHECK(dxx.apply(Poly<GRat>::x(3)) == P({grat(0), grat(6)}));
  // E_x applied to x^2 -> (x+1)^2
  PolyOpQ Ex = PolyOpQ::shift(1, P({grat(1)}));
  CHECK(Ex.apply(Poly<GRat>::x(2)) == P({grat(1), grat(2), grat(1)}));
}

TEST_CASE("E1 Jacobi operator on x with beta2=beta3=0") {
  // L2' = 4(1-x^2)dxx + 4[b3-b2-(b2+b3+2)x]dx - 2(b2+1)(b3+1) + 1/2
  PolyOpQ L2 = PolyOpQ::deriv(2, P({grat(4), grat(0), grat(-4)}));
  L2 += PolyOpQ::deriv(1, P({grat(0), grat(-8)}));
  L2 += PolyOpQ::mult(P({grat(-3, 2)}));
  // applied to x: -8x - (3/2)x = -(19/2)x
  CHECK(L2.apply(Poly<GRat>::x(1)) == P({grat(0), grat(-19, 2)}));
}

TEST_CASE("grid_realize: multiplication, S3 endpoints, boundary leak") {
  GridSpec g = GridSpec::range(grat(0), 3);  // {0,1,2}

  // multiplication by s -> diag(0,1,2)
  PolyOpQ mult_s = PolyOpQ::mult(Poly<GRat>::x(1));
  Mat<GRat> D = grid_realize(mult_s, g);
  CHECK(D(0, 0) == grat(0));
  CHECK(D(1, 1) == grat(1));
  CHECK(D(2, 2) == grat(2));
  CHECK(D(0, 1) == grat(0));

  // S3 model X on s in {0,1,2}, alpha = 1/3: B(2) = 0, C(0) = 0; the matrix
  // is tridiagonal with zero diagonal
  GRat al = grat(1, 3);
  long M = 2;
  // B(s) = (s+2a+1)(M-s)/(2s+2a+1), C(s) = s(s+M+2a+1)/(2s+2a+1)
  Poly<GRat> s1 = Poly<GRat>::x(1);
  RatFun Bs(P({GRat(2) * al + GRat(1), grat(1)}) * P({GRat((long)M), grat(-1)}),
            P({GRat(2) * al + GRat(1), grat(2)}));
  RatFun Cs(Poly<GRat>::x(1) *
                P({GRat((long)M) + GRat(2) * al + GRat(1), grat(1)}),
            P({GRat(2) * al + GRat(1), grat(2)}));
  CHECK(Bs.eval(grat(2)).is_zero());
  CHECK(Cs.eval(grat(0)).is_zero());
  PolyOpQ X;
  OpTerm<GRat> up;
  up.poly_coeff = false;
  up.coeff_ratfun = Bs;
  up.is_shift = true;
  up.s = 1;
  OpTerm<GRat> down;
  down.poly_coeff = false;
  down.coeff_ratfun = Cs;
  down.is_shift = true;
  down.s = -1;
  X.terms = {up, down};
  Mat<GRat> XM = grid_realize(X, g);
  for (int i = 0; i < 3; ++i) CHECK(XM(i, i) == grat(0));
  CHECK(!XM(1, 0).is_zero());
  CHECK(!XM(0, 1).is_zero());

  // E_s with constant coefficient 1 escapes the grid
  PolyOpQ leak = PolyOpQ::shift(1, P({grat(1)}));
  CHECK_THROWS_AS(grid_realize(leak, g), BoundaryLeak);
}

TEST_CASE("grid realization is an algebra map under composition") {
  // ops with proper endpoint behavior on {0..4}: A = B(x)E + C(x)E^{-1},
  // with B(4)=0, C(0)=0; composition tested via application to polynomials.
  GridSpec g = GridSpec::range(grat(0), 5);
  PolyOpQ A = PolyOpQ::shift(1, P({grat(4), grat(-1)}));       // (4-x) E
  A += PolyOpQ::shift(-1, Poly<GRat>::x(1));                   // x E^{-1}
  PolyOpQ B = PolyOpQ::shift(1, P({grat(8), grat(-2)}));       // 2(4-x) E
  B += PolyOpQ::mult(P({grat(1), grat(3)}));                   // 1 + 3x
  Mat<GRat> MA = grid_realize(A, g), MB = grid_realize(B, g);
  for (int d = 0; d <= 4; ++d) {
    Poly<GRat> f = Poly<GRat>::x(d);
    Poly<GRat> BF = B.apply(f);
    Poly<GRat> ABf = A.apply(BF);
    // vec(A(B(f))) == MA * MB * vec(f)
    std::vector<GRat> v(5), expect(5);
    for (int i = 0; i < 5; ++i) v[i] = f.eval(g.points[i]);
    for (int i = 0; i < 5; ++i) expect[i] = ABf.eval(g.points[i]);
    std::vector<GRat> got(5, GRat(0));
    Mat<GRat> MAB = MA * MB;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) got[i] += MAB(i, j) * v[j];
    CHECK(got == expect);
  }
}

TEST_CASE("polynomial-preserving operators stay polynomial to degree 12") {
  // Jacobi-type operator with polynomial coefficients
  PolyOpQ op = PolyOpQ::deriv(2, P({grat(1), grat(0), grat(-1)}));
  op += PolyOpQ::deriv(1, P({grat(1, 3), grat(-2)}));
  for (int d = 0; d <= 12; ++d) {
    Poly<GRat> img = op.apply(Poly<GRat>::x(d));
    CHECK(img.degree() <= d);  // polynomial output, no denominators by type
  }
}

TEST_CASE("ambient operator identity checks (E3), sphere reduction, broken sign") {
  std::vector<GRat> params = {grat(1, 3)};
  AmbientRep rep = ambient_realization(SystemId::E3, params);
  // [X, L1] f - 2 L2 f = 0 for f = x y^2 (catalog orientation)
  MRat f{MPoly::var(0) * MPoly::var(1, 2)};
  const AmbientOp &X = rep.gens.at(gX), &L1 = rep.gens.at(gL1),
                  &L2 = rep.gens.at(gL2);
  MRat r = X.apply(L1.apply(f)) - L1.apply(X.apply(f)) -
           L2.apply(f) * MRat(grat(2));
  CHECK(r.is_zero());
  // deliberately wrong sign: [X,L1]f + 2L2 f != 0
  MRat bad = X.apply(L1.apply(f)) - L1.apply(X.apply(f)) +
             L2.apply(f) * MRat(grat(2));
  CHECK(!bad.is_zero());

  // sphere relation: s1^2+s2^2+s3^2 reduces to 1
  AmbientRep s9 = ambient_realization(SystemId::S9, {grat(1), grat(2), grat(3)});
  MPoly rel = pow_int(MPoly::var(0), 2) + pow_int(MPoly::var(1), 2) +
              pow_int(MPoly::var(2), 2) - MPoly(1);
  CHECK(s9.space.is_zero_mod(rel));
}

TEST_CASE("E5 and E4 first-order bracket examples") {
  // E5: [L1,X]f + (a/2)f = 0  i.e. [X,L1] = a/2
  std::vector<GRat> pe = {grat(2, 5)};
  AmbientRep e5 = ambient_realization(SystemId::E5, pe);
  MRat f{MPoly::var(0, 2) * MPoly::var(1)};
  const AmbientOp &X5 = e5.gens.at(gX), &L15 = e5.gens.at(gL1);
  MRat r5 = L15.apply(X5.apply(f)) - X5.apply(L15.apply(f)) +
            f * MRat(pe[0] / GRat(2));
  CHECK(r5.is_zero());

  // E4: [L1,X]f - a f = 0 with the catalog orientation [X,L1] = a... the
  // realization decides: check the catalog relation row directly.
  AmbientRep e4 = ambient_realization(SystemId::E4, pe);
  ResidualReport rr = check_structure(e4, {system_catalog()
                                               .at(SystemId::E4)
                                               .relations.front()});
  CHECK(rr.rows[0].zero);
}

TEST_CASE("commutator of grid realizations has zero trace") {
  GridSpec g = GridSpec::range(grat(0), 4);
  PolyOpQ A = PolyOpQ::shift(1, P({grat(3), grat(-1)}));
  A += PolyOpQ::shift(-1, Poly<GRat>::x(1));
  PolyOpQ B = PolyOpQ::mult(Poly<GRat>::x(1));
  Mat<GRat> C = commutator(grid_realize(A, g), grid_realize(B, g));
  CHECK(C.trace() == grat(0));
}
