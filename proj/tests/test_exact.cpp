#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/expr.hpp"

using namespace askey;

TEST_CASE("rational and gaussian rational basics") {
  GRat a = grat(1, 2), b = grat(1, 3);
  CHECK(a + b == grat(5, 6));
  CHECK(a * b == grat(1, 6));
  GRat i = GRat::i_unit();
  CHECK(i * i == grat(-1));
  CHECK((a + i * b) * (a + i * b).conj() == grat(1, 4) + grat(1, 9));
  CHECK((a / b) == grat(3, 2));
  CHECK(pow_int(i, 3) == -i);
  CHECK(pow_int(grat(2), -2) == grat(1, 4));
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(grat(7, 3), 0) == grat(1));   // empty product
  CHECK(pochhammer(grat(1), 4) == grat(24));     // 4!
  CHECK(pochhammer(grat(1, 2), 2) == grat(3, 4));
}

TEST_CASE("pochhammer ladder property") {
  RatSampler rs(11);
  for (int it = 0; it < 50; ++it) {
    GRat a(rs.nonzero_signed());
    for (long n = 0; n <= 20; n += 5)
      CHECK(pochhammer(a, n + 1) == pochhammer(a, n) * (a + GRat(n)));
  }
}

TEST_CASE("laurent arithmetic and limits") {
  Laurent x = Laurent(3) + Laurent::delta(1, grat(2));  // 3 + 2d
  CHECK(x.limit() == grat(3));
  Laurent y = Laurent::delta(-1) + Laurent(1);  // d^-1 + 1
  CHECK_THROWS_AS(y.limit(), NegativePowers);
  CHECK(Laurent::delta(2, grat(5)).limit() == grat(0));  // 5 d^2 -> 0

  // limit is multiplicative when both operand limits exist
  RatSampler rs(7);
  for (int it = 0; it < 200; ++it) {
    Laurent u = Laurent(GRat(rs.nonzero_signed())) +
                Laurent::delta((int)rs.next_in(0, 3), GRat(rs.nonzero_signed()));
    Laurent v = Laurent(GRat(rs.nonzero_signed())) +
                Laurent::delta((int)rs.next_in(0, 3), GRat(rs.nonzero_signed()));
    CHECK((u * v).limit() == u.limit() * v.limit());
  }
}

TEST_CASE("laurent exact division") {
  Laurent a = Laurent::delta(2) + Laurent::delta(1, grat(3));
  Laurent b = Laurent::delta(1);
  CHECK(a.div_exact(b) == Laurent::delta(1) + Laurent(3));
  Laurent c = (Laurent(1) + Laurent::delta(1)) * (Laurent(2) + Laurent::delta(3));
  CHECK(c.div_exact(Laurent(1) + Laurent::delta(1)) ==
        Laurent(2) + Laurent::delta(3));
  CHECK_THROWS(Laurent(1).div_exact(Laurent(1) + Laurent::delta(1)));
}

TEST_CASE("laurent ring axioms on seeded triples") {
  RatSampler rs(42);
  auto rnd = [&]() {
    Laurent l;
    for (int k = 0; k < 3; ++k)
      l += Laurent::delta((int)rs.next_in(-3, 3), GRat(rs.nonzero_signed()));
    return l;
  };
  for (int it = 0; it < 1000; ++it) {
    Laurent a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("grat ring axioms on seeded triples") {
  RatSampler rs(43);
  auto rnd = [&]() { return GRat(rs.nonzero_signed(), rs.nonzero_signed()); };
  for (int it = 0; it < 1000; ++it) {
    GRat a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("laurent quotient limits") {
  // (d + d^2) / d -> 1
  LRat q(Laurent::delta(1) + Laurent::delta(2), Laurent::delta(1));
  CHECK(q.limit() == grat(1));
  // 1 / (1 + d) -> 1
  CHECK(LRat(Laurent(1), Laurent(1) + Laurent::delta(1)).limit() == grat(1));
  // (1 + d) / d diverges
  CHECK_THROWS_AS(
      (LRat(Laurent(1) + Laurent::delta(1), Laurent::delta(1)).limit()),
      NegativePowers);
  // d^2/(d + d^3) -> 0
  CHECK(LRat(Laurent::delta(2), Laurent::delta(1) + Laurent::delta(3)).limit() ==
        grat(0));
}

TEST_CASE("expression substitution is exact") {
  ParamPoint pt;
  pt.set("beta1", grat(2));
  // beta1 / delta -> 2 d^-1
  Expr e = ex_mul({ex_param("beta1"), ex_delta(-1)});
  CHECK(ex_eval(e, pt) == Laurent::delta(-1, grat(2)));

  // d^2*(1/4) - d^2*alpha2^2 with alpha2 = 3/d  ->  d^2/4 - 9
  ParamPoint p2;
  p2.set("alpha2", Laurent::delta(-1, grat(3)));
  Expr e2 = ex_mul({ex_delta(2), ex_num(1, 4)}) -
            ex_mul({ex_delta(2), ex_pow(ex_param("alpha2"), 2)});
  CHECK(ex_eval(e2, p2) == Laurent::delta(2, grat(1, 4)) + Laurent(-9));

  // 0 * d^-3 is the empty term map
  Expr e3 = ex_mul({ex_num(0), ex_delta(-3)});
  CHECK(ex_eval(e3, pt).is_zero());

  CHECK_THROWS_AS(ex_eval(ex_param("missing"), pt), UnboundParameter);
}

TEST_CASE("expression json round trip") {
  Expr e = ex_add({ex_mul({ex_num(3, 7), ex_param("w"), ex_delta(-2)}),
                   ex_pow(ex_param("u"), 3), ex_num(GRat(rat(1), rat(2)))});
  Expr back = ex_from_json(ex_to_json(e));
  ParamPoint pt;
  pt.set("w", grat(5));
  pt.set("u", Laurent::delta(1, grat(2)));
  CHECK(ex_eval(e, pt) == ex_eval(back, pt));
}

TEST_CASE("gauge scaling doubles delta exponents") {
  ParamPoint pt;
  Expr e = ex_delta(-1) + ex_delta(2);
  Laurent v = ex_eval(e, pt, 2);
  CHECK(v == Laurent::delta(-2) + Laurent::delta(4));
}
