#include "askey/systems.hpp"

#include "askey/expr.hpp"

namespace askey {

namespace {

MPoly c(long n, long d = 1) { return MPoly(grat(n, d)); }
MPoly a1() { return MPoly::var(0); }
MPoly a2() { return MPoly::var(1); }
MPoly a3() { return MPoly::var(2); }
MPoly ap() { return MPoly::var(0); }  // degenerate single parameter
Word W(int p, int q, int s, int r) { return Word{p, q, s, r}; }

using LF = LinForm<MPoly>;

void add_all(NCPoly<MPoly>& dst, const NCPoly<MPoly>& src, const MPoly& f) {
  dst += src.scaled(f);
}

std::vector<SysRelation> s9_relations() {
  // L3 = H - L1 - L2 - (a1+a2+a3) is eliminated at build time.
  LF L1f = LF::L1(), L2f = LF::L2();
  LF L3f;
  L3f.l1 = c(-1);
  L3f.l2 = c(-1);
  L3f.h = c(1);
  L3f.c = -(a1() + a2() + a3());

  std::vector<SysRelation> rels;
  {
    // [L1,R] = 4{L1,L3} - 4{L1,L2} - (8+16a2)L2 + (8+16a3)L3 + 8(a2-a3)
    NCPoly<MPoly> rhs;
    add_all(rhs, nc_sym2(L1f, L3f), c(4));
    add_all(rhs, nc_sym2(L1f, L2f), c(-4));
    add_all(rhs, nc_pow(L2f, 1), -(c(8) + c(16) * a2()));
    add_all(rhs, nc_pow(L3f, 1), c(8) + c(16) * a3());
    rhs.add(W(0, 0, 0, 0), c(8) * (a2() - a3()));
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    // [L2,R] = 4{L2,L1} - 4{L2,L3} - (8+16a3)L3 + (8+16a1)L1 + 8(a3-a1)
    NCPoly<MPoly> rhs;
    add_all(rhs, nc_sym2(L2f, L1f), c(4));
    add_all(rhs, nc_sym2(L2f, L3f), c(-4));
    add_all(rhs, nc_pow(L3f, 1), -(c(8) + c(16) * a3()));
    add_all(rhs, nc_pow(L1f, 1), c(8) + c(16) * a1());
    rhs.add(W(0, 0, 0, 0), c(8) * (a3() - a1()));
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    add_all(rhs, nc_sym6(L1f, L2f, L3f), c(8, 3));
    add_all(rhs, nc_pow(L1f, 2), -(c(16) * a1() + c(12)));
    add_all(rhs, nc_pow(L2f, 2), -(c(16) * a2() + c(12)));
    add_all(rhs, nc_pow(L3f, 2), -(c(16) * a3() + c(12)));
    add_all(rhs, nc_sym2(L1f, L2f), c(52, 3));
    add_all(rhs, nc_sym2(L2f, L3f), c(52, 3));
    add_all(rhs, nc_sym2(L3f, L1f), c(52, 3));
    add_all(rhs, nc_pow(L1f, 1), c(16, 3) + c(176, 3) * a1());
    add_all(rhs, nc_pow(L2f, 1), c(16, 3) + c(176, 3) * a2());
    add_all(rhs, nc_pow(L3f, 1), c(16, 3) + c(176, 3) * a3());
    rhs.add(W(0, 0, 0, 0), c(32, 3) * (a1() + a2() + a3()) +
                               c(48) * (a1() * a2() + a2() * a3() + a3() * a1()) +
                               c(64) * a1() * a2() * a3());
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> e1_relations() {
  // Constants verified by exact fit against the 2D realization; they differ
  // from the published display in a handful of signs (see ledger/tests).
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 0, 0, 1), c(8));
    rhs.add(W(2, 0, 0, 0), c(-8));
    rhs.add(W(0, 1, 0, 0), c(-16) * a1());
    rhs.add(W(0, 0, 0, 0), c(8) * a1());
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 1, 0, 0), c(8));
    rhs.add(W(0, 1, 0, 1), c(-8));
    rhs.add(W(1, 0, 0, 0), c(16) + c(16) * a2() + c(16) * a3());
    rhs.add(W(0, 0, 0, 1), c(-8) + c(-16) * a3());
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 1, 0, 1), c(8));
    rhs.add(W(2, 1, 0, 0), c(-8, 3));
    rhs.add(W(0, 0, 0, 2), c(-12) + c(-16) * a3());
    rhs.add(W(2, 0, 0, 0), c(-176, 3) + c(-16) * a2() + c(-16) * a3());
    rhs.add(W(0, 2, 0, 0), c(-16) * a1());
    rhs.add(W(1, 0, 0, 1), c(176, 3) + c(32) * a3());
    rhs.add(W(0, 1, 0, 0), c(176, 3) * a1());
    rhs.add(W(0, 0, 0, 0), c(32, 3) * a1() + c(48) * a1() * a2() +
                               c(48) * a1() * a3() + c(64) * a1() * a2() * a3());
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> e2_relations() {
  // Solved exactly against the 2D realization (the published display is
  // garbled here; the spec flags the L3 reference).
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 1, 0, 0), c(-16) * a1());
    rhs.add(W(1, 0, 0, 0), c(-2) * a2());
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 0, 0, 0), c(-6) * a1() + c(-8) * a1() * a3());
    rhs.add(W(0, 1, 0, 0), c(2) * a2());
    rhs.add(W(1, 0, 0, 1), c(-4));
    rhs.add(W(2, 0, 0, 0), c(6));
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 0, 0, 0), c(-3, 4) * a2() * a2() + c(-1) * a2() * a2() * a3());
    rhs.add(W(0, 0, 0, 1), c(-12) * a1() + c(-16) * a1() * a3());
    rhs.add(W(0, 2, 0, 0), c(-16) * a1());
    rhs.add(W(1, 0, 0, 0), c(44) * a1() + c(16) * a1() * a3());
    rhs.add(W(1, 1, 0, 0), c(-2) * a2());
    rhs.add(W(2, 0, 0, 1), c(4));
    rhs.add(W(3, 0, 0, 0), c(-4));
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> e3p_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 1, 0, 0), c(-4) * a1());
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 0, 0, 0), c(16) * a1());
    rhs.add(W(0, 0, 0, 1), c(-8) * a1());
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 0, 0, 1), c(16) * a1());
    rhs.add(W(2, 0, 0, 0), c(-16) * a1());
    rhs.add(W(0, 2, 0, 0), c(-4) * a1());
    rhs.add(W(0, 0, 0, 0), c(16) * a1() * a1());
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> e8_relations() {
  // Verified against the 2D realization with L1's potential fixed by
  // [H, L1] = 0 (a2/(4 zb^2), not a2/(2 zb^2)).
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(2, 0, 0, 0), c(-8));
    rhs.add(W(0, 0, 0, 0), c(-2) * a1() * a2());
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 1, 0, 0), c(8));
    rhs.add(W(1, 0, 0, 0), c(16));
    rhs.add(W(0, 0, 0, 1), c(2) * a3());
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(2, 1, 0, 0), c(-8, 3));
    rhs.add(W(2, 0, 0, 0), c(-176, 3));
    rhs.add(W(1, 0, 0, 1), c(-4) * a3());
    rhs.add(W(0, 0, 0, 2), a2());
    rhs.add(W(0, 1, 0, 0), c(-4) * a1() * a2());
    rhs.add(W(0, 0, 0, 0), c(4, 3) * a1() * a2() - a1() * a3() * a3());
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> e10_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(1, 0, 0, 0), c(2) * a1());
    rhs.add(W(0, 0, 0, 0), c(-1, 2) * a2() * a2() - c(1, 6) * a1() * a3());
    rels.push_back({RelKind::CommLR, 1, rhs, "[L1,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(2, 0, 0, 0), c(24));
    rhs.add(W(1, 0, 0, 0), c(4) * a3());
    rhs.add(W(0, 1, 0, 0), c(-2) * a1());
    rhs.add(W(0, 0, 0, 1), a2());
    rels.push_back({RelKind::CommLR, 2, rhs, "[L2,R]"});
  }
  {
    NCPoly<MPoly> rhs;
    rhs.add(W(3, 0, 0, 0), c(-16));
    rhs.add(W(0, 0, 0, 2), c(-1, 4) * a1());
    rhs.add(W(1, 1, 0, 0), c(2) * a1());
    rhs.add(W(1, 0, 0, 1), c(-2) * a2());
    rhs.add(W(2, 0, 0, 0), c(-4) * a3());
    rhs.add(W(0, 1, 0, 0), -(a2() * a2() + c(1, 3) * a1() * a3()));
    rhs.add(W(0, 0, 0, 1), c(-1, 3) * a2() * a3());
    rhs.add(W(0, 0, 0, 0), -a1() * a1() + c(1, 27) * a3() * a3() * a3());
    rels.push_back({RelKind::RSquared, 0, rhs, "R^2"});
  }
  return rels;
}

std::vector<SysRelation> s3_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = -2L2
    rhs.add(W(0, 1, 0, 0), c(-2));
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = X^2 + 2L1 - H + a
    rhs.add(W(0, 0, 2, 0), c(1));
    rhs.add(W(1, 0, 0, 0), c(2));
    rhs.add(W(0, 0, 0, 1), c(-1));
    rhs.add(W(0, 0, 0, 0), ap());
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = -{L1,X} - (1/2+2a)X
    rhs.add(W(1, 0, 1, 0), c(-1));
    rhs.add(W(0, 0, 1, 0), -(c(1, 2) + c(2) * ap()));
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    // Casimir fitted on the 2D realization, normalized to unit L1^2
    NCPoly<MPoly> rhs;
    rhs.add(W(2, 0, 0, 0), c(1));
    rhs.add(W(0, 2, 0, 0), c(1));
    rhs.add(W(1, 0, 2, 0), c(1, 6));
    rhs.add(W(0, 0, 2, 0), c(11, 12) + ap());
    rhs.add(W(1, 0, 0, 0), c(-2, 3) + ap());
    rhs.add(W(1, 0, 0, 1), c(-1));
    rhs.add(W(0, 0, 0, 1), c(-1, 6));
    rhs.add(W(0, 0, 0, 0), c(-5, 6) * ap());
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

std::vector<SysRelation> e14_relations() {
  MPoly iu = MPoly(GRat::i_unit());
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = i X^2
    rhs.add(W(0, 0, 2, 0), iu);
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = 2i L1
    rhs.add(W(1, 0, 0, 0), iu * GRat(2));
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = i{L2,X} + (i/2)X
    rhs.add(W(0, 1, 1, 0), iu);
    rhs.add(W(0, 0, 1, 0), iu * grat(1, 2));
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // L1^2 - (1/6){L2,X,X} - (11/12)X^2 + (a/4)H = 0
    rhs.add(W(2, 0, 0, 0), c(1));
    rhs.add(W(0, 1, 2, 0), c(-1, 6));
    rhs.add(W(0, 0, 2, 0), c(-11, 12));
    rhs.add(W(0, 0, 0, 1), c(1, 4) * ap());
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

std::vector<SysRelation> e6_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = -2L2
    rhs.add(W(0, 1, 0, 0), c(-2));
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = X^2 - H
    rhs.add(W(0, 0, 2, 0), c(1));
    rhs.add(W(0, 0, 0, 1), c(-1));
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = -{X,L1} - (2a+1/2)X
    rhs.add(W(1, 0, 1, 0), c(-1));
    rhs.add(W(0, 0, 1, 0), -(c(2) * ap() + c(1, 2)));
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    // L2^2 + (1/4){L1,X^2} + (1/2)XL1X - L1H + (a+3/4)X^2 = 0 canonicalized
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 2, 0, 0), c(1));
    rhs.add(W(1, 0, 2, 0), c(1, 6));
    rhs.add(W(0, 0, 0, 1), c(-1, 6));
    rhs.add(W(0, 0, 2, 0), ap() + c(11, 12));
    rhs.add(W(1, 0, 0, 1), c(-1));
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

std::vector<SysRelation> e5_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = a/2
    rhs.add(W(0, 0, 0, 0), c(1, 2) * ap());
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = -L1
    rhs.add(W(1, 0, 0, 0), c(-1));
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = 2X^3 - HX
    rhs.add(W(0, 0, 3, 0), c(2));
    rhs.add(W(0, 0, 1, 1), c(-1));
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // X^4 - HX^2 + L1^2 + aL2 = 0
    rhs.add(W(0, 0, 4, 0), c(1));
    rhs.add(W(0, 0, 2, 1), c(-1));
    rhs.add(W(2, 0, 0, 0), c(1));
    rhs.add(W(0, 1, 0, 0), ap());
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

std::vector<SysRelation> e4_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = a
    rhs.add(W(0, 0, 0, 0), ap());
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = X^2
    rhs.add(W(0, 0, 2, 0), c(1));
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = X^3 + HX - {L1,X}
    rhs.add(W(0, 0, 3, 0), c(1));
    rhs.add(W(0, 0, 1, 1), c(1));
    rhs.add(W(1, 0, 1, 0), c(-1));
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    // X^4 - 2{L1,X^2} + 2HX^2 + H^2 + 4aL2 = 0; here [X,[X,L1]] = 0 so
    // {L1,X^2} = {X,X,L1}/3.
    NCPoly<MPoly> rhs;
    rhs.add(W(0, 0, 4, 0), c(1));
    rhs.add(W(1, 0, 2, 0), c(-2, 3));
    rhs.add(W(0, 0, 2, 1), c(2));
    rhs.add(W(0, 0, 0, 2), c(1));
    rhs.add(W(0, 1, 0, 0), c(4) * ap());
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

std::vector<SysRelation> e3_relations() {
  std::vector<SysRelation> rels;
  {
    NCPoly<MPoly> rhs;  // [X,L1] = 2L2
    rhs.add(W(0, 1, 0, 0), c(2));
    rels.push_back({RelKind::CommXL, 1, rhs, "[X,L1]"});
  }
  {
    NCPoly<MPoly> rhs;  // [X,L2] = H - 2L1
    rhs.add(W(1, 0, 0, 0), c(-2));
    rhs.add(W(0, 0, 0, 1), c(1));
    rels.push_back({RelKind::CommXL, 2, rhs, "[X,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // [L1,L2] = 2aX
    rhs.add(W(0, 0, 1, 0), c(2) * ap());
    rels.push_back({RelKind::CommL1L2, 0, rhs, "[L1,L2]"});
  }
  {
    NCPoly<MPoly> rhs;  // L1^2 + L2^2 - L1H + aX^2 - a = 0
    rhs.add(W(2, 0, 0, 0), c(1));
    rhs.add(W(0, 2, 0, 0), c(1));
    rhs.add(W(1, 0, 0, 1), c(-1));
    rhs.add(W(0, 0, 2, 0), ap());
    rhs.add(W(0, 0, 0, 0), -ap());
    rels.push_back({RelKind::CasimirG, 0, rhs, "G"});
  }
  return rels;
}

}  // namespace

const char* system_name(SystemId id) {
  switch (id) {
    case SystemId::S9: return "S9";
    case SystemId::E1: return "E1";
    case SystemId::E2: return "E2";
    case SystemId::E3p: return "E3'";
    case SystemId::E8: return "E8";
    case SystemId::E10: return "E10";
    case SystemId::S3: return "S3";
    case SystemId::E14: return "E14";
    case SystemId::E6: return "E6";
    case SystemId::E5: return "E5";
    case SystemId::E4: return "E4";
    case SystemId::E3: return "E3";
    case SystemId::SO3free: return "so3";
    case SystemId::E2free: return "e2";
    case SystemId::SL2sing: return "sl2";
    case SystemId::OSCsing: return "oscillator";
  }
  throw AskeyError("system_name");
}

SystemId system_from_name(const std::string& s) {
  for (SystemId id :
       {SystemId::S9, SystemId::E1, SystemId::E2, SystemId::E3p, SystemId::E8,
        SystemId::E10, SystemId::S3, SystemId::E14, SystemId::E6, SystemId::E5,
        SystemId::E4, SystemId::E3, SystemId::SO3free, SystemId::E2free,
        SystemId::SL2sing, SystemId::OSCsing})
    if (s == system_name(id)) return id;
  throw UnknownVariant("unknown system: " + s);
}

const std::map<SystemId, SystemEntry>& system_catalog() {
  static const std::map<SystemId, SystemEntry> cat = [] {
    std::map<SystemId, SystemEntry> m;
    auto put = [&](SystemId id, bool deg, std::vector<SysRelation> rels) {
      SystemEntry e;
      e.id = id;
      e.name = system_name(id);
      e.degenerate = deg;
      e.nparams = deg ? 1 : 3;
      e.relations = std::move(rels);
      m[id] = std::move(e);
    };
    put(SystemId::S9, false, s9_relations());
    put(SystemId::E1, false, e1_relations());
    put(SystemId::E2, false, e2_relations());
    put(SystemId::E3p, false, e3p_relations());
    put(SystemId::E8, false, e8_relations());
    put(SystemId::E10, false, e10_relations());
    put(SystemId::S3, true, s3_relations());
    put(SystemId::E14, true, e14_relations());
    put(SystemId::E6, true, e6_relations());
    put(SystemId::E5, true, e5_relations());
    put(SystemId::E4, true, e4_relations());
    put(SystemId::E3, true, e3_relations());
    for (SystemId id : {SystemId::SO3free, SystemId::E2free, SystemId::SL2sing,
                        SystemId::OSCsing}) {
      SystemEntry e;
      e.id = id;
      e.name = system_name(id);
      e.lie_target = true;
      e.nparams = 0;
      m[id] = std::move(e);
    }
    for (auto& [id, e] : m) check_degree_bounds(e);
    return m;
  }();
  return cat;
}

void check_degree_bounds(const SystemEntry& e) {
  for (auto& rel : e.relations) {
    int cap = 0;
    switch (rel.kind) {
      case RelKind::CommLR: cap = 2; break;
      case RelKind::RSquared: cap = 3; break;
      case RelKind::CommXL:
      case RelKind::CommL1L2: cap = 1; break;
      case RelKind::CasimirG: cap = 2; break;
    }
    for (auto& [w, coeff] : rel.rhs.t) {
      int allowed = cap - w.bound_size();
      if (allowed < 0 || mpoly_total_degree(coeff) > allowed)
        throw AskeyError("degree bound violated in " + e.name + " " + rel.label);
    }
  }
}

// ---------- checkers ----------

namespace {

template <class State, class Apply>
struct CompEval {
  Apply apply;  // State(GenId, const State&)
  std::map<std::vector<GenId>, State> memo;

  const State& eval(const std::vector<GenId>& comp, const State& seed) {
    auto it = memo.find(comp);
    if (it != memo.end()) return it->second;
    State out = seed;
    if (!comp.empty()) {
      std::vector<GenId> rest(comp.begin() + 1, comp.end());
      out = apply(comp[0], eval(rest, seed));
    }
    return memo.emplace(comp, std::move(out)).first->second;
  }
};

template <class T>
T grat_cast(const GRat& g) {
  return T(g);
}

}  // namespace

template <class T>
ResidualReport check_structure(const MatrixRep<T>& rep,
                               const std::vector<SysRelation>& rels) {
  ResidualReport rep_out;
  int n = rep.gens.begin()->second.n;
  for (auto& rel : rels) {
    Mat<T> acc(n, n);
    for (auto& [f, comp] : relation_lhs(rel)) {
      Mat<T> m = Mat<T>::identity(n);
      for (auto it = comp.rbegin(); it != comp.rend(); ++it)
        m = rep.gens.at(*it) * m;
      acc += m.scaled(T(GRat(f)));
    }
    for (auto& [w, coeff] : rel.rhs.t) {
      T cv = mpoly_eval<T>(coeff, rep.params);
      for (auto& [f, comp] : expand_word(w)) {
        Mat<T> m = Mat<T>::identity(n);
        for (auto it = comp.rbegin(); it != comp.rend(); ++it)
          m = rep.gens.at(*it) * m;
        acc -= m.scaled(cv * T(GRat(f)));
      }
    }
    rep_out.rows.push_back({rel.label, acc.is_zero()});
  }
  return rep_out;
}
template ResidualReport check_structure<GRat>(const MatrixRep<GRat>&,
                                              const std::vector<SysRelation>&);
template ResidualReport check_structure<Laurent>(
    const MatrixRep<Laurent>&, const std::vector<SysRelation>&);

ResidualReport check_structure(const OpRep& rep,
                               const std::vector<SysRelation>& rels) {
  ResidualReport out;
  for (auto& rel : rels) {
    bool zero = true;
    for (int d = 0; d <= rep.test_degree && zero; ++d) {
      Poly<GRat> f = Poly<GRat>::x(d);
      auto apply = [&](GenId g, const Poly<GRat>& v) {
        return rep.gens.at(g).apply(v);
      };
      CompEval<Poly<GRat>, decltype(apply)> ev{apply, {}};
      Poly<GRat> acc;
      for (auto& [pf, comp] : relation_lhs(rel))
        acc += ev.eval(comp, f) * GRat(pf);
      for (auto& [w, coeff] : rel.rhs.t) {
        GRat cv = mpoly_eval<GRat>(coeff, rep.params);
        for (auto& [pf, comp] : expand_word(w))
          acc -= ev.eval(comp, f) * (cv * GRat(pf));
      }
      zero = acc.is_zero();
    }
    out.rows.push_back({rel.label, zero});
  }
  return out;
}

ResidualReport check_structure(const AmbientRep& rep,
                               const std::vector<SysRelation>& rels) {
  ResidualReport out;
  for (auto& rel : rels) {
    bool zero = true;
    for (auto& tf : rep.tests) {
      if (!zero) break;
      auto apply = [&](GenId g, const MRat& v) {
        MRat r = rep.gens.at(g).apply(v);
        r.num = rep.space.reduce(r.num);
        r.strip();
        return r;
      };
      CompEval<MRat, decltype(apply)> ev{apply, {}};
      MRat seed{tf};
      MRat acc;
      for (auto& [pf, comp] : relation_lhs(rel))
        acc = acc + ev.eval(comp, seed) * MRat(GRat(pf));
      for (auto& [w, coeff] : rel.rhs.t) {
        GRat cv = mpoly_eval<GRat>(coeff, rep.params);
        for (auto& [pf, comp] : expand_word(w))
          acc = acc - ev.eval(comp, seed) * MRat(cv * GRat(pf));
      }
      zero = rep.space.is_zero_mod(acc.num);
    }
    out.rows.push_back({rel.label, zero});
  }
  return out;
}

// ---------- 2D realizations ----------

namespace {

MRat mr(MPoly p) { return MRat(std::move(p)); }
MPoly sv(int k, int e = 1) { return MPoly::var(k, e); }

std::vector<MPoly> tests_xy(int maxdeg) {
  std::vector<MPoly> t;
  for (int a = 0; a + 0 <= maxdeg; ++a)
    for (int b = 0; a + b <= maxdeg; ++b) t.push_back(sv(0, a) * sv(1, b));
  return t;
}
std::vector<MPoly> tests_sphere(int maxdeg) {
  std::vector<MPoly> t;
  for (int a = 0; a <= maxdeg; ++a)
    for (int b = 0; a + b <= maxdeg; ++b)
      for (int cdeg = 0; cdeg <= 1 && a + b + cdeg <= maxdeg; ++cdeg)
        t.push_back(sv(0, a) * sv(1, b) * sv(2, cdeg));
  return t;
}

Space plane_space(const char* n0 = "x", const char* n1 = "y") {
  Space s;
  s.nvars = 2;
  s.names = {n0, n1, ""};
  return s;
}
Space sphere_space() {
  Space s;
  s.nvars = 3;
  s.names = {"s1", "s2", "s3"};
  s.quadric = {{2, MPoly(1) - pow_int(sv(0), 2) - pow_int(sv(1), 2)}};
  return s;
}

AmbientOp sym2op(const AmbientOp& A, const AmbientOp& B) {
  AmbientOp r = ambient_compose_first_order(A, B);
  r += ambient_compose_first_order(B, A);
  return r;
}

struct SphereGens {
  AmbientOp J1, J2, J3, J1sq, J2sq, J3sq;
};
SphereGens sphere_J() {
  SphereGens g;
  g.J1 = AmbientOp::partial(2, mr(sv(1)));
  g.J1 += AmbientOp::partial(1, -mr(sv(2)));
  g.J2 = AmbientOp::partial(0, mr(sv(2)));
  g.J2 += AmbientOp::partial(2, -mr(sv(0)));
  g.J3 = AmbientOp::partial(1, mr(sv(0)));
  g.J3 += AmbientOp::partial(0, -mr(sv(1)));
  g.J1sq = ambient_compose_first_order(g.J1, g.J1);
  g.J2sq = ambient_compose_first_order(g.J2, g.J2);
  g.J3sq = ambient_compose_first_order(g.J3, g.J3);
  return g;
}

}  // namespace

AmbientRep ambient_realization(SystemId id, const std::vector<GRat>& params) {
  AmbientRep rep;
  rep.params = params;
  const GRat i = GRat::i_unit();
  switch (id) {
    case SystemId::S9: {
      rep.space = sphere_space();
      rep.tests = tests_sphere(4);
      auto g = sphere_J();
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp H = g.J1sq;
      H += g.J2sq;
      H += g.J3sq;
      H += AmbientOp::mult(MRat(MPoly(A1), pow_int(sv(0), 2)));
      H += AmbientOp::mult(MRat(MPoly(A2), pow_int(sv(1), 2)));
      H += AmbientOp::mult(MRat(MPoly(A3), pow_int(sv(2), 2)));
      AmbientOp L1 = g.J1sq;
      L1 += AmbientOp::mult(MRat(sv(1, 2) * GRat(A3), pow_int(sv(2), 2)));
      L1 += AmbientOp::mult(MRat(sv(2, 2) * GRat(A2), pow_int(sv(1), 2)));
      AmbientOp L2 = g.J2sq;
      L2 += AmbientOp::mult(MRat(sv(2, 2) * GRat(A1), pow_int(sv(0), 2)));
      L2 += AmbientOp::mult(MRat(sv(0, 2) * GRat(A3), pow_int(sv(2), 2)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::S3: {
      rep.space = sphere_space();
      rep.tests = tests_sphere(4);
      auto g = sphere_J();
      const GRat& A = params[0];
      AmbientOp H = g.J1sq;
      H += g.J2sq;
      H += g.J3sq;
      H += AmbientOp::mult(MRat(MPoly(A), pow_int(sv(2), 2)));
      AmbientOp L1 = g.J1sq;
      L1 += AmbientOp::mult(MRat(sv(1, 2) * GRat(A), pow_int(sv(2), 2)));
      AmbientOp L2 = sym2op(g.J1, g.J2).scaled(MRat(grat(1, 2)));
      L2 += AmbientOp::mult(MRat(sv(0) * sv(1) * GRat(-A), pow_int(sv(2), 2)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, g.J3}};
      return rep;
    }
    case SystemId::E1: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr((sv(0, 2) + sv(1, 2)) * A1));
      H += AmbientOp::mult(MRat(MPoly(A2), sv(0, 2)));
      H += AmbientOp::mult(MRat(MPoly(A3), sv(1, 2)));
      AmbientOp L1 = dyy;
      L1 += AmbientOp::mult(mr(sv(1, 2) * A1));
      L1 += AmbientOp::mult(MRat(MPoly(A3), sv(1, 2)));
      AmbientOp M = AmbientOp::partial(1, mr(sv(0)));
      M += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L2 = ambient_compose_first_order(M, M);
      L2 += AmbientOp::mult(MRat(sv(1, 2) * A2, sv(0, 2)));
      L2 += AmbientOp::mult(MRat(sv(0, 2) * A3, sv(1, 2)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::E2: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr(sv(0, 2) * (GRat(4) * A1) + sv(1, 2) * A1 +
                              sv(0) * A2));
      H += AmbientOp::mult(MRat(MPoly(A3), sv(1, 2)));
      AmbientOp L1 = dyy;
      L1 += AmbientOp::mult(mr(sv(1, 2) * A1));
      L1 += AmbientOp::mult(MRat(MPoly(A3), sv(1, 2)));
      AmbientOp M = AmbientOp::partial(1, mr(sv(0)));
      M += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L2 = sym2op(M, AmbientOp::partial(1)).scaled(MRat(grat(1, 2)));
      // the display's +a2/4 y^2 fails [H,L2] = 0; the sign is forced
      L2 += AmbientOp::mult(mr(sv(1, 2) * sv(0) * (-A1) +
                               sv(1, 2) * (-A2 / GRat(4))));
      L2 += AmbientOp::mult(MRat(sv(0) * A3, sv(1, 2)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::E3p: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr((sv(0, 2) + sv(1, 2)) * A1 + sv(0) * A2 +
                              sv(1) * A3 +
                              MPoly((A2 * A2 + A3 * A3) / (GRat(4) * A1))));
      AmbientOp L1 = dyy;
      L1 += AmbientOp::mult(mr(sv(1, 2) * A1 + sv(1) * A3 +
                               MPoly(A3 * A3 / (GRat(4) * A1))));
      // L2 = 2 dx dy + (2 a1 x + a2)(2 a1 y + a3)/(2 a1)
      AmbientOp L2 = AmbientOp{{{mr(MPoly(grat(2))), {1, 1, 0}}}};
      MPoly fx = sv(0) * (GRat(2) * A1) + MPoly(A2);
      MPoly fy = sv(1) * (GRat(2) * A1) + MPoly(A3);
      L2 += AmbientOp::mult(mr(fx * fy * (GRat(1) / (GRat(2) * A1))));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::E8: {
      rep.space = plane_space("z", "zb");
      rep.tests = tests_xy(6);
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp H = AmbientOp{{{mr(MPoly(grat(4))), {1, 1, 0}}}};
      H += AmbientOp::mult(mr(sv(0) * sv(1) * A1));
      H += AmbientOp::mult(MRat(sv(0) * A2, sv(1, 3)));
      H += AmbientOp::mult(MRat(MPoly(A3), sv(1, 2)));
      AmbientOp L1 = AmbientOp{{{mr(MPoly(grat(-1))), {2, 0, 0}}}};
      L1 += AmbientOp::mult(mr(sv(1, 2) * (-A1 / GRat(4))));
      // the display's a2/(2 zb^2) fails [H,L1] = 0; a2/(4 zb^2) is forced
      L1 += AmbientOp::mult(MRat(MPoly(A2 / GRat(4)), sv(1, 2)));
      AmbientOp D = AmbientOp::partial(0, mr(sv(0)));
      D += AmbientOp::partial(1, -mr(sv(1)));
      AmbientOp L2 = ambient_compose_first_order(D, D).scaled(MRat(grat(-1)));
      L2 += AmbientOp::mult(MRat(sv(0, 2) * A2, sv(1, 2)));
      L2 += AmbientOp::mult(MRat(sv(0) * A3, sv(1)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::E10: {
      rep.space = plane_space("z", "zb");
      rep.tests = tests_xy(6);
      const GRat &A1 = params[0], &A2 = params[1], &A3 = params[2];
      AmbientOp H = AmbientOp{{{mr(MPoly(grat(4))), {1, 1, 0}}}};
      H += AmbientOp::mult(mr((sv(0) * sv(1) - sv(1, 3) * grat(1, 2)) * A1 +
                              (sv(0) - sv(1, 2) * grat(3, 2)) * A2 +
                              sv(1) * A3));
      AmbientOp L1 = AmbientOp{{{mr(MPoly(grat(-1))), {2, 0, 0}}}};
      L1 += AmbientOp::mult(mr(sv(1, 2) * (-A1 / GRat(4)) +
                               sv(1) * (-A2 / GRat(2)) + MPoly(A3 / GRat(12))));
      AmbientOp D = AmbientOp::partial(0, mr(sv(0)));
      D += AmbientOp::partial(1, -mr(sv(1)));
      AmbientOp L2 = sym2op(D, AmbientOp::partial(0));
      L2 += AmbientOp{{{mr(MPoly(grat(-1))), {0, 2, 0}}}};
      MPoly au = (sv(0) * GRat(2) - sv(1, 2) * GRat(3)) * (A1 / GRat(16)) +
                 sv(1) * (-A2 / GRat(2)) + MPoly(A3 / GRat(4));
      L2 += AmbientOp::mult(mr((sv(0) * GRat(2) + sv(1, 2)) * au)).scaled(
          MRat(grat(-1)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}};
      return rep;
    }
    case SystemId::E14: {
      rep.space = plane_space("z", "zb");
      rep.tests = tests_xy(6);
      const GRat& A = params[0];
      AmbientOp H = AmbientOp{{{mr(MPoly(grat(4))), {1, 1, 0}}}};
      H += AmbientOp::mult(MRat(MPoly(A), sv(1, 2)));
      AmbientOp X = AmbientOp::partial(0);
      AmbientOp Dd = AmbientOp::partial(0, mr(sv(0)));
      Dd += AmbientOp::partial(1, -mr(sv(1)));
      AmbientOp L1 = sym2op(Dd, X).scaled(MRat(i / GRat(2)));
      L1 += AmbientOp::mult(MRat(MPoly(-(i / GRat(2)) * A), sv(1)));
      AmbientOp L2 = ambient_compose_first_order(Dd, Dd).scaled(MRat(grat(-1)));
      L2 += AmbientOp::mult(MRat(sv(0) * A, sv(1)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, X}};
      return rep;
    }
    case SystemId::E6: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat& A = params[0];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(MRat(MPoly(A), sv(0, 2)));
      AmbientOp X = AmbientOp::partial(1);
      AmbientOp M = AmbientOp::partial(1, mr(sv(0)));
      M += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L1 = ambient_compose_first_order(M, M);
      L1 += AmbientOp::mult(MRat(sv(1, 2) * A, sv(0, 2)));
      AmbientOp L2 = sym2op(M, AmbientOp::partial(0)).scaled(MRat(grat(1, 2)));
      L2 += AmbientOp::mult(MRat(sv(1) * (-A), sv(0, 2)));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, X}};
      return rep;
    }
    case SystemId::E5: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat& A = params[0];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr(sv(0) * A));
      AmbientOp X = AmbientOp::partial(1);
      AmbientOp L1 = AmbientOp{{{mr(MPoly(1)), {1, 1, 0}}}};
      L1 += AmbientOp::mult(mr(sv(1) * (A / GRat(2))));
      AmbientOp M = AmbientOp::partial(1, mr(sv(0)));
      M += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L2 = sym2op(M, AmbientOp::partial(1)).scaled(MRat(grat(1, 2)));
      L2 += AmbientOp::mult(mr(sv(1, 2) * (-A / GRat(4))));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, X}};
      return rep;
    }
    case SystemId::E4: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat& A = params[0];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr(sv(0) * A + sv(1) * (A * i)));
      AmbientOp X = AmbientOp::partial(0);
      X += AmbientOp::partial(1, mr(MPoly(i)));
      AmbientOp L1 = dxx;
      L1 += AmbientOp::mult(mr(sv(0) * A));
      AmbientOp M = AmbientOp::partial(1, mr(sv(0)));
      M += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L2 = sym2op(M, X).scaled(MRat(i / GRat(2)));
      MPoly xiy = sv(0) + sv(1) * i;
      L2 += AmbientOp::mult(mr(xiy * xiy * (-A / GRat(4))));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, X}};
      return rep;
    }
    case SystemId::E3: {
      rep.space = plane_space();
      rep.tests = tests_xy(6);
      const GRat& A = params[0];
      AmbientOp dxx = AmbientOp{{{mr(MPoly(1)), {2, 0, 0}}}};
      AmbientOp dyy = AmbientOp{{{mr(MPoly(1)), {0, 2, 0}}}};
      AmbientOp H = dxx;
      H += dyy;
      H += AmbientOp::mult(mr((sv(0, 2) + sv(1, 2)) * A));
      AmbientOp X = AmbientOp::partial(1, mr(sv(0)));
      X += AmbientOp::partial(0, -mr(sv(1)));
      AmbientOp L1 = dyy;
      L1 += AmbientOp::mult(mr(sv(1, 2) * A));
      AmbientOp L2 = AmbientOp{{{mr(MPoly(1)), {1, 1, 0}}}};
      L2 += AmbientOp::mult(mr(sv(0) * sv(1) * A));
      rep.gens = {{gL1, L1}, {gL2, L2}, {gH, H}, {gX, X}};
      return rep;
    }
    default:
      throw UnknownVariant("ambient_realization: no 2D realization");
  }
}

ResidualReport check_2d_realization(SystemId id, const std::vector<GRat>& params,
                                    int max_test_degree) {
  const SystemEntry& entry = system_catalog().at(id);
  AmbientRep rep = ambient_realization(id, params);
  if (rep.space.nvars == 2) rep.tests = tests_xy(max_test_degree);
  ResidualReport out;

  // [H, gen] = 0 for every non-H generator
  for (auto& [g, op] : rep.gens) {
    if (g == gH) continue;
    bool zero = true;
    for (auto& tf : rep.tests) {
      MRat f{tf};
      MRat r = rep.gens.at(gH).apply(op.apply(f)) -
               op.apply(rep.gens.at(gH).apply(f));
      if (!rep.space.is_zero_mod(r.num)) {
        zero = false;
        break;
      }
    }
    std::string nm = g == gL1 ? "L1" : g == gL2 ? "L2" : "X";
    out.rows.push_back({"[H," + nm + "]", zero});
  }

  ResidualReport rels = check_structure(rep, entry.relations);
  out.rows.insert(out.rows.end(), rels.rows.begin(), rels.rows.end());
  return out;
}

// ---------- Lie closures ----------

std::vector<LieBracketRel> lie_table(LieAlgebra which) {
  switch (which) {
    case LieAlgebra::so3:
      return {{"J1", "J2", {{grat(-1), "J3"}}, "[J1,J2]=-J3"},
              {"J2", "J3", {{grat(-1), "J1"}}, "[J2,J3]=-J1"},
              {"J3", "J1", {{grat(-1), "J2"}}, "[J3,J1]=-J2"}};
    case LieAlgebra::e2:
      return {{"P1", "P2", {}, "[P1,P2]=0"},
              {"P1", "M", {{grat(1), "P2"}}, "[P1,M]=P2"},
              {"P2", "M", {{grat(-1), "P1"}}, "[P2,M]=-P1"}};
    case LieAlgebra::sl2:
      // K is central; T := [S1,S2] closes the triple (verified realization:
      // [T,S1] = -16 S1, [T,S2] = 16 S2 + 16 S1), an sl(2) basis change away
      // from the standard (h,e,f).
      return {{"S1", "S2", {{grat(1), "T"}}, "[S1,S2]=T"},
              {"T", "S1", {{grat(-16), "S1"}}, "[T,S1]=-16S1"},
              {"T", "S2", {{grat(16), "S2"}, {grat(16), "S1"}},
               "[T,S2]=16S2+16S1"},
              {"K", "S1", {}, "[K,S1]=0"},
              {"K", "S2", {}, "[K,S2]=0"}};
    case LieAlgebra::oscillator:
      return {{"L2", "X", {{grat(2), "L1"}}, "[L2,X]=2L1"},
              {"L2", "L1", {{grat(2), "X"}}, "[L2,L1]=2X"},
              {"X", "L1", {{grat(-1), "H"}}, "[X,L1]=-H"},
              {"H", "X", {}, "[H,X]=0"},
              {"H", "L1", {}, "[H,L1]=0"},
              {"H", "L2", {}, "[H,L2]=0"}};
  }
  throw AskeyError("lie_table");
}

namespace {

template <class ApplyBracket>
ResidualReport lie_check_impl(LieAlgebra which, ApplyBracket&& check_one) {
  ResidualReport out;
  for (auto& rel : lie_table(which)) out.rows.push_back({rel.label, check_one(rel)});
  return out;
}

}  // namespace

template <class T>
ResidualReport check_lie_closure(const LieRepMat<T>& rep, LieAlgebra which) {
  return lie_check_impl(which, [&](const LieBracketRel& rel) {
    const Mat<T>& A = rep.gens.at(rel.a);
    const Mat<T>& B = rep.gens.at(rel.b);
    Mat<T> acc = commutator(A, B);
    for (auto& [cf, g] : rel.rhs) {
      if (g == "1")
        acc -= Mat<T>::identity(acc.n).scaled(T(cf));
      else
        acc -= rep.gens.at(g).scaled(T(cf));
    }
    return acc.is_zero();
  });
}
template ResidualReport check_lie_closure<GRat>(const LieRepMat<GRat>&,
                                                LieAlgebra);
template ResidualReport check_lie_closure<Laurent>(const LieRepMat<Laurent>&,
                                                   LieAlgebra);

ResidualReport check_lie_closure(const LieRepOp& rep, LieAlgebra which) {
  return lie_check_impl(which, [&](const LieBracketRel& rel) {
    const PolyOpQ& A = rep.gens.at(rel.a);
    const PolyOpQ& B = rep.gens.at(rel.b);
    for (int d = 0; d <= rep.test_degree; ++d) {
      Poly<GRat> f = Poly<GRat>::x(d);
      Poly<GRat> acc = A.apply(B.apply(f)) - B.apply(A.apply(f));
      for (auto& [cf, g] : rel.rhs) {
        if (g == "1")
          acc -= f * cf;
        else
          acc -= rep.gens.at(g).apply(f) * cf;
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  });
}

ResidualReport check_lie_closure(const LieRepAmbient& rep, LieAlgebra which) {
  return lie_check_impl(which, [&](const LieBracketRel& rel) {
    const AmbientOp& A = rep.gens.at(rel.a);
    const AmbientOp& B = rep.gens.at(rel.b);
    for (auto& tf : rep.tests) {
      MRat f{tf};
      MRat acc = A.apply(B.apply(f)) - B.apply(A.apply(f));
      for (auto& [cf, g] : rel.rhs) {
        if (g == "1")
          acc = acc - f * MRat(cf);
        else
          acc = acc - rep.gens.at(g).apply(f) * MRat(cf);
      }
      if (!rep.space.is_zero_mod(acc.num)) return false;
    }
    return true;
  });
}

LieRepAmbient free_system_realization(SystemId id) {
  LieRepAmbient rep;
  if (id == SystemId::SO3free) {
    rep.space = sphere_space();
    rep.tests = tests_sphere(4);
    auto g = sphere_J();
    rep.gens = {{"J1", g.J1}, {"J2", g.J2}, {"J3", g.J3}};
    return rep;
  }
  if (id == SystemId::E2free) {
    rep.space = plane_space();
    rep.tests = tests_xy(6);
    AmbientOp M = AmbientOp::partial(1, MRat(MPoly::var(0)));
    M += AmbientOp::partial(0, -MRat(MPoly::var(1)));
    rep.gens = {{"P1", AmbientOp::partial(0)},
                {"P2", AmbientOp::partial(1)},
                {"M", M}};
    return rep;
  }
  throw UnknownVariant("free_system_realization");
}

// ---------- JSON ----------

namespace {
nlohmann::ordered_json mpoly_to_json(const MPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto& [e, c] : p.t)
    terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", grat_to_json(c)}});
  return terms;
}
}  // namespace

nlohmann::ordered_json catalog_to_json() {
  using J = nlohmann::ordered_json;
  J systems = J::array();
  for (auto& [id, e] : system_catalog()) {
    J rels = J::array();
    for (auto& rel : e.relations) {
      J terms = J::array();
      for (auto& [w, coeff] : rel.rhs.t)
        terms.push_back({{"word", {w.p, w.q, w.s, w.r}},
                         {"coeff", mpoly_to_json(coeff)}});
      const char* kind = rel.kind == RelKind::CommLR      ? "comm_L_R"
                         : rel.kind == RelKind::RSquared  ? "R_squared"
                         : rel.kind == RelKind::CommXL    ? "comm_X_L"
                         : rel.kind == RelKind::CommL1L2  ? "comm_L1_L2"
                                                          : "casimir_G";
      rels.push_back(
          {{"kind", kind}, {"j", rel.j}, {"label", rel.label}, {"terms", terms}});
    }
    systems.push_back({{"name", e.name},
                       {"degenerate", e.degenerate},
                       {"lie_target", e.lie_target},
                       {"nparams", e.nparams},
                       {"relations", rels}});
  }
  return J{{"schema", "askey-catalog"}, {"version", 1}, {"systems", systems}};
}

void catalog_validate_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j.at("schema") != "askey-catalog" ||
      !j.contains("version") || j.at("version") != 1)
    throw AskeyError("catalog: bad schema/version");
  nlohmann::json builtin = catalog_to_json();
  if (j.at("systems") != builtin.at("systems"))
    throw AskeyError("catalog: systems data differs from the built-in catalog");
}

}  // namespace askey
