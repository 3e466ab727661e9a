// Development probe: verify catalog relations against the 2D realizations and
// reconstruct structure-constant polynomials where a relation fails.
#include <algorithm>
#include <functional>
#include <chrono>
#include <iostream>

#include "askey/expr.hpp"
#include "askey/models.hpp"
#include "askey/systems.hpp"

using namespace askey;

static std::vector<Word> template_words(RelKind kind, bool degenerate) {
  std::vector<Word> ws;
  if (!degenerate) {
    int cap = kind == RelKind::RSquared ? 3 : 2;
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q + p <= 3; ++q)
        for (int r = 0; p + q + r <= cap; ++r) ws.push_back(Word{p, q, 0, r});
  } else {
    if (kind == RelKind::CommXL) {
      ws = {Word{0, 0, 0, 0}, Word{1, 0, 0, 0}, Word{0, 1, 0, 0},
            Word{0, 0, 2, 0}, Word{0, 0, 0, 1}};
    } else if (kind == RelKind::CommL1L2) {
      ws = {Word{0, 0, 1, 0}, Word{1, 0, 1, 0}, Word{0, 1, 1, 0},
            Word{0, 0, 3, 0}, Word{0, 0, 1, 1}};
    } else {
      ws = {Word{0, 0, 0, 0}, Word{1, 0, 0, 0}, Word{0, 1, 0, 0},
            Word{0, 0, 2, 0}, Word{0, 0, 0, 1}, Word{2, 0, 0, 0},
            Word{0, 2, 0, 0}, Word{1, 1, 0, 0}, Word{1, 0, 2, 0},
            Word{0, 1, 2, 0}, Word{0, 0, 4, 0}, Word{1, 0, 0, 1},
            Word{0, 1, 0, 1}, Word{0, 0, 2, 1}, Word{0, 0, 0, 2}};
    }
  }
  return ws;
}

// Solve LHS = sum c_w * word_w on the test set at fixed params.
static std::vector<GRat> fit_at(SystemId id, const std::vector<GRat>& params,
                                RelKind kind, int j,
                                const std::vector<Word>& words,
                                GRat pivot_l1sq = GRat(0)) {
  AmbientRep rep = ambient_realization(id, params);
  if (rep.space.quadric) rep.tests.clear();
  if (rep.space.quadric) {
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; a + b <= 5; ++b)
        for (int cd = 0; cd <= 1 && a + b + cd <= 5; ++cd)
          rep.tests.push_back(MPoly::var(0, a) * MPoly::var(1, b) *
                              MPoly::var(2, cd));
  }
  // deeper monomials break accidental word dependencies seen at low degree
  std::vector<MRat> extra;
  if (!rep.space.quadric && kind == RelKind::RSquared) {
    rep.tests.clear();
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; a + b <= 8; ++b)
        if ((a * 3 + b) % 4 == 0)
          rep.tests.push_back(MPoly::var(0, a) * MPoly::var(1, b));
  }
  SysRelation stub{kind, j, {}, "fit"};
  auto lhs = relation_lhs(stub);
  if (kind == RelKind::CasimirG && !pivot_l1sq.is_zero()) {
    // move pivot_l1sq * L1^2 to the left: 0 = pivot*L1^2 + sum c_w w
    lhs.push_back({Rat(-1) * pivot_l1sq.re, {gL1, gL1}});
  }
  std::vector<std::vector<GRat>> rows;
  std::vector<GRat> rhs;
  std::vector<MRat> all_tests;
  for (auto& tf : rep.tests) all_tests.push_back(MRat{tf});
  for (auto& tf : extra) all_tests.push_back(tf);
  // evaluation points (exact, generic, away from coefficient poles)
  std::vector<std::array<GRat, 3>> epts;
  {
    RatSampler prs(2024);
    for (int k = 0; k < 8; ++k)
      epts.push_back({GRat(prs.positive()), GRat(prs.positive()),
                      GRat(prs.positive())});
  }
  auto eval_pt = [&](const MRat& v, const std::array<GRat, 3>& pt) {
    auto ev = [&](const MPoly& q) {
      GRat out(0);
      for (auto& [e, cc] : q.t) {
        GRat term = cc;
        for (int k = 0; k < 3; ++k)
          for (int j2 = 0; j2 < e[k]; ++j2) term = term * pt[k];
        out += term;
      }
      return out;
    };
    GRat den = ev(v.den);
    if (den.is_zero()) throw DivisionByZeroInCoefficient("fit eval point");
    return ev(v.num) / den;
  };
  for (auto& tf : all_tests) {
    std::map<std::vector<GenId>, MRat> memo;
    std::function<MRat(const std::vector<GenId>&)> apply_chain =
        [&](const std::vector<GenId>& comp) -> MRat {
      if (comp.empty()) return tf;
      auto it0 = memo.find(comp);
      if (it0 != memo.end()) return it0->second;
      std::vector<GenId> rest(comp.begin() + 1, comp.end());
      MRat v = rep.gens.at(comp[0]).apply(apply_chain(rest));
      v.num = rep.space.reduce(v.num);
      v.strip();
      return memo.emplace(comp, std::move(v)).first->second;
    };
    MRat L;
    for (auto& [f, comp] : lhs) L = L + apply_chain(comp) * MRat(GRat(f));
    std::vector<MRat> vals;
    for (auto& w : words) {
      MRat acc;
      for (auto& [f, comp] : expand_word(w))
        acc = acc + apply_chain(comp) * MRat(GRat(f));
      vals.push_back(acc);
    }
    if (rep.space.quadric) {
      // sphere: reduce and use monomial coefficients (polynomial tests only)
      std::map<Expo, std::vector<GRat>> eq;
      std::map<Expo, GRat> eqr;
      for (size_t wi = 0; wi < vals.size(); ++wi) {
        MPoly scaled = vals[wi].num * L.den;
        for (size_t wj = 0; wj < vals.size(); ++wj)
          if (wj != wi) scaled = scaled * vals[wj].den;
        scaled = rep.space.reduce(scaled);
        for (auto& [e, cc] : scaled.t) {
          auto& row = eq[e];
          row.resize(words.size(), GRat(0));
          row[wi] += cc;
        }
      }
      MPoly lr = L.num;
      for (auto& v : vals) lr = lr * v.den;
      lr = rep.space.reduce(lr);
      for (auto& [e, cc] : lr.t) eqr[e] += cc;
      for (auto& [e, row0] : eq) {
        auto row = row0;
        row.resize(words.size(), GRat(0));
        rows.push_back(row);
        rhs.push_back(eqr.count(e) ? eqr[e] : GRat(0));
      }
      for (auto& [e, cc] : eqr)
        if (!eq.count(e)) {
          rows.push_back(std::vector<GRat>(words.size(), GRat(0)));
          rhs.push_back(cc);
        }
    } else {
      for (auto& pt : epts) {
        std::vector<GRat> row;
        bool ok = true;
        GRat lv;
        try {
          for (auto& v : vals) row.push_back(eval_pt(v, pt));
          lv = eval_pt(L, pt);
        } catch (const DivisionByZeroInCoefficient&) {
          ok = false;
        }
        if (!ok) continue;
        rows.push_back(row);
        rhs.push_back(lv);
      }
    }
  }
  Mat<GRat> M((int)rows.size(), (int)words.size());
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int cidx = 0; cidx < (int)words.size(); ++cidx) M(r, cidx) = rows[r][cidx];
  try {
    return solve_overdetermined(M, rhs);
  } catch (const AskeyError&) {
    // print the nullspace once for diagnosis
    static bool printed = false;
    if (!printed) {
      printed = true;
      int rowsn = M.n, cols = M.m;
      Mat<GRat> R = M;
      std::vector<int> pivots;
      int rank = 0;
      for (int col = 0; col < cols && rank < rowsn; ++col) {
        int piv = -1;
        for (int r = rank; r < rowsn; ++r)
          if (!R(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j2 = 0; j2 < cols; ++j2) std::swap(R(piv, j2), R(rank, j2));
        GRat inv = R(rank, col).inv();
        for (int j2 = 0; j2 < cols; ++j2) R(rank, j2) *= inv;
        for (int r = 0; r < rowsn; ++r) {
          if (r == rank || R(r, col).is_zero()) continue;
          GRat fcc = R(r, col);
          for (int j2 = 0; j2 < cols; ++j2) R(r, j2) -= fcc * R(rank, j2);
        }
        pivots.push_back(col);
        ++rank;
      }
      std::cout << "    [kernel] rank=" << rank << " of " << cols << "\n";
      for (int col = 0; col < cols; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end())
          continue;
        std::cout << "    kernel vector (free word " << words[col].p << ","
                  << words[col].q << "," << words[col].s << "," << words[col].r
                  << "):\n";
        for (int k = 0; k < rank; ++k)
          if (!R(k, col).is_zero())
            std::cout << "      w(" << words[pivots[k]].p << ","
                      << words[pivots[k]].q << "," << words[pivots[k]].s << ","
                      << words[pivots[k]].r << ") = "
                      << (-R(k, col)).str() << "  (rel to free=1)\n";
      }
    }
    throw;
  }
}

// Reconstruct each word's coefficient as a polynomial in the parameters.
static void fit_poly(SystemId id, RelKind kind, int j, bool degenerate) {
  std::vector<Word> words = template_words(kind, degenerate);
  int cap = kind == RelKind::RSquared ? 3
            : kind == RelKind::CommLR ? 2
            : kind == RelKind::CasimirG ? 2
                                        : 1;
  // parameter sample grid
  std::vector<std::vector<GRat>> pts;
  if (!degenerate) {
    long vals[] = {1, 2, 3, 5, 7};
    for (long x : vals)
      for (long y : vals)
        for (long z : vals)
          if (true)
            pts.push_back({grat(x), grat(y), grat(z)});
  } else {
    for (long n = 1; n <= 7; ++n) pts.push_back({grat(n, n == 4 ? 3 : 1)});
  }
  // monomial exponent list
  int nv = degenerate ? 1 : 3;
  std::vector<Expo> monos;
  for (int e1 = 0; e1 <= cap; ++e1)
    for (int e2 = 0; e2 <= (nv > 1 ? cap : 0); ++e2)
      for (int e3 = 0; e3 <= (nv > 2 ? cap : 0); ++e3)
        if (e1 + e2 + e3 <= cap) monos.push_back({e1, e2, e3});

  GRat pivot(0);
  if (kind == RelKind::CasimirG) {
    pivot = GRat(1);
    words.erase(std::remove(words.begin(), words.end(), Word{2, 0, 0, 0}),
                words.end());
  }
  std::vector<std::vector<GRat>> fits;
  for (auto& p : pts) fits.push_back(fit_at(id, p, kind, j, words, pivot));

  for (size_t wi = 0; wi < words.size(); ++wi) {
    Mat<GRat> M((int)pts.size(), (int)monos.size());
    std::vector<GRat> rhs((int)pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
      for (size_t mj = 0; mj < monos.size(); ++mj) {
        GRat v(1);
        for (int t = 0; t < nv; ++t)
          v = v * pow_int(pts[k][t], monos[mj][t]);
        M((int)k, (int)mj) = v;
      }
      rhs[k] = fits[k][wi];
    }
    auto sol = solve_overdetermined(M, rhs);
    std::string expr;
    for (size_t mj = 0; mj < monos.size(); ++mj) {
      if (sol[mj].is_zero()) continue;
      std::string term = "c(" + sol[mj].re.get_num().get_str() + "," +
                         sol[mj].re.get_den().get_str() + ")";
      if (sol[mj].im != 0) term = "[" + sol[mj].str() + "]";
      const char* an[3] = {"a1()", "a2()", "a3()"};
      for (int t = 0; t < nv; ++t)
        for (int e = 0; e < monos[mj][t]; ++e)
          term += std::string(" * ") + (degenerate ? "ap()" : an[t]);
      expr += (expr.empty() ? "" : " + ") + term;
    }
    if (expr.empty()) continue;
    auto& w = words[wi];
    std::cout << "    rhs.add(W(" << w.p << ", " << w.q << ", " << w.s << ", "
              << w.r << "), " << expr << ");\n";
  }
}

static void probe_models() {
  struct Row { const char* sys; const char* var; };
  for (auto& mv : model_variants()) {
    for (long m : {2L, 3L}) {
      try {
        ResidualReport r =
            verify_model_variant(system_name(mv.system), mv.name, m, 7 + m);
        bool ok = r.all_zero();
        std::cout << (ok ? "ok   " : "FAIL ") << system_name(mv.system) << "/"
                  << mv.name << " m=" << m;
        if (!ok)
          for (auto& row : r.rows)
            if (!row.zero) std::cout << "  [" << row.label << "]";
        std::cout << "\n";
      } catch (const std::exception& e) {
        std::cout << "ERR  " << system_name(mv.system) << "/" << mv.name
                  << " m=" << m << ": " << e.what() << "\n";
      }
    }
  }
}

static void probe_wilson() {
  long m = 2;
  std::vector<GRat> al = {grat(1, 3), grat(1, 5), grat(1, 7)};
  GRat half = grat(1, 2);
  GRat wa = (al[0] + al[2] + GRat(1)) * (-half) - GRat(m);
  GRat wb = (al[0] + al[2] + GRat(1)) * half;
  GRat wc = (al[2] - al[0] + GRat(1)) * half;
  GRat wd = al[1] + GRat(m + 1) + (al[0] + al[2] + GRat(1)) * half;
  std::vector<GRat> abcd = {wa, wb, wc, wd};
  for (long n = 0; n <= m; ++n) {
    Poly<GRat> phin = family_poly(Family::Wilson, n, abcd);
    Poly<GRat> vphi = Poly<GRat>::x() * phin;
    // expand in the Phi basis (the ladder truncates at k = m)
    Poly<GRat> rem = vphi;
    std::vector<GRat> co(m + 3, GRat(0));
    for (int k = std::min((int)n + 1, (int)m); k >= 0; --k) {
      Poly<GRat> pk = family_poly(Family::Wilson, k, abcd);
      if (rem.degree() < k) continue;
      GRat cc = rem.coeff(k) / pk.coeff(k);
      co[k] = cc;
      rem -= pk * cc;
      rem.trim();
    }
    if (!rem.is_zero()) std::cout << "n=" << n << " RESIDUAL NONZERO\n";
    std::cout << "n=" << n << ": V*Phi_n = ";
    for (int k = 0; k <= (int)n + 1; ++k)
      if (!co[k].is_zero()) std::cout << "[" << k << "] " << co[k].str() << "  ";
    std::cout << "\n";
    ThreeTerm tt = recurrence_coeffs(Family::Wilson, n, abcd);
    std::cout << "   formula: up=" << tt.up.str() << " diag=" << tt.diag.str()
              << " down=" << tt.down.str() << "\n";
  }
}

static void probe_wilson_rel() {
  long m = 2;
  std::vector<GRat> al = {grat(1, 3), grat(1, 5), grat(1, 7)};
  auto mod = build_s9_wilson<GRat>(m, al);
  auto rels = system_catalog().at(SystemId::S9).relations;
  for (auto& rel : rels) {
    // compute residual matrix explicitly
    int n = mod.rep.dim;
    Mat<GRat> acc(n, n);
    for (auto& [f, comp] : relation_lhs(rel)) {
      Mat<GRat> M2 = Mat<GRat>::identity(n);
      for (auto it = comp.rbegin(); it != comp.rend(); ++it)
        M2 = mod.rep.gens.at(*it) * M2;
      acc += M2.scaled(GRat(f));
    }
    for (auto& [w, coeff] : rel.rhs.t) {
      GRat cv = mpoly_eval<GRat>(coeff, mod.rep.params);
      for (auto& [f, comp] : expand_word(w)) {
        Mat<GRat> M2 = Mat<GRat>::identity(n);
        for (auto it = comp.rbegin(); it != comp.rend(); ++it)
          M2 = mod.rep.gens.at(*it) * M2;
        acc -= M2.scaled(cv * GRat(f));
      }
    }
    std::cout << rel.label << " residual:\n";
    for (int i = 0; i < n; ++i) {
      for (int j2 = 0; j2 < n; ++j2) std::cout << acc(i, j2).str() << "  ";
      std::cout << "\n";
    }
    if (rel.kind == RelKind::CommLR && rel.j == 1) {
      for (int i = 0; i < n; ++i) {
        GRat lam = mod.rep.gens.at(gL1)(i, i);
        GRat e_true = mod.energy + acc(i, i) / (GRat(8) * lam);
        std::cout << "  solved E (row " << i << "): " << e_true.str() << "\n";
      }
      std::cout << "  used  E: " << mod.energy.str() << "\n";
    }
  }
}

// Fit relation constants on matrix models (words may be rank-deficient at a
// single m; stack two dimensions).
static void fit_on_model(const char* label, RelKind kind, int j,
                         const std::vector<MatrixRepQ>& reps) {
  std::vector<Word> words;
  int cap = kind == RelKind::RSquared ? 3 : 2;
  for (int pp = 0; pp <= 3; ++pp)
    for (int q = 0; q + pp <= 3; ++q)
      for (int r = 0; pp + q + r <= cap; ++r) words.push_back(Word{pp, q, 0, r});
  std::vector<std::vector<GRat>> rows;
  std::vector<GRat> rhs;
  SysRelation stub{kind, j, {}, "fit"};
  for (auto& rep : reps) {
    int n = rep.gens.begin()->second.n;
    Mat<GRat> L(n, n);
    for (auto& [f, comp] : relation_lhs(stub)) {
      Mat<GRat> M2 = Mat<GRat>::identity(n);
      for (auto it = comp.rbegin(); it != comp.rend(); ++it)
        M2 = rep.gens.at(*it) * M2;
      L += M2.scaled(GRat(f));
    }
    std::vector<Mat<GRat>> vals;
    for (auto& w : words) {
      Mat<GRat> acc(n, n);
      for (auto& [f, comp] : expand_word(w)) {
        Mat<GRat> M2 = Mat<GRat>::identity(n);
        for (auto it = comp.rbegin(); it != comp.rend(); ++it)
          M2 = rep.gens.at(*it) * M2;
        acc += M2.scaled(GRat(f));
      }
      vals.push_back(acc);
    }
    for (int i = 0; i < n; ++i)
      for (int j2 = 0; j2 < n; ++j2) {
        std::vector<GRat> row;
        for (auto& v : vals) row.push_back(v(i, j2));
        rows.push_back(row);
        rhs.push_back(L(i, j2));
      }
  }
  Mat<GRat> M((int)rows.size(), (int)words.size());
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c2 = 0; c2 < (int)words.size(); ++c2) M(r, c2) = rows[r][c2];
  try {
    auto sol = solve_overdetermined(M, rhs);
    std::cout << label << ":\n";
    for (size_t wi = 0; wi < words.size(); ++wi)
      if (!sol[wi].is_zero())
        std::cout << "  w(" << words[wi].p << "," << words[wi].q << ","
                  << words[wi].r << ") = " << sol[wi].str() << "\n";
  } catch (const std::exception& e) {
    std::cout << label << " fit failed: " << e.what() << "\n";
  }
}

static std::vector<GRat> fit_on_model_vals(RelKind kind, int j,
                                           const std::vector<MatrixRepQ>& reps,
                                           std::vector<Word>& words_out);

static void probe_wilson_fit() {
  // kappa := the constant by which the model's H differs from the catalog H
  // (the a4 freedom); solved from the L1-slot of the fitted [L1,R].
  std::vector<std::array<long, 6>> draws;
  {
    RatSampler drs(99);
    while (draws.size() < 50) {
      std::array<long, 6> d;
      for (int k = 0; k < 3; ++k) {
        Rat r = drs.positive();
        d[2 * k] = r.get_num().get_si();
        d[2 * k + 1] = r.get_den().get_si();
      }
      draws.push_back(d);
    }
  }
  std::vector<std::array<GRat, 3>> uvw_pts;
  std::vector<GRat> kappas;
  for (auto& d : draws) {
    std::vector<GRat> al = {grat(d[0], d[1]), grat(d[2], d[3]),
                            grat(d[4], d[5])};
    std::vector<MatrixRepQ> reps;
    for (long m : {2L, 3L, 4L}) reps.push_back(build_s9_wilson<GRat>(m, al).rep);
    std::vector<Word> words;
    auto sol = fit_on_model_vals(RelKind::CommLR, 1, reps, words);
    GRat q = grat(1, 4);
    GRat A1 = q - al[0] * al[0], A2 = q - al[1] * al[1], A3 = q - al[2] * al[2];
    GRat sigma = A1 + A2 + A3;
    // catalog w(1,0,0) = -8 sigma - 8 - 16 a3
    GRat expect = GRat(-8) * sigma - GRat(8) - GRat(16) * A3;
    GRat fitted(0);
    for (size_t wi = 0; wi < words.size(); ++wi)
      if (words[wi] == Word{1, 0, 0, 0}) fitted = sol[wi];
    GRat kappa = (fitted - expect) / GRat(-8);
    uvw_pts.push_back({al[0], al[1], al[2]});
    kappas.push_back(kappa);
  }
  // fit kappa as a polynomial in the alphas up to total degree 4
  std::vector<std::array<int, 3>> monos;
  for (int e1 = 0; e1 <= 4; ++e1)
    for (int e2 = 0; e2 + e1 <= 4; ++e2)
      for (int e3 = 0; e1 + e2 + e3 <= 4; ++e3) monos.push_back({e1, e2, e3});
  Mat<GRat> M((int)uvw_pts.size(), (int)monos.size());
  std::vector<GRat> rhs2 = kappas;
  for (size_t k = 0; k < uvw_pts.size(); ++k)
    for (size_t mj = 0; mj < monos.size(); ++mj) {
      GRat vv(1);
      for (int t2 = 0; t2 < 3; ++t2)
        for (int e = 0; e < monos[mj][t2]; ++e) vv = vv * uvw_pts[k][t2];
      M((int)k, (int)mj) = vv;
    }
  auto sol = solve_overdetermined(M, rhs2);
  const char* nm[3] = {"al1", "al2", "al3"};
  for (size_t mj = 0; mj < monos.size(); ++mj) {
    if (sol[mj].is_zero()) continue;
    std::cout << "kappa term " << sol[mj].str();
    for (int t2 = 0; t2 < 3; ++t2)
      for (int e = 0; e < monos[mj][t2]; ++e) std::cout << "*" << nm[t2];
    std::cout << "\n";
  }
}

static std::vector<GRat> fit_on_model_vals(RelKind kind, int j,
                                           const std::vector<MatrixRepQ>& reps,
                                           std::vector<Word>& words_out) {
  std::vector<Word> words;
  int cap = kind == RelKind::RSquared ? 3 : 2;
  for (int pp = 0; pp <= 3; ++pp)
    for (int q = 0; q + pp <= 3; ++q)
      for (int r = 0; pp + q + r <= cap; ++r) words.push_back(Word{pp, q, 0, r});
  std::vector<std::vector<GRat>> rows;
  std::vector<GRat> rhs;
  SysRelation stub{kind, j, {}, "fit"};
  for (auto& rep : reps) {
    int n = rep.gens.begin()->second.n;
    Mat<GRat> L(n, n);
    for (auto& [f, comp] : relation_lhs(stub)) {
      Mat<GRat> M2 = Mat<GRat>::identity(n);
      for (auto it = comp.rbegin(); it != comp.rend(); ++it)
        M2 = rep.gens.at(*it) * M2;
      L += M2.scaled(GRat(f));
    }
    std::vector<Mat<GRat>> vals;
    for (auto& w : words) {
      Mat<GRat> acc(n, n);
      for (auto& [f, comp] : expand_word(w)) {
        Mat<GRat> M2 = Mat<GRat>::identity(n);
        for (auto it = comp.rbegin(); it != comp.rend(); ++it)
          M2 = rep.gens.at(*it) * M2;
        acc += M2.scaled(GRat(f));
      }
      vals.push_back(acc);
    }
    for (int i = 0; i < n; ++i)
      for (int j2 = 0; j2 < n; ++j2) {
        std::vector<GRat> row;
        for (auto& v : vals) row.push_back(v(i, j2));
        rows.push_back(row);
        rhs.push_back(L(i, j2));
      }
  }
  Mat<GRat> M((int)rows.size(), (int)words.size());
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c2 = 0; c2 < (int)words.size(); ++c2) M(r, c2) = rows[r][c2];
  words_out = words;
  return solve_overdetermined(M, rhs);
}

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "wilsonfit") {
    probe_wilson_fit();
    return 0;
  }
  if (argc > 1 && std::string(argv[1]) == "wilsonrel") {
    probe_wilson_rel();
    return 0;
  }
  if (argc > 1 && std::string(argv[1]) == "wilson") {
    probe_wilson();
    return 0;
  }
  if (argc > 1 && std::string(argv[1]) == "models") {
    probe_models();
    return 0;
  }
  std::vector<GRat> p3 = {grat(2, 1), grat(3, 1), grat(5, 1)};
  std::vector<GRat> p1 = {grat(1, 3)};
  bool fit = argc > 1 && std::string(argv[1]) == "fit";
  std::string only = argc > 2 ? argv[2] : "";
  for (SystemId id :
       {SystemId::S9, SystemId::E1, SystemId::E2, SystemId::E3p, SystemId::E8,
        SystemId::E10, SystemId::S3, SystemId::E14, SystemId::E6, SystemId::E5,
        SystemId::E4, SystemId::E3}) {
    const auto& e = system_catalog().at(id);
    if (!only.empty() && e.name != only) continue;
    auto params = e.degenerate ? p1 : p3;
    auto t0 = std::chrono::steady_clock::now();
    ResidualReport rep = check_2d_realization(id, params, 4);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << e.name << " (" << ms << " ms)\n";
    for (auto& row : rep.rows)
      std::cout << "  " << (row.zero ? "ok   " : "FAIL ") << row.label << "\n";
    if (fit) {
      for (auto& rel : e.relations) {
        ResidualReport one =
            check_structure(ambient_realization(id, params), {rel});
        if (!one.rows[0].zero) {
          std::cout << "  fitted " << rel.label << ":\n";
          try {
            fit_poly(id, rel.kind, rel.j, e.degenerate);
          } catch (const std::exception& ex) {
            std::cout << "    fit failed: " << ex.what() << "\n";
          }
        }
      }
    }
  }
  return 0;
}
