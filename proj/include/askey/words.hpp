#pragma once
// Symmetrized generator words and noncommutative polynomials in (L1, L2, X)
// with central H. A structure relation's right-hand side is one of these with
// parameter-polynomial coefficients; the contraction engine substitutes linear
// forms for the generators and re-expands in the same canonical basis.
//
// Canonical word (p,q,s,r) means, with k = p+q+s letter slots:
//   k<=1 : L1^p L2^q X^s H^r (plain power)
//   k==2, one distinct letter  : A^2
//   k==2, two distinct letters : {A,B} = AB + BA
//   k==3, one distinct letter  : A^3
//   k==3, multiset {A,A,B}     : {A,A,B} = six-term symmetrizer = 2(AAB+ABA+BAA)
//   k==3, all distinct         : six-term symmetrizer
//   k==4 : X^4 only
// times H^r (H is central in every realization).

#include <map>

#include "askey/algebra.hpp"
#include "askey/multivar.hpp"

namespace askey {

struct Word {
  int p = 0, q = 0, s = 0, r = 0;
  auto operator<=>(const Word&) const = default;
  int slots() const { return p + q + s; }
  // size in the sense of the parameter-degree bounds (X enters via X^2)
  int bound_size() const { return p + q + s / 2 + r; }
};

enum GenId : int { gL1 = 0, gL2 = 1, gX = 2, gH = 3 };

// Expansion of a canonical word into plain compositions with rational
// prefactors: value(word) = sum f_i * (g_i1 g_i2 ...).
inline std::vector<std::pair<Rat, std::vector<GenId>>> expand_word(const Word& w) {
  std::vector<GenId> letters;
  for (int i = 0; i < w.p; ++i) letters.push_back(gL1);
  for (int i = 0; i < w.q; ++i) letters.push_back(gL2);
  for (int i = 0; i < w.s; ++i) letters.push_back(gX);
  std::vector<std::pair<Rat, std::vector<GenId>>> out;
  int k = (int)letters.size();
  int distinct = (w.p > 0) + (w.q > 0) + (w.s > 0);
  if (k <= 1 || distinct == 1) {
    out.push_back({Rat(1), letters});
  } else if (k == 2) {
    out.push_back({Rat(1), {letters[0], letters[1]}});
    out.push_back({Rat(1), {letters[1], letters[0]}});
  } else if (k == 3 && distinct == 2) {
    // letters sorted by construction: the repeated one appears twice
    GenId A = letters[0] == letters[1] ? letters[0] : letters[1];
    GenId B = letters[0] == letters[1] ? letters[2] : letters[0];
    if (letters[1] == letters[2]) {
      A = letters[1];
      B = letters[0];
    }
    out.push_back({Rat(2), {A, A, B}});
    out.push_back({Rat(2), {A, B, A}});
    out.push_back({Rat(2), {B, A, A}});
  } else if (k == 3 && distinct == 3) {
    std::vector<GenId> l = letters;
    std::sort(l.begin(), l.end());
    do {
      out.push_back({Rat(1), l});
    } while (std::next_permutation(l.begin(), l.end()));
  } else {
    throw AskeyError("expand_word: unsupported word shape");
  }
  for (auto& [f, comp] : out)
    for (int i = 0; i < w.r; ++i) comp.push_back(gH);
  return out;
}

template <class S>
struct NCPoly {
  std::map<Word, S> t;

  void add(const Word& w, const S& c) {
    if (askey::is_zero(c)) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, c);
    } else {
      it->second += c;
      if (askey::is_zero(it->second)) t.erase(it);
    }
  }
  bool is_zero() const { return t.empty(); }
  NCPoly operator-() const {
    NCPoly r;
    for (auto& [w, c] : t) r.t[w] = -c;
    return r;
  }
  NCPoly& operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.t) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) { return *this += -o; }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly scaled(const S& f) const {
    NCPoly r;
    for (auto& [w, c] : t) r.add(w, c * f);
    return r;
  }
};

// Linear form over the letters (L1, L2, X, H, 1) with coefficients in S.
template <class S>
struct LinForm {
  S l1 = S(0), l2 = S(0), x = S(0), h = S(0), c = S(0);

  static LinForm L1() {
    LinForm f;
    f.l1 = S(1);
    return f;
  }
  static LinForm L2() {
    LinForm f;
    f.l2 = S(1);
    return f;
  }
  static LinForm X() {
    LinForm f;
    f.x = S(1);
    return f;
  }
  static LinForm H() {
    LinForm f;
    f.h = S(1);
    return f;
  }
  static LinForm unit(S v) {
    LinForm f;
    f.c = std::move(v);
    return f;
  }
  const S& comp(int i) const {
    switch (i) {
      case 0: return l1;
      case 1: return l2;
      case 2: return x;
      case 3: return h;
      default: return c;
    }
  }
};

namespace ncdetail {

// canonical terms for the 2-symmetrizer of two basis letters (i, j in 0..4,
// letters as in LinForm::comp; 3 = H central, 4 = unit central)
template <class S>
void add_sympair(NCPoly<S>& out, int i, int j, const S& coeff) {
  auto word_of_letter = [](int k, Word& w) {
    if (k == 0) w.p += 1;
    if (k == 1) w.q += 1;
    if (k == 2) w.s += 1;
    if (k == 3) w.r += 1;
  };
  bool ci = i >= 3, cj = j >= 3;
  Word w;
  GRat f(2);  // AB + BA = 2AB when anything is central
  if (!ci && !cj && i != j) f = GRat(1);  // canonical {A,B} word
  word_of_letter(i, w);
  word_of_letter(j, w);
  if (!ci && !cj && i == j) f = GRat(2);  // {A,A} = 2 A^2
  out.add(w, coeff * S(f));
}

// canonical terms for the 6-symmetrizer of three basis letters
template <class S>
void add_symtriple(NCPoly<S>& out, int i, int j, int k, const S& coeff) {
  int idx[3] = {i, j, k};
  std::sort(idx, idx + 3);
  int ncentral = 0;
  for (int v : idx) ncentral += (v >= 3);
  auto word_of_letter = [](int v, Word& w) {
    if (v == 0) w.p += 1;
    if (v == 1) w.q += 1;
    if (v == 2) w.s += 1;
    if (v == 3) w.r += 1;
  };
  Word w;
  for (int v : idx) word_of_letter(v, w);
  GRat f;
  int a = idx[0], b = idx[1], c2 = idx[2];
  if (ncentral == 3) {
    f = GRat(6);
  } else if (ncentral == 2) {
    f = GRat(6);
  } else if (ncentral == 1) {
    // {A,B,central}: 3*central*{A,B}; {A,A,central}: 6*central*A^2
    f = (a == b) ? GRat(6) : GRat(3);
  } else {
    // all non-central: {A,A,A} = 6A^3; {A,A,B} and {A,B,C} are the canonical
    // six-term symmetrizer words themselves
    if (a == b && b == c2)
      f = GRat(6);
    else
      f = GRat(1);
  }
  out.add(w, coeff * S(f));
}

}  // namespace ncdetail

// {A,B} = AB + BA for linear forms.
template <class S>
NCPoly<S> nc_sym2(const LinForm<S>& A, const LinForm<S>& B) {
  NCPoly<S> out;
  for (int i = 0; i < 5; ++i) {
    if (askey::is_zero(A.comp(i))) continue;
    for (int j = 0; j < 5; ++j) {
      if (askey::is_zero(B.comp(j))) continue;
      ncdetail::add_sympair(out, i, j, A.comp(i) * B.comp(j));
    }
  }
  return out;
}

// Six-term symmetrizer {A,B,C} for linear forms.
template <class S>
NCPoly<S> nc_sym6(const LinForm<S>& A, const LinForm<S>& B, const LinForm<S>& C) {
  NCPoly<S> out;
  for (int i = 0; i < 5; ++i) {
    if (askey::is_zero(A.comp(i))) continue;
    for (int j = 0; j < 5; ++j) {
      if (askey::is_zero(B.comp(j))) continue;
      for (int k = 0; k < 5; ++k) {
        if (askey::is_zero(C.comp(k))) continue;
        ncdetail::add_symtriple(out, i, j, k, A.comp(i) * B.comp(j) * C.comp(k));
      }
    }
  }
  return out;
}

// A^k for a linear form, k <= 3 (A^2 = {A,A}/2, A^3 = {A,A,A}/6).
template <class S>
NCPoly<S> nc_pow(const LinForm<S>& A, int k) {
  if (k == 0) {
    NCPoly<S> r;
    r.add(Word{}, S(1));
    return r;
  }
  if (k == 1) {
    NCPoly<S> r;
    LinForm<S> a = A;
    if (!askey::is_zero(a.l1)) r.add(Word{1, 0, 0, 0}, a.l1);
    if (!askey::is_zero(a.l2)) r.add(Word{0, 1, 0, 0}, a.l2);
    if (!askey::is_zero(a.x)) r.add(Word{0, 0, 1, 0}, a.x);
    if (!askey::is_zero(a.h)) r.add(Word{0, 0, 0, 1}, a.h);
    if (!askey::is_zero(a.c)) r.add(Word{0, 0, 0, 0}, a.c);
    return r;
  }
  if (k == 2) return nc_sym2(A, A).scaled(S(GRat(rat(1, 2))));
  if (k == 3) return nc_sym6(A, A, A).scaled(S(GRat(rat(1, 6))));
  throw AskeyError("nc_pow: power too large");
}

// Multiply by (h*Ht + c)^r, H central.
template <class S>
NCPoly<S> nc_mul_hpow(const NCPoly<S>& P, const S& h, const S& c, int r) {
  NCPoly<S> cur = P;
  for (int step = 0; step < r; ++step) {
    NCPoly<S> next;
    for (auto& [w, co] : cur.t) {
      Word wh = w;
      wh.r += 1;
      next.add(wh, co * h);
      next.add(w, co * c);
    }
    cur = next;
  }
  return cur;
}

// Substitute generator replacements into one canonical word.
// reps[0], reps[1]: linear forms for L1, L2; reps[2]: for X (pure x-scale);
// hrep = (h, c): H -> h*Ht + c.
template <class S>
NCPoly<S> nc_subst_word(const Word& w, const LinForm<S> reps[3],
                        const std::pair<S, S>& hrep) {
  int k = w.slots();
  NCPoly<S> body;
  std::vector<const LinForm<S>*> slot;
  for (int i = 0; i < w.p; ++i) slot.push_back(&reps[0]);
  for (int i = 0; i < w.q; ++i) slot.push_back(&reps[1]);
  for (int i = 0; i < w.s; ++i) slot.push_back(&reps[2]);
  int distinct = (w.p > 0) + (w.q > 0) + (w.s > 0);
  if (k == 0) {
    body.add(Word{}, S(1));
  } else if (k == 1) {
    body = nc_pow(*slot[0], 1);
  } else if (k == 4) {
    if (w.s != 4) throw AskeyError("nc_subst_word: unsupported quartic word");
    S sc = reps[2].x;
    NCPoly<S> r;
    r.add(Word{0, 0, 4, 0}, sc * sc * sc * sc);
    body = r;
  } else if (k == 2) {
    if (distinct == 1)
      body = nc_pow(*slot[0], 2);
    else
      body = nc_sym2(*slot[0], *slot[1]);
  } else {  // k == 3
    if (distinct == 1)
      body = nc_pow(*slot[0], 3);
    else
      body = nc_sym6(*slot[0], *slot[1], *slot[2]);
  }
  return nc_mul_hpow(body, hrep.first, hrep.second, w.r);
}

// Full substitution of an NCPoly whose coefficients were already mapped to S.
template <class S>
NCPoly<S> nc_subst(const NCPoly<S>& P, const LinForm<S> reps[3],
                   const std::pair<S, S>& hrep) {
  NCPoly<S> out;
  for (auto& [w, c] : P.t) out += nc_subst_word(w, reps, hrep).scaled(c);
  return out;
}

// Parameter polynomial evaluation (MPoly in up to 3 named parameters).
template <class T>
T mpoly_eval(const MPoly& p, const std::vector<T>& vals) {
  T out(0);
  for (auto& [e, c] : p.t) {
    T term = T(c);
    for (size_t k = 0; k < vals.size(); ++k)
      for (int j = 0; j < e[k]; ++j) term = term * vals[k];
    for (size_t k = vals.size(); k < 3; ++k)
      if (e[k] != 0) throw AskeyError("mpoly_eval: parameter out of range");
    out += term;
  }
  return out;
}

inline int mpoly_total_degree(const MPoly& p) {
  int d = 0;
  for (auto& [e, c] : p.t) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

enum class RelKind { CommLR, RSquared, CommXL, CommL1L2, CasimirG };

struct SysRelation {
  RelKind kind;
  int j = 1;  // which L for CommLR/CommXL
  NCPoly<MPoly> rhs;
  std::string label;
};

// Left-hand side of a relation as plain compositions.
inline std::vector<std::pair<Rat, std::vector<GenId>>> relation_lhs(
    const SysRelation& rel) {
  GenId Lj = rel.j == 1 ? gL1 : gL2;
  switch (rel.kind) {
    case RelKind::CommLR:  // [Lj, [L1, L2]]
      return {{Rat(1), {Lj, gL1, gL2}},
              {Rat(-1), {Lj, gL2, gL1}},
              {Rat(-1), {gL1, gL2, Lj}},
              {Rat(1), {gL2, gL1, Lj}}};
    case RelKind::RSquared:
      return {{Rat(1), {gL1, gL2, gL1, gL2}},
              {Rat(-1), {gL1, gL2, gL2, gL1}},
              {Rat(-1), {gL2, gL1, gL1, gL2}},
              {Rat(1), {gL2, gL1, gL2, gL1}}};
    case RelKind::CommXL:  // [X, Lj]
      return {{Rat(1), {gX, Lj}}, {Rat(-1), {Lj, gX}}};
    case RelKind::CommL1L2:
      return {{Rat(1), {gL1, gL2}}, {Rat(-1), {gL2, gL1}}};
    case RelKind::CasimirG:
      return {};
  }
  throw AskeyError("relation_lhs");
}

}  // namespace askey
