#include "ocw/corpus.hpp"

#include <algorithm>

#include "ocw/expr_ops.hpp"

namespace ocw {

namespace {

Element el(int i) { return Element{i}; }

std::vector<Element> row(std::initializer_list<int> idx) {
  std::vector<Element> out;
  for (int i : idx) out.push_back(el(i));
  return out;
}

/// Shuffle table from a rule over non-unit subsets; unit absorption is
/// derived here.
std::vector<Element> shuffle_table(int n, Element unit, auto rule) {
  std::vector<Element> sh(std::size_t{1} << n, Element{0});
  const Mask ub = bit(unit);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    Mask core = m & ~ub;
    sh[m] = core == 0 ? unit : rule(core);
  }
  return sh;
}

OAlgebra make_min() {
  // Elements: 1, ci, oi. Left factors absorb on the right: ci·x = ci,
  // oi·x = oi.
  const int N = 3;
  std::vector<Element> prod(N * N);
  auto set = [&](int a, int b, int r) { prod[a * N + b] = el(r); };
  for (int x = 0; x < N; ++x) {
    set(0, x, x);
    set(1, x, 1);
    set(2, x, 2);
  }
  std::vector<Element> omega = row({0, 1, 2});
  std::vector<Element> omegastar = row({0, 2, 2});
  auto sh = shuffle_table(N, el(0), [&](Mask) { return el(2); });
  return OAlgebra("min", {"1", "ci", "oi"}, el(0), std::move(prod),
                  std::move(omega), std::move(omegastar), std::move(sh));
}

OAlgebra make_gap() {
  // Elements: 1, cci, coi, oci, ooi, 0.
  const int N = 6;
  const int U = 0, CCI = 1, COI = 2, OCI = 3, OOI = 4, Z = 5;
  std::vector<Element> prod(N * N);
  auto set = [&](int a, int b, int r) { prod[a * N + b] = el(r); };
  for (int x = 0; x < N; ++x) {
    set(U, x, x);
    set(x, U, x);
    set(Z, x, Z);
    set(x, Z, Z);
  }
  int body[4][4] = {
      // rows/cols: cci, coi, oci, ooi
      {CCI, COI, CCI, COI},
      {CCI, COI, Z, Z},
      {OCI, OOI, OCI, OOI},
      {OCI, OOI, Z, Z},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) set(CCI + i, CCI + j, body[i][j]);
  std::vector<Element> omega = row({U, COI, COI, OOI, Z, Z});
  std::vector<Element> omegastar = row({U, OCI, OOI, OCI, Z, Z});
  auto sh = shuffle_table(N, el(U), [&](Mask) { return el(Z); });
  return OAlgebra("gap", {"1", "cci", "coi", "oci", "ooi", "0"}, el(U),
                  std::move(prod), std::move(omega), std::move(omegastar),
                  std::move(sh));
}

OAlgebra make_pd() {
  // Elements: 1, s, g, 0. Any product touching s or g lands on g except
  // the identity and zero rows.
  const int N = 4;
  const int U = 0, S = 1, G = 2, Z = 3;
  std::vector<Element> prod(N * N);
  auto set = [&](int a, int b, int r) { prod[a * N + b] = el(r); };
  for (int x = 0; x < N; ++x) {
    set(U, x, x);
    set(x, U, x);
    set(Z, x, Z);
    set(x, Z, Z);
  }
  set(S, S, G);
  set(S, G, G);
  set(G, S, G);
  set(G, G, G);
  std::vector<Element> omega = row({U, G, G, Z});
  std::vector<Element> omegastar = row({U, G, G, Z});
  auto sh = shuffle_table(N, el(U), [&](Mask core) {
    if (core & (Mask{1} << Z)) return el(Z);
    if (core & (Mask{1} << S)) return el(Z);
    return el(G);
  });
  return OAlgebra("pd", {"1", "s", "g", "0"}, el(U), std::move(prod),
                  std::move(omega), std::move(omegastar), std::move(sh));
}

OAlgebra make_even() {
  // Elements: 1, s, s2, 0; {s, s2} is the two-element group hanging below
  // the unit.
  const int N = 4;
  const int U = 0, S = 1, S2 = 2, Z = 3;
  std::vector<Element> prod(N * N);
  auto set = [&](int a, int b, int r) { prod[a * N + b] = el(r); };
  for (int x = 0; x < N; ++x) {
    set(U, x, x);
    set(x, U, x);
    set(Z, x, Z);
    set(x, Z, Z);
  }
  set(S, S, S2);
  set(S, S2, S);
  set(S2, S, S);
  set(S2, S2, S2);
  std::vector<Element> omega = row({U, Z, Z, Z});
  std::vector<Element> omegastar = row({U, Z, Z, Z});
  auto sh = shuffle_table(N, el(U), [&](Mask) { return el(Z); });
  return OAlgebra("even", {"1", "s", "s2", "0"}, el(U), std::move(prod),
                  std::move(omega), std::move(omegastar), std::move(sh));
}

/// Two-element algebra with an absorbing element; recognizes "no b" with
/// h(a) = 1, h(b) = z, F = {1}.
OAlgebra make_absorb2() {
  const int N = 2;
  std::vector<Element> prod = {el(0), el(1), el(1), el(1)};
  std::vector<Element> omega = row({0, 1});
  std::vector<Element> omegastar = row({0, 1});
  auto sh = shuffle_table(N, el(0), [&](Mask) { return el(1); });
  return OAlgebra("absorb2", {"1", "z"}, el(0), std::move(prod),
                  std::move(omega), std::move(omegastar), std::move(sh));
}

// --- expression corpus -----------------------------------------------------

const std::vector<std::string>& ab() {
  static const std::vector<std::string> a{"a", "b"};
  return a;
}

using ex::alt;
using ex::alt_of;
using ex::both;
using ex::both_of;
using ex::cat_of;
using ex::letter;
using ex::neg;
using ex::sigma_star;

ExprPtr W() { return sigma_star(); }
ExprPtr EPS() { return ex::eps(ab()); }
ExprPtr SOME() { return ex::some_letter(ab()); }

/// Σ*σ₁εσ₂Σ*: some two consecutive letters σ₁σ₂.
ExprPtr factor2(const std::string& s, const std::string& t) {
  return cat_of({W(), letter(s), EPS(), letter(t), W()});
}

/// ΣΣ* (has a first letter), in marked shape εσΣ*.
ExprPtr f_min() {
  std::vector<ExprPtr> parts;
  for (const auto& s : ab()) parts.push_back(cat_of({EPS(), letter(s), W()}));
  return alt_of(parts);
}

/// Σ*Σ (has a last letter).
ExprPtr f_max() {
  std::vector<ExprPtr> parts;
  for (const auto& s : ab()) parts.push_back(cat_of({W(), letter(s), EPS()}));
  return alt_of(parts);
}

ExprPtr f_nob() { return neg(cat_of({W(), letter("b"), W()})); }

/// No consecutive a's, no b, at least one a.
ExprPtr f_densea() {
  return both_of({neg(factor2("a", "a")), f_nob(),
                  cat_of({W(), letter("a"), W()})});
}

/// (b fDensea b fDensea)* with the star marked by the leading b.
ExprPtr f_oddb_densea() {
  ExprPtr d = f_densea();
  std::vector<std::pair<std::string, ExprPtr>> arms{
      {"b", cat_of({d, letter("b"), d})}};
  return ex::marked_star(EPS(), arms);
}

/// Σ*(ab)Σ*.
ExprPtr f_existab() { return factor2("a", "b"); }

/// ¬(Σ*·¬(ΣΣ* + ε)): the domain is well founded.
ExprPtr f_well_founded() {
  return neg(ex::cat(W(), neg(alt(f_min(), EPS()))));
}

ExprPtr f_rev_well_founded() {
  return neg(ex::cat(neg(alt(f_max(), EPS())), W()));
}

/// (¬(Σ*Σ + ε))(¬(ΣΣ* + ε)): there is a gap.
ExprPtr f_gap() {
  return ex::cat(neg(alt(f_max(), EPS())), neg(alt(f_min(), EPS())));
}

ExprPtr f_nogap() { return neg(f_gap()); }

/// Exactly one gap.
ExprPtr f_onegap() {
  return ex::cat(both(f_nogap(), neg(alt(f_max(), EPS()))),
                 both(f_nogap(), neg(alt(f_min(), EPS()))));
}

/// Exactly one gap, with a minimum.
ExprPtr f_minonegap() { return both(f_min(), f_onegap()); }

/// There is an omega sequence of gaps.
ExprPtr f_omega_gaps() {
  return ex::cat(both(neg(ex::cat(W(), f_onegap())), f_gap()), W());
}

ExprPtr f_omegastar_gaps() {
  return ex::cat(W(), both(neg(ex::cat(f_onegap(), W())), f_gap()));
}

/// At most finitely many gaps.
ExprPtr f_fingap() { return neg(alt(f_omega_gaps(), f_omegastar_gaps())); }

/// fonegap (fminonegap fminonegap)* fminonegap: an even nonzero number of
/// gaps.
ExprPtr f_even_gaps() {
  ExprPtr m = f_minonegap();
  return cat_of({f_onegap(), ex::star(ex::cat(m, m)), m});
}

ExprPtr f_scatter_all() { return ex::scatter(alt(letter("a"), letter("b"))); }

/// The occurrences of a form a scattered set: ς(W' a W') with W' the words
/// without a.
ExprPtr f_scatter_a() {
  ExprPtr noa = neg(cat_of({W(), letter("a"), W()}));
  return ex::scatter(cat_of({noa, letter("a"), noa}));
}

/// The domain is finite: ε(aε(bε)*)* + ε(bε(aε)*)*.
ExprPtr f_finite_marked() {
  ExprPtr e = EPS();
  std::vector<std::pair<std::string, ExprPtr>> arm_a{{"b", e}};
  std::vector<std::pair<std::string, ExprPtr>> arm_b{{"a", e}};
  ExprPtr a_first =
      ex::marked_star(e, {{std::make_pair(std::string("a"),
                                          ex::marked_star(e, arm_a))}});
  ExprPtr b_first =
      ex::marked_star(e, {{std::make_pair(std::string("b"),
                                          ex::marked_star(e, arm_b))}});
  return alt(a_first, b_first);
}

/// Even number (>= 2) of a's with b's anywhere, in marked shape:
/// B a B a B (a B a B)* where B = words without a.
ExprPtr f_even_a() {
  ExprPtr b = neg(cat_of({W(), letter("a"), W()}));
  ExprPtr head = cat_of({b, letter("a"), b, letter("a"), b});
  std::vector<std::pair<std::string, ExprPtr>> arms{
      {"a", cat_of({b, letter("a"), b})}};
  return ex::marked_star(head, arms);
}

RecognizedLanguage make_lang(OAlgebra alg, std::vector<std::string> alphabet,
                             std::vector<std::string> images,
                             std::vector<std::string> accepting) {
  RecognizedLanguage lang{std::move(alg), std::move(alphabet), {}, 0};
  for (const std::string& s : images) lang.h.push_back(*lang.algebra.element(s));
  for (const std::string& s : accepting)
    lang.accepting |= bit(*lang.algebra.element(s));
  return lang;
}

}  // namespace

OAlgebra fixture_algebra(const std::string& id) {
  if (id == "algebra.min") return make_min();
  if (id == "algebra.gap") return make_gap();
  if (id == "algebra.pd") return make_pd();
  if (id == "algebra.even") return make_even();
  if (id == "algebra.absorb2") return make_absorb2();
  throw UnknownFixture("unknown algebra fixture: " + id);
}

ExprFixture fixture_expr(const std::string& id) {
  using T = ExprClassTarget;
  auto mk = [&](ExprPtr e, T t) { return ExprFixture{id, ab(), e, t}; };
  if (id == "expr.fNob") return mk(f_nob(), T::MarkedStarFree);
  if (id == "expr.fDensea") return mk(f_densea(), T::MarkedStarFree);
  if (id == "expr.fOddbDensea") return mk(f_oddb_densea(), T::Marked);
  if (id == "expr.fWellFounded") return mk(f_well_founded(), T::PowerFree);
  if (id == "expr.fMin") return mk(f_min(), T::MarkedStarFree);
  if (id == "expr.fMax") return mk(f_max(), T::MarkedStarFree);
  if (id == "expr.fexistab") return mk(f_existab(), T::MarkedStarFree);
  if (id == "expr.fGap") return mk(f_gap(), T::PowerFree);
  if (id == "expr.fonegap") return mk(f_onegap(), T::PowerFree);
  if (id == "expr.evenGaps") return mk(f_even_gaps(), T::ScatterFree);
  if (id == "expr.scatterAll") return mk(f_scatter_all(), T::Scatter);
  if (id == "expr.scatterA") return mk(f_scatter_a(), T::Scatter);
  throw UnknownFixture("unknown expression fixture: " + id);
}

PairFixture fixture_pair(const std::string& id) {
  if (id == "pair.firstLetter")
    return {id, f_min(),
            make_lang(make_min(), ab(), {"ci", "ci"}, {"ci"})};
  if (id == "pair.evenA")
    return {id, f_even_a(), make_lang(make_even(), ab(), {"s", "1"}, {"s2"})};
  if (id == "pair.noB")
    return {id, f_nob(), make_lang(make_absorb2(), ab(), {"1", "z"}, {"1"})};
  throw UnknownFixture("unknown pair fixture: " + id);
}

std::vector<std::string> fixture_ids() {
  return {"algebra.min",      "algebra.gap",    "algebra.pd",
          "algebra.even",     "expr.fNob",      "expr.fDensea",
          "expr.fOddbDensea", "expr.fWellFounded", "expr.fMin",
          "expr.fMax",        "expr.fexistab",  "expr.fGap",
          "expr.fonegap",     "expr.evenGaps",  "expr.scatterAll",
          "expr.scatterA",    "pair.firstLetter", "pair.evenA",
          "pair.noB"};
}

std::vector<CatalogueItem> expression_catalogue() {
  using T = ExprClassTarget;
  std::vector<CatalogueItem> out;
  // 1: words without the letter a, Σ* \ Σ*aΣ*.
  out.push_back({1, "noA",
                 both(W(), neg(cat_of({W(), letter("a"), W()}))),
                 T::MarkedStarFree});
  out.push_back({2, "someLetter", SOME(), T::MarkedStarFree});
  out.push_back({3, "fMin", f_min(), T::MarkedStarFree});
  // 4: the domain is dense: no two consecutive letters and not empty.
  {
    std::vector<ExprPtr> pairs;
    for (const auto& s : ab())
      for (const auto& t : ab()) pairs.push_back(factor2(s, t));
    out.push_back({4, "dense", neg(alt(alt_of(pairs), EPS())),
                   T::MarkedStarFree});
  }
  out.push_back({5, "fexistab", f_existab(), T::MarkedStarFree});
  // 6: ab-factors arbitrarily close to the end, none maximal.
  out.push_back({6, "abCofinal",
                 both(neg(cat_of({W(), letter("a"), EPS(), letter("b"),
                                  neg(f_existab())})),
                      f_existab()),
                 T::MarkedStarFree});
  out.push_back({7, "finite", f_finite_marked(), T::Marked});
  out.push_back({8, "fWellFounded", f_well_founded(), T::PowerFree});
  out.push_back({9, "finiteByWf",
                 both(f_well_founded(), f_rev_well_founded()), T::PowerFree});
  out.push_back({10, "fGap", f_gap(), T::PowerFree});
  out.push_back({11, "omegaGaps", f_omega_gaps(), T::PowerFree});
  out.push_back({12, "fFinGap", f_fingap(), T::PowerFree});
  out.push_back({13, "evenGaps", f_even_gaps(), T::ScatterFree});
  out.push_back({14, "scatterAll", f_scatter_all(), T::Scatter});
  return out;
}

}  // namespace ocw
