#include "ocw/synth.hpp"

#include <algorithm>
#include <sstream>

#include "ocw/expr_ops.hpp"
#include "ocw/green.hpp"
#include "ocw/varieties.hpp"

namespace ocw {

namespace {

using ex::alt;
using ex::alt_of;
using ex::both;
using ex::both_of;
using ex::cat;
using ex::cat_of;
using ex::letter;

/// Union of left-marked arms (σ, M); the building block of the group-case
/// path expressions. Arms stay left-marked under concatenation and star,
/// so everything assembled from them is a marked expression.
using Arm = std::pair<std::string, ExprPtr>;
using ArmSum = std::vector<Arm>;

void add_arm(ArmSum& sum, Arm arm) {
  for (const Arm& x : sum)
    if (x.first == arm.first && x.second == arm.second) return;
  sum.push_back(std::move(arm));
}

}  // namespace

struct Synthesizer::Impl {
  RecognizedLanguage lang;
  ExprClassTarget xi;
  GreenData gd;
  JClassReport jrep;
  ExprClassifier clf;

  ExprPtr W, EPS, SOME;
  std::vector<ExprPtr> w_memo;
  std::vector<char> w_done;
  std::vector<char> w_building;
  std::vector<SynthTraceEntry> trace;

  struct Step {
    Element rep{-1};
    Mask jm = 0, z = 0, zp = 0;
    ExprPtr w_zp, w_not_zp;
    ExprPtr jr, jl;
    std::map<int, ExprPtr> er, el;
    std::map<std::pair<int, int>, ExprPtr> erl;
    std::map<int, ExprPtr> erjl, jrel;
    ExprPtr not_z, words_j;
    std::map<int, ExprPtr> r_fam, l_fam;
    std::map<int, ExprPtr> weq_r, weq_l;
  };
  std::map<int, Step> steps;  // by J-class id

  Impl(RecognizedLanguage l, ExprClassTarget t)
      : lang(std::move(l)),
        xi(t),
        gd(lang.algebra),
        jrep(classify_jclasses(lang.algebra)) {
    W = ex::sigma_star();
    EPS = ex::eps(lang.alphabet);
    SOME = ex::some_letter(lang.alphabet);
    const int n = lang.algebra.size();
    w_memo.resize(n);
    w_done.assign(n, 0);
    w_building.assign(n, 0);
  }

  const OAlgebra& alg() const { return lang.algebra; }
  bool marked_only() const {
    return xi == ExprClassTarget::MarkedStarFree ||
           xi == ExprClassTarget::Marked;
  }
  bool star_ok() const {
    return xi == ExprClassTarget::Marked ||
           xi == ExprClassTarget::ScatterFree || xi == ExprClassTarget::Scatter;
  }

  void note(std::string target, std::string rule) {
    trace.push_back({std::move(target), std::move(rule)});
  }

  void check(const ExprPtr& e, const std::string& what) {
    if (!class_admits(clf(e), xi))
      throw InternalError("synthesized expression for " + what +
                          " leaves class " + to_string(xi));
  }

  std::string ename(Element e) { return alg().element_name(e); }

  // --- small shape helpers -------------------------------------------------

  ExprPtr cat3(const ExprPtr& x, const std::string& sym, const ExprPtr& y) {
    return cat_of({x, letter(sym), y});
  }

  /// ∪σ (x σ y)
  ExprPtr any_letter_between(const ExprPtr& x, const ExprPtr& y) {
    std::vector<ExprPtr> parts;
    for (const std::string& s : lang.alphabet) parts.push_back(cat3(x, s, y));
    return alt_of(parts);
  }

  /// Σ*·X. In marked modes the left boundary is ε or a letter; gap
  /// junctions are contributed by the enclosing case unions.
  ExprPtr wrap_left(const ExprPtr& x) {
    if (!marked_only()) return cat(W, x);
    return alt(x, any_letter_between(W, x));
  }
  ExprPtr wrap_right(const ExprPtr& x) {
    if (!marked_only()) return cat(x, W);
    return alt(x, any_letter_between(x, W));
  }
  ExprPtr wrap_both(const ExprPtr& x) {
    if (!marked_only()) return cat(cat(W, x), W);
    std::vector<ExprPtr> parts{x, any_letter_between(W, x),
                               any_letter_between(x, W)};
    for (const std::string& s : lang.alphabet)
      parts.push_back(any_letter_between(cat3(W, s, x), W));
    return alt_of(parts);
  }

  /// Union of the memoized value languages over a subset of elements that
  /// are all strictly above the current step.
  ExprPtr wset(Mask s) {
    std::vector<ExprPtr> parts;
    for (int i = 0; i < alg().size(); ++i)
      if (in_mask(s, Element{i})) {
        if (!w_done[i]) throw InternalError("wset before induction");
        parts.push_back(w_memo[i]);
      }
    return alt_of(parts);
  }

  // --- induction driver ----------------------------------------------------

  ExprPtr words_eq(Element a) {
    if (w_done[a.v]) return w_memo[a.v];
    if (w_building[a.v]) throw InternalError("induction cycle");
    w_building[a.v] = 1;
    Step& st = ensure_step(a);
    ExprPtr e;
    if ((gd.h_class_mask(a) & (gd.h_class_mask(a) - 1)) == 0) {
      e = both(weq_r(st, a), weq_l(st, a));
      note("Words[= " + ename(a) + "]", "H-class singleton: R ∩ L");
    } else {
      e = group_case(st, a);
      note("Words[= " + ename(a) + "]",
           "group case: block automaton over the R-class");
    }
    check(e, "Words[= " + ename(a) + "]");
    w_memo[a.v] = e;
    w_done[a.v] = 1;
    w_building[a.v] = 0;
    return e;
  }

  Step& ensure_step(Element a) {
    const int jc = gd.j_class(a);
    auto it = steps.find(jc);
    if (it != steps.end()) return it->second;

    Mask z = gd.upward_mask(a);
    Mask jm = gd.j_class_mask(a);
    Mask zp = z & ~jm;
    // Everything strictly above first.
    for (int i = 0; i < alg().size(); ++i)
      if (in_mask(zp, Element{i})) words_eq(Element{i});

    Step st;
    st.rep = Element{gd.j_class(a)};
    st.jm = jm;
    st.z = z;
    st.zp = zp;
    build_step(st);
    return steps.emplace(jc, std::move(st)).first->second;
  }

  // --- per-step construction -----------------------------------------------

  void build_step(Step& st) {
    const OAlgebra& a = alg();
    const std::string stepname = "step J(" + ename(st.rep) + ")";

    st.w_zp = wset(st.zp);
    st.w_not_zp = ex::neg(st.w_zp);
    st.jr = both(cofinal(lang.alphabet, st.w_not_zp), SOME);
    st.jl = both(coinitial(lang.alphabet, st.w_not_zp), SOME);

    for (int i = 0; i < a.size(); ++i) {
      Element e{i};
      if (!in_mask(st.zp, e) || !a.is_idempotent(e)) continue;
      st.er[i] = both_of(
          {cofinal(lang.alphabet, wset(gd.j_class_mask(e))),
           all_prefixes(lang.alphabet, wset(gd.upward_mask(e))),
           initial(lang.alphabet, wset(gd.r_class_mask(e)))});
      st.el[i] = both_of(
          {coinitial(lang.alphabet, wset(gd.j_class_mask(e))),
           all_suffixes(lang.alphabet, wset(gd.upward_mask(e))),
           final_(lang.alphabet, wset(gd.l_class_mask(e)))});
    }
    for (auto& [ei, er] : st.er)
      for (auto& [fi, el] : st.el)
        st.erl[{ei, fi}] = make_erl(st, Element{ei}, Element{fi});
    for (auto& [ei, er] : st.er) st.erjl[ei] = make_erjl(st, Element{ei});
    for (auto& [fi, el] : st.el) st.jrel[fi] = make_jrel(st, Element{fi});

    build_families(st);
    st.not_z = build_not_z(st, stepname);
    check(st.not_z, stepname + " Words[not Z]");
    st.words_j = both(ex::neg(st.not_z), st.w_not_zp);
    check(st.words_j, stepname + " Words[J]");
    note(stepname + " Words[J]", "complement of Words[not Z] minus Words[Z']");
  }

  /// →e·←f. Unrestricted modes concatenate the two limit languages; the
  /// marked modes use the prefix/suffix extension conjunctions, gated to ∅
  /// when no extension tuples exist (a nonempty →e forces some).
  ExprPtr make_erl(Step& st, Element e, Element f) {
    if (!marked_only()) return cat(st.er[e.v], st.el[f.v]);
    ExprPtr epart = marked_omega_part(e);
    ExprPtr fpart = marked_omegastar_part(f, ex::neg(wset(gd.upward_mask(e))));
    if (epart->kind() == ExprKind::Empty || fpart->kind() == ExprKind::Empty)
      return ex::empty();
    return both_of({epart, fpart,
                    initial(lang.alphabet, wset(gd.r_class_mask(e))),
                    final_(lang.alphabet, wset(gd.l_class_mask(f))), SOME});
  }

  ExprPtr make_erjl(Step& st, Element e) {
    if (!marked_only()) return cat(st.er[e.v], st.jl);
    ExprPtr epart = marked_omega_part(e);
    if (epart->kind() == ExprKind::Empty) return ex::empty();
    return both_of(
        {epart, initial(lang.alphabet, wset(gd.r_class_mask(e))), SOME});
  }

  ExprPtr make_jrel(Step& st, Element f) {
    if (!marked_only()) return cat(st.jr, st.el[f.v]);
    ExprPtr fpart = marked_omegastar_part(f, st.w_not_zp);
    if (fpart->kind() == ExprKind::Empty) return ex::empty();
    return both_of(
        {fpart, final_(lang.alphabet, wset(gd.l_class_mask(f))), SOME});
  }

  /// Every prefix that is R-equivalent to e and followed by a letter
  /// extends to a longer such prefix through a J(e)-factor: the conjuncts
  /// ¬(W_b σ ¬(W_c Σ Σ*)) over all b ≡R e, c ≡J e with b·h(σ)·c ≡R e.
  ExprPtr marked_omega_part(Element e) {
    const OAlgebra& a = alg();
    std::vector<ExprPtr> conj;
    bool any = false;
    for (int b = 0; b < a.size(); ++b) {
      if (!gd.eq_r(Element{b}, e)) continue;
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
        for (int c = 0; c < a.size(); ++c) {
          if (!gd.eq_j(Element{c}, e)) continue;
          Element d = a.mul(a.mul(Element{b}, lang.h[si]), Element{c});
          if (!gd.eq_r(d, e)) continue;
          any = true;
          ExprPtr ext = any_letter_between(w_memo[c], W);
          conj.push_back(ex::neg(
              cat3(w_memo[b], lang.alphabet[si], ex::neg(ext))));
        }
    }
    if (!any) return ex::empty();
    return both_of(conj);
  }

  /// Mirror of marked_omega_part: beyond a fall point (detected by
  /// `fall_guard`), a suffix L-equivalent to f extends leftwards.
  ExprPtr marked_omegastar_part(Element f, ExprPtr fall_guard) {
    const OAlgebra& a = alg();
    std::vector<ExprPtr> conj;
    bool any = false;
    for (int b = 0; b < a.size(); ++b) {
      if (!gd.eq_l(Element{b}, f)) continue;
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
        for (int c = 0; c < a.size(); ++c) {
          if (!gd.eq_j(Element{c}, f)) continue;
          Element d = a.mul(a.mul(Element{c}, lang.h[si]), Element{b});
          if (!gd.eq_l(d, f)) continue;
          any = true;
          ExprPtr ext = any_letter_between(W, w_memo[c]);
          conj.push_back(ex::neg(cat3(both(fall_guard, ex::neg(ext)),
                                      lang.alphabet[si], w_memo[b])));
        }
    }
    if (!any) return ex::empty();
    return both_of(conj);
  }

  // --- R_r and L_ℓ ----------------------------------------------------------

  /// X·Σ* with marked-safe right boundary.
  ExprPtr ext_right(const ExprPtr& x) { return wrap_right(x); }
  ExprPtr ext_left(const ExprPtr& x) { return wrap_left(x); }

  void build_families(Step& st) {
    const OAlgebra& a = alg();
    std::map<int, std::vector<ExprPtr>> r_parts, l_parts;

    r_parts[a.unit().v].push_back(W);
    l_parts[a.unit().v].push_back(W);

    for (int i = 0; i < a.size(); ++i) {
      Element e{i};
      if (!a.is_idempotent(e)) continue;
      if (in_mask(st.zp, e)) {
        // ←e·Σ* for r = ω*(e); Σ*·→e for ℓ = ω(e).
        r_parts[a.omega_star(e).v].push_back(ext_right(st.el[i]));
        l_parts[a.omega(e).v].push_back(ext_left(st.er[i]));
        if (gd.lt_j(a.omega(e), e))
          r_parts[a.omega(e).v].push_back(ext_right(st.er[i]));
        if (gd.lt_j(a.omega_star(e), e))
          l_parts[a.omega_star(e).v].push_back(ext_left(st.el[i]));
      } else if (in_mask(st.jm, e)) {
        r_parts[a.omega_star(e).v].push_back(st.jl);
        l_parts[a.omega(e).v].push_back(st.jr);
      }
    }
    for (int ei = 0; ei < a.size(); ++ei) {
      Element e{ei};
      if (!a.is_idempotent(e)) continue;
      for (int fi = 0; fi < a.size(); ++fi) {
        Element f{fi};
        if (!a.is_idempotent(f)) continue;
        Element r = a.mul(a.omega(e), a.omega_star(f));
        if (in_mask(st.zp, e) && in_mask(st.jm, f))
          r_parts[r.v].push_back(st.erjl[ei]);
        if (in_mask(st.jm, e) && in_mask(st.zp, f))
          l_parts[r.v].push_back(st.jrel[fi]);
        if (in_mask(st.zp, e) && in_mask(st.zp, f)) {
          bool cond = !gd.eq_j(e, f) || gd.lt_j(a.omega(e), e) ||
                      gd.lt_j(a.omega_star(f), f);
          if (cond) {
            r_parts[r.v].push_back(ext_right(st.erl[{ei, fi}]));
            l_parts[r.v].push_back(ext_left(st.erl[{ei, fi}]));
          }
        }
      }
    }
    for (auto& [v, parts] : r_parts) {
      st.r_fam[v] = alt_of(parts);
      check(st.r_fam[v], "R_" + ename(Element{v}));
    }
    for (auto& [v, parts] : l_parts) {
      st.l_fam[v] = alt_of(parts);
      check(st.l_fam[v], "L_" + ename(Element{v}));
    }
  }

  // --- Words over the complement of Z ---------------------------------------

  ExprPtr build_not_z(Step& st, const std::string& stepname) {
    const OAlgebra& a = alg();
    const JClassInfo& jc = jrep.of(gd, st.rep);
    std::vector<ExprPtr> parts;
    auto inz = [&](Element x) { return in_mask(st.z, x); };

    // Letter witnesses.
    for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
      if (!inz(lang.h[si])) {
        parts.push_back(cat3(W, lang.alphabet[si], W));
        note(stepname, "letter witness " + lang.alphabet[si]);
      }

    // Omega and omega* witnesses.
    for (int i = 0; i < a.size(); ++i) {
      Element e{i};
      if (!a.is_idempotent(e) || !inz(e)) continue;
      if (!inz(a.omega(e))) {
        if (in_mask(st.zp, e)) {
          parts.push_back(wrap_both(st.er[i]));
          if (marked_only()) {
            for (auto& [fi, x] : st.el)
              parts.push_back(wrap_both(st.erl[{i, fi}]));
            parts.push_back(wrap_both(st.erjl[i]));
          }
          note(stepname, "omega witness e=" + ename(e) + " above J");
        } else {
          parts.push_back(st.jr);
          parts.push_back(any_letter_between(st.jr, W));
          note(stepname, "omega witness e=" + ename(e) + " inside J");
        }
      }
      if (!inz(a.omega_star(e))) {
        if (in_mask(st.zp, e)) {
          parts.push_back(wrap_both(st.el[i]));
          if (marked_only()) {
            for (auto& [ei2, x] : st.er)
              parts.push_back(wrap_both(st.erl[{ei2, i}]));
            parts.push_back(wrap_both(st.jrel[i]));
          }
          note(stepname, "omega* witness e=" + ename(e) + " above J");
        } else {
          parts.push_back(st.jl);
          parts.push_back(any_letter_between(W, st.jl));
          note(stepname, "omega* witness e=" + ename(e) + " inside J");
        }
      }
    }

    // Gap falls.
    bool jr_jl_added = false;
    for (int ei = 0; ei < a.size(); ++ei) {
      Element e{ei};
      if (!a.is_idempotent(e) || !inz(e)) continue;
      for (int fi = 0; fi < a.size(); ++fi) {
        Element f{fi};
        if (!a.is_idempotent(f) || !inz(f)) continue;
        if (inz(a.mul(a.omega(e), a.omega_star(f)))) continue;
        const bool e_above = in_mask(st.zp, e), f_above = in_mask(st.zp, f);
        if (e_above && f_above) {
          parts.push_back(wrap_both(st.erl[{ei, fi}]));
          note(stepname, "gap fall case 1: " + ename(e) + "," + ename(f));
        } else if (!e_above && f_above) {
          parts.push_back(wrap_both(st.jrel[fi]));
          note(stepname, "gap fall case 2: jr·←" + ename(f));
        } else if (e_above && !f_above) {
          parts.push_back(wrap_both(st.erjl[ei]));
          note(stepname, "gap fall case 3: →" + ename(e) + "·jl");
        } else if (!jr_jl_added) {
          jr_jl_added = true;
          const bool case4 = !inz(a.omega(e)) && !inz(a.omega_star(f));
          if (!marked_only()) {
            parts.push_back(cat(st.jr, st.jl));
            note(stepname, "gap fall case 4/5: jr·jl");
          } else if (case4 && star_ok()) {
            parts.push_back(
                infinitely_many_marked(lang.alphabet, st.w_not_zp));
            note(stepname, "gap fall case 4: infinitely many not-Z' factors");
          } else {
            throw CaseUnreachable(
                "gap fall inside a J-class under a marked target "
                "contradicts the granted hypothesis");
          }
        }
      }
    }

    // Concatenation witnesses: L_ℓ σ R_r and L_ℓ σ' W_b σ R_r unions.
    for (auto& [lv, lexpr] : st.l_fam)
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
        for (auto& [rv, rexpr] : st.r_fam) {
          Element prod =
              a.mul(a.mul(Element{lv}, lang.h[si]), Element{rv});
          if (!inz(prod))
            parts.push_back(cat3(lexpr, lang.alphabet[si], rexpr));
          for (int b = 0; b < a.size(); ++b) {
            if (!in_mask(st.zp, Element{b})) continue;
            for (std::size_t sj = 0; sj < lang.alphabet.size(); ++sj) {
              Element p = a.mul(
                  a.mul(a.mul(a.mul(Element{lv}, lang.h[si]), Element{b}),
                        lang.h[sj]),
                  Element{rv});
              if (!inz(p))
                parts.push_back(cat_of({lexpr, letter(lang.alphabet[si]),
                                        w_memo[b], letter(lang.alphabet[sj]),
                                        rexpr}));
            }
          }
        }
    note(stepname, "concatenation witnesses: L·σ·R unions");

    // Shuffle witnesses, by the kind of the J-class.
    if (!jc.regular) {
      parts.push_back(any_letter_between(st.jr, W));
      for (auto& [fi, x] : st.jrel) parts.push_back(wrap_right(x));
      note(stepname, "shuffle witness: J irregular, jr-prefixed");
    } else if (!jc.ordinal_regular && !jc.ordinal_star_regular) {
      if (shuffle_witness_exists(st)) {
        if (marked_only()) {
          if (!star_ok())
            throw CaseUnreachable(
                "shuffle witness in a star-free target with a regular "
                "non-ordinal J-class");
          parts.push_back(infinitely_many_marked(lang.alphabet, st.w_not_zp));
        } else {
          parts.push_back(
              infinitely_many_unrestricted(lang.alphabet, st.w_not_zp));
        }
        note(stepname, "shuffle witness: infinitely many not-Z' factors");
      }
    } else if (!jc.scattered_regular) {
      if (shuffle_witness_exists(st)) {
        if (marked_only())
          throw CaseUnreachable(
              "shuffle witness under a marked target with a non-scattered "
              "ordinal-regular J-class");
        parts.push_back(cat(st.jr, st.jl));
        note(stepname, "shuffle witness: jr·jl");
      }
    } else if (!jc.shuffle_regular) {
      if (shuffle_witness_exists(st)) {
        if (xi != ExprClassTarget::Scatter)
          throw CaseUnreachable(
              "shuffle witness needs the scatter operator, which the "
              "target class lacks");
        parts.push_back(densely_many(lang.alphabet, st.w_not_zp));
        note(stepname, "shuffle witness: densely many not-Z' factors");
      }
    } else {
      // Shuffle regular. Under any granted target the class is shuffle
      // simple regular; witnesses in Z' are caught around the jr/jl pair,
      // the others through the concatenation and gap languages.
      if (shuffle_witness_exists(st)) {
        if (!jc.shuffle_simple_regular)
          throw CaseUnreachable(
              "shuffle regular J-class without a shuffle simple idempotent "
              "under a granted target");
        Element e = *jc.w_shuffle_simple;
        for (int d = 0; d < a.size(); ++d) {
          if (!in_mask(st.zp, Element{d})) continue;
          if (inz(a.mul(a.mul(e, Element{d}), e))) continue;
          for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
            for (std::size_t sj = 0; sj < lang.alphabet.size(); ++sj) {
              Element v = a.mul(
                  a.mul(a.mul(a.mul(a.omega(e), lang.h[si]), Element{d}),
                        lang.h[sj]),
                  a.omega_star(e));
              if (!inz(v))
                parts.push_back(cat_of({st.jr, letter(lang.alphabet[si]),
                                        w_memo[d], letter(lang.alphabet[sj]),
                                        st.jl}));
            }
        }
        note(stepname, "shuffle witness: shuffle simple class, middle "
                       "factor unions");
      }
    }

    return alt_of(parts);
  }

  bool shuffle_witness_exists(const Step& st) {
    // Some K ⊆ Z with sh(K) outside Z.
    for (Mask k = st.z;; k = (k - 1) & st.z) {
      if (k != 0 && !in_mask(st.z, alg().shuffle(k))) return true;
      if (k == 0) return false;
    }
  }

  // --- Words R/L/H-equivalent to a ------------------------------------------

  ExprPtr weq_r(Step& st, Element target) {
    auto it = st.weq_r.find(target.v);
    if (it != st.weq_r.end()) return it->second;
    const OAlgebra& a = alg();
    std::vector<ExprPtr> parts;
    if (gd.eq_r(a.unit(), target)) parts.push_back(EPS);
    for (auto& [rv, rexpr] : st.r_fam)
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si) {
        if (gd.leq_r(a.mul(lang.h[si], Element{rv}), target))
          parts.push_back(cat3(EPS, lang.alphabet[si], rexpr));
        for (int b = 0; b < a.size(); ++b)
          if (in_mask(st.zp, Element{b}) &&
              gd.leq_r(a.mul(a.mul(Element{b}, lang.h[si]), Element{rv}),
                       target))
            parts.push_back(cat3(w_memo[b], lang.alphabet[si], rexpr));
      }
    ExprPtr e = both(st.words_j, alt_of(parts));
    check(e, "Words[R= " + ename(target) + "]");
    st.weq_r[target.v] = e;
    return e;
  }

  ExprPtr weq_l(Step& st, Element target) {
    auto it = st.weq_l.find(target.v);
    if (it != st.weq_l.end()) return it->second;
    const OAlgebra& a = alg();
    std::vector<ExprPtr> parts;
    if (gd.eq_l(a.unit(), target)) parts.push_back(EPS);
    for (auto& [lv, lexpr] : st.l_fam)
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si) {
        if (gd.leq_l(a.mul(Element{lv}, lang.h[si]), target))
          parts.push_back(cat3(lexpr, lang.alphabet[si], EPS));
        for (int b = 0; b < a.size(); ++b)
          if (in_mask(st.zp, Element{b}) &&
              gd.leq_l(a.mul(a.mul(Element{lv}, lang.h[si]), Element{b}),
                       target))
            parts.push_back(cat3(lexpr, lang.alphabet[si], w_memo[b]));
      }
    ExprPtr e = both(st.words_j, alt_of(parts));
    check(e, "Words[L= " + ename(target) + "]");
    st.weq_l[target.v] = e;
    return e;
  }

  // --- group case -----------------------------------------------------------

  ExprPtr group_case(Step& st, Element target) {
    if (!star_ok())
      throw HypothesisUnsatisfied(
          "a nontrivial group requires the Kleene star, which " +
          to_string(xi) + " lacks");
    const OAlgebra& a = alg();

    // Pinned-value blocks: the empty block, the value languages above the
    // class, and the limit languages with their pinned limit values.
    std::map<int, std::vector<ExprPtr>> blocks;
    blocks[a.unit().v].push_back(EPS);
    for (int b = 0; b < a.size(); ++b)
      if (in_mask(st.zp, Element{b})) blocks[b].push_back(w_memo[b]);
    for (auto& [ei, er] : st.er) {
      blocks[a.omega(Element{ei}).v].push_back(er);
      blocks[a.omega_star(Element{ei}).v].push_back(st.el[ei]);
    }
    for (auto& [ef, erl] : st.erl) {
      Element e{ef.first}, f{ef.second};
      Element v = a.mul(a.omega(e), a.omega_star(f));
      if (gd.lt_j(v, e) || gd.lt_j(v, f)) blocks[v.v].push_back(erl);
    }
    std::map<int, ExprPtr> block_expr;
    for (auto& [v, parts] : blocks) {
      ExprPtr e = alt_of(parts);
      if (e->kind() != ExprKind::Empty) block_expr[v] = e;
    }

    // States: the R-class of the target; transitions read a letter and a
    // block, both with pinned values.
    std::vector<int> states;
    for (int i = 0; i < a.size(); ++i)
      if (gd.eq_r(Element{i}, target)) states.push_back(i);
    auto state_index = [&](Element e) {
      for (std::size_t k = 0; k < states.size(); ++k)
        if (states[k] == e.v) return static_cast<int>(k);
      return -1;
    };
    const int m = static_cast<int>(states.size());
    std::vector<std::vector<ArmSum>> path(m, std::vector<ArmSum>(m));
    for (int i = 0; i < m; ++i)
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si)
        for (auto& [v, bexpr] : block_expr) {
          Element t = a.mul(a.mul(Element{states[i]}, lang.h[si]), Element{v});
          int j = state_index(t);
          if (j >= 0)
            add_arm(path[i][j], {lang.alphabet[si], bexpr});
        }

    // Entries: a block landing directly in the class, or a strictly-above
    // prefix (possibly ε) followed by a letter and a block.
    std::vector<std::vector<ExprPtr>> entry(m);
    for (auto& [v, bexpr] : block_expr) {
      int j = state_index(Element{v});
      if (j >= 0) entry[j].push_back(bexpr);
      for (std::size_t si = 0; si < lang.alphabet.size(); ++si) {
        Element t0 = a.mul(lang.h[si], Element{v});
        int j0 = state_index(t0);
        if (j0 >= 0) entry[j0].push_back(cat3(EPS, lang.alphabet[si], bexpr));
        for (int b = 0; b < a.size(); ++b) {
          if (!in_mask(st.zp, Element{b})) continue;
          Element t1 = a.mul(a.mul(Element{b}, lang.h[si]), Element{v});
          int j1 = state_index(t1);
          if (j1 >= 0)
            entry[j1].push_back(cat3(w_memo[b], lang.alphabet[si], bexpr));
        }
      }
    }

    // Kleene elimination; arms stay left-marked throughout.
    auto append_sum = [&](const ExprPtr& mexp, const ArmSum& b) {
      std::vector<ExprPtr> parts;
      for (const Arm& arm : b)
        parts.push_back(cat3(mexp, arm.first, arm.second));
      return alt_of(parts);
    };
    for (int q = 0; q < m; ++q) {
      std::vector<std::vector<ArmSum>> next = path;
      for (int i = 0; i < m; ++i) {
        if (path[i][q].empty()) continue;
        for (int j = 0; j < m; ++j) {
          if (path[q][j].empty()) continue;
          for (const Arm& arm : path[i][q]) {
            ExprPtr mid = ex::marked_star(arm.second, path[q][q]);
            add_arm(next[i][j], {arm.first, append_sum(mid, path[q][j])});
          }
        }
      }
      path = std::move(next);
    }

    const int ti = state_index(target);
    std::vector<ExprPtr> parts;
    for (int s = 0; s < m; ++s) {
      ExprPtr es = alt_of(entry[s]);
      if (es->kind() == ExprKind::Empty) continue;
      if (s == ti) parts.push_back(es);
      if (!path[s][ti].empty()) parts.push_back(append_sum(es, path[s][ti]));
    }
    return both(st.words_j, alt_of(parts));
  }
};

Synthesizer::Synthesizer(RecognizedLanguage lang, ExprClassTarget target)
    : impl_(std::make_shared<Impl>(std::move(lang), target)) {}

ExprPtr Synthesizer::words_eq(Element a) { return impl_->words_eq(a); }

ExprPtr Synthesizer::words_not_upward(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).not_z;
}

ExprPtr Synthesizer::words_jclass(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).words_j;
}

ExprPtr Synthesizer::words_eq_r(Element a) {
  impl_->words_eq(a);
  return impl_->weq_r(impl_->steps.at(impl_->gd.j_class(a)), a);
}

ExprPtr Synthesizer::words_eq_l(Element a) {
  impl_->words_eq(a);
  return impl_->weq_l(impl_->steps.at(impl_->gd.j_class(a)), a);
}

ExprPtr Synthesizer::words_eq_h(Element a) {
  return ex::both(words_eq_r(a), words_eq_l(a));
}

ExprPtr Synthesizer::limit_right(Element a, Element e) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).er.at(e.v);
}

ExprPtr Synthesizer::limit_left(Element a, Element f) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).el.at(f.v);
}

ExprPtr Synthesizer::limit_right_left(Element a, Element e, Element f) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).erl.at({e.v, f.v});
}

ExprPtr Synthesizer::limit_jr(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).jr;
}

ExprPtr Synthesizer::limit_jl(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).jl;
}

std::map<int, ExprPtr> Synthesizer::r_family(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).r_fam;
}

std::map<int, ExprPtr> Synthesizer::l_family(Element a) {
  impl_->words_eq(a);
  return impl_->steps.at(impl_->gd.j_class(a)).l_fam;
}

const std::vector<SynthTraceEntry>& Synthesizer::trace() const {
  return impl_->trace;
}

const RecognizedLanguage& Synthesizer::language() const { return impl_->lang; }

SynthResult synth_language(const RecognizedLanguage& lang,
                           ExprClassTarget target) {
  VarietyVerdict verdict = variety_membership(lang.algebra);
  int item = 0;
  switch (target) {
    case ExprClassTarget::MarkedStarFree: item = 1; break;
    case ExprClassTarget::Marked: item = 2; break;
    case ExprClassTarget::PowerFree: item = 3; break;
    case ExprClassTarget::ScatterFree: item = 4; break;
    case ExprClassTarget::Scatter: item = 5; break;
  }
  if (!verdict.get(item))
    throw HypothesisUnsatisfied("the recognizer is not granted " +
                                to_string(target));
  Synthesizer synth(lang, target);
  std::vector<ExprPtr> parts;
  for (int i = 0; i < lang.algebra.size(); ++i)
    if (in_mask(lang.accepting, Element{i}))
      parts.push_back(synth.words_eq(Element{i}));
  SynthResult out;
  out.expr = ex::alt_of(parts);
  if (!class_admits(expr_class(out.expr), target))
    throw InternalError("synthesized language leaves the target class");
  out.trace = synth.trace();
  return out;
}

}  // namespace ocw
