#include "ocw/expr_ops.hpp"

#include <algorithm>
#include <unordered_map>

namespace ocw {

namespace ex {

ExprPtr sigma_star() { return neg(empty()); }

ExprPtr some_letter(std::span<const std::string> alphabet) {
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    parts.push_back(cat_of({sigma_star(), letter(s), sigma_star()}));
  return alt_of(parts);
}

ExprPtr eps(std::span<const std::string> alphabet) {
  return neg(some_letter(alphabet));
}

ExprPtr letter_lang(std::span<const std::string> alphabet,
                    const std::string& sym) {
  ExprPtr e = eps(alphabet);
  return cat_of({e, letter(sym), e});
}

ExprPtr marked_star(ExprPtr prefix,
                    std::span<const std::pair<std::string, ExprPtr>> arms) {
  if (arms.empty()) return prefix;  // (∅)* = {ε}
  // prefix·(L₁+R)* = (prefix·L₁*)·(R·L₁*)* with L₁ = σ₁M₁ and each arm of
  // R·L₁* again left-marked: σᵢ(Mᵢ·L₁*).
  ExprPtr l1 = star(cat(letter(arms[0].first), arms[0].second));
  ExprPtr head = cat(std::move(prefix), l1);
  if (arms.size() == 1) return head;
  std::vector<std::pair<std::string, ExprPtr>> rest;
  for (std::size_t i = 1; i < arms.size(); ++i)
    rest.emplace_back(arms[i].first, cat(arms[i].second, l1));
  return marked_star(std::move(head), rest);
}

}  // namespace ex

namespace {

using ex::alt_of;
using ex::both;
using ex::cat_of;
using ex::letter;
using ex::neg;
using ex::sigma_star;

// Σ*ΣFΣΣ* expanded: some open factor lies in F.
ExprPtr some_inner_factor(std::span<const std::string> alphabet, ExprPtr f) {
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    for (const std::string& t : alphabet)
      parts.push_back(cat_of(
          {sigma_star(), letter(s), f, letter(t), sigma_star()}));
  return alt_of(parts);
}

}  // namespace

ExprPtr initial(std::span<const std::string> alphabet, ExprPtr f) {
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    parts.push_back(cat_of({f, letter(s), sigma_star()}));
  return alt_of(parts);
}

ExprPtr final_(std::span<const std::string> alphabet, ExprPtr f) {
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    parts.push_back(cat_of({sigma_star(), letter(s), f}));
  return alt_of(parts);
}

ExprPtr all_prefixes(std::span<const std::string> alphabet, ExprPtr f) {
  return neg(initial(alphabet, neg(f)));
}

ExprPtr all_suffixes(std::span<const std::string> alphabet, ExprPtr f) {
  return neg(final_(alphabet, neg(f)));
}

ExprPtr cofinal(std::span<const std::string> alphabet, ExprPtr f) {
  // ¬((Σ*Σ)·¬(Σ*ΣFΣΣ*)), with Σ*Σ·X folded into the union over letters.
  ExprPtr q = neg(some_inner_factor(alphabet, f));
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    parts.push_back(cat_of({sigma_star(), letter(s), q}));
  return neg(alt_of(parts));
}

ExprPtr coinitial(std::span<const std::string> alphabet, ExprPtr f) {
  ExprPtr q = neg(some_inner_factor(alphabet, f));
  std::vector<ExprPtr> parts;
  for (const std::string& s : alphabet)
    parts.push_back(cat_of({q, letter(s), sigma_star()}));
  return neg(alt_of(parts));
}

ExprPtr infinitely_many_marked(std::span<const std::string> alphabet,
                               ExprPtr f) {
  // ¬(¬(FΣF)·(Σ·¬(FΣF))*); the starred union of left-marked arms goes
  // through the marked star-of-union rewrite.
  std::vector<ExprPtr> fsf;
  for (const std::string& s : alphabet)
    fsf.push_back(cat_of({f, letter(s), f}));
  ExprPtr p = neg(alt_of(fsf));
  std::vector<std::pair<std::string, ExprPtr>> arms;
  for (const std::string& s : alphabet) arms.emplace_back(s, p);
  return neg(ex::marked_star(p, arms));
}

ExprPtr infinitely_many_unrestricted(std::span<const std::string> alphabet,
                                     ExprPtr f) {
  // Σ*(cofinal(F)+coinitial(F))Σ*, with both limit parts restricted to
  // nonempty words: the bare cofinal/coinitial expressions accept ε
  // vacuously, which would absorb everything under the outer Σ*.
  ExprPtr plus = ex::some_letter(alphabet);
  ExprPtr mid = ex::alt(both(cofinal(alphabet, f), plus),
                        both(coinitial(alphabet, f), plus));
  return cat_of({sigma_star(), mid, sigma_star()});
}

ExprPtr densely_many(std::span<const std::string> alphabet, ExprPtr f) {
  (void)alphabet;
  return neg(ex::scatter(neg(ex::cat(f, f))));
}

// ---------------------------------------------------------------------------
// Finite-word membership

namespace {

// Interval sets over a word of n letters are packed into a 64-bit mask via
// the triangular index of (lo, hi), lo <= hi <= n. n is capped so the
// index stays below 64.
constexpr int max_word = 24;  // not packable; real cap applied per word

struct Memo {
  const Word* w;
  int n;
  std::unordered_map<const Expr*, std::vector<bool>> table;

  int tri(int lo, int hi) const { return lo * (n + 1) + hi; }

  const std::vector<bool>& eval(const ExprPtr& e) {
    auto it = table.find(e.get());
    if (it != table.end()) return it->second;
    std::vector<bool> m(static_cast<std::size_t>(n + 1) * (n + 1), false);
    switch (e->kind()) {
      case ExprKind::Empty:
        break;
      case ExprKind::Letter:
        for (int lo = 0; lo < n; ++lo)
          if ((*w)[lo] == e->letter()) m[tri(lo, lo + 1)] = true;
        break;
      case ExprKind::Union: {
        const auto& a = eval(e->left());
        const auto& b = eval(e->right());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = a[i] || b[i];
        break;
      }
      case ExprKind::Inter: {
        const auto& a = eval(e->left());
        const auto& b = eval(e->right());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = a[i] && b[i];
        break;
      }
      case ExprKind::Neg: {
        const auto& a = eval(e->child());
        for (int lo = 0; lo <= n; ++lo)
          for (int hi = lo; hi <= n; ++hi)
            m[tri(lo, hi)] = !a[tri(lo, hi)];
        break;
      }
      case ExprKind::Concat: {
        const auto& a = eval(e->left());
        const auto& b = eval(e->right());
        for (int lo = 0; lo <= n; ++lo)
          for (int hi = lo; hi <= n; ++hi)
            for (int k = lo; k <= hi; ++k)
              if (a[tri(lo, k)] && b[tri(k, hi)]) {
                m[tri(lo, hi)] = true;
                break;
              }
        break;
      }
      case ExprKind::Star:
      case ExprKind::Scatter: {
        // Finite orderings are scattered, so both stars mean finite
        // iteration here.
        const auto& a = eval(e->child());
        for (int lo = 0; lo <= n; ++lo) m[tri(lo, lo)] = true;
        for (int len = 1; len <= n; ++len)
          for (int lo = 0; lo + len <= n; ++lo) {
            int hi = lo + len;
            for (int k = lo + 1; k <= hi; ++k)
              if (a[tri(lo, k)] && m[tri(k, hi)]) {
                m[tri(lo, hi)] = true;
                break;
              }
          }
        break;
      }
    }
    return table.emplace(e.get(), std::move(m)).first->second;
  }
};

}  // namespace

bool finite_membership(const ExprPtr& e, const Word& w) {
  if (static_cast<int>(w.size()) > max_word)
    throw InternalError("finite_membership word too long");
  Memo memo{&w, static_cast<int>(w.size()), {}};
  return memo.eval(e)[memo.tri(0, memo.n)];
}

std::vector<Word> all_words(std::span<const std::string> alphabet, int n) {
  std::vector<Word> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (const std::string& s : alphabet) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

Word parse_word(std::span<const std::string> alphabet,
                const std::string& text) {
  if (text.empty() || text == "-" || text == "eps" || text == "ε") return {};
  bool single = true;
  for (const std::string& s : alphabet) single = single && s.size() == 1;
  Word w;
  if (single && text.find(' ') == std::string::npos &&
      text.find(',') == std::string::npos) {
    for (char c : text) w.push_back(std::string(1, c));
  } else {
    std::string cur;
    for (char c : text + " ") {
      if (c == ' ' || c == ',') {
        if (!cur.empty()) w.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  for (const std::string& s : w) {
    bool ok = false;
    for (const std::string& t : alphabet) ok = ok || s == t;
    if (!ok) throw UnknownLetter("letter '" + s + "' not in alphabet");
  }
  return w;
}

}  // namespace ocw
