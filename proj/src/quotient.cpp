#include "ocw/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ocw {

namespace {

/// Renumbers blocks so that ids run 0..k-1 in order of minimal element.
void canonicalize(Congruence& c) {
  std::vector<int> remap(c.block.size(), -1);
  int next = 0;
  for (int b : c.block) {
    if (remap[b] < 0) remap[b] = next++;
  }
  for (int& b : c.block) b = remap[b];
  c.block_count = next;
}

}  // namespace

bool is_congruence(const RecognizedLanguage& lang, const Congruence& c) {
  const OAlgebra& a = lang.algebra;
  const int n = a.size();
  const auto& blk = c.block;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (blk[x] != blk[y]) continue;
      Element ex{x}, ey{y};
      bool ax = lang.accepts_value(ex), ay = lang.accepts_value(ey);
      if (ax != ay) return false;
      for (int z = 0; z < n; ++z) {
        Element ez{z};
        if (blk[a.mul(ex, ez).v] != blk[a.mul(ey, ez).v]) return false;
        if (blk[a.mul(ez, ex).v] != blk[a.mul(ez, ey).v]) return false;
      }
      if (blk[a.omega(ex).v] != blk[a.omega(ey).v]) return false;
      if (blk[a.omega_star(ex).v] != blk[a.omega_star(ey).v]) return false;
      for (Mask s = 0; s <= a.full_mask(); ++s) {
        if (blk[a.shuffle(s | bit(ex)).v] != blk[a.shuffle(s | bit(ey)).v])
          return false;
        if (blk[a.shuffle(s | bit(ex) | bit(ey)).v] !=
            blk[a.shuffle(s | bit(ex)).v])
          return false;
      }
    }
  return true;
}

Congruence coarsest_congruence(const RecognizedLanguage& lang) {
  const OAlgebra& a = lang.algebra;
  const int n = a.size();
  Congruence c;
  c.block.resize(n);
  for (int i = 0; i < n; ++i)
    c.block[i] = lang.accepts_value(Element{i}) ? 1 : 0;
  canonicalize(c);

  for (;;) {
    // Signature of x under the current partition: its block plus the
    // blocks of every one-step image.
    std::map<std::vector<int>, int> sigs;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      Element ex{x};
      std::vector<int> sig;
      sig.push_back(c.block[x]);
      for (int z = 0; z < n; ++z) {
        sig.push_back(c.block[a.mul(ex, Element{z}).v]);
        sig.push_back(c.block[a.mul(Element{z}, ex).v]);
      }
      sig.push_back(c.block[a.omega(ex).v]);
      sig.push_back(c.block[a.omega_star(ex).v]);
      for (Mask s = 0; s <= a.full_mask(); ++s)
        sig.push_back(c.block[a.shuffle(s | bit(ex)).v]);
      auto [it, inserted] = sigs.emplace(std::move(sig), static_cast<int>(sigs.size()));
      next[x] = it->second;
    }
    if (static_cast<int>(sigs.size()) == c.block_count) break;
    c.block = std::move(next);
    canonicalize(c);
  }
  return c;
}

QuotientResult quotient(const RecognizedLanguage& lang, const Congruence& c) {
  const OAlgebra& a = lang.algebra;
  const int n = a.size();
  const int k = c.block_count;
  if (static_cast<int>(c.block.size()) != n || k < 1)
    throw IllDefined("malformed congruence");

  std::vector<Element> rep(k, Element{-1});  // minimal representative
  for (int i = n - 1; i >= 0; --i) rep[c.block[i]] = Element{i};
  std::vector<std::string> names(k);
  for (int b = 0; b < k; ++b) names[b] = a.element_name(rep[b]);

  auto blk = [&](Element e) { return c.block[e.v]; };

  // Each table entry must agree across all representative choices.
  std::vector<Element> product(static_cast<std::size_t>(k) * k, Element{-1});
  std::vector<Element> omega(k, Element{-1}), omega_star(k, Element{-1});
  auto assign = [&](Element& slot, int value, const char* table) {
    if (slot.v >= 0 && slot.v != value)
      throw IllDefined(std::string("quotient ") + table +
                       " depends on representatives");
    slot = Element{value};
  };
  for (int x = 0; x < n; ++x) {
    Element ex{x};
    for (int y = 0; y < n; ++y)
      assign(product[blk(ex) * k + blk(Element{y})],
             blk(a.mul(ex, Element{y})), "product");
    assign(omega[blk(ex)], blk(a.omega(ex)), "omega");
    assign(omega_star[blk(ex)], blk(a.omega_star(ex)), "omega*");
  }

  std::vector<Element> shuffle(std::size_t{1} << k, Element{-1});
  for (Mask s = 1; s <= a.full_mask(); ++s) {
    Mask bs = 0;
    for (int i = 0; i < n; ++i)
      if (in_mask(s, Element{i})) bs |= Mask{1} << c.block[i];
    assign(shuffle[bs], blk(a.shuffle(s)), "shuffle");
  }
  for (Mask bs = 1; bs < (Mask{1} << k); ++bs)
    if (shuffle[bs].v < 0)
      throw IllDefined("quotient shuffle misses a block subset");

  QuotientResult out{
      OAlgebra(a.name().empty() ? "quotient" : a.name() + "/~",
               std::move(names), Element{c.block[a.unit().v]},
               std::move(product), std::move(omega), std::move(omega_star),
               std::move(shuffle)),
      {},
      {}};
  for (int i = 0; i < n; ++i) out.projection.push_back(Element{c.block[i]});

  RecognizedLanguage q{out.algebra, lang.alphabet, {}, 0};
  for (Element e : lang.h) q.h.push_back(out.projection[e.v]);
  for (int i = 0; i < n; ++i)
    if (lang.accepts_value(Element{i}))
      q.accepting |= bit(out.projection[i]);
  out.language = std::move(q);
  return out;
}

}  // namespace ocw
