#include "ocw/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ocw {

GreenData::GreenData(const OAlgebra& a) : n_(a.size()), alg_(&a) {
  leqR_.assign(static_cast<std::size_t>(n_) * n_, false);
  leqL_.assign(static_cast<std::size_t>(n_) * n_, false);
  leqJ_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (int b = 0; b < n_; ++b) {
    for (int x = 0; x < n_; ++x) {
      leqR_[a.mul(Element{b}, Element{x}).v * n_ + b] = true;
      leqL_[a.mul(Element{x}, Element{b}).v * n_ + b] = true;
      for (int y = 0; y < n_; ++y)
        leqJ_[a.mul(a.mul(Element{x}, Element{b}), Element{y}).v * n_ + b] =
            true;
    }
  }

  auto classify = [&](auto eq, std::vector<int>& out) {
    out.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
      if (out[i] >= 0) continue;
      out[i] = i;
      for (int j = i + 1; j < n_; ++j)
        if (out[j] < 0 && eq(Element{i}, Element{j})) out[j] = i;
    }
  };
  classify([&](Element x, Element y) { return eq_r(x, y); }, rcls_);
  classify([&](Element x, Element y) { return eq_l(x, y); }, lcls_);
  classify([&](Element x, Element y) { return eq_j(x, y); }, jcls_);
  classify([&](Element x, Element y) { return eq_h(x, y); }, hcls_);
  for (int i = 0; i < n_; ++i)
    if (jcls_[i] == i) jreps_.push_back(Element{i});
}

namespace {

Mask class_mask(int n, const std::vector<int>& cls, Element a) {
  Mask m = 0;
  for (int i = 0; i < n; ++i)
    if (cls[i] == cls[a.v]) m |= Mask{1} << i;
  return m;
}

}  // namespace

Mask GreenData::r_class_mask(Element a) const { return class_mask(n_, rcls_, a); }
Mask GreenData::l_class_mask(Element a) const { return class_mask(n_, lcls_, a); }
Mask GreenData::j_class_mask(Element a) const { return class_mask(n_, jcls_, a); }
Mask GreenData::h_class_mask(Element a) const { return class_mask(n_, hcls_, a); }

Mask GreenData::upward_mask(Element a) const {
  Mask m = 0;
  for (int b = 0; b < n_; ++b)
    if (leq_j(a, Element{b})) m |= Mask{1} << b;
  return m;
}

GreenData::Eggbox GreenData::eggbox(Element a) const {
  Eggbox box;
  std::vector<int> rows, cols;  // class ids, ascending = by minimal element
  for (int i = 0; i < n_; ++i)
    if (jcls_[i] == jcls_[a.v]) {
      box.members.push_back(Element{i});
      if (std::find(rows.begin(), rows.end(), rcls_[i]) == rows.end())
        rows.push_back(rcls_[i]);
      if (std::find(cols.begin(), cols.end(), lcls_[i]) == cols.end())
        cols.push_back(lcls_[i]);
    }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  box.grid.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    box.grid[r].resize(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (Element e : box.members)
        if (rcls_[e.v] == rows[r] && lcls_[e.v] == cols[c])
          box.grid[r][c].push_back(e);
  }
  return box;
}

GreenData green(const OAlgebra& a) { return GreenData(a); }

namespace {

std::string join_names(const OAlgebra& a, const std::vector<Element>& es) {
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += ", ";
    s += a.element_name(es[i]);
  }
  return s;
}

}  // namespace

std::string render_eggboxes(const OAlgebra& a, const GreenData& g) {
  std::ostringstream os;
  for (Element rep : g.j_reps()) {
    GreenData::Eggbox box = g.eggbox(rep);
    os << "J-class {" << join_names(a, box.members) << "}\n";
    std::size_t w = 1;
    for (const auto& row : box.grid)
      for (const auto& cell : row) w = std::max(w, join_names(a, cell).size());
    auto line = [&](const char* l, const char* m, const char* r) {
      os << l;
      for (std::size_t c = 0; c < box.grid[0].size(); ++c) {
        if (c) os << m;
        for (std::size_t k = 0; k < w + 2; ++k) os << "─";
      }
      os << r << '\n';
    };
    line("┌", "┬", "┐");
    for (std::size_t r = 0; r < box.grid.size(); ++r) {
      if (r) line("├", "┼", "┤");
      os << "│";
      for (const auto& cell : box.grid[r]) {
        std::string t = join_names(a, cell);
        os << ' ' << t << std::string(w - t.size(), ' ') << " │";
      }
      os << '\n';
    }
    line("└", "┴", "┘");
  }
  return os.str();
}

nlohmann::json eggboxes_json(const OAlgebra& a, const GreenData& g) {
  nlohmann::json out = nlohmann::json::array();
  for (Element rep : g.j_reps()) {
    GreenData::Eggbox box = g.eggbox(rep);
    nlohmann::json members = nlohmann::json::array();
    for (Element e : box.members) members.push_back(a.element_name(e));
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& row : box.grid) {
      nlohmann::json jrow = nlohmann::json::array();
      for (const auto& cell : row) {
        nlohmann::json jcell = nlohmann::json::array();
        for (Element e : cell) jcell.push_back(a.element_name(e));
        jrow.push_back(std::move(jcell));
      }
      grid.push_back(std::move(jrow));
    }
    out.push_back({{"members", std::move(members)}, {"grid", std::move(grid)}});
  }
  return out;
}

IdempotentKinds classify_idempotents(const OAlgebra& a) {
  IdempotentKinds out;
  out.per_element.resize(a.size());
  for (int i = 0; i < a.size(); ++i) {
    Element e{i};
    auto& f = out.per_element[i];
    if (!a.is_idempotent(e)) continue;
    f.idempotent = true;
    f.gap_insensitive = a.mul(a.omega(e), a.omega_star(e)) == e;
    f.ordinal = a.omega(e) == e;
    f.ordinal_star = a.omega_star(e) == e;
    f.scattered = f.ordinal && f.ordinal_star;
    f.shuffle = a.shuffle(bit(e)) == e;
    for (int x = 0; x < a.size(); ++x)
      if (a.mul(a.mul(e, Element{x}), e) == e) f.k_max |= Mask{1} << x;
    // All subsets of k_max, not just k_max itself: monotonicity of sh in
    // its set argument is not available.
    f.shuffle_simple = true;
    for (Mask k = f.k_max;; k = (k - 1) & f.k_max) {
      if (a.shuffle(bit(e) | k) != e) {
        f.shuffle_simple = false;
        break;
      }
      if (k == 0) break;
    }
  }
  return out;
}

const JClassInfo& JClassReport::of(const GreenData& g, Element a) const {
  for (const JClassInfo& c : classes)
    if (g.j_class(c.members.front()) == g.j_class(a)) return c;
  throw InternalError("element not covered by J-class report");
}

JClassReport classify_jclasses(const OAlgebra& a) {
  GreenData g(a);
  IdempotentKinds kinds = classify_idempotents(a);
  JClassReport rep;
  for (Element r : g.j_reps()) {
    JClassInfo info;
    for (int i = 0; i < a.size(); ++i)
      if (g.j_class(Element{i}) == g.j_class(r))
        info.members.push_back(Element{i});
    for (Element e : info.members) {
      const auto& f = kinds.per_element[e.v];
      if (!f.idempotent) continue;
      auto set = [&](bool flag, bool& out, std::optional<Element>& w) {
        if (flag && !out) {
          out = true;
          w = e;
        }
      };
      set(true, info.regular, info.w_regular);
      set(f.ordinal, info.ordinal_regular, info.w_ordinal);
      set(f.ordinal_star, info.ordinal_star_regular, info.w_ordinal_star);
      set(f.gap_insensitive, info.gap_insensitive_regular,
          info.w_gap_insensitive);
      set(f.scattered, info.scattered_regular, info.w_scattered);
      set(f.shuffle, info.shuffle_regular, info.w_shuffle);
      set(f.shuffle_simple, info.shuffle_simple_regular, info.w_shuffle_simple);
    }
    rep.classes.push_back(std::move(info));
  }
  return rep;
}

std::vector<StructureViolation> structure_check(const OAlgebra& a) {
  std::vector<StructureViolation> out;
  GreenData g(a);
  std::vector<Element> idems;
  for (int i = 0; i < a.size(); ++i)
    if (a.is_idempotent(Element{i})) idems.push_back(Element{i});

  // Item 1: e ≡J f implies ω(e) ≡L ω(f) and ω*(e) ≡R ω*(f).
  for (Element e : idems)
    for (Element f : idems) {
      if (!g.eq_j(e, f)) continue;
      if (!g.eq_l(a.omega(e), a.omega(f)))
        out.push_back({"omega powers of J-equivalent idempotents not "
                       "L-equivalent",
                       {e, f}});
      if (!g.eq_r(a.omega_star(e), a.omega_star(f)))
        out.push_back({"omega* powers of J-equivalent idempotents not "
                       "R-equivalent",
                       {e, f}});
    }

  // Item 2: an omega or omega* power inside its own J-class forces
  // singleton H-classes there.
  for (Element e : idems) {
    if (!g.eq_j(e, a.omega(e)) && !g.eq_j(e, a.omega_star(e))) continue;
    for (int x = 0; x < a.size(); ++x)
      if (g.j_class(Element{x}) == g.j_class(e))
        for (int y = x + 1; y < a.size(); ++y)
          if (g.eq_h(Element{x}, Element{y}))
            out.push_back({"non-singleton H-class in a J-class meeting its "
                           "omega powers",
                           {e, Element{x}, Element{y}}});
  }

  // Item 3: shuffle values are unique within a J-class.
  {
    const Mask full = a.full_mask();
    std::vector<Mask> seen(a.size(), 0);  // marks shuffle-image elements
    for (Mask s = 1; s <= full; ++s) seen[a.shuffle(s).v] = 1;
    for (int x = 0; x < a.size(); ++x)
      for (int y = x + 1; y < a.size(); ++y)
        if (seen[x] && seen[y] && g.eq_j(Element{x}, Element{y}))
          out.push_back({"distinct shuffle values in one J-class",
                         {Element{x}, Element{y}}});
  }

  // Gap-insensitive-regular coincides with scattered-regular, and the
  // scattered idempotent of a J-class is unique.
  JClassReport rep = classify_jclasses(a);
  IdempotentKinds kinds = classify_idempotents(a);
  for (const JClassInfo& c : rep.classes) {
    if (c.gap_insensitive_regular != c.scattered_regular)
      out.push_back({"gap-insensitive-regular differs from scattered-regular",
                     {c.members.front()}});
    std::vector<Element> scat;
    for (Element e : c.members)
      if (kinds.per_element[e.v].scattered) scat.push_back(e);
    if (scat.size() > 1)
      out.push_back({"more than one scattered idempotent in a J-class", scat});
  }
  return out;
}

}  // namespace ocw
