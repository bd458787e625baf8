#include "ocw/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ocw {

namespace {

void check_entry(Element e, int n, const char* table) {
  if (e.v < 0 || e.v >= n)
    throw StructuralError(std::string(table) + " entry out of range");
}

}  // namespace

OAlgebra::OAlgebra(std::string name, std::vector<std::string> element_names,
                   Element unit, std::vector<Element> product,
                   std::vector<Element> omega, std::vector<Element> omega_star,
                   std::vector<Element> shuffle)
    : name_(std::move(name)),
      n_(static_cast<int>(element_names.size())),
      names_(std::move(element_names)),
      unit_(unit),
      product_(std::move(product)),
      omega_(std::move(omega)),
      omega_star_(std::move(omega_star)),
      shuffle_(std::move(shuffle)) {
  if (n_ < 1) throw StructuralError("carrier must be nonempty");
  if (n_ > max_carrier)
    throw StructuralError("carrier larger than " +
                          std::to_string(max_carrier) + " elements");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (names_[i] == names_[j])
        throw StructuralError("duplicate element name: " + names_[i]);
  check_entry(unit_, n_, "unit");
  if (product_.size() != static_cast<std::size_t>(n_) * n_)
    throw StructuralError("product table has wrong size");
  if (omega_.size() != static_cast<std::size_t>(n_))
    throw StructuralError("omega table has wrong size");
  if (omega_star_.size() != static_cast<std::size_t>(n_))
    throw StructuralError("omega* table has wrong size");
  if (shuffle_.size() != (std::size_t{1} << n_))
    throw StructuralError("shuffle table has wrong size");
  for (Element e : product_) check_entry(e, n_, "product");
  for (Element e : omega_) check_entry(e, n_, "omega");
  for (Element e : omega_star_) check_entry(e, n_, "omega*");
  for (Mask m = 1; m < (Mask{1} << n_); ++m)
    check_entry(shuffle_[m], n_, "shuffle");
}

std::optional<Element> OAlgebra::element(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return Element{i};
  return std::nullopt;
}

Element OAlgebra::power(Element a, int k) const {
  Element r = a;
  for (int i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

int axiom_family(AxiomId id) {
  switch (id) {
    case AxiomId::UnitLeft:
    case AxiomId::UnitRight:
    case AxiomId::Assoc:
      return 1;
    case AxiomId::OmegaAbsorb:
    case AxiomId::OmegaConjugate:
    case AxiomId::OmegaPower:
      return 2;
    case AxiomId::OmegaStarAbsorb:
    case AxiomId::OmegaStarConjugate:
    case AxiomId::OmegaStarPower:
      return 3;
    case AxiomId::ShuffleIdem:
    case AxiomId::ShuffleAbsorb:
    case AxiomId::ShuffleOmega:
    case AxiomId::ShuffleOmegaC:
    case AxiomId::ShuffleOmegaStar:
    case AxiomId::ShuffleOmegaStarC:
    case AxiomId::ShuffleSubset:
      return 4;
    case AxiomId::UnitOmega:
    case AxiomId::UnitOmegaStar:
    case AxiomId::UnitShuffle:
    case AxiomId::ShuffleUnitAbsorb:
      return 5;
  }
  return 0;
}

std::string axiom_identity_name(AxiomId id) {
  switch (id) {
    case AxiomId::UnitLeft: return "1·a = a";
    case AxiomId::UnitRight: return "a·1 = a";
    case AxiomId::Assoc: return "(a·b)·c = a·(b·c)";
    case AxiomId::OmegaAbsorb: return "ω(a) = a·ω(a)";
    case AxiomId::OmegaConjugate: return "ω(a·b) = a·ω(b·a)";
    case AxiomId::OmegaPower: return "ω(a^n) = ω(a)";
    case AxiomId::OmegaStarAbsorb: return "ω*(a) = ω*(a)·a";
    case AxiomId::OmegaStarConjugate: return "ω*(a·b) = ω*(b·a)·b";
    case AxiomId::OmegaStarPower: return "ω*(a^n) = ω*(a)";
    case AxiomId::ShuffleIdem: return "sh(P) = sh(P)·sh(P)";
    case AxiomId::ShuffleAbsorb: return "sh(P) = sh(P)·c·sh(P)";
    case AxiomId::ShuffleOmega: return "sh(P) = ω(sh(P))";
    case AxiomId::ShuffleOmegaC: return "sh(P) = ω(sh(P)·c)";
    case AxiomId::ShuffleOmegaStar: return "sh(P) = ω*(sh(P))";
    case AxiomId::ShuffleOmegaStarC: return "sh(P) = ω*(c·sh(P))";
    case AxiomId::ShuffleSubset: return "sh(P) = sh(P' ∪ P'')";
    case AxiomId::UnitOmega: return "ω(1) = 1";
    case AxiomId::UnitOmegaStar: return "ω*(1) = 1";
    case AxiomId::UnitShuffle: return "sh({1}) = 1";
    case AxiomId::ShuffleUnitAbsorb: return "sh(P ∪ {1}) = sh(P)";
  }
  return "?";
}

std::pair<Element, Element> replay_violation(const OAlgebra& a,
                                             const AxiomViolation& v) {
  const auto& e = v.elems;
  switch (v.id) {
    case AxiomId::UnitLeft:
      return {e[0], a.mul(a.unit(), e[0])};
    case AxiomId::UnitRight:
      return {e[0], a.mul(e[0], a.unit())};
    case AxiomId::Assoc:
      return {a.mul(e[0], a.mul(e[1], e[2])), a.mul(a.mul(e[0], e[1]), e[2])};
    case AxiomId::OmegaAbsorb:
      return {a.omega(e[0]), a.mul(e[0], a.omega(e[0]))};
    case AxiomId::OmegaConjugate:
      return {a.omega(a.mul(e[0], e[1])),
              a.mul(e[0], a.omega(a.mul(e[1], e[0])))};
    case AxiomId::OmegaPower:
      // elems = {a, a^n}; the exponent is set (reused as an integer).
      return {a.omega(e[0]), a.omega(a.power(e[0], static_cast<int>(v.set)))};
    case AxiomId::OmegaStarAbsorb:
      return {a.omega_star(e[0]), a.mul(a.omega_star(e[0]), e[0])};
    case AxiomId::OmegaStarConjugate:
      return {a.omega_star(a.mul(e[0], e[1])),
              a.mul(a.omega_star(a.mul(e[1], e[0])), e[1])};
    case AxiomId::OmegaStarPower:
      return {a.omega_star(e[0]),
              a.omega_star(a.power(e[0], static_cast<int>(v.set)))};
    case AxiomId::ShuffleIdem: {
      Element s = a.shuffle(v.set);
      return {s, a.mul(s, s)};
    }
    case AxiomId::ShuffleAbsorb: {
      Element s = a.shuffle(v.set);
      return {s, a.mul(a.mul(s, e[0]), s)};
    }
    case AxiomId::ShuffleOmega: {
      Element s = a.shuffle(v.set);
      return {s, a.omega(s)};
    }
    case AxiomId::ShuffleOmegaC: {
      Element s = a.shuffle(v.set);
      return {s, a.omega(a.mul(s, e[0]))};
    }
    case AxiomId::ShuffleOmegaStar: {
      Element s = a.shuffle(v.set);
      return {s, a.omega_star(s)};
    }
    case AxiomId::ShuffleOmegaStarC: {
      Element s = a.shuffle(v.set);
      return {s, a.omega_star(a.mul(e[0], s))};
    }
    case AxiomId::ShuffleSubset:
      return {a.shuffle(v.set), a.shuffle(v.set2)};
    case AxiomId::UnitOmega:
      return {a.unit(), a.omega(a.unit())};
    case AxiomId::UnitOmegaStar:
      return {a.unit(), a.omega_star(a.unit())};
    case AxiomId::UnitShuffle:
      return {a.unit(), a.shuffle(bit(a.unit()))};
    case AxiomId::ShuffleUnitAbsorb:
      return {a.shuffle(v.set), a.shuffle(v.set | bit(a.unit()))};
  }
  throw InternalError("unknown axiom id");
}

namespace {

std::string mask_names(const OAlgebra& a, Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < a.size(); ++i)
    if (in_mask(m, Element{i})) {
      if (!first) s += ", ";
      s += a.element_name(Element{i});
      first = false;
    }
  return s + "}";
}

}  // namespace

std::string describe_violation(const OAlgebra& a, const AxiomViolation& v) {
  std::ostringstream os;
  os << "axiom " << axiom_family(v.id) << " [" << axiom_identity_name(v.id)
     << "] at";
  for (Element e : v.elems) os << ' ' << a.element_name(e);
  if (v.id == AxiomId::OmegaPower || v.id == AxiomId::OmegaStarPower)
    os << " n=" << v.set;
  else if (v.set) os << ' ' << mask_names(a, v.set);
  if (v.set2) os << ' ' << mask_names(a, v.set2);
  os << ": expected " << a.element_name(v.expected) << ", got "
     << a.element_name(v.actual);
  return os.str();
}

std::vector<AxiomViolation> validate(const OAlgebra& a) {
  std::vector<AxiomViolation> out;
  const int n = a.size();
  const Element u = a.unit();
  auto report = [&](AxiomId id, std::vector<Element> elems, Mask set,
                    Mask set2, Element expected, Element actual) {
    if (expected != actual)
      out.push_back({id, std::move(elems), set, set2, expected, actual});
  };

  // Axiom 1: monoid laws.
  for (int i = 0; i < n; ++i) {
    Element x{i};
    report(AxiomId::UnitLeft, {x}, 0, 0, x, a.mul(u, x));
    report(AxiomId::UnitRight, {x}, 0, 0, x, a.mul(x, u));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Element x{i}, y{j}, z{k};
        report(AxiomId::Assoc, {x, y, z}, 0, 0, a.mul(x, a.mul(y, z)),
               a.mul(a.mul(x, y), z));
      }

  // Axioms 2 and 3: omega and omega* laws.
  for (int i = 0; i < n; ++i) {
    Element x{i};
    report(AxiomId::OmegaAbsorb, {x}, 0, 0, a.omega(x),
           a.mul(x, a.omega(x)));
    report(AxiomId::OmegaStarAbsorb, {x}, 0, 0, a.omega_star(x),
           a.mul(a.omega_star(x), x));
    for (int k = 1; k <= n; ++k) {
      report(AxiomId::OmegaPower, {x}, static_cast<Mask>(k), 0, a.omega(x),
             a.omega(a.power(x, k)));
      report(AxiomId::OmegaStarPower, {x}, static_cast<Mask>(k), 0,
             a.omega_star(x), a.omega_star(a.power(x, k)));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element x{i}, y{j};
      report(AxiomId::OmegaConjugate, {x, y}, 0, 0, a.omega(a.mul(x, y)),
             a.mul(x, a.omega(a.mul(y, x))));
      report(AxiomId::OmegaStarConjugate, {x, y}, 0, 0,
             a.omega_star(a.mul(x, y)),
             a.mul(a.omega_star(a.mul(y, x)), y));
    }

  // Axiom 4. The quantifier over expression multisets P'' is reduced to
  // subsets of the element set E(P): sh takes the union as a set, so the
  // two readings coincide.
  const Mask full = a.full_mask();
  for (Mask p = 1; p <= full; ++p) {
    Element s = a.shuffle(p);
    report(AxiomId::ShuffleIdem, {}, p, 0, s, a.mul(s, s));
    report(AxiomId::ShuffleOmega, {}, p, 0, s, a.omega(s));
    report(AxiomId::ShuffleOmegaStar, {}, p, 0, s, a.omega_star(s));
    for (int c = 0; c < n; ++c)
      if (in_mask(p, Element{c})) {
        Element ce{c};
        report(AxiomId::ShuffleAbsorb, {ce}, p, 0, s,
               a.mul(a.mul(s, ce), s));
        report(AxiomId::ShuffleOmegaC, {ce}, p, 0, s, a.omega(a.mul(s, ce)));
        report(AxiomId::ShuffleOmegaStarC, {ce}, p, 0, s,
               a.omega_star(a.mul(ce, s)));
      }
    // E(P) = {sh P} ∪ {a·sh P} ∪ {sh P·b} ∪ {a·sh P·b} as a subset of M.
    Mask ep = bit(s);
    for (int x = 0; x < n; ++x)
      if (in_mask(p, Element{x})) {
        ep |= bit(a.mul(Element{x}, s));
        ep |= bit(a.mul(s, Element{x}));
        for (int y = 0; y < n; ++y)
          if (in_mask(p, Element{y}))
            ep |= bit(a.mul(a.mul(Element{x}, s), Element{y}));
      }
    // Distinct (P', P'') pairs can produce the same union; report each
    // union once.
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (Mask pp = p;; pp = (pp - 1) & p) {  // P' ⊆ P
      for (Mask q = ep;; q = (q - 1) & ep) { // P'' ⊆ E(P), nonempty
        if (q != 0 && !seen[pp | q]) {
          seen[pp | q] = true;
          report(AxiomId::ShuffleSubset, {}, p, pp | q, s, a.shuffle(pp | q));
        }
        if (q == 0) break;
      }
      if (pp == 0) break;
    }
  }

  // Axiom 5.
  report(AxiomId::UnitOmega, {}, 0, 0, u, a.omega(u));
  report(AxiomId::UnitOmegaStar, {}, 0, 0, u, a.omega_star(u));
  report(AxiomId::UnitShuffle, {}, 0, 0, u, a.shuffle(bit(u)));
  for (Mask p = 1; p <= full; ++p)
    report(AxiomId::ShuffleUnitAbsorb, {}, p, 0, a.shuffle(p),
           a.shuffle(p | bit(u)));

  return out;
}

Element product_word(const OAlgebra& a, std::span<const Element> word) {
  Element r = a.unit();
  for (Element e : word) r = a.mul(r, e);
  return r;
}

int idempotent_power_exponent(const OAlgebra& a, Element x) {
  Element p = x;
  for (int k = 1; k <= a.size(); ++k) {
    if (a.is_idempotent(p)) return k;
    p = a.mul(p, x);
  }
  throw NonConvergence("no idempotent power of " + a.element_name(x) +
                       " within |M| steps");
}

Element idempotent_power(const OAlgebra& a, Element x) {
  return a.power(x, idempotent_power_exponent(a, x));
}

namespace {

template <typename Step>
Element iterate_to_fixpoint(const OAlgebra& a, Element x, Step step,
                            const char* what) {
  Element cur = x;
  for (int i = 0; i <= a.size(); ++i) {
    Element next = step(cur);
    if (next == cur) return cur;
    cur = next;
  }
  throw NonConvergence(std::string(what) + " did not converge from " +
                       a.element_name(x));
}

}  // namespace

Element ordinal_power(const OAlgebra& a, Element x) {
  return iterate_to_fixpoint(
      a, a.omega(x), [&](Element e) { return a.omega(e); }, "ordinal power");
}

Element ordinal_star_power(const OAlgebra& a, Element x) {
  return iterate_to_fixpoint(
      a, a.omega_star(x), [&](Element e) { return a.omega_star(e); },
      "ordinal* power");
}

Element scattered_power(const OAlgebra& a, Element x) {
  auto step = [&](Element e) { return a.mul(a.omega_star(e), a.omega(e)); };
  return iterate_to_fixpoint(a, step(x), step, "scattered power");
}

Element shuffle_limit(const OAlgebra& a, Element e,
                      std::span<const Element> ctx) {
  auto step = [&](Element cur) {
    Element block = a.mul(a.omega_star(cur), a.omega(cur));
    Element f = block;
    for (Element c : ctx) f = a.mul(a.mul(f, c), block);
    return a.shuffle(bit(f));
  };
  return iterate_to_fixpoint(a, e, step, "shuffle limit");
}

}  // namespace ocw
