#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocw/base.hpp"

namespace ocw {

/// A finite o-algebra: carrier with unit, binary product, omega and omega*
/// powers, and a shuffle power over nonempty carrier subsets.
///
/// Instances are immutable after construction; every operation on them is a
/// pure function, safe to call concurrently.
class OAlgebra {
 public:
  /// Builds the algebra from complete tables. `product` is row-major with
  /// the row as left operand; `shuffle` has 2^n entries, entry 0 unused.
  /// Throws StructuralError if any table is missing entries or indexes out
  /// of range. Axioms are not checked here; see validate().
  OAlgebra(std::string name, std::vector<std::string> element_names,
           Element unit, std::vector<Element> product,
           std::vector<Element> omega, std::vector<Element> omega_star,
           std::vector<Element> shuffle);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Element e) const { return names_[e.v]; }
  /// Looks an element up by display name.
  std::optional<Element> element(std::string_view name) const;
  Element unit() const { return unit_; }
  Mask full_mask() const { return (Mask{1} << n_) - 1; }

  Element mul(Element a, Element b) const {
    return product_[a.v * n_ + b.v];
  }
  Element omega(Element a) const { return omega_[a.v]; }
  Element omega_star(Element a) const { return omega_star_[a.v]; }
  Element shuffle(Mask nonempty_subset) const {
    return shuffle_[nonempty_subset];
  }

  bool is_idempotent(Element a) const { return mul(a, a) == a; }

  /// a^k for k >= 1.
  Element power(Element a, int k) const;

  friend bool operator==(const OAlgebra& x, const OAlgebra& y) {
    return x.names_ == y.names_ && x.unit_ == y.unit_ &&
           x.product_ == y.product_ && x.omega_ == y.omega_ &&
           x.omega_star_ == y.omega_star_ && x.shuffle_ == y.shuffle_;
  }

 private:
  std::string name_;
  int n_;
  std::vector<std::string> names_;
  Element unit_;
  std::vector<Element> product_;
  std::vector<Element> omega_;
  std::vector<Element> omega_star_;
  std::vector<Element> shuffle_;
};

/// Identifies one concrete axiom instance; family() maps it to the axiom
/// number 1-5 used in reports.
enum class AxiomId {
  UnitLeft,          // 1: 1·a = a
  UnitRight,         // 1: a·1 = a
  Assoc,             // 1: (a·b)·c = a·(b·c)
  OmegaAbsorb,       // 2: ω(a) = a·ω(a)
  OmegaConjugate,    // 2: ω(a·b) = a·ω(b·a)
  OmegaPower,        // 2: ω(a^n) = ω(a)
  OmegaStarAbsorb,   // 3
  OmegaStarConjugate,// 3
  OmegaStarPower,    // 3
  ShuffleIdem,       // 4: sh(P) = sh(P)·sh(P)
  ShuffleAbsorb,     // 4: sh(P) = sh(P)·c·sh(P)
  ShuffleOmega,      // 4: sh(P) = ω(sh(P))
  ShuffleOmegaC,     // 4: sh(P) = ω(sh(P)·c)
  ShuffleOmegaStar,  // 4: sh(P) = ω*(sh(P))
  ShuffleOmegaStarC, // 4: sh(P) = ω*(c·sh(P))
  ShuffleSubset,     // 4: sh(P) = sh(P' ∪ P'')
  UnitOmega,         // 5: ω(1) = 1
  UnitOmegaStar,     // 5: ω*(1) = 1
  UnitShuffle,       // 5: sh({1}) = 1
  ShuffleUnitAbsorb, // 5: sh(P ∪ {1}) = sh(P)
};

int axiom_family(AxiomId id);
std::string axiom_identity_name(AxiomId id);

/// One failed axiom instance. The witness fields are enough to replay the
/// check: elems holds the quantified elements in order, set/set2 the
/// quantified subsets (axiom 4/5 instances).
struct AxiomViolation {
  AxiomId id;
  std::vector<Element> elems;
  Mask set = 0;
  Mask set2 = 0;
  Element expected;
  Element actual;
};

/// Recomputes (expected, actual) for a violation from the tables. Used by
/// tests to confirm every reported witness reproduces its mismatch.
std::pair<Element, Element> replay_violation(const OAlgebra& a,
                                             const AxiomViolation& v);

std::string describe_violation(const OAlgebra& a, const AxiomViolation& v);

/// Checks every axiom instance of the five families; returns all failures
/// in deterministic (lexicographic over witnesses) order. Empty result
/// means the tables form an o-algebra.
std::vector<AxiomViolation> validate(const OAlgebra& a);

/// Left fold of the product table; the empty word maps to the unit.
Element product_word(const OAlgebra& a, std::span<const Element> word);

/// The unique idempotent in the cyclic subsemigroup generated by a.
/// Throws NonConvergence if none appears within |M| powers.
Element idempotent_power(const OAlgebra& a, Element x);
/// Least k <= |M| with x^k idempotent.
int idempotent_power_exponent(const OAlgebra& a, Element x);

/// Fixpoint of x -> ω(x); the result r satisfies ω(r) = r.
Element ordinal_power(const OAlgebra& a, Element x);
/// Fixpoint of x -> ω*(x).
Element ordinal_star_power(const OAlgebra& a, Element x);
/// Fixpoint of x -> ω*(x)·ω(x); the result is a scattered idempotent.
Element scattered_power(const OAlgebra& a, Element x);

/// Fixpoint of the shuffle recurrence: f_n interleaves ω*(e_n)·ω(e_n) with
/// the context elements, e_{n+1} = sh({f_n}). The result f is a shuffle
/// idempotent with f·a·f = f for every context element a.
Element shuffle_limit(const OAlgebra& a, Element e,
                      std::span<const Element> ctx);

}  // namespace ocw
