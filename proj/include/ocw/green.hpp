#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ocw/algebra.hpp"

#include "json.hpp"

namespace ocw {

/// Green's preorders and the derived partitions of a finite o-algebra.
/// leq_r(a, b) holds iff a = b·x for some x, and similarly for the others;
/// H is the meet of R and L.
class GreenData {
 public:
  explicit GreenData(const OAlgebra& a);

  int size() const { return n_; }
  bool leq_r(Element a, Element b) const { return leqR_[a.v * n_ + b.v]; }
  bool leq_l(Element a, Element b) const { return leqL_[a.v * n_ + b.v]; }
  bool leq_j(Element a, Element b) const { return leqJ_[a.v * n_ + b.v]; }
  bool eq_r(Element a, Element b) const { return leq_r(a, b) && leq_r(b, a); }
  bool eq_l(Element a, Element b) const { return leq_l(a, b) && leq_l(b, a); }
  bool eq_j(Element a, Element b) const { return leq_j(a, b) && leq_j(b, a); }
  bool eq_h(Element a, Element b) const { return eq_r(a, b) && eq_l(a, b); }
  bool lt_j(Element a, Element b) const {
    return leq_j(a, b) && !leq_j(b, a);
  }

  /// Class ids; each class is identified by its minimal element index.
  int r_class(Element a) const { return rcls_[a.v]; }
  int l_class(Element a) const { return lcls_[a.v]; }
  int j_class(Element a) const { return jcls_[a.v]; }
  int h_class(Element a) const { return hcls_[a.v]; }

  Mask r_class_mask(Element a) const;
  Mask l_class_mask(Element a) const;
  Mask j_class_mask(Element a) const;
  Mask h_class_mask(Element a) const;
  /// The J-upward closure {b | b >=_J a}.
  Mask upward_mask(Element a) const;

  /// J-class representatives (minimal element of each class), ordered by
  /// element index.
  const std::vector<Element>& j_reps() const { return jreps_; }

  /// Eggbox of one J-class: R-class rows by L-class columns of H-cells,
  /// rows and columns ordered by minimal element index.
  struct Eggbox {
    std::vector<Element> members;
    std::vector<std::vector<std::vector<Element>>> grid;
  };
  Eggbox eggbox(Element a) const;

 private:
  int n_;
  const OAlgebra* alg_;
  std::vector<bool> leqR_, leqL_, leqJ_;
  std::vector<int> rcls_, lcls_, jcls_, hcls_;
  std::vector<Element> jreps_;
};

GreenData green(const OAlgebra& a);

std::string render_eggboxes(const OAlgebra& a, const GreenData& g);
nlohmann::json eggboxes_json(const OAlgebra& a, const GreenData& g);

/// Per-element idempotent kind flags. k_max is {a | e·a·e = e}; the
/// shuffle-simple flag quantifies over all of its subsets.
struct IdempotentKinds {
  struct Flags {
    bool idempotent = false;
    bool gap_insensitive = false;
    bool ordinal = false;
    bool ordinal_star = false;
    bool scattered = false;
    bool shuffle = false;
    bool shuffle_simple = false;
    Mask k_max = 0;
  };
  std::vector<Flags> per_element;
};

IdempotentKinds classify_idempotents(const OAlgebra& a);

/// Regularity flags of one J-class: each is true iff the class contains an
/// idempotent of the corresponding kind, with that idempotent as witness.
struct JClassInfo {
  std::vector<Element> members;
  bool regular = false;
  bool ordinal_regular = false;
  bool ordinal_star_regular = false;
  bool gap_insensitive_regular = false;
  bool scattered_regular = false;
  bool shuffle_regular = false;
  bool shuffle_simple_regular = false;
  std::optional<Element> w_regular, w_ordinal, w_ordinal_star,
      w_gap_insensitive, w_scattered, w_shuffle, w_shuffle_simple;
};

struct JClassReport {
  std::vector<JClassInfo> classes;  // ordered by minimal element index
  /// The class containing a given element.
  const JClassInfo& of(const GreenData& g, Element a) const;
};

JClassReport classify_jclasses(const OAlgebra& a);

/// One failed conclusion of the structure theory; never fires on an algebra
/// that passes validate().
struct StructureViolation {
  std::string what;
  std::vector<Element> elems;
};

/// Executable checks of the structure theorem: omega powers of J-equivalent
/// idempotents are L-equivalent (and dually), J-classes meeting their own
/// omega or omega* powers have singleton H-classes, shuffle values are
/// unique per J-class, gap-insensitive-regular coincides with
/// scattered-regular, and each J-class has at most one scattered idempotent.
std::vector<StructureViolation> structure_check(const OAlgebra& a);

}  // namespace ocw
