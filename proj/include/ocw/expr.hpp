#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ocw/base.hpp"

namespace ocw {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind {
  Empty,    // ∅
  Letter,
  Union,
  Inter,
  Neg,
  Concat,
  Star,     // Kleene star: finite iteration
  Scatter,  // scatter star: iteration over a scattered ordering
};

/// Immutable expression node. Nodes are interned: structurally equal
/// expressions are the same object, so pointer equality is structural
/// equality. The intern table is process-wide and mutex-guarded.
class Expr {
 public:
  ExprKind kind() const { return kind_; }
  const std::string& letter() const { return letter_; }
  const ExprPtr& left() const { return a_; }
  const ExprPtr& right() const { return b_; }
  const ExprPtr& child() const { return a_; }
  /// Stable creation index; used to keep derived orderings deterministic.
  std::uint64_t id() const { return id_; }

  Expr(ExprKind k, std::string letter, ExprPtr a, ExprPtr b, std::uint64_t id)
      : kind_(k), letter_(std::move(letter)), a_(std::move(a)),
        b_(std::move(b)), id_(id) {}

 private:
  ExprKind kind_;
  std::string letter_;
  ExprPtr a_, b_;
  std::uint64_t id_;
};

namespace ex {

ExprPtr empty();
ExprPtr letter(const std::string& sym);
// The binary factories fold the obvious absorptions (E+∅, E∩∅, E∩¬∅,
// ∅ in a concatenation, ¬¬E, X+X) so generated expressions stay small.
ExprPtr alt(ExprPtr a, ExprPtr b);        // union
ExprPtr both(ExprPtr a, ExprPtr b);       // intersection
ExprPtr neg(ExprPtr a);
ExprPtr cat(ExprPtr a, ExprPtr b);
ExprPtr star(ExprPtr a);
ExprPtr scatter(ExprPtr a);

/// Left folds; order-preserving duplicate removal for the union.
ExprPtr alt_of(std::span<const ExprPtr> parts);    // empty -> ∅
ExprPtr both_of(std::span<const ExprPtr> parts);   // empty -> ¬∅
ExprPtr cat_of(std::span<const ExprPtr> parts);    // empty not allowed

inline ExprPtr alt_of(std::initializer_list<ExprPtr> p) {
  return alt_of(std::span<const ExprPtr>(p.begin(), p.size()));
}
inline ExprPtr both_of(std::initializer_list<ExprPtr> p) {
  return both_of(std::span<const ExprPtr>(p.begin(), p.size()));
}
inline ExprPtr cat_of(std::initializer_list<ExprPtr> p) {
  return cat_of(std::span<const ExprPtr>(p.begin(), p.size()));
}

}  // namespace ex

/// Grammar: `0` = ∅, bare letters, postfix `*` (Kleene star) and `~`
/// (scatter star), prefix `!`, juxtaposition or `.` for concatenation,
/// `&`, `+`, parentheses. `!` and postfix bind tighter than concatenation,
/// then `&`, then `+`; binary operators associate left. Letters must be
/// identifiers drawn from the alphabet.
ExprPtr parse_expr(std::string_view text,
                   std::span<const std::string> alphabet);

/// Emits parseable text with minimal parentheses; parse(print(e)) is e.
std::string print_expr(const ExprPtr& e);

/// Rewrites ¬¬E → E, E+∅ → E, E∩¬∅ → E, ∅·E → ∅ and duplicate union arms
/// bottom-up. Interned building already applies these; this entry point
/// covers parsed input.
ExprPtr simplify(const ExprPtr& e);

/// Syntactic class flags. marked follows the marked grammar
/// M ::= ∅ | M+M | M∩M | ¬M | MσM | M(σM)* judged on the AST after
/// flattening concatenation chains; power_free = no star and no scatter;
/// scatter_free = no scatter; every expression is a scatter expression.
struct ExprClassSet {
  bool marked_star_free = false;
  bool marked = false;
  bool power_free = false;
  bool scatter_free = false;
};

ExprClassSet expr_class(const ExprPtr& e);

/// The expression classes of the hierarchy, strongest first. Used both as
/// the expected classification of corpus expressions and as the synthesis
/// target.
enum class ExprClassTarget {
  MarkedStarFree,
  Marked,
  PowerFree,
  ScatterFree,
  Scatter,
};

std::string to_string(ExprClassTarget t);
ExprClassTarget expr_class_target_from_string(const std::string& s);

/// True iff `c` admits `t` (the expression lies in class t, not
/// necessarily strictly).
bool class_admits(const ExprClassSet& c, ExprClassTarget t);
/// The strongest class in the chain marked-star-free < marked <
/// scatter-free < scatter that admits c, refined to power-free when the
/// expression uses no star at all.
ExprClassTarget strongest_class(const ExprClassSet& c);

/// Reusable classifier with a cross-call node cache; expr_class() is a
/// one-shot wrapper around this.
class ExprClassifier {
 public:
  ExprClassSet operator()(const ExprPtr& e);
  bool marked(const ExprPtr& e);
  bool has_star(const ExprPtr& e);
  bool has_scatter(const ExprPtr& e);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_ = make_impl();
  static std::shared_ptr<Impl> make_impl();
};

}  // namespace ocw
