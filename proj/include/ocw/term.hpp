#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ocw/language.hpp"

namespace ocw {

class TermWord;
using TermPtr = std::shared_ptr<const TermWord>;

/// Finite syntax tree denoting a regular countable word: ε, a letter,
/// concatenation, ω-power, ω*-power, or the shuffle of a set of terms.
/// Shuffle children are kept structurally distinct and sorted, matching
/// the set semantics of the shuffle.
class TermWord {
 public:
  enum class Kind { Empty, Letter, Concat, OmegaPow, OmegaStarPow, Shuffle };

  Kind kind() const { return kind_; }
  const std::string& letter() const { return letter_; }
  const std::vector<TermPtr>& children() const { return children_; }

  TermWord(Kind k, std::string letter, std::vector<TermPtr> children)
      : kind_(k), letter_(std::move(letter)), children_(std::move(children)) {}

 private:
  Kind kind_;
  std::string letter_;
  std::vector<TermPtr> children_;
};

namespace tw {
TermPtr empty();
TermPtr letter(const std::string& sym);
TermPtr cat(std::vector<TermPtr> parts);  // needs >= 2 parts
TermPtr omega(TermPtr t);
TermPtr omega_star(TermPtr t);
TermPtr shuffle(std::vector<TermPtr> parts);  // deduplicates, needs >= 1
}  // namespace tw

/// Text syntax: `eps`, a letter, `(cat t1 t2 …)`, `(omega t)`,
/// `(omegastar t)`, `(shuffle t1 … tk)`.
TermPtr parse_term(std::string_view text);
std::string print_term(const TermPtr& t);

/// The homomorphic value of a term under the recognizer's morphism.
Element eval_term(const RecognizedLanguage& lang, const TermPtr& t);

/// The J-upward closure Z = {b | b >=_J a}.
Mask upward_closure(const OAlgebra& a, Element x);

/// A factor of the term certifying that its value falls outside Z.
struct Witness {
  enum class Kind { Letter, Concatenation, Omega, OmegaStar, Shuffle };
  Kind kind;
  std::vector<int> path;  // child indices from the root to the node
  std::string letter;     // Letter witnesses
  Element e1{-1}, e2{-1}; // Concatenation: the two factor values;
                          // Omega/OmegaStar: the idempotent
  int regroup = 0;        // exponent exposing the idempotent
  Mask kset = 0;          // Shuffle: the child value set
};

std::string describe_witness(const RecognizedLanguage& lang, const Witness& w);

/// Checks the defining condition of the witness kind against the tables
/// and the closure Z.
bool witness_replay(const RecognizedLanguage& lang, const Witness& w, Mask z);

/// Finds a witness in a term whose value lies outside Z(below). Search is
/// leftmost-innermost: descend into the first child evaluating outside Z.
/// Throws PreconditionError when eval(t) ∈ Z(below), InternalError if no
/// witness exists (impossible for valid algebras).
Witness find_witness(const RecognizedLanguage& lang, const TermPtr& t,
                     Element below);

}  // namespace ocw
