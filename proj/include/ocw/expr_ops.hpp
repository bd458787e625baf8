#pragma once

#include <span>
#include <string>
#include <vector>

#include "ocw/expr.hpp"

namespace ocw {

/// A finite word over string symbols.
using Word = std::vector<std::string>;

namespace ex {

/// Σ* as ¬∅.
ExprPtr sigma_star();
/// Σ*ΣΣ* expanded over the alphabet: words with at least one letter.
ExprPtr some_letter(std::span<const std::string> alphabet);
/// {ε} as ¬(Σ*ΣΣ*).
ExprPtr eps(std::span<const std::string> alphabet);
/// The single-letter language {σ} in marked shape: ε σ ε.
ExprPtr letter_lang(std::span<const std::string> alphabet,
                    const std::string& sym);

/// prefix·(σ₁M₁ + … + σₖMₖ)* in marked shape, via the star-of-union
/// rewrite (A+B)* = A*(BA*)*. Arms are (letter, tail) pairs.
ExprPtr marked_star(ExprPtr prefix,
                    std::span<const std::pair<std::string, ExprPtr>> arms);

}  // namespace ex

// The language constructions on an expression F. Alphabet shorthands are
// expanded into the core grammar, so the emitted shapes stay inside the
// marked fragment whenever F is marked.
ExprPtr initial(std::span<const std::string> alphabet, ExprPtr f);
ExprPtr final_(std::span<const std::string> alphabet, ExprPtr f);
ExprPtr all_prefixes(std::span<const std::string> alphabet, ExprPtr f);
ExprPtr all_suffixes(std::span<const std::string> alphabet, ExprPtr f);
ExprPtr cofinal(std::span<const std::string> alphabet, ExprPtr f);
ExprPtr coinitial(std::span<const std::string> alphabet, ExprPtr f);
// The infinitely-many and densely-many constructions require F extension
// closed (Σ*FΣ* ⊆ F); that is the caller's obligation and is not checked.
ExprPtr infinitely_many_marked(std::span<const std::string> alphabet,
                               ExprPtr f);
ExprPtr infinitely_many_unrestricted(std::span<const std::string> alphabet,
                                     ExprPtr f);
ExprPtr densely_many(std::span<const std::string> alphabet, ExprPtr f);

/// Finite-word membership by memoized interval recursion over the shared
/// AST. On finite words the scatter star coincides with the Kleene star
/// (every finite ordering is scattered). Words are capped at 24 letters;
/// the intended use is the brute-force oracle on short words.
bool finite_membership(const ExprPtr& e, const Word& w);

/// All words of length <= n in shortlex order.
std::vector<Word> all_words(std::span<const std::string> alphabet, int n);

/// Splits `text` into a Word: "-" or "eps" denote ε; if every alphabet
/// symbol is a single character the text is split per character, otherwise
/// it is split on spaces/commas.
Word parse_word(std::span<const std::string> alphabet,
                const std::string& text);

}  // namespace ocw
