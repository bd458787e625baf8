#pragma once

#include <vector>

#include "ocw/language.hpp"

namespace ocw {

/// A partition of the carrier compatible with all four operations and
/// saturating the accepting set. Blocks are numbered 0..block_count-1 in
/// order of their minimal element.
struct Congruence {
  std::vector<int> block;
  int block_count = 0;
};

/// True iff the partition saturates the accepting set and is compatible
/// with product, omega, omega* and shuffle (elementwise substitution and
/// duplicate absorption).
bool is_congruence(const RecognizedLanguage& lang, const Congruence& c);

/// Coarsest congruence: starts from the accepting/rejecting split and
/// refines by signatures until stable. Shuffle compatibility is refined via
/// elementwise substitution over all subsets, which implies set-level
/// compatibility at the fixpoint.
Congruence coarsest_congruence(const RecognizedLanguage& lang);

struct QuotientResult {
  OAlgebra algebra;
  std::vector<Element> projection;  // source element -> quotient element
  RecognizedLanguage language;      // same language through composed h
};

/// Builds the quotient algebra on blocks. Throws IllDefined if any table
/// entry depends on the choice of representatives, which signals that c is
/// not a congruence.
QuotientResult quotient(const RecognizedLanguage& lang, const Congruence& c);

}  // namespace ocw
