#pragma once

#include <string>
#include <vector>

#include "ocw/expr.hpp"
#include "ocw/language.hpp"

namespace ocw {

struct ExprFixture {
  std::string id;
  std::vector<std::string> alphabet;
  ExprPtr expr;
  ExprClassTarget expected;
};

struct PairFixture {
  std::string id;
  ExprPtr expr;
  RecognizedLanguage recognizer;
};

// Fixture ids: algebra.min, algebra.gap, algebra.pd, algebra.even;
// expr.fNob, expr.fDensea, expr.fOddbDensea, expr.fWellFounded, expr.fMin,
// expr.fMax, expr.fexistab, expr.fGap, expr.fonegap, expr.evenGaps,
// expr.scatterAll, expr.scatterA; pair.firstLetter, pair.evenA, pair.noB.
// Unknown ids raise UnknownFixture.
OAlgebra fixture_algebra(const std::string& id);
ExprFixture fixture_expr(const std::string& id);
PairFixture fixture_pair(const std::string& id);

std::vector<std::string> fixture_ids();

/// One expression per worked example of the expression-class catalogue,
/// numbered 1-14: items 1-6 marked star-free, 7 marked, 8-12 power-free,
/// 13 scatter-free, 14 scatter.
struct CatalogueItem {
  int item;
  std::string name;
  ExprPtr expr;
  ExprClassTarget expected;
};
std::vector<CatalogueItem> expression_catalogue();

}  // namespace ocw
