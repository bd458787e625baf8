#pragma once

#include <string>

#include "ocw/green.hpp"
#include "ocw/language.hpp"

#include "json.hpp"

namespace ocw {

/// The five memberships decided from the J-class structure, with a
/// justification (least offending J-class) for each false verdict.
struct VarietyVerdict {
  bool fo = false;
  bool fo_finite = false;
  bool fo_cut = false;
  bool fo_finite_cut = false;
  bool fo_scattered = false;
  std::string why_fo, why_fo_finite, why_fo_cut, why_fo_finite_cut,
      why_fo_scattered;

  bool get(int item) const;  // item in 1..5
};

/// Per-algebra property flags: aperiodicity and the idempotent-kind
/// inclusions. Independent utilities; the deciders below work off the
/// J-class report instead.
struct PropertyFlags {
  bool aperiodic = false;
  bool all_idempotents_gap_insensitive = false;       // EiGI
  bool ordinal_idempotents_gap_insensitive = false;   // OiGI
  bool ordinal_star_idempotents_gap_insensitive = false;  // O*iGI
  bool scattered_idempotents_shuffle = false;         // ScISh
  bool shuffle_idempotents_shuffle_simple = false;    // ShISS
};

/// True iff every element reaches a stable power within |M|+1 steps.
bool is_aperiodic(const OAlgebra& a);

PropertyFlags property_flags(const OAlgebra& a);

/// Decides the five memberships:
///   1. fo            — every regular J-class is shuffle simple regular;
///   2. fo_finite     — every ordinal regular and ordinal* regular J-class
///                      is shuffle simple regular;
///   3. fo_cut        — aperiodic, and every scattered regular J-class is
///                      shuffle simple regular;
///   4. fo_finite_cut — every scattered regular J-class is shuffle simple
///                      regular;
///   5. fo_scattered  — every shuffle regular J-class is shuffle simple
///                      regular.
VarietyVerdict variety_membership(const OAlgebra& a);

/// The decision procedure for a recognized language: take the coarsest
/// congruence quotient (the syntactic stand-in) and decide membership
/// there.
VarietyVerdict classify_language(const RecognizedLanguage& lang);

nlohmann::json verdict_json(const VarietyVerdict& v);
std::string verdict_matrix(const VarietyVerdict& v);

}  // namespace ocw
