#include "ocw/varieties.hpp"

#include <sstream>

#include "ocw/quotient.hpp"

namespace ocw {

bool VarietyVerdict::get(int item) const {
  switch (item) {
    case 1: return fo;
    case 2: return fo_finite;
    case 3: return fo_cut;
    case 4: return fo_finite_cut;
    case 5: return fo_scattered;
  }
  throw InternalError("verdict item out of range");
}

bool is_aperiodic(const OAlgebra& a) {
  for (int i = 0; i < a.size(); ++i) {
    Element p{i};
    bool stable = false;
    for (int k = 1; k <= a.size() + 1; ++k) {
      if (a.mul(p, Element{i}) == p) {
        stable = true;
        break;
      }
      p = a.mul(p, Element{i});
    }
    if (!stable) return false;
  }
  return true;
}

PropertyFlags property_flags(const OAlgebra& a) {
  IdempotentKinds kinds = classify_idempotents(a);
  PropertyFlags f;
  f.aperiodic = is_aperiodic(a);
  f.all_idempotents_gap_insensitive = true;
  f.ordinal_idempotents_gap_insensitive = true;
  f.ordinal_star_idempotents_gap_insensitive = true;
  f.scattered_idempotents_shuffle = true;
  f.shuffle_idempotents_shuffle_simple = true;
  for (const auto& k : kinds.per_element) {
    if (!k.idempotent) continue;
    if (!k.gap_insensitive) {
      f.all_idempotents_gap_insensitive = false;
      if (k.ordinal) f.ordinal_idempotents_gap_insensitive = false;
      if (k.ordinal_star) f.ordinal_star_idempotents_gap_insensitive = false;
    }
    if (k.scattered && !k.shuffle) f.scattered_idempotents_shuffle = false;
    if (k.shuffle && !k.shuffle_simple)
      f.shuffle_idempotents_shuffle_simple = false;
  }
  return f;
}

namespace {

std::string offender(const OAlgebra& a, const JClassInfo& c,
                     const char* reason) {
  return "J(" + a.element_name(c.members.front()) + ") is " + reason +
         " but not shuffle simple regular";
}

}  // namespace

VarietyVerdict variety_membership(const OAlgebra& a) {
  JClassReport rep = classify_jclasses(a);
  VarietyVerdict v;
  v.fo = v.fo_finite = v.fo_cut = v.fo_finite_cut = v.fo_scattered = true;
  for (const JClassInfo& c : rep.classes) {
    if (c.shuffle_simple_regular) continue;
    if (c.regular && v.fo) {
      v.fo = false;
      v.why_fo = offender(a, c, "regular");
    }
    if ((c.ordinal_regular || c.ordinal_star_regular) && v.fo_finite) {
      v.fo_finite = false;
      v.why_fo_finite = offender(
          a, c, c.ordinal_regular ? "ordinal regular" : "ordinal* regular");
    }
    if (c.scattered_regular) {
      if (v.fo_cut) {
        v.fo_cut = false;
        v.why_fo_cut = offender(a, c, "scattered regular");
      }
      if (v.fo_finite_cut) {
        v.fo_finite_cut = false;
        v.why_fo_finite_cut = offender(a, c, "scattered regular");
      }
    }
    if (c.shuffle_regular && v.fo_scattered) {
      v.fo_scattered = false;
      v.why_fo_scattered = offender(a, c, "shuffle regular");
    }
  }
  if (v.fo_cut && !is_aperiodic(a)) {
    v.fo_cut = false;
    v.why_fo_cut = "not aperiodic";
  }
  return v;
}

VarietyVerdict classify_language(const RecognizedLanguage& lang) {
  Congruence c = coarsest_congruence(lang);
  return variety_membership(quotient(lang, c).algebra);
}

nlohmann::json verdict_json(const VarietyVerdict& v) {
  nlohmann::json just = nlohmann::json::object();
  auto add = [&](const char* key, const std::string& why) {
    if (!why.empty()) just[key] = why;
  };
  add("fo", v.why_fo);
  add("fo_finite", v.why_fo_finite);
  add("fo_cut", v.why_fo_cut);
  add("fo_finite_cut", v.why_fo_finite_cut);
  add("fo_scattered", v.why_fo_scattered);
  return {{"fo", v.fo},
          {"fo_finite", v.fo_finite},
          {"fo_cut", v.fo_cut},
          {"fo_finite_cut", v.fo_finite_cut},
          {"fo_scattered", v.fo_scattered},
          {"justifications", std::move(just)}};
}

std::string verdict_matrix(const VarietyVerdict& v) {
  std::ostringstream os;
  auto row = [&](const char* name, bool yes, const std::string& why) {
    os << name << std::string(14 - std::string(name).size(), ' ')
       << (yes ? "✓" : "✗");
    if (!why.empty()) os << "  " << why;
    os << '\n';
  };
  row("fo", v.fo, v.why_fo);
  row("fo_finite", v.fo_finite, v.why_fo_finite);
  row("fo_cut", v.fo_cut, v.why_fo_cut);
  row("fo_finite_cut", v.fo_finite_cut, v.why_fo_finite_cut);
  row("fo_scattered", v.fo_scattered, v.why_fo_scattered);
  return os.str();
}

}  // namespace ocw
