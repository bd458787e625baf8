#include "ocw/language.hpp"

#include <fstream>

#include "ocw/algebra_io.hpp"

namespace ocw {

using nlohmann::json;

RecognizedLanguage language_from_json(const json& j) {
  OAlgebra alg = j.at("algebra").is_string()
                     ? load_algebra_file(j.at("algebra").get<std::string>())
                     : algebra_from_json(j.at("algebra"));
  RecognizedLanguage lang{std::move(alg), {}, {}, 0};
  lang.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  for (const std::string& s : lang.alphabet) {
    const json& hm = j.at("h");
    if (!hm.contains(s))
      throw StructuralError("morphism misses letter '" + s + "'");
    auto e = lang.algebra.element(hm.at(s).get<std::string>());
    if (!e) throw StructuralError("morphism maps to unknown element");
    lang.h.push_back(*e);
  }
  for (const json& s : j.at("accepting")) {
    auto e = lang.algebra.element(s.get<std::string>());
    if (!e) throw StructuralError("unknown accepting element");
    lang.accepting |= bit(*e);
  }
  return lang;
}

json language_to_json(const RecognizedLanguage& lang) {
  json j;
  j["algebra"] = algebra_to_json(lang.algebra);
  j["alphabet"] = lang.alphabet;
  json hm = json::object();
  for (std::size_t i = 0; i < lang.alphabet.size(); ++i)
    hm[lang.alphabet[i]] = lang.algebra.element_name(lang.h[i]);
  j["h"] = std::move(hm);
  json acc = json::array();
  for (int i = 0; i < lang.algebra.size(); ++i)
    if (in_mask(lang.accepting, Element{i}))
      acc.push_back(lang.algebra.element_name(Element{i}));
  j["accepting"] = std::move(acc);
  return j;
}

RecognizedLanguage load_language_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open language file: " + path);
  json j;
  in >> j;
  return language_from_json(j);
}

}  // namespace ocw
