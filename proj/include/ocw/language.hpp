#pragma once

#include <string>
#include <vector>

#include "ocw/algebra.hpp"

#include "json.hpp"

namespace ocw {

/// A recognizer: an o-algebra, a letter-to-element morphism and an
/// accepting subset. A word is accepted iff its product image lies in the
/// accepting set.
struct RecognizedLanguage {
  OAlgebra algebra;
  std::vector<std::string> alphabet;
  std::vector<Element> h;  // parallel to alphabet
  Mask accepting = 0;

  Element image(const std::string& letter) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == letter) return h[i];
    throw UnknownLetter("letter '" + letter + "' not in alphabet");
  }
  bool accepts_value(Element e) const { return in_mask(accepting, e); }
};

/// Language documents are JSON {algebra: <inline object or path>,
/// alphabet, h: {letter: element}, accepting: [elements]}.
RecognizedLanguage language_from_json(const nlohmann::json& j);
nlohmann::json language_to_json(const RecognizedLanguage& lang);
RecognizedLanguage load_language_file(const std::string& path);

}  // namespace ocw
