#include "ocw/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ocw {

namespace tw {

TermPtr empty() {
  static const TermPtr e =
      std::make_shared<TermWord>(TermWord::Kind::Empty, "", std::vector<TermPtr>{});
  return e;
}

TermPtr letter(const std::string& sym) {
  return std::make_shared<TermWord>(TermWord::Kind::Letter, sym,
                                    std::vector<TermPtr>{});
}

TermPtr cat(std::vector<TermPtr> parts) {
  if (parts.size() < 2)
    throw InternalError("concatenation term needs at least two children");
  return std::make_shared<TermWord>(TermWord::Kind::Concat, "",
                                    std::move(parts));
}

TermPtr omega(TermPtr t) {
  return std::make_shared<TermWord>(TermWord::Kind::OmegaPow, "",
                                    std::vector<TermPtr>{std::move(t)});
}

TermPtr omega_star(TermPtr t) {
  return std::make_shared<TermWord>(TermWord::Kind::OmegaStarPow, "",
                                    std::vector<TermPtr>{std::move(t)});
}

TermPtr shuffle(std::vector<TermPtr> parts) {
  if (parts.empty()) throw InternalError("shuffle term needs children");
  // Set semantics: drop structural duplicates, order by printed form.
  std::sort(parts.begin(), parts.end(), [](const TermPtr& a, const TermPtr& b) {
    return print_term(a) < print_term(b);
  });
  parts.erase(std::unique(parts.begin(), parts.end(),
                          [](const TermPtr& a, const TermPtr& b) {
                            return print_term(a) == print_term(b);
                          }),
              parts.end());
  return std::make_shared<TermWord>(TermWord::Kind::Shuffle, "",
                                    std::move(parts));
}

}  // namespace tw

// ---------------------------------------------------------------------------

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (start == pos) throw ParseError("expected a token", pos);
    return std::string(text.substr(start, pos - start));
  }

  TermPtr parse() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of term", pos);
    if (text[pos] != '(') {
      std::string t = token();
      if (t == "eps") return tw::empty();
      return tw::letter(t);
    }
    ++pos;  // '('
    std::size_t head_at = pos;
    std::string head = token();
    std::vector<TermPtr> kids;
    for (skip_ws(); pos < text.size() && text[pos] != ')'; skip_ws())
      kids.push_back(parse());
    if (pos >= text.size()) throw ParseError("missing ')'", pos);
    ++pos;  // ')'
    if (head == "cat") {
      if (kids.size() < 2)
        throw ParseError("cat needs at least two children", head_at);
      return tw::cat(std::move(kids));
    }
    if (head == "omega" || head == "omegastar") {
      if (kids.size() != 1)
        throw ParseError(head + " needs exactly one child", head_at);
      return head == "omega" ? tw::omega(kids[0]) : tw::omega_star(kids[0]);
    }
    if (head == "shuffle") {
      if (kids.empty())
        throw ParseError("shuffle needs at least one child", head_at);
      return tw::shuffle(std::move(kids));
    }
    throw ParseError("unknown term head '" + head + "'", head_at);
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  TermParser p{text, 0};
  TermPtr t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return t;
}

std::string print_term(const TermPtr& t) {
  switch (t->kind()) {
    case TermWord::Kind::Empty:
      return "eps";
    case TermWord::Kind::Letter:
      return t->letter();
    case TermWord::Kind::Concat: {
      std::string s = "(cat";
      for (const TermPtr& c : t->children()) s += " " + print_term(c);
      return s + ")";
    }
    case TermWord::Kind::OmegaPow:
      return "(omega " + print_term(t->children()[0]) + ")";
    case TermWord::Kind::OmegaStarPow:
      return "(omegastar " + print_term(t->children()[0]) + ")";
    case TermWord::Kind::Shuffle: {
      std::string s = "(shuffle";
      for (const TermPtr& c : t->children()) s += " " + print_term(c);
      return s + ")";
    }
  }
  return "?";
}

Element eval_term(const RecognizedLanguage& lang, const TermPtr& t) {
  const OAlgebra& a = lang.algebra;
  switch (t->kind()) {
    case TermWord::Kind::Empty:
      return a.unit();
    case TermWord::Kind::Letter:
      return lang.image(t->letter());
    case TermWord::Kind::Concat: {
      Element r = a.unit();
      for (const TermPtr& c : t->children()) r = a.mul(r, eval_term(lang, c));
      return r;
    }
    case TermWord::Kind::OmegaPow:
      return a.omega(eval_term(lang, t->children()[0]));
    case TermWord::Kind::OmegaStarPow:
      return a.omega_star(eval_term(lang, t->children()[0]));
    case TermWord::Kind::Shuffle: {
      Mask m = 0;
      for (const TermPtr& c : t->children()) m |= bit(eval_term(lang, c));
      return a.shuffle(m);
    }
  }
  throw InternalError("unknown term kind");
}

Mask upward_closure(const OAlgebra& a, Element x) {
  // b >=_J x iff x = u·b·v for some u, v.
  Mask z = 0;
  for (int b = 0; b < a.size(); ++b) {
    bool up = false;
    for (int u = 0; u < a.size() && !up; ++u)
      for (int v = 0; v < a.size() && !up; ++v)
        up = a.mul(a.mul(Element{u}, Element{b}), Element{v}) == x;
    if (up) z |= Mask{1} << b;
  }
  return z;
}

std::string describe_witness(const RecognizedLanguage& lang,
                             const Witness& w) {
  const OAlgebra& a = lang.algebra;
  std::ostringstream os;
  switch (w.kind) {
    case Witness::Kind::Letter:
      os << "letter witness: h(" << w.letter << ") falls out of Z";
      break;
    case Witness::Kind::Concatenation:
      os << "concatenation witness: " << a.element_name(w.e1) << " · "
         << a.element_name(w.e2) << " falls out of Z";
      break;
    case Witness::Kind::Omega:
      os << "omega witness: e=" << a.element_name(w.e1)
         << " regroup k=" << w.regroup;
      break;
    case Witness::Kind::OmegaStar:
      os << "omega* witness: e=" << a.element_name(w.e1)
         << " regroup k=" << w.regroup;
      break;
    case Witness::Kind::Shuffle: {
      os << "shuffle witness: K={";
      bool first = true;
      for (int i = 0; i < a.size(); ++i)
        if (in_mask(w.kset, Element{i})) {
          if (!first) os << ", ";
          os << a.element_name(Element{i});
          first = false;
        }
      os << "}";
      break;
    }
  }
  os << " at path [";
  for (std::size_t i = 0; i < w.path.size(); ++i)
    os << (i ? " " : "") << w.path[i];
  os << "]";
  return os.str();
}

bool witness_replay(const RecognizedLanguage& lang, const Witness& w,
                    Mask z) {
  const OAlgebra& a = lang.algebra;
  auto inz = [&](Element e) { return in_mask(z, e); };
  switch (w.kind) {
    case Witness::Kind::Letter:
      return !inz(lang.image(w.letter));
    case Witness::Kind::Concatenation:
      return inz(w.e1) && inz(w.e2) && !inz(a.mul(w.e1, w.e2));
    case Witness::Kind::Omega:
      return inz(w.e1) && a.is_idempotent(w.e1) && !inz(a.omega(w.e1));
    case Witness::Kind::OmegaStar:
      return inz(w.e1) && a.is_idempotent(w.e1) && !inz(a.omega_star(w.e1));
    case Witness::Kind::Shuffle: {
      if (w.kset == 0 || (w.kset & ~z)) return false;
      return !inz(a.shuffle(w.kset));
    }
  }
  return false;
}

namespace {

struct WitnessSearch {
  const RecognizedLanguage& lang;
  const OAlgebra& a;
  Mask z;

  bool inz(Element e) const { return in_mask(z, e); }

  /// Expects eval(t) ∉ Z.
  Witness descend(const TermPtr& t, std::vector<int>& path) const {
    switch (t->kind()) {
      case TermWord::Kind::Empty:
        // The unit is J-above everything, so ε never falls out of Z.
        throw InternalError("descended into the empty term");
      case TermWord::Kind::Letter: {
        Witness w;
        w.kind = Witness::Kind::Letter;
        w.path = path;
        w.letter = t->letter();
        return w;
      }
      case TermWord::Kind::Concat: {
        Element prefix = a.unit();
        for (std::size_t i = 0; i < t->children().size(); ++i) {
          Element v = eval_term(lang, t->children()[i]);
          if (!inz(v)) {
            path.push_back(static_cast<int>(i));
            return descend(t->children()[i], path);
          }
          Element next = a.mul(prefix, v);
          if (!inz(next)) {
            Witness w;
            w.kind = Witness::Kind::Concatenation;
            w.path = path;
            w.e1 = prefix;
            w.e2 = v;
            return w;
          }
          prefix = next;
        }
        throw InternalError("concatenation never left Z");
      }
      case TermWord::Kind::OmegaPow:
      case TermWord::Kind::OmegaStarPow: {
        const bool om = t->kind() == TermWord::Kind::OmegaPow;
        Element m = eval_term(lang, t->children()[0]);
        if (!inz(m)) {
          path.push_back(0);
          return descend(t->children()[0], path);
        }
        int k = idempotent_power_exponent(a, m);
        Element e = a.power(m, k);
        if (inz(e)) {
          // ω(e) = ω(m^k) = ω(m), the node value, which is outside Z.
          Witness w;
          w.kind = om ? Witness::Kind::Omega : Witness::Kind::OmegaStar;
          w.path = path;
          w.e1 = e;
          w.regroup = k;
          return w;
        }
        // The powers of m leave Z before reaching the idempotent: the
        // fall is a concatenation of m-blocks inside the expansion.
        Element p = m;
        for (int i = 2; i <= k; ++i) {
          Element next = a.mul(p, m);
          if (!inz(next)) {
            Witness w;
            w.kind = Witness::Kind::Concatenation;
            w.path = path;
            w.e1 = p;
            w.e2 = m;
            w.regroup = i;
            return w;
          }
          p = next;
        }
        throw InternalError("idempotent power left Z untraceably");
      }
      case TermWord::Kind::Shuffle: {
        Mask k = 0;
        for (std::size_t i = 0; i < t->children().size(); ++i) {
          Element v = eval_term(lang, t->children()[i]);
          if (!inz(v)) {
            path.push_back(static_cast<int>(i));
            return descend(t->children()[i], path);
          }
          k |= bit(v);
        }
        Witness w;
        w.kind = Witness::Kind::Shuffle;
        w.path = path;
        w.kset = k;
        return w;
      }
    }
    throw InternalError("unknown term kind");
  }
};

}  // namespace

Witness find_witness(const RecognizedLanguage& lang, const TermPtr& t,
                     Element below) {
  Mask z = upward_closure(lang.algebra, below);
  if (in_mask(z, eval_term(lang, t)))
    throw PreconditionError("term value lies inside the upward closure");
  WitnessSearch search{lang, lang.algebra, z};
  std::vector<int> path;
  return search.descend(t, path);
}

}  // namespace ocw
