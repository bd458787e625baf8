#include "ocw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ocw {

namespace {

struct InternKey {
  ExprKind kind;
  std::string letter;
  const Expr* a;
  const Expr* b;
  bool operator==(const InternKey&) const = default;
};

struct InternKeyHash {
  std::size_t operator()(const InternKey& k) const {
    std::size_t h = std::hash<int>{}(static_cast<int>(k.kind));
    h = h * 1000003 ^ std::hash<std::string>{}(k.letter);
    h = h * 1000003 ^ std::hash<const void*>{}(k.a);
    h = h * 1000003 ^ std::hash<const void*>{}(k.b);
    return h;
  }
};

struct InternTable {
  std::mutex mu;
  std::unordered_map<InternKey, ExprPtr, InternKeyHash> nodes;
  std::uint64_t next_id = 0;
};

InternTable& table() {
  static InternTable t;
  return t;
}

ExprPtr intern(ExprKind kind, std::string letter, ExprPtr a, ExprPtr b) {
  InternTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  InternKey key{kind, letter, a.get(), b.get()};
  auto it = t.nodes.find(key);
  if (it != t.nodes.end()) return it->second;
  auto node = std::make_shared<Expr>(kind, std::move(letter), std::move(a),
                                     std::move(b), t.next_id++);
  t.nodes.emplace(std::move(key), node);
  return node;
}

bool is_sigma_star(const ExprPtr& e) {
  return e->kind() == ExprKind::Neg &&
         e->child()->kind() == ExprKind::Empty;
}

}  // namespace

namespace ex {

ExprPtr empty() { return intern(ExprKind::Empty, {}, nullptr, nullptr); }

ExprPtr letter(const std::string& sym) {
  return intern(ExprKind::Letter, sym, nullptr, nullptr);
}

ExprPtr alt(ExprPtr a, ExprPtr b) {
  if (a->kind() == ExprKind::Empty) return b;
  if (b->kind() == ExprKind::Empty) return a;
  if (a == b) return a;
  return intern(ExprKind::Union, {}, std::move(a), std::move(b));
}

ExprPtr both(ExprPtr a, ExprPtr b) {
  if (a->kind() == ExprKind::Empty || b->kind() == ExprKind::Empty)
    return empty();
  if (is_sigma_star(a)) return b;
  if (is_sigma_star(b)) return a;
  if (a == b) return a;
  return intern(ExprKind::Inter, {}, std::move(a), std::move(b));
}

ExprPtr neg(ExprPtr a) {
  if (a->kind() == ExprKind::Neg) return a->child();
  return intern(ExprKind::Neg, {}, std::move(a), nullptr);
}

ExprPtr cat(ExprPtr a, ExprPtr b) {
  if (a->kind() == ExprKind::Empty || b->kind() == ExprKind::Empty)
    return empty();
  return intern(ExprKind::Concat, {}, std::move(a), std::move(b));
}

ExprPtr star(ExprPtr a) { return intern(ExprKind::Star, {}, std::move(a), nullptr); }

ExprPtr scatter(ExprPtr a) {
  return intern(ExprKind::Scatter, {}, std::move(a), nullptr);
}

ExprPtr alt_of(std::span<const ExprPtr> parts) {
  ExprPtr out = empty();
  std::unordered_set<const Expr*> seen;
  for (const ExprPtr& p : parts) {
    if (p->kind() == ExprKind::Empty) continue;
    if (!seen.insert(p.get()).second) continue;
    out = alt(out, p);
  }
  return out;
}

ExprPtr both_of(std::span<const ExprPtr> parts) {
  ExprPtr out = neg(empty());
  for (const ExprPtr& p : parts) out = both(out, p);
  return out;
}

ExprPtr cat_of(std::span<const ExprPtr> parts) {
  if (parts.empty()) throw InternalError("cat_of needs at least one part");
  ExprPtr out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = cat(out, parts[i]);
  return out;
}

}  // namespace ex

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::span<const std::string> alphabet;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool starts_primary() {
    char c = peek();
    return c == '0' || c == '(' || c == '!' ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  ExprPtr parse_union() {
    ExprPtr e = parse_inter();
    while (peek() == '+') {
      ++pos;
      e = ex::alt(e, parse_inter());
    }
    return e;
  }
  ExprPtr parse_inter() {
    ExprPtr e = parse_concat();
    while (peek() == '&') {
      ++pos;
      e = ex::both(e, parse_concat());
    }
    return e;
  }
  ExprPtr parse_concat() {
    ExprPtr e = parse_prefix();
    for (;;) {
      if (peek() == '.') {
        ++pos;
        e = ex::cat(e, parse_prefix());
      } else if (starts_primary()) {
        e = ex::cat(e, parse_prefix());
      } else {
        return e;
      }
    }
  }
  ExprPtr parse_prefix() {
    if (peek() == '!') {
      ++pos;
      return ex::neg(parse_prefix());
    }
    return parse_postfix();
  }
  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        e = ex::star(e);
      } else if (c == '~') {
        ++pos;
        e = ex::scatter(e);
      } else {
        return e;
      }
    }
  }
  ExprPtr parse_primary() {
    char c = peek();
    if (c == '0') {
      ++pos;
      return ex::empty();
    }
    if (c == '(') {
      ++pos;
      ExprPtr e = parse_union();
      if (peek() != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      for (const std::string& s : alphabet)
        if (s == name) return ex::letter(name);
      throw UnknownLetter("letter '" + name + "' not in alphabet (offset " +
                          std::to_string(start) + ")");
    }
    throw ParseError("expected expression", pos);
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text,
                   std::span<const std::string> alphabet) {
  Parser p{text, 0, alphabet};
  ExprPtr e = p.parse_union();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence tiers: union 0, inter 1, concat 2, neg 3, postfix 4, atom 5.
int tier(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Union: return 0;
    case ExprKind::Inter: return 1;
    case ExprKind::Concat: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Star:
    case ExprKind::Scatter: return 4;
    case ExprKind::Empty:
    case ExprKind::Letter: return 5;
  }
  return 5;
}

void print_to(const ExprPtr& e, int min_tier, std::string& out) {
  const bool parens = tier(*e) < min_tier;
  if (parens) out += '(';
  switch (e->kind()) {
    case ExprKind::Empty:
      out += '0';
      break;
    case ExprKind::Letter:
      out += e->letter();
      break;
    case ExprKind::Union:
      print_to(e->left(), 0, out);
      out += " + ";
      print_to(e->right(), 1, out);
      break;
    case ExprKind::Inter:
      print_to(e->left(), 1, out);
      out += " & ";
      print_to(e->right(), 2, out);
      break;
    case ExprKind::Concat:
      print_to(e->left(), 2, out);
      out += ' ';
      print_to(e->right(), 3, out);
      break;
    case ExprKind::Neg:
      out += '!';
      print_to(e->child(), 3, out);
      break;
    case ExprKind::Star:
      print_to(e->child(), 5, out);
      out += '*';
      break;
    case ExprKind::Scatter:
      print_to(e->child(), 5, out);
      out += '~';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_to(e, 0, out);
  return out;
}

ExprPtr simplify(const ExprPtr& e) {
  // The interned factories fold as they build, so a bottom-up rebuild is
  // the whole pass.
  switch (e->kind()) {
    case ExprKind::Empty:
    case ExprKind::Letter:
      return e;
    case ExprKind::Union:
      return ex::alt(simplify(e->left()), simplify(e->right()));
    case ExprKind::Inter:
      return ex::both(simplify(e->left()), simplify(e->right()));
    case ExprKind::Neg:
      return ex::neg(simplify(e->child()));
    case ExprKind::Concat:
      return ex::cat(simplify(e->left()), simplify(e->right()));
    case ExprKind::Star:
      return ex::star(simplify(e->child()));
    case ExprKind::Scatter:
      return ex::scatter(simplify(e->child()));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Class conformance

struct ExprClassifier::Impl {
  std::unordered_map<const Expr*, bool> star_cache, scat_cache, marked_cache;
  // Range results of the marked-grammar check, keyed by flattened chain
  // (identified by its owning node) and range.
  struct RangeKey {
    const Expr* top;
    int i, j;
    bool operator==(const RangeKey&) const = default;
  };
  struct RangeKeyHash {
    std::size_t operator()(const RangeKey& k) const {
      return std::hash<const void*>{}(k.top) * 1000003 ^
             static_cast<std::size_t>(k.i * 101 + k.j);
    }
  };
  std::unordered_map<RangeKey, bool, RangeKeyHash> range_cache;
  std::unordered_map<const Expr*, std::vector<ExprPtr>> flat_cache;

  const std::vector<ExprPtr>& flatten(const ExprPtr& e) {
    auto it = flat_cache.find(e.get());
    if (it != flat_cache.end()) return it->second;
    std::vector<ExprPtr> chain;
    flatten_into(e, chain);
    return flat_cache.emplace(e.get(), std::move(chain)).first->second;
  }
  static void flatten_into(const ExprPtr& e, std::vector<ExprPtr>& out) {
    if (e->kind() == ExprKind::Concat) {
      flatten_into(e->left(), out);
      flatten_into(e->right(), out);
    } else {
      out.push_back(e);
    }
  }

  bool has(const ExprPtr& e, ExprKind what,
           std::unordered_map<const Expr*, bool>& cache) {
    auto it = cache.find(e.get());
    if (it != cache.end()) return it->second;
    bool r = e->kind() == what;
    if (!r && e->left()) r = has(e->left(), what, cache);
    if (!r && e->right()) r = has(e->right(), what, cache);
    cache[e.get()] = r;
    return r;
  }

  bool marked(const ExprPtr& e) {
    auto it = marked_cache.find(e.get());
    if (it != marked_cache.end()) return it->second;
    bool r;
    switch (e->kind()) {
      case ExprKind::Empty:
        r = true;
        break;
      case ExprKind::Union:
      case ExprKind::Inter:
        r = marked(e->left()) && marked(e->right());
        break;
      case ExprKind::Neg:
        r = marked(e->child());
        break;
      case ExprKind::Concat: {
        const auto& chain = flatten(e);
        r = marked_range(e, chain, 0, static_cast<int>(chain.size()));
        break;
      }
      // A bare letter, star or scatter node is not produced by the
      // grammar; stars are admitted only through the M(σM)* chain shape.
      default:
        r = false;
    }
    marked_cache[e.get()] = r;
    return r;
  }

  bool marked_range(const ExprPtr& top, const std::vector<ExprPtr>& chain,
                    int i, int j) {
    if (j - i == 1) {
      const ExprPtr& e = chain[i];
      // A chain element that is itself a concatenation cannot appear
      // (flattening), so judge it as a standalone expression.
      return marked(e);
    }
    RangeKey key{top.get(), i, j};
    auto it = range_cache.find(key);
    if (it != range_cache.end()) return it->second;
    range_cache[key] = false;  // cycle guard; ranges shrink so none occur
    bool r = false;
    // M σ M: split at any letter with nonempty sides.
    for (int p = i + 1; p < j - 1 && !r; ++p)
      if (chain[p]->kind() == ExprKind::Letter)
        r = marked_range(top, chain, i, p) && marked_range(top, chain, p + 1, j);
    // M (σ M)*: a trailing star whose body is a letter followed by a
    // marked chain.
    if (!r && chain[j - 1]->kind() == ExprKind::Star) {
      const auto& body = flatten(chain[j - 1]->child());
      if (body.size() >= 2 && body[0]->kind() == ExprKind::Letter)
        r = marked_range(chain[j - 1]->child(), body, 1,
                         static_cast<int>(body.size())) &&
            marked_range(top, chain, i, j - 1);
    }
    range_cache[key] = r;
    return r;
  }
};

std::shared_ptr<ExprClassifier::Impl> ExprClassifier::make_impl() {
  return std::make_shared<Impl>();
}

bool ExprClassifier::marked(const ExprPtr& e) { return impl_->marked(e); }
bool ExprClassifier::has_star(const ExprPtr& e) {
  return impl_->has(e, ExprKind::Star, impl_->star_cache);
}
bool ExprClassifier::has_scatter(const ExprPtr& e) {
  return impl_->has(e, ExprKind::Scatter, impl_->scat_cache);
}

ExprClassSet ExprClassifier::operator()(const ExprPtr& e) {
  ExprClassSet c;
  const bool star = has_star(e);
  const bool scat = has_scatter(e);
  c.scatter_free = !scat;
  c.power_free = !scat && !star;
  c.marked = marked(e);
  c.marked_star_free = c.marked && !star;
  return c;
}

ExprClassSet expr_class(const ExprPtr& e) { return ExprClassifier{}(e); }

std::string to_string(ExprClassTarget t) {
  switch (t) {
    case ExprClassTarget::MarkedStarFree: return "marked_star_free";
    case ExprClassTarget::Marked: return "marked";
    case ExprClassTarget::PowerFree: return "power_free";
    case ExprClassTarget::ScatterFree: return "scatter_free";
    case ExprClassTarget::Scatter: return "scatter";
  }
  return "?";
}

ExprClassTarget expr_class_target_from_string(const std::string& s) {
  for (ExprClassTarget t :
       {ExprClassTarget::MarkedStarFree, ExprClassTarget::Marked,
        ExprClassTarget::PowerFree, ExprClassTarget::ScatterFree,
        ExprClassTarget::Scatter})
    if (to_string(t) == s) return t;
  throw ParseError("unknown expression class: " + s, 0);
}

bool class_admits(const ExprClassSet& c, ExprClassTarget t) {
  switch (t) {
    case ExprClassTarget::MarkedStarFree: return c.marked_star_free;
    case ExprClassTarget::Marked: return c.marked;
    case ExprClassTarget::PowerFree: return c.power_free;
    case ExprClassTarget::ScatterFree: return c.scatter_free;
    case ExprClassTarget::Scatter: return true;
  }
  return false;
}

ExprClassTarget strongest_class(const ExprClassSet& c) {
  if (c.marked_star_free) return ExprClassTarget::MarkedStarFree;
  if (c.marked) return ExprClassTarget::Marked;
  if (c.power_free) return ExprClassTarget::PowerFree;
  if (c.scatter_free) return ExprClassTarget::ScatterFree;
  return ExprClassTarget::Scatter;
}

}  // namespace ocw
