#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ocw {

// Carrier subsets are bitmasks over element indices; carriers are capped at
// 16 elements because the shuffle table is indexed by subset.
using Mask = std::uint32_t;
inline constexpr int max_carrier = 16;

/// An element of a finite o-algebra, identified by its carrier index.
/// Display names live in the owning algebra.
struct Element {
  int v = -1;

  friend bool operator==(Element a, Element b) { return a.v == b.v; }
  friend bool operator!=(Element a, Element b) { return a.v != b.v; }
  friend bool operator<(Element a, Element b) { return a.v < b.v; }
};

inline Mask bit(Element e) { return Mask{1} << e.v; }
inline bool in_mask(Mask m, Element e) { return (m >> e.v) & 1; }

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLetter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a term or expression text, with a byte offset.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
        offset(off) {}
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IllDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypothesisUnsatisfied : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseUnreachable : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ocw
