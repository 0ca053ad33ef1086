#pragma once

// Canonical forms of finite posets, used for homeomorphism tests and for
// duplicate rejection during enumeration.
//
// The labeling is found by partition refinement on order invariants followed
// by a backtracking search over the cells that refinement cannot split, keeping
// the lexicographically least relation encoding. Automorphisms discovered at
// equal leaves prune sibling branches in the same orbit.

#include <compare>
#include <cstdint>
#include <vector>

#include "finito/poset.hpp"

namespace finito {

struct CanonicalForm {
  // Point count (two bytes, big endian) followed by one byte per position pair
  // (i, j), i < j, ordered by j then i: 0 incomparable, 1 i < j, 2 j < i.
  std::vector<std::uint8_t> code;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // order[i] is the element placed at canonical position i.
  std::vector<Element> order;
};

CanonicalLabeling canonical_labeling(const FinitePoset& p);
CanonicalForm canonical_form(const FinitePoset& p);

// Relabels p so that element i is order[i].
FinitePoset relabel(const FinitePoset& p, const std::vector<Element>& order);

// Canonical representative: p with its elements in canonical order.
FinitePoset canonical_poset(const FinitePoset& p);

bool is_homeomorphic(const FinitePoset& p, const FinitePoset& q);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace finito
