#pragma once

// Spaces that appear repeatedly across the test suites.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "finito/document.hpp"
#include "finito/poset.hpp"

namespace finito::testing {

inline Element index_of(const FinitePoset& p, const std::string& label) {
  const auto& ls = p.labels();
  return static_cast<Element>(std::find(ls.begin(), ls.end(), label) - ls.begin());
}

// Open sets: {}, X, {b,d}, {c}, {d}, {b,c,d}, {c,d}.
inline FinitePoset four_point_example() { return load_poset("d < b\nb < a\nc < a\n"); }

// c,d < a1; c,d,e < b; d,e < a2.
inline FinitePoset osaki_x() {
  return load_poset("c < a1\nd < a1\nc < b\nd < b\ne < b\nd < a2\ne < a2\n");
}

// Non-Hausdorff suspension of the discrete space {c,d,e}.
inline FinitePoset osaki_y() {
  return load_poset("c < a\nd < a\ne < a\nc < b\nd < b\ne < b\n");
}

// Two maxima over three minima; a minimal finite model of S1 v S1.
inline FinitePoset wedge_five() {
  return load_poset("p < u\nq < u\nr < u\np < v\nq < v\nr < v\n");
}

// Random relabeling of p.
inline FinitePoset shuffled(const FinitePoset& p, std::mt19937& rng) {
  std::vector<Element> order(p.size());
  for (Element i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return subspace(p, order);
}

}  // namespace finito::testing
