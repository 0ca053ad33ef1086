#pragma once

// Fundamental group of a finite T0 space.
//
// Loops are written as H-paths: sequences of Hasse-diagram edges traversed in
// either direction. The group itself is presented as the edge-path group of
// the order complex: one generator per comparable pair outside a BFS spanning
// tree rooted at the basepoint, one relator per 3-chain x < y < z.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finito/poset.hpp"

namespace finito {

struct HEdge {
  Element origin;
  Element end;

  HEdge inverse() const { return {end, origin}; }
  bool operator==(const HEdge&) const = default;
};

struct HPath {
  Element basepoint;
  std::vector<HEdge> edges;

  Element origin() const { return edges.empty() ? basepoint : edges.front().origin; }
  Element end() const { return edges.empty() ? basepoint : edges.back().end; }
};

// Letter k > 0 is generator k-1, letter -k its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  bool is_free() const { return relators.empty(); }
};

struct EdgePathPresentation {
  GroupPresentation group;
  Element basepoint = 0;
  // Comparable pairs (lower, upper) in the spanning tree.
  std::vector<std::pair<Element, Element>> tree;
  // Non-tree comparable pairs; pair i is generator i.
  std::vector<std::pair<Element, Element>> generator_edges;
};

bool is_hedge(const FinitePoset& p, const HEdge& e);
bool ascends(const FinitePoset& p, const HEdge& e);

// Throws IllFormedPathError unless every edge is an H-edge and consecutive
// edges compose. The empty path is always valid.
void validate_path(const FinitePoset& p, const HPath& path);
bool is_loop(const FinitePoset& p, const HPath& path);

// All edges ascend, or all descend. Vacuously true for the empty path.
bool is_monotonic(const FinitePoset& p, const HPath& path);

HPath concatenate(const HPath& a, const HPath& b);
HPath reverse(const HPath& path);

// Closeness moves on a loop: insert a product of two monotonic paths at a
// position (between edges `position-1` and `position`), or delete one that
// occupies edges [position, position + first_length + second_length).
// Throw IllFormedMoveError if the move is not well formed.
HPath close_move_insert(const FinitePoset& p, const HPath& loop, std::size_t position,
                        const HPath& first, const HPath& second);
HPath close_move_delete(const FinitePoset& p, const HPath& loop, std::size_t position,
                        std::size_t first_length, std::size_t second_length);

// Throws NotConnectedError.
EdgePathPresentation edge_path_presentation(const FinitePoset& p, Element x0);

// Cancels adjacent inverse letters.
Word free_reduce(Word w);
// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(Word w);

// Freely reduces relators, drops empty and duplicate ones, and repeatedly
// eliminates a generator that occurs exactly once in some relator (shortest
// relator first), substituting its solution everywhere else. Unused
// generators are kept. The group is unchanged up to isomorphism.
GroupPresentation tietze_simplify(const GroupPresentation& g);

// Rank of the abelianization: generators minus the rank of the relator
// exponent matrix over Z.
std::size_t abelian_rank(const GroupPresentation& g);

// Torsion invariants (> 1) of the abelianization.
std::vector<std::string> abelian_torsion(const GroupPresentation& g);

// b1 through the presentation. Throws NotConnectedError.
std::size_t first_betti(const FinitePoset& p);
std::size_t first_betti(const FinitePoset& p, Element x0);

// Image of a loop at the presentation's basepoint, freely reduced.
// Throws IllFormedPathError.
Word loop_to_word(const FinitePoset& p, const EdgePathPresentation& presentation,
                  const HPath& loop);

// "< x1, x2 | x1 x2 x1^-1 >"
std::string format_presentation(const GroupPresentation& g);
std::string format_word(const Word& w);

}  // namespace finito
