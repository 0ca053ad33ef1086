#pragma once

// Finite T0 spaces, represented by their specialization order.
//
// A finite T0 space on n points is the same thing as a partial order on
// {0, ..., n-1}: x <= y iff x lies in the minimal open set of y. Open sets are
// down-sets, closed sets are up-sets. Elements are dense indices; labels are
// carried along for presentation only and never affect any computation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace finito {

using Element = std::size_t;
// Sorted ascending, no duplicates.
using ElementSet = std::vector<Element>;

struct HasseDiagram {
  std::size_t n = 0;
  // (x, y) means x is covered by y.
  std::vector<std::pair<Element, Element>> covers;
  std::vector<std::string> labels;
};

class FinitePoset {
 public:
  // Builds the order from a relation predicate and validates reflexivity,
  // antisymmetry and transitivity. Empty labels default to "0", "1", ...
  static FinitePoset from_relation(std::size_t n,
                                   const std::function<bool(Element, Element)>& leq,
                                   std::vector<std::string> labels = {});

  static FinitePoset antichain(std::size_t n);
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return n_; }

  bool leq(Element x, Element y) const {
    return (bits_[x * stride_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  FinitePoset with_labels(std::vector<std::string> labels) const;

  // Elements strictly below / above x.
  std::size_t down_degree(Element x) const;
  std::size_t up_degree(Element x) const;

  bool is_maximal(Element x) const { return up_degree(x) == 0; }
  bool is_minimal(Element x) const { return down_degree(x) == 0; }

  void check_index(Element x) const;

  // Same order on the same indices. Labels are ignored.
  bool same_order(const FinitePoset& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  FinitePoset(std::size_t n, std::vector<std::uint64_t> bits,
              std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

// Reflexive-transitive closure of the cover edges. Redundant edges are
// accepted. Throws CycleError, EmptyError.
FinitePoset from_covers(const HasseDiagram& h);

// Cover relation, sorted lexicographically.
HasseDiagram hasse(const FinitePoset& p);

// Number of cover pairs (edges of the Hasse diagram).
std::size_t cover_count(const FinitePoset& p);

// Minimal open set U_x = {y : y <= x}.
ElementSet min_open(const FinitePoset& p, Element x);

// Closure of {x} = {y : y >= x}.
ElementSet closure(const FinitePoset& p, Element x);

FinitePoset opposite(const FinitePoset& p);

// Number of points in a longest chain. The singleton has height 1.
std::size_t height(const FinitePoset& p);

// Length (in points) of the longest chain with top x, minus one. Minimal
// elements are on level 0.
std::vector<std::size_t> levels(const FinitePoset& p);

// Components of the comparability graph, each sorted, ordered by least element.
std::vector<ElementSet> connected_components(const FinitePoset& p);
bool is_connected(const FinitePoset& p);

// Visits every nonempty chain exactly once, listed bottom to top.
void for_each_chain(const FinitePoset& p,
                    const std::function<void(std::span<const Element>)>& visit);
std::vector<std::vector<Element>> chains(const FinitePoset& p);

// Induced order on `keep` (any order, no duplicates). Element i of the result
// is keep[i].
FinitePoset subspace(const FinitePoset& p, std::span<const Element> keep);

// Disjoint union; q's elements are shifted by p.size().
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);

}  // namespace finito
