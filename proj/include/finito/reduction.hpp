#pragma once

// Homotopy-theoretic shrinking of finite spaces: beat points and cores,
// Osaki's open and closed reductions, the McCord criterion for a concrete map,
// and removal of non-extremal points.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "finito/poset.hpp"

namespace finito {

enum class BeatKind { up, down };

struct BeatPointReport {
  Element element;
  BeatKind kind;
  // up: the minimum of the strict up-set; down: the maximum of the strict down-set.
  Element witness;

  bool operator==(const BeatPointReport&) const = default;
};

// Every (point, kind) pair that is a beat point, ordered by element then kind
// (up before down). A point can be both an up and a down beat point.
std::vector<BeatPointReport> beat_points(const FinitePoset& p);

bool is_minimal_space(const FinitePoset& p);

struct ReductionTrace {
  // Removed points in removal order, as indices of the source poset.
  std::vector<BeatPointReport> removed;
  // Source indices of the surviving points; final's element i is kept[i].
  std::vector<Element> kept;
  FinitePoset final;
};

// Picks which of the current beat points to remove next.
using BeatPointChooser = std::function<std::size_t(std::span<const BeatPointReport>)>;

// Removes the beat point with the smallest index until none is left.
ReductionTrace core(const FinitePoset& p);
ReductionTrace core(const FinitePoset& p, const BeatPointChooser& choose);

// Replays a trace's removals on the source poset.
FinitePoset replay(const FinitePoset& source, const ReductionTrace& trace);

bool is_contractible(const FinitePoset& p);
bool is_homotopy_equivalent(const FinitePoset& p, const FinitePoset& q);

// Identifies `collapse` to a single point. Order: y <= [A] iff y <= a for some
// a in A, [A] <= y iff a <= y for some a in A, then transitive closure. The
// collapsed point keeps the label of the least element of `collapse` unless
// `label` is given. Throws NotT0Error if the result is not antisymmetric.
// Element order of the result: the non-collapsed points in source order, then
// the collapsed point.
FinitePoset quotient(const FinitePoset& p, std::span<const Element> collapse,
                     const std::string& label = {});

// X/U_x when U_x ∩ U_y is empty or contractible for every y; otherwise nullopt.
// Contractibility is a sufficient stand-in for Osaki's weak contractibility.
std::optional<FinitePoset> osaki_open_reduction(const FinitePoset& p, Element x);
// Dual: X/closure(x) under the closed-set hypothesis.
std::optional<FinitePoset> osaki_closed_reduction(const FinitePoset& p, Element x);

struct OsakiEntry {
  Element element;
  bool open_hypothesis;    // intersections with x's minimal open set are fine
  bool closed_hypothesis;  // same for closures
  std::size_t open_size;   // #U_x; the reduction only shrinks the space when > 1
  std::size_t closed_size;
  bool open_shrinks() const { return open_hypothesis && open_size > 1; }
  bool closed_shrinks() const { return closed_hypothesis && closed_size > 1; }
};

std::vector<OsakiEntry> osaki_table(const FinitePoset& p);

// True if some point admits an open or closed reduction to a strictly smaller space.
bool osaki_reducible(const FinitePoset& p);

struct McCordPoint {
  Element target;
  std::size_t preimage_size;
  bool contractible;  // false for an empty preimage
};

struct McCordReport {
  bool weak_equivalence_certified = false;
  std::vector<McCordPoint> points;
  std::vector<Element> failures;
};

// Checks the sufficient criterion for f: src -> dst to be a weak homotopy
// equivalence using the basis-like cover {U_y}: f is order preserving and each
// f^{-1}(U_y) is contractible. A negative answer does not certify that f is not
// a weak equivalence. Throws NotContinuousError on an order violation.
McCordReport mccord_check(const FinitePoset& src, const FinitePoset& dst,
                          std::span<const Element> map);

// Subspace on all points but x. Throws LastPointError on a singleton.
FinitePoset remove_point(const FinitePoset& p, Element x);

struct FlattenResult {
  FinitePoset poset;
  std::vector<Element> kept;  // source indices
};

// Repeatedly removes the smallest-index point other than x0 that is neither
// maximal nor minimal. The result is connected and contains x0; its height is
// at most 2 unless x0 itself is the last non-extremal point, in which case it
// is 3. Throws NotConnectedError.
FlattenResult flatten_to_height2(const FinitePoset& p, Element x0);

}  // namespace finito
