#pragma once

// Exhaustive enumeration of finite posets up to isomorphism.
//
// Posets on k points are grown from posets on k-1 points by adding a new
// maximal element above a down-set. A child is kept only if its canonical
// parent, obtained by deleting the maximal element of highest canonical
// position, is the poset it was grown from; children of one parent are
// deduplicated locally. Every class is therefore produced by exactly one
// parent, and parents can be processed independently.

#include <cstddef>
#include <map>
#include <vector>

#include "finito/canonical.hpp"
#include "finito/poset.hpp"

namespace finito {

inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kHardEnumerationCap = 10;

struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;  // clamped to kHardEnumerationCap
  std::size_t threads = 1;
};

// Caches every level it has computed. Not safe for concurrent use; the
// parallelism is internal to level().
class PosetCatalog {
 public:
  explicit PosetCatalog(EnumerationOptions options = {});

  // One canonical representative per isomorphism class on k points, sorted by
  // canonical form. Throws CapExceededError if k exceeds the cap.
  const std::vector<FinitePoset>& level(std::size_t k);
  const std::vector<CanonicalForm>& codes(std::size_t k);

  std::size_t cap() const { return cap_; }
  std::size_t threads() const { return threads_; }

 private:
  void build(std::size_t k);

  std::size_t cap_;
  std::size_t threads_;
  std::vector<std::vector<FinitePoset>> posets_;
  std::vector<std::vector<CanonicalForm>> codes_;
};

std::vector<FinitePoset> enumerate_posets(std::size_t k, EnumerationOptions options = {});

// All down-sets of p (including the empty one and p itself), as bit masks.
// p must have at most 63 points.
std::vector<std::uint64_t> down_set_masks(const FinitePoset& p);

struct EnumerationStats {
  std::size_t k = 0;
  std::size_t total = 0;
  std::size_t connected = 0;
  std::size_t minimal = 0;  // beat-point free
  std::map<std::size_t, std::size_t> by_height;
};

EnumerationStats enumeration_stats(std::size_t k, PosetCatalog& catalog);

}  // namespace finito
