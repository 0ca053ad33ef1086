#pragma once

// Finite models of spheres and of wedges of circles: constructions, the
// cardinality formula, and exhaustive checks of the minimal-model theorems
// within the enumeration cap.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finito/enumerate.hpp"
#include "finito/poset.hpp"

namespace finito {

// X plus two new incomparable points above every point of X.
FinitePoset nh_suspension(const FinitePoset& p);

// The (2n+2)-point model of the n-sphere: n suspensions of the two-point
// discrete space. Level i holds the points "a<i>" and "b<i>".
FinitePoset sphere_model(std::size_t n);

// Minima y1..yj below maxima x1..xi, every minimum below every maximum.
// Minima come first in index order.
FinitePoset bipartite_model(std::size_t i, std::size_t j);

// min { i + j : (i - 1)(j - 1) >= n }, by direct search. n >= 1.
std::size_t minimal_wedge_size(std::size_t n);
// min { 2 ceil(sqrt(n) + 1), 2 ceil((1 + sqrt(1 + 4n)) / 2) + 1 } in integer
// arithmetic.
std::size_t minimal_wedge_size_closed_form(std::size_t n);

// Smallest r with r * r >= n.
std::size_t ceil_sqrt(std::size_t n);

struct WedgeModelCertificate {
  std::size_t n = 0;
  std::size_t size = 0;
  std::size_t edges = 0;   // Hasse diagram edges
  std::size_t height = 0;
  bool height_ok = false;  // height is 2
  bool size_ok = false;    // size is minimal_wedge_size(n)
  bool edges_ok = false;   // edges == size + n - 1
  bool connected = false;
  std::size_t b1 = 0;

  bool satisfied() const { return height_ok && size_ok && edges_ok; }
  // When the three conditions hold the space must be connected with b1 = n.
  bool consistent() const { return !satisfied() || (connected && b1 == n); }
};

WedgeModelCertificate check_wedge_model(const FinitePoset& p, std::size_t n);

// Every isomorphism class satisfying the three conditions, in canonical order.
// Throws CapExceededError if minimal_wedge_size(n) exceeds the catalog's cap.
std::vector<FinitePoset> enumerate_wedge_minimal_models(std::size_t n, PosetCatalog& catalog);

struct WedgeScanRow {
  std::size_t n = 0;
  std::size_t size = 0;
  std::size_t closed_form = 0;
  std::size_t edges = 0;
  bool within_cap = false;
  std::size_t models = 0;          // only meaningful within the cap
  bool closed_under_opposite = false;
  bool all_consistent = false;     // every model connected with b1 = n and beat-point free
  bool converse_holds = false;     // every connected height-2 class with b1 = n qualifies
  bool square = false;

  bool ok() const;
};

// One row per n in 1..max_n. Rows beyond the cap are reported with
// within_cap = false and only the size columns filled.
std::vector<WedgeScanRow> wedge_uniqueness_scan(std::size_t max_n, PosetCatalog& catalog);

struct SphereTheoremReport {
  std::size_t max_height = 0;
  std::size_t max_points = 0;         // 2 * max_height
  std::size_t posets_scanned = 0;
  std::size_t minimal_spaces = 0;     // beat-point free, not the singleton
  // Minimal spaces with fewer than 2 * height points (expected none).
  std::vector<FinitePoset> lower_bound_violators;
  // Minimal spaces with exactly 2 * height points that are not spheres.
  std::vector<FinitePoset> equality_violators;
  // height -> number of classes with exactly 2 * height points
  std::map<std::size_t, std::size_t> equality_classes;

  bool confirmed() const;
};

// Scans every poset with at most 2h points. Throws CapExceededError.
SphereTheoremReport verify_sphere_theorem(std::size_t h, PosetCatalog& catalog);

}  // namespace finito
