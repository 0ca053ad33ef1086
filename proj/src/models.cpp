#include "finito/models.hpp"

#include <algorithm>
#include <set>

#include "finito/canonical.hpp"
#include "finito/errors.hpp"
#include "finito/order_complex.hpp"
#include "finito/reduction.hpp"

namespace finito {

namespace {

std::string fresh_label(const FinitePoset& p, std::string base) {
  const auto& labels = p.labels();
  while (std::find(labels.begin(), labels.end(), base) != labels.end()) base += "_";
  return base;
}

FinitePoset suspend(const FinitePoset& p, std::string plus, std::string minus) {
  const std::size_t n = p.size();
  std::vector<std::string> labels = p.labels();
  labels.push_back(std::move(plus));
  labels.push_back(std::move(minus));
  return FinitePoset::from_relation(
      n + 2,
      [&](Element x, Element y) {
        if (x < n && y < n) return p.leq(x, y);
        if (x < n) return true;
        return x == y;
      },
      std::move(labels));
}

std::size_t betti1(const FinitePoset& p) {
  const auto h = homology(order_complex(p));
  return h.betti.size() > 1 ? h.betti[1] : 0;
}

bool is_square(std::size_t n) {
  const std::size_t r = ceil_sqrt(n);
  return r * r == n;
}

}  // namespace

FinitePoset nh_suspension(const FinitePoset& p) {
  return suspend(p, fresh_label(p, "plus"), fresh_label(p, "minus"));
}

FinitePoset sphere_model(std::size_t n) {
  FinitePoset s = FinitePoset::antichain(2).with_labels({"a0", "b0"});
  for (std::size_t i = 1; i <= n; ++i) {
    s = suspend(s, "a" + std::to_string(i), "b" + std::to_string(i));
  }
  return s;
}

FinitePoset bipartite_model(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0) throw Error("bipartite model needs at least one point on each level");
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= j; ++k) labels.push_back("y" + std::to_string(k));
  for (std::size_t k = 1; k <= i; ++k) labels.push_back("x" + std::to_string(k));
  return FinitePoset::from_relation(
      i + j, [&](Element a, Element b) { return a == b || (a < j && b >= j); },
      std::move(labels));
}

std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

std::size_t minimal_wedge_size(std::size_t n) {
  if (n == 0) throw Error("wedge of zero circles: the minimal model is a point");
  std::size_t best = 0;
  // i - 1 ranges over 1..n; larger values never help.
  for (std::size_t a = 1; a <= n; ++a) {
    const std::size_t b = (n + a - 1) / a;  // least b with a * b >= n
    const std::size_t total = (a + 1) + (b + 1);
    if (best == 0 || total < best) best = total;
  }
  return best;
}

std::size_t minimal_wedge_size_closed_form(std::size_t n) {
  const std::size_t first = 2 * (ceil_sqrt(n) + 1);
  // ceil((1 + s) / 2) with s = sqrt(1 + 4n) is the least t with 2t - 1 >= ceil(s).
  const std::size_t s = ceil_sqrt(1 + 4 * n);
  const std::size_t t = (s + 2) / 2;
  const std::size_t second = 2 * t + 1;
  return std::min(first, second);
}

WedgeModelCertificate check_wedge_model(const FinitePoset& p, std::size_t n) {
  WedgeModelCertificate c;
  c.n = n;
  c.size = p.size();
  c.edges = cover_count(p);
  c.height = height(p);
  c.height_ok = c.height == 2;
  c.size_ok = c.size == minimal_wedge_size(n);
  c.edges_ok = c.edges == c.size + n - 1;
  c.connected = is_connected(p);
  c.b1 = betti1(p);
  return c;
}

std::vector<FinitePoset> enumerate_wedge_minimal_models(std::size_t n, PosetCatalog& catalog) {
  const std::size_t size = minimal_wedge_size(n);
  std::vector<FinitePoset> out;
  for (const auto& p : catalog.level(size)) {
    if (height(p) != 2 || cover_count(p) != size + n - 1) continue;
    if (check_wedge_model(p, n).satisfied()) out.push_back(p);
  }
  return out;
}

bool WedgeScanRow::ok() const {
  if (size != closed_form) return false;
  if (!within_cap) return true;
  return closed_under_opposite && all_consistent && converse_holds && ((models == 1) == square);
}

std::vector<WedgeScanRow> wedge_uniqueness_scan(std::size_t max_n, PosetCatalog& catalog) {
  std::vector<WedgeScanRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    WedgeScanRow row;
    row.n = n;
    row.size = minimal_wedge_size(n);
    row.closed_form = minimal_wedge_size_closed_form(n);
    row.edges = row.size + n - 1;
    row.square = is_square(n);
    row.within_cap = row.size <= catalog.cap();
    if (row.within_cap) {
      const auto models = enumerate_wedge_minimal_models(n, catalog);
      row.models = models.size();
      std::set<CanonicalForm> codes;
      for (const auto& m : models) codes.insert(canonical_form(m));
      row.closed_under_opposite = true;
      row.all_consistent = true;
      for (const auto& m : models) {
        if (!codes.count(canonical_form(opposite(m)))) row.closed_under_opposite = false;
        const auto cert = check_wedge_model(m, n);
        if (!cert.consistent() || !is_minimal_space(m)) row.all_consistent = false;
      }
      row.converse_holds = true;
      for (const auto& p : catalog.level(row.size)) {
        if (height(p) != 2 || !is_connected(p) || betti1(p) != n) continue;
        if (!check_wedge_model(p, n).satisfied()) row.converse_holds = false;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

bool SphereTheoremReport::confirmed() const {
  if (!lower_bound_violators.empty() || !equality_violators.empty()) return false;
  for (std::size_t h = 1; h <= max_height; ++h) {
    const auto it = equality_classes.find(h);
    if (it == equality_classes.end() || it->second != 1) return false;
  }
  return true;
}

SphereTheoremReport verify_sphere_theorem(std::size_t h, PosetCatalog& catalog) {
  if (h == 0) throw Error("height must be positive");
  SphereTheoremReport report;
  report.max_height = h;
  report.max_points = 2 * h;
  if (report.max_points > catalog.cap()) {
    throw CapExceededError("verifying height " + std::to_string(h) + " needs " +
                           std::to_string(report.max_points) + "-point spaces; cap is " +
                           std::to_string(catalog.cap()));
  }
  std::vector<CanonicalForm> spheres;
  for (std::size_t k = 0; k < h; ++k) spheres.push_back(canonical_form(sphere_model(k)));

  for (std::size_t k = 1; k <= report.max_points; ++k) {
    for (const auto& p : catalog.level(k)) {
      ++report.posets_scanned;
      if (k == 1 || !is_minimal_space(p)) continue;
      ++report.minimal_spaces;
      const std::size_t ht = height(p);
      if (k < 2 * ht) {
        report.lower_bound_violators.push_back(p);
      } else if (k == 2 * ht) {
        ++report.equality_classes[ht];
        if (canonical_form(p) != spheres.at(ht - 1)) report.equality_violators.push_back(p);
      }
    }
  }
  return report;
}

}  // namespace finito
