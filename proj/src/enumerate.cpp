#include "finito/enumerate.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "finito/errors.hpp"
#include "finito/reduction.hpp"

namespace finito {

namespace {

struct Child {
  CanonicalForm code;
  FinitePoset poset;
};

// Canonical maximal element: the maximal element at the highest canonical
// position.
Element canonical_maximal(const FinitePoset& p, const std::vector<Element>& order) {
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (p.is_maximal(*it)) return *it;
  }
  return order.back();
}

std::vector<Child> children_of(const FinitePoset& parent, const CanonicalForm& parent_code) {
  const std::size_t n = parent.size();
  const Element fresh = n;
  std::vector<Child> out;
  std::set<CanonicalForm> seen;
  for (std::uint64_t mask : down_set_masks(parent)) {
    const FinitePoset child = FinitePoset::from_relation(n + 1, [&](Element x, Element y) {
      if (y == fresh) return x == fresh || ((mask >> x) & 1u) != 0;
      if (x == fresh) return false;
      return parent.leq(x, y);
    });
    CanonicalLabeling lab = canonical_labeling(child);
    if (seen.count(lab.form)) continue;
    const Element top = canonical_maximal(child, lab.order);
    if (top != fresh) {
      std::vector<Element> keep;
      for (Element x = 0; x <= n; ++x) {
        if (x != top) keep.push_back(x);
      }
      if (canonical_form(subspace(child, keep)) != parent_code) continue;
    }
    seen.insert(lab.form);
    out.push_back({lab.form, relabel(child, lab.order).with_labels({})});
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> down_set_masks(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 63) throw CapExceededError("down-set masks need at most 63 points");
  std::vector<std::uint64_t> below(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(y, x)) below[x] |= std::uint64_t{1} << y;
    }
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x) {
      if (((mask >> x) & 1u) && (below[x] & ~mask)) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

PosetCatalog::PosetCatalog(EnumerationOptions options)
    : cap_(std::min(options.cap, kHardEnumerationCap)),
      threads_(std::max<std::size_t>(1, options.threads)) {}

const std::vector<FinitePoset>& PosetCatalog::level(std::size_t k) {
  build(k);
  return posets_[k];
}

const std::vector<CanonicalForm>& PosetCatalog::codes(std::size_t k) {
  build(k);
  return codes_[k];
}

void PosetCatalog::build(std::size_t k) {
  if (k == 0) throw EmptyError();
  if (k > cap_) {
    throw CapExceededError("enumeration of " + std::to_string(k) +
                           "-point spaces exceeds the cap of " + std::to_string(cap_));
  }
  if (posets_.size() > k && !posets_[k].empty()) return;
  if (posets_.size() <= k) {
    posets_.resize(k + 1);
    codes_.resize(k + 1);
  }
  if (k == 1) {
    const FinitePoset point = FinitePoset::antichain(1);
    codes_[1] = {canonical_form(point)};
    posets_[1] = {point};
    return;
  }
  build(k - 1);
  const auto& parents = posets_[k - 1];
  const auto& parent_codes = codes_[k - 1];

  std::vector<std::vector<Child>> per_parent(parents.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < parents.size(); i += stride) {
      per_parent[i] = children_of(parents[i], parent_codes[i]);
    }
  };
  if (threads_ == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads_; ++t) pool.emplace_back(work, t, threads_);
    for (auto& th : pool) th.join();
  }

  std::vector<Child> all;
  for (auto& group : per_parent) {
    for (auto& c : group) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const Child& a, const Child& b) { return a.code < b.code; });
  for (auto& c : all) {
    codes_[k].push_back(std::move(c.code));
    posets_[k].push_back(std::move(c.poset));
  }
}

std::vector<FinitePoset> enumerate_posets(std::size_t k, EnumerationOptions options) {
  PosetCatalog catalog(options);
  return catalog.level(k);
}

EnumerationStats enumeration_stats(std::size_t k, PosetCatalog& catalog) {
  EnumerationStats stats;
  stats.k = k;
  for (const auto& p : catalog.level(k)) {
    ++stats.total;
    if (is_connected(p)) ++stats.connected;
    if (is_minimal_space(p)) ++stats.minimal;
    ++stats.by_height[height(p)];
  }
  return stats;
}

}  // namespace finito
