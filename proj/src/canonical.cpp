#include "finito/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace finito {

namespace {

// Ordered partition of the elements. `cells` lists the cells in order and
// `cell_of` is the index of each element's cell.
struct Partition {
  std::vector<std::vector<Element>> cells;
  std::vector<std::size_t> cell_of;

  bool discrete() const { return cells.size() == cell_of.size(); }

  void reindex() {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Element x : cells[c]) cell_of[x] = c;
    }
  }
};

std::uint8_t pair_byte(const FinitePoset& p, Element a, Element b) {
  if (p.leq(a, b)) return 1;
  if (p.leq(b, a)) return 2;
  return 0;
}

class Canonizer {
 public:
  explicit Canonizer(const FinitePoset& p) : p_(p), n_(p.size()) {}

  CanonicalLabeling run() {
    Partition start;
    start.cell_of.assign(n_, 0);
    const auto level = levels(p_);
    const std::size_t h = *std::max_element(level.begin(), level.end()) + 1;
    start.cells.assign(h, {});
    for (Element x = 0; x < n_; ++x) start.cells[level[x]].push_back(x);
    start.reindex();
    refine(start);
    std::vector<Element> path;
    search(start, path);

    CanonicalLabeling out;
    out.order = best_order_;
    out.form.code.reserve(2 + best_code_.size());
    out.form.code.push_back(static_cast<std::uint8_t>(n_ >> 8));
    out.form.code.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    out.form.code.insert(out.form.code.end(), best_code_.begin(), best_code_.end());
    return out;
  }

 private:
  // Splits cells by the number of strict neighbours below and above in every
  // cell until the partition is equitable.
  void refine(Partition& part) const {
    while (true) {
      const std::size_t k = part.cells.size();
      std::vector<std::vector<std::size_t>> sig(n_, std::vector<std::size_t>(2 * k + 1, 0));
      for (Element x = 0; x < n_; ++x) {
        sig[x][0] = part.cell_of[x];
        for (Element y = 0; y < n_; ++y) {
          if (x == y) continue;
          if (p_.leq(y, x)) ++sig[x][1 + 2 * part.cell_of[y]];
          else if (p_.leq(x, y)) ++sig[x][2 + 2 * part.cell_of[y]];
        }
      }
      std::vector<std::vector<Element>> next;
      for (const auto& cell : part.cells) {
        std::vector<Element> sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](Element a, Element b) { return sig[a] < sig[b]; });
        std::vector<Element> group{sorted.front()};
        for (std::size_t i = 1; i < sorted.size(); ++i) {
          if (sig[sorted[i]] != sig[group.front()]) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(sorted[i]);
        }
        next.push_back(std::move(group));
      }
      const bool changed = next.size() != k;
      part.cells = std::move(next);
      part.reindex();
      if (!changed) return;
    }
  }

  // Code bytes contributed by the first `positions` positions of a labeling.
  void encode_prefix(const std::vector<Element>& order, std::size_t positions,
                     std::vector<std::uint8_t>& out) const {
    out.clear();
    for (std::size_t j = 0; j < positions; ++j) {
      for (std::size_t i = 0; i < j; ++i) out.push_back(pair_byte(p_, order[i], order[j]));
    }
  }

  void search(const Partition& part, std::vector<Element>& path) {
    std::size_t fixed = 0;
    while (fixed < part.cells.size() && part.cells[fixed].size() == 1) ++fixed;

    std::vector<Element> order;
    order.reserve(fixed);
    for (std::size_t c = 0; c < fixed; ++c) order.push_back(part.cells[c][0]);

    if (part.discrete()) {
      std::vector<std::uint8_t> code;
      encode_prefix(order, n_, code);
      if (!have_best_ || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
        have_best_ = true;
      } else if (code == best_code_) {
        std::vector<Element> aut(n_);
        for (std::size_t i = 0; i < n_; ++i) aut[best_order_[i]] = order[i];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }

    if (have_best_) {
      std::vector<std::uint8_t> prefix;
      encode_prefix(order, fixed, prefix);
      const auto cmp = std::lexicographical_compare_three_way(
          prefix.begin(), prefix.end(), best_code_.begin(), best_code_.begin() + prefix.size());
      if (cmp > 0) return;
    }

    std::size_t target = fixed;
    while (part.cells[target].size() == 1) ++target;
    const std::vector<Element> candidates = part.cells[target];

    std::vector<Element> tried;
    for (Element v : candidates) {
      if (in_orbit_of(v, tried, path)) continue;
      tried.push_back(v);

      Partition child;
      child.cell_of.assign(n_, 0);
      for (std::size_t c = 0; c < part.cells.size(); ++c) {
        if (c != target) {
          child.cells.push_back(part.cells[c]);
          continue;
        }
        child.cells.push_back({v});
        std::vector<Element> rest;
        for (Element u : part.cells[c]) {
          if (u != v) rest.push_back(u);
        }
        child.cells.push_back(std::move(rest));
      }
      child.reindex();
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  // True if v lies in the orbit of some already-tried element under the group
  // generated by the known automorphisms that fix `path` pointwise.
  bool in_orbit_of(Element v, const std::vector<Element>& tried,
                   const std::vector<Element>& path) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<Element> parent(n_);
    std::iota(parent.begin(), parent.end(), Element{0});
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& aut : automorphisms_) {
      const bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](Element x) { return aut[x] == x; });
      if (!fixes) continue;
      any = true;
      for (Element x = 0; x < n_; ++x) parent[find(x)] = find(aut[x]);
    }
    if (!any) return false;
    const Element root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](Element t) { return find(t) == root; });
  }

  const FinitePoset& p_;
  std::size_t n_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_code_;
  std::vector<Element> best_order_;
  std::vector<std::vector<Element>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const FinitePoset& p) { return Canonizer(p).run(); }

CanonicalForm canonical_form(const FinitePoset& p) { return canonical_labeling(p).form; }

FinitePoset relabel(const FinitePoset& p, const std::vector<Element>& order) {
  return subspace(p, order);
}

FinitePoset canonical_poset(const FinitePoset& p) {
  return relabel(p, canonical_labeling(p).order);
}

bool is_homeomorphic(const FinitePoset& p, const FinitePoset& q) {
  return p.size() == q.size() && canonical_form(p) == canonical_form(q);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : f.code) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace finito
