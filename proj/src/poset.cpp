#include "finito/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "finito/errors.hpp"

namespace finito {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

std::vector<std::string> checked_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) return default_labels(n);
  if (labels.size() != n) {
    throw Error("expected " + std::to_string(n) + " labels, got " +
                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error("empty label");
    if (!seen.insert(l).second) throw Error("duplicate label '" + l + "'");
  }
  return labels;
}

}  // namespace

FinitePoset::FinitePoset(std::size_t n, std::vector<std::uint64_t> bits,
                         std::vector<std::string> labels)
    : n_(n), stride_((n + 63) / 64), bits_(std::move(bits)), labels_(std::move(labels)) {}

FinitePoset FinitePoset::from_relation(std::size_t n,
                                       const std::function<bool(Element, Element)>& leq,
                                       std::vector<std::string> labels) {
  if (n == 0) throw EmptyError();
  labels = checked_labels(n, std::move(labels));
  const std::size_t stride = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * stride, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (leq(x, y)) bits[x * stride + (y >> 6)] |= std::uint64_t{1} << (y & 63);
    }
  }
  FinitePoset p(n, std::move(bits), std::move(labels));
  for (Element x = 0; x < n; ++x) {
    if (!p.leq(x, x)) throw NotPartialOrderError("relation is not reflexive at " + p.label(x));
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (p.leq(x, y) && p.leq(y, x)) {
        throw NotPartialOrderError("relation is not antisymmetric on " + p.label(x) + ", " +
                                   p.label(y) + " (a preorder that is not T0)");
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (std::size_t w = 0; w < stride; ++w) {
        // every z >= y must satisfy z >= x
        if ((p.bits_[y * stride + w] & ~p.bits_[x * stride + w]) != 0) {
          throw NotPartialOrderError("relation is not transitive through " + p.label(y));
        }
      }
    }
  }
  return p;
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  return from_relation(n, [](Element x, Element y) { return x == y; });
}

FinitePoset FinitePoset::chain(std::size_t n) {
  return from_relation(n, [](Element x, Element y) { return x <= y; });
}

FinitePoset FinitePoset::with_labels(std::vector<std::string> labels) const {
  FinitePoset copy = *this;
  copy.labels_ = checked_labels(n_, std::move(labels));
  return copy;
}

std::size_t FinitePoset::down_degree(Element x) const {
  std::size_t count = 0;
  for (Element y = 0; y < n_; ++y) count += (y != x && leq(y, x));
  return count;
}

std::size_t FinitePoset::up_degree(Element x) const {
  std::size_t count = 0;
  for (std::size_t w = 0; w < stride_; ++w) count += std::popcount(bits_[x * stride_ + w]);
  return count - 1;
}

void FinitePoset::check_index(Element x) const {
  if (x >= n_) {
    throw IndexError("element " + std::to_string(x) + " out of range for a space of " +
                     std::to_string(n_) + " points");
  }
}

FinitePoset from_covers(const HasseDiagram& h) {
  const std::size_t n = h.n;
  if (n == 0) throw EmptyError();
  std::vector<std::vector<Element>> up(n);
  for (auto [x, y] : h.covers) {
    if (x >= n || y >= n) throw IndexError("cover edge refers to a missing element");
    if (x == y) throw CycleError("cover edge from an element to itself");
    up[x].push_back(y);
  }
  // Kahn's algorithm: a topological order exists iff there is no cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& ys : up) {
    for (Element y : ys) ++indegree[y];
  }
  std::vector<Element> order;
  order.reserve(n);
  for (Element x = 0; x < n; ++x) {
    if (indegree[x] == 0) order.push_back(x);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Element y : up[order[i]]) {
      if (--indegree[y] == 0) order.push_back(y);
    }
  }
  if (order.size() != n) throw CycleError("cover relation contains a directed cycle");

  // Process in reverse topological order so every up-set is final when read.
  std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element x = *it;
    above[x][x] = true;
    for (Element y : up[x]) {
      for (Element z = 0; z < n; ++z) {
        if (above[y][z]) above[x][z] = true;
      }
    }
  }
  return FinitePoset::from_relation(
      n, [&](Element x, Element y) { return above[x][y]; }, h.labels);
}

HasseDiagram hasse(const FinitePoset& p) {
  HasseDiagram h;
  h.n = p.size();
  h.labels = p.labels();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z) {
        if (p.less(x, z) && p.less(z, y)) cover = false;
      }
      if (cover) h.covers.emplace_back(x, y);
    }
  }
  return h;
}

std::size_t cover_count(const FinitePoset& p) { return hasse(p).covers.size(); }

ElementSet min_open(const FinitePoset& p, Element x) {
  p.check_index(x);
  ElementSet out;
  for (Element y = 0; y < p.size(); ++y) {
    if (p.leq(y, x)) out.push_back(y);
  }
  return out;
}

ElementSet closure(const FinitePoset& p, Element x) {
  p.check_index(x);
  ElementSet out;
  for (Element y = 0; y < p.size(); ++y) {
    if (p.leq(x, y)) out.push_back(y);
  }
  return out;
}

FinitePoset opposite(const FinitePoset& p) {
  return FinitePoset::from_relation(
      p.size(), [&](Element x, Element y) { return p.leq(y, x); }, p.labels());
}

std::vector<std::size_t> levels(const FinitePoset& p) {
  const std::size_t n = p.size();
  // Down-set size strictly increases along <, so sorting by it gives a linear
  // extension.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> below(n);
  for (Element x = 0; x < n; ++x) below[x] = p.down_degree(x);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  std::vector<std::size_t> level(n, 0);
  for (Element y : order) {
    for (Element x = 0; x < n; ++x) {
      if (p.less(x, y)) level[y] = std::max(level[y], level[x] + 1);
    }
  }
  return level;
}

std::size_t height(const FinitePoset& p) {
  const auto level = levels(p);
  return *std::max_element(level.begin(), level.end()) + 1;
}

std::vector<ElementSet> connected_components(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<ElementSet> out;
  for (Element start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    const std::size_t id = out.size();
    ElementSet members{start};
    comp[start] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element y = 0; y < n; ++y) {
        if (comp[y] == n && p.comparable(members[i], y)) {
          comp[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const FinitePoset& p) { return connected_components(p).size() == 1; }

void for_each_chain(const FinitePoset& p,
                    const std::function<void(std::span<const Element>)>& visit) {
  const std::size_t n = p.size();
  std::vector<Element> stack;
  // Each chain is generated once, from its bottom element upward.
  std::function<void()> extend = [&]() {
    visit(stack);
    const Element top = stack.back();
    for (Element y = 0; y < n; ++y) {
      if (p.less(top, y)) {
        stack.push_back(y);
        extend();
        stack.pop_back();
      }
    }
  };
  for (Element x = 0; x < n; ++x) {
    stack.assign(1, x);
    extend();
  }
}

std::vector<std::vector<Element>> chains(const FinitePoset& p) {
  std::vector<std::vector<Element>> out;
  for_each_chain(p, [&](std::span<const Element> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

FinitePoset subspace(const FinitePoset& p, std::span<const Element> keep) {
  std::vector<std::string> labels;
  std::set<Element> seen;
  for (Element x : keep) {
    p.check_index(x);
    if (!seen.insert(x).second) throw Error("subspace: duplicate element");
    labels.push_back(p.label(x));
  }
  return FinitePoset::from_relation(
      keep.size(), [&](Element i, Element j) { return p.leq(keep[i], keep[j]); },
      std::move(labels));
}

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t m = p.size();
  std::vector<std::string> labels = p.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : q.labels()) {
    std::string fresh = l;
    while (used.count(fresh)) fresh += "_";
    used.insert(fresh);
    labels.push_back(fresh);
  }
  return FinitePoset::from_relation(
      m + q.size(),
      [&](Element x, Element y) {
        if (x < m && y < m) return p.leq(x, y);
        if (x >= m && y >= m) return q.leq(x - m, y - m);
        return false;
      },
      std::move(labels));
}

}  // namespace finito
