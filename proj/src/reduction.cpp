#include "finito/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finito/canonical.hpp"
#include "finito/errors.hpp"

namespace finito {

namespace {

// Minimum of the strict up-set of x, if it has one.
std::optional<Element> up_witness(const FinitePoset& p, Element x) {
  std::optional<Element> candidate;
  for (Element y = 0; y < p.size(); ++y) {
    if (p.less(x, y) && (!candidate || p.leq(y, *candidate))) candidate = y;
  }
  if (!candidate) return std::nullopt;
  for (Element z = 0; z < p.size(); ++z) {
    if (p.less(x, z) && !p.leq(*candidate, z)) return std::nullopt;
  }
  return candidate;
}

std::optional<Element> down_witness(const FinitePoset& p, Element x) {
  std::optional<Element> candidate;
  for (Element y = 0; y < p.size(); ++y) {
    if (p.less(y, x) && (!candidate || p.leq(*candidate, y))) candidate = y;
  }
  if (!candidate) return std::nullopt;
  for (Element z = 0; z < p.size(); ++z) {
    if (p.less(z, x) && !p.leq(z, *candidate)) return std::nullopt;
  }
  return candidate;
}

std::vector<Element> complement(std::size_t n, Element x) {
  std::vector<Element> keep;
  for (Element y = 0; y < n; ++y) {
    if (y != x) keep.push_back(y);
  }
  return keep;
}

// Empty or contractible.
bool acceptable_intersection(const FinitePoset& p, const ElementSet& s) {
  return s.empty() || is_contractible(subspace(p, s));
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool open_hypothesis(const FinitePoset& p, Element x) {
  const ElementSet ux = min_open(p, x);
  for (Element y = 0; y < p.size(); ++y) {
    if (!acceptable_intersection(p, intersect(ux, min_open(p, y)))) return false;
  }
  return true;
}

bool closed_hypothesis(const FinitePoset& p, Element x) {
  const ElementSet cx = closure(p, x);
  for (Element y = 0; y < p.size(); ++y) {
    if (!acceptable_intersection(p, intersect(cx, closure(p, y)))) return false;
  }
  return true;
}

}  // namespace

std::vector<BeatPointReport> beat_points(const FinitePoset& p) {
  std::vector<BeatPointReport> out;
  for (Element x = 0; x < p.size(); ++x) {
    if (auto w = up_witness(p, x)) out.push_back({x, BeatKind::up, *w});
    if (auto w = down_witness(p, x)) out.push_back({x, BeatKind::down, *w});
  }
  return out;
}

bool is_minimal_space(const FinitePoset& p) { return beat_points(p).empty(); }

ReductionTrace core(const FinitePoset& p) {
  return core(p, [](std::span<const BeatPointReport>) { return std::size_t{0}; });
}

ReductionTrace core(const FinitePoset& p, const BeatPointChooser& choose) {
  ReductionTrace trace{{}, {}, p};
  trace.kept.resize(p.size());
  std::iota(trace.kept.begin(), trace.kept.end(), Element{0});
  while (true) {
    auto beats = beat_points(trace.final);
    if (beats.empty()) break;
    const std::size_t pick = choose(beats);
    const BeatPointReport local = beats.at(pick);
    trace.removed.push_back(
        {trace.kept[local.element], local.kind, trace.kept[local.witness]});
    const auto keep = complement(trace.final.size(), local.element);
    trace.final = subspace(trace.final, keep);
    trace.kept.erase(trace.kept.begin() + static_cast<std::ptrdiff_t>(local.element));
  }
  return trace;
}

FinitePoset replay(const FinitePoset& source, const ReductionTrace& trace) {
  std::vector<Element> alive(source.size());
  std::iota(alive.begin(), alive.end(), Element{0});
  for (const auto& r : trace.removed) {
    const auto it = std::find(alive.begin(), alive.end(), r.element);
    if (it == alive.end()) throw Error("trace removes a point twice");
    alive.erase(it);
  }
  return subspace(source, alive);
}

bool is_contractible(const FinitePoset& p) { return core(p).final.size() == 1; }

bool is_homotopy_equivalent(const FinitePoset& p, const FinitePoset& q) {
  return is_homeomorphic(core(p).final, core(q).final);
}

FinitePoset quotient(const FinitePoset& p, std::span<const Element> collapse,
                     const std::string& label) {
  const std::size_t n = p.size();
  if (collapse.empty()) throw Error("quotient by the empty set");
  std::vector<bool> in_a(n, false);
  for (Element a : collapse) {
    p.check_index(a);
    in_a[a] = true;
  }
  std::vector<Element> rest;
  for (Element y = 0; y < n; ++y) {
    if (!in_a[y]) rest.push_back(y);
  }
  const std::size_t m = rest.size() + 1;
  const Element star = rest.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = 0; j < rest.size(); ++j) rel[i][j] = p.leq(rest[i], rest[j]);
    for (Element a : collapse) {
      if (p.leq(rest[i], a)) rel[i][star] = true;
      if (p.leq(a, rest[i])) rel[star][i] = true;
    }
  }
  rel[star][star] = true;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (rel[i][j] && rel[j][i]) throw NotT0Error("quotient is not a T0 space");
    }
  }
  std::vector<std::string> labels;
  for (Element y : rest) labels.push_back(p.label(y));
  const Element least = *std::min_element(collapse.begin(), collapse.end());
  labels.push_back(label.empty() ? p.label(least) : label);
  return FinitePoset::from_relation(
      m, [&](Element i, Element j) { return static_cast<bool>(rel[i][j]); }, std::move(labels));
}

std::optional<FinitePoset> osaki_open_reduction(const FinitePoset& p, Element x) {
  p.check_index(x);
  if (!open_hypothesis(p, x)) return std::nullopt;
  return quotient(p, min_open(p, x), p.label(x));
}

std::optional<FinitePoset> osaki_closed_reduction(const FinitePoset& p, Element x) {
  p.check_index(x);
  if (!closed_hypothesis(p, x)) return std::nullopt;
  return quotient(p, closure(p, x), p.label(x));
}

std::vector<OsakiEntry> osaki_table(const FinitePoset& p) {
  std::vector<OsakiEntry> out;
  for (Element x = 0; x < p.size(); ++x) {
    out.push_back({x, open_hypothesis(p, x), closed_hypothesis(p, x), min_open(p, x).size(),
                   closure(p, x).size()});
  }
  return out;
}

bool osaki_reducible(const FinitePoset& p) {
  const auto table = osaki_table(p);
  return std::any_of(table.begin(), table.end(), [](const OsakiEntry& e) {
    return e.open_shrinks() || e.closed_shrinks();
  });
}

McCordReport mccord_check(const FinitePoset& src, const FinitePoset& dst,
                          std::span<const Element> map) {
  if (map.size() != src.size()) throw Error("map must assign an image to every source point");
  for (Element img : map) dst.check_index(img);
  for (Element a = 0; a < src.size(); ++a) {
    for (Element b = 0; b < src.size(); ++b) {
      if (src.leq(a, b) && !dst.leq(map[a], map[b])) {
        throw NotContinuousError(a, b,
                                 "map is not order preserving: " + src.label(a) + " <= " +
                                     src.label(b) + " but " + dst.label(map[a]) + " !<= " +
                                     dst.label(map[b]));
      }
    }
  }
  McCordReport report;
  report.weak_equivalence_certified = true;
  for (Element y = 0; y < dst.size(); ++y) {
    std::vector<Element> pre;
    for (Element a = 0; a < src.size(); ++a) {
      if (dst.leq(map[a], y)) pre.push_back(a);
    }
    const bool ok = !pre.empty() && is_contractible(subspace(src, pre));
    report.points.push_back({y, pre.size(), ok});
    if (!ok) {
      report.failures.push_back(y);
      report.weak_equivalence_certified = false;
    }
  }
  return report;
}

FinitePoset remove_point(const FinitePoset& p, Element x) {
  p.check_index(x);
  if (p.size() == 1) throw LastPointError();
  const auto keep = complement(p.size(), x);
  return subspace(p, keep);
}

FlattenResult flatten_to_height2(const FinitePoset& p, Element x0) {
  p.check_index(x0);
  if (!is_connected(p)) throw NotConnectedError("flattening needs a connected space");
  FlattenResult result{p, {}};
  result.kept.resize(p.size());
  std::iota(result.kept.begin(), result.kept.end(), Element{0});
  Element base = x0;
  while (true) {
    const FinitePoset& cur = result.poset;
    std::optional<Element> victim;
    for (Element x = 0; x < cur.size() && !victim; ++x) {
      if (x != base && !cur.is_maximal(x) && !cur.is_minimal(x)) victim = x;
    }
    if (!victim) break;
    result.poset = remove_point(cur, *victim);
    result.kept.erase(result.kept.begin() + static_cast<std::ptrdiff_t>(*victim));
    if (*victim < base) --base;
  }
  return result;
}

}  // namespace finito
