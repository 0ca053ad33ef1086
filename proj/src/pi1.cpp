#include "finito/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "finito/errors.hpp"
#include "finito/smith.hpp"

namespace finito {

bool is_hedge(const FinitePoset& p, const HEdge& e) {
  if (e.origin >= p.size() || e.end >= p.size() || e.origin == e.end) return false;
  const Element lo = p.leq(e.origin, e.end) ? e.origin : e.end;
  const Element hi = lo == e.origin ? e.end : e.origin;
  if (!p.less(lo, hi)) return false;
  for (Element z = 0; z < p.size(); ++z) {
    if (p.less(lo, z) && p.less(z, hi)) return false;
  }
  return true;
}

bool ascends(const FinitePoset& p, const HEdge& e) { return p.less(e.origin, e.end); }

void validate_path(const FinitePoset& p, const HPath& path) {
  p.check_index(path.basepoint);
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const HEdge& e = path.edges[i];
    if (!is_hedge(p, e)) {
      throw IllFormedPathError("edge " + std::to_string(i) + " is not an edge of the Hasse diagram");
    }
    if (i > 0 && path.edges[i - 1].end != e.origin) {
      throw IllFormedPathError("edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                               " do not compose");
    }
  }
}

bool is_loop(const FinitePoset& p, const HPath& path) {
  validate_path(p, path);
  return path.origin() == path.basepoint && path.end() == path.basepoint;
}

bool is_monotonic(const FinitePoset& p, const HPath& path) {
  validate_path(p, path);
  if (path.edges.empty()) return true;
  const bool up = ascends(p, path.edges.front());
  return std::all_of(path.edges.begin(), path.edges.end(),
                     [&](const HEdge& e) { return ascends(p, e) == up; });
}

HPath concatenate(const HPath& a, const HPath& b) {
  HPath out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

HPath reverse(const HPath& path) {
  HPath out{path.end(), {}};
  for (auto it = path.edges.rbegin(); it != path.edges.rend(); ++it) {
    out.edges.push_back(it->inverse());
  }
  return out;
}

namespace {

// Vertex reached after the first `position` edges.
Element vertex_at(const HPath& path, std::size_t position) {
  if (position == 0) return path.origin();
  return path.edges[position - 1].end;
}

void require_loop(const FinitePoset& p, const HPath& loop) {
  try {
    if (!is_loop(p, loop)) throw IllFormedMoveError("closeness moves apply to loops only");
  } catch (const IllFormedPathError& e) {
    throw IllFormedMoveError(e.what());
  }
}

bool monotonic_or_throw(const FinitePoset& p, const HPath& path) {
  try {
    return is_monotonic(p, path);
  } catch (const IllFormedPathError& e) {
    throw IllFormedMoveError(e.what());
  }
}

}  // namespace

HPath close_move_insert(const FinitePoset& p, const HPath& loop, std::size_t position,
                        const HPath& first, const HPath& second) {
  require_loop(p, loop);
  if (position > loop.edges.size()) throw IllFormedMoveError("position past the end of the loop");
  if (!monotonic_or_throw(p, first) || !monotonic_or_throw(p, second)) {
    throw IllFormedMoveError("inserted paths must be monotonic");
  }
  const Element at = vertex_at(loop, position);
  if (first.origin() != at || first.end() != second.origin() || second.end() != at) {
    throw IllFormedMoveError("inserted paths do not compose at the cut");
  }
  HPath out{loop.basepoint, {}};
  out.edges.assign(loop.edges.begin(), loop.edges.begin() + static_cast<std::ptrdiff_t>(position));
  out.edges.insert(out.edges.end(), first.edges.begin(), first.edges.end());
  out.edges.insert(out.edges.end(), second.edges.begin(), second.edges.end());
  out.edges.insert(out.edges.end(), loop.edges.begin() + static_cast<std::ptrdiff_t>(position),
                   loop.edges.end());
  return out;
}

HPath close_move_delete(const FinitePoset& p, const HPath& loop, std::size_t position,
                        std::size_t first_length, std::size_t second_length) {
  require_loop(p, loop);
  const std::size_t stop = position + first_length + second_length;
  if (stop > loop.edges.size()) throw IllFormedMoveError("deleted segment past the end of the loop");
  const auto begin = loop.edges.begin();
  const HPath first{vertex_at(loop, position),
                    {begin + static_cast<std::ptrdiff_t>(position),
                     begin + static_cast<std::ptrdiff_t>(position + first_length)}};
  const HPath second{vertex_at(loop, position + first_length),
                     {begin + static_cast<std::ptrdiff_t>(position + first_length),
                      begin + static_cast<std::ptrdiff_t>(stop)}};
  if (!is_monotonic(p, first) || !is_monotonic(p, second)) {
    throw IllFormedMoveError("deleted segments must be monotonic");
  }
  if (vertex_at(loop, position) != vertex_at(loop, stop)) {
    throw IllFormedMoveError("deleted segment is not closed");
  }
  HPath out{loop.basepoint, {}};
  out.edges.assign(begin, begin + static_cast<std::ptrdiff_t>(position));
  out.edges.insert(out.edges.end(), begin + static_cast<std::ptrdiff_t>(stop), loop.edges.end());
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

void normalize(std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (auto& r : relators) {
    Word c = cyclic_reduce(std::move(r));
    if (c.empty() || !seen.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  relators = std::move(out);
}

struct EdgeIndex {
  std::map<std::pair<Element, Element>, int> generator;  // non-tree pairs only
};

// Letter for traversing the comparable pair u -> v, 0 for a tree edge.
int edge_letter(const FinitePoset& p, const EdgeIndex& index, Element u, Element v) {
  const bool up = p.less(u, v);
  const auto key = up ? std::make_pair(u, v) : std::make_pair(v, u);
  const auto it = index.generator.find(key);
  if (it == index.generator.end()) return 0;
  return up ? it->second + 1 : -(it->second + 1);
}

EdgeIndex index_of(const EdgePathPresentation& pres) {
  EdgeIndex idx;
  for (std::size_t i = 0; i < pres.generator_edges.size(); ++i) {
    idx.generator.emplace(pres.generator_edges[i], static_cast<int>(i));
  }
  return idx;
}

}  // namespace

EdgePathPresentation edge_path_presentation(const FinitePoset& p, Element x0) {
  p.check_index(x0);
  if (!is_connected(p)) throw NotConnectedError("the fundamental group needs a connected space");
  const std::size_t n = p.size();
  EdgePathPresentation out;
  out.basepoint = x0;

  std::set<std::pair<Element, Element>> tree;
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{x0};
  seen[x0] = true;
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (Element v = 0; v < n; ++v) {
      if (seen[v] || !p.comparable(u, v)) continue;
      seen[v] = true;
      tree.insert(p.less(u, v) ? std::make_pair(u, v) : std::make_pair(v, u));
      queue.push_back(v);
    }
  }
  out.tree.assign(tree.begin(), tree.end());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.less(x, y) && !tree.count({x, y})) out.generator_edges.emplace_back(x, y);
    }
  }
  out.group.generators = out.generator_edges.size();

  const EdgeIndex idx = index_of(out);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!p.less(y, z)) continue;
        Word w;
        for (int l : {edge_letter(p, idx, x, y), edge_letter(p, idx, y, z),
                      edge_letter(p, idx, z, x)}) {
          if (l != 0) w.push_back(l);
        }
        out.group.relators.push_back(std::move(w));
      }
    }
  }
  normalize(out.group.relators);
  return out;
}

GroupPresentation tietze_simplify(const GroupPresentation& g) {
  GroupPresentation out = g;
  normalize(out.relators);
  while (true) {
    // (relator length, relator, generator, position)
    std::optional<std::tuple<std::size_t, std::size_t, int, std::size_t>> best;
    for (std::size_t r = 0; r < out.relators.size(); ++r) {
      const Word& w = out.relators[r];
      std::map<int, std::pair<std::size_t, std::size_t>> occurrences;  // gen -> (count, pos)
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto& [count, pos] = occurrences[std::abs(w[i])];
        if (count++ == 0) pos = i;
      }
      for (const auto& [gen, cp] : occurrences) {
        if (cp.first != 1) continue;
        const auto cand = std::make_tuple(w.size(), r, gen, cp.second);
        if (!best || cand < *best) best = cand;
      }
    }
    if (!best) break;
    const auto [len, r, gen, pos] = *best;
    Word rel = out.relators[r];
    std::rotate(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos), rel.end());
    const bool positive = rel.front() > 0;
    const Word rest(rel.begin() + 1, rel.end());
    // g^e * rest = 1, so g = rest^-1 when e = +1 and g = rest when e = -1.
    const Word value = positive ? inverse(rest) : rest;
    const Word value_inv = inverse(value);

    std::vector<Word> next;
    for (std::size_t i = 0; i < out.relators.size(); ++i) {
      if (i == r) continue;
      Word w;
      for (int l : out.relators[i]) {
        if (l == gen) {
          w.insert(w.end(), value.begin(), value.end());
        } else if (l == -gen) {
          w.insert(w.end(), value_inv.begin(), value_inv.end());
        } else {
          w.push_back(l);
        }
      }
      for (int& l : w) {
        if (std::abs(l) > gen) l += (l > 0 ? -1 : 1);
      }
      next.push_back(std::move(w));
    }
    out.relators = std::move(next);
    --out.generators;
    normalize(out.relators);
  }
  return out;
}

namespace {

IntMatrix exponent_matrix(const GroupPresentation& g) {
  IntMatrix m(g.relators.size(), g.generators);
  for (std::size_t r = 0; r < g.relators.size(); ++r) {
    for (int l : g.relators[r]) {
      const std::size_t gen = static_cast<std::size_t>(std::abs(l) - 1);
      m.at(r, gen) += (l > 0 ? 1 : -1);
    }
  }
  return m;
}

}  // namespace

std::size_t abelian_rank(const GroupPresentation& g) {
  if (g.relators.empty()) return g.generators;
  return g.generators - smith_invariants(exponent_matrix(g)).size();
}

std::vector<std::string> abelian_torsion(const GroupPresentation& g) {
  std::vector<std::string> out;
  if (g.relators.empty()) return out;
  for (const auto& d : smith_invariants(exponent_matrix(g))) {
    if (d > 1) out.push_back(d.str());
  }
  return out;
}

std::size_t first_betti(const FinitePoset& p) { return first_betti(p, 0); }

std::size_t first_betti(const FinitePoset& p, Element x0) {
  return abelian_rank(edge_path_presentation(p, x0).group);
}

Word loop_to_word(const FinitePoset& p, const EdgePathPresentation& presentation,
                  const HPath& loop) {
  validate_path(p, loop);
  if (loop.basepoint != presentation.basepoint || loop.origin() != presentation.basepoint ||
      loop.end() != presentation.basepoint) {
    throw IllFormedPathError("loop is not based at the presentation's basepoint");
  }
  const EdgeIndex idx = index_of(presentation);
  Word w;
  for (const HEdge& e : loop.edges) {
    if (int l = edge_letter(p, idx, e.origin, e.end); l != 0) w.push_back(l);
  }
  return free_reduce(std::move(w));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out << (i ? " " : "") << 'x' << std::abs(w[i]);
    if (w[i] < 0) out << "^-1";
  }
  return out.str();
}

std::string format_presentation(const GroupPresentation& g) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < g.generators; ++i) out << (i ? ", " : "") << 'x' << i + 1;
  out << (g.generators ? " | " : "| ");
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    out << (i ? ", " : "") << format_word(g.relators[i]);
  }
  out << (g.relators.empty() ? ">" : " >");
  return out.str();
}

}  // namespace finito
