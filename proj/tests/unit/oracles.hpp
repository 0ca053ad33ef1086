#pragma once

// Brute-force reference computations. They deliberately avoid the library's
// algorithms (canonical labeling, DFS chain generation, refinement) so they can
// check them independently.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "finito/poset.hpp"

namespace finito::oracle {

// Lexicographically least relation matrix over all n! relabelings.
inline std::vector<bool> min_relation_encoding(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) code.push_back(p.leq(perm[i], perm[j]));
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  return min_relation_encoding(p) == min_relation_encoding(q);
}

// Every labeled partial order on k points (each unordered pair is
// incomparable, x<y or y<x; transitivity filtered), deduplicated by the
// permutation-minimal encoding. Returns the number of classes.
inline std::size_t count_unlabeled_posets(std::size_t k) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < k; ++i) {
    for (Element j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::set<std::vector<bool>> classes;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    std::size_t c = code;
    for (Element i = 0; i < k; ++i) leq[i][i] = true;
    for (auto [i, j] : pairs) {
      const std::size_t digit = c % 3;
      c /= 3;
      if (digit == 1) leq[i][j] = true;
      if (digit == 2) leq[j][i] = true;
    }
    bool transitive = true;
    for (Element a = 0; a < k && transitive; ++a) {
      for (Element b = 0; b < k && transitive; ++b) {
        for (Element d = 0; d < k && transitive; ++d) {
          if (leq[a][b] && leq[b][d] && !leq[a][d]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    const auto p = FinitePoset::from_relation(k, [&](Element a, Element b) { return leq[a][b]; });
    classes.insert(min_relation_encoding(p));
  }
  return classes.size();
}

inline bool is_chain(const FinitePoset& p, std::uint64_t mask) {
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      if (((mask >> a) & 1u) && ((mask >> b) & 1u) && !p.comparable(a, b)) return false;
    }
  }
  return true;
}

// Nonempty chains by scanning all subsets.
inline std::size_t chain_count(const FinitePoset& p) {
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
    count += is_chain(p, mask);
  }
  return count;
}

// Sum over chain subsets of (-1)^(#C + 1).
inline long long euler_by_subsets(const FinitePoset& p) {
  long long chi = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
    if (is_chain(p, mask)) chi += (std::popcount(mask) % 2 == 1) ? 1 : -1;
  }
  return chi;
}

// Longest chain found among all subsets.
inline std::size_t height_by_subsets(const FinitePoset& p) {
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
    if (is_chain(p, mask)) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// Rank over the rationals of an integer matrix by fraction-free elimination
// in long double; only for small 0/±1 matrices where this is exact enough.
inline std::size_t rank_rational(std::vector<std::vector<long long>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<long double>> a(rows, std::vector<long double>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long double>(m[r][c]);
  }
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-9L) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long double f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace finito::oracle
