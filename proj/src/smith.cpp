#include "finito/smith.hpp"

#include <algorithm>
#include <utility>

namespace finito {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: entry of least absolute value in the remaining block.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const Integer& v = m.at(r, c);
        if (v == 0) continue;
        if (!found || abs(v) < best) {
          best = abs(v);
          pr = r;
          pc = c;
          found = true;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear column t below the pivot.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        const Integer q = m.at(r, t) / m.at(t, t);
        for (std::size_t c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          // Remainder is smaller than the pivot: promote it and restart.
          swap_rows(m, t, r);
          clean = false;
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        const Integer q = m.at(t, c) / m.at(t, t);
        for (std::size_t r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m.at(t, k) += m.at(r, k);
            clean = false;
            break;
          }
        }
      }
    }
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace finito
