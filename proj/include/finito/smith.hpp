#pragma once

// Exact integer linear algebra: Smith normal form over Z.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace finito {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form, all
// positive. The rank is the length of the result.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace finito
