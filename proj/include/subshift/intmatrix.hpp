#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// u * a * v == d with unimodular u, v; d diagonal with d1 | d2 | ...
struct SmithNormalForm {
  IntMatrix d, u, u_inv, v, v_inv;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries

  std::size_t rank() const { return invariant_factors.size(); }
  bool verify(const IntMatrix& a) const;
};

SmithNormalForm smith_normal_form(const IntMatrix& a);

}  // namespace subshift
