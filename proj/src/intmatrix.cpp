#include "subshift/intmatrix.hpp"

#include <algorithm>

namespace subshift {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::invalid_argument, "matrix shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(Errc::invalid_argument, "matrix shape mismatch in difference");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

namespace {

struct Reducer {
  IntMatrix d, u, u_inv, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }
  // row i -= q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) -= q * d.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, j) += q * u_inv.at(r, i);
  }
  // col i -= q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, i) -= q * d.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv.at(j, c) += q * v_inv.at(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Reducer red{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(n)};
  IntMatrix& d = red.d;

  const std::size_t steps = std::min(m, n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = s, pj = s;
      Int best = 0;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j) {
          const Int mag = abs(d.at(i, j));
          if (mag != 0 && (best == 0 || mag < best)) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;  // trailing block is zero
      red.swap_rows(s, pi);
      red.swap_cols(s, pj);

      bool reduced = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        const Int q = d.at(i, s) / d.at(s, s);
        red.add_row(i, s, q);
        if (d.at(i, s) != 0) reduced = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        const Int q = d.at(s, j) / d.at(s, s);
        red.add_col(j, s, q);
        if (d.at(s, j) != 0) reduced = false;
      }
      if (!reduced) continue;  // a smaller remainder appeared; repick the pivot

      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n && divides; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            red.add_row(s, i, Int(-1));  // pull the offending row up and rerun
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(s, s) < 0) red.negate_row(s);
  }
done:
  SmithNormalForm snf{std::move(red.d), std::move(red.u), std::move(red.u_inv),
                      std::move(red.v), std::move(red.v_inv),
                      {}};
  for (std::size_t s = 0; s < steps; ++s)
    if (snf.d.at(s, s) != 0) snf.invariant_factors.push_back(snf.d.at(s, s));
  return snf;
}

bool SmithNormalForm::verify(const IntMatrix& a) const {
  if (!(u * a * v == d)) return false;
  if (!(u * u_inv == IntMatrix::identity(u.rows()))) return false;
  if (!(v * v_inv == IntMatrix::identity(v.rows()))) return false;
  for (std::size_t i = 0; i + 1 < invariant_factors.size(); ++i)
    if (invariant_factors[i + 1] % invariant_factors[i] != 0) return false;
  // Off-diagonal must vanish.
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d.at(i, j) != 0) return false;
  return true;
}

}  // namespace subshift
