#include "tphs/linsolve.hpp"

#include "tphs/errors.hpp"

namespace tphs {

RationalMatrix RationalMatrix::multiply(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw InvariantError("matrix shape mismatch in multiply");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j).add_mul(a, o.at(k, j));
    }
  return r;
}

RationalMatrix RationalMatrix::commutator(const RationalMatrix& o) const {
  return multiply(o) - o.multiply(*this);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvariantError("matrix shape mismatch in add");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvariantError("matrix shape mismatch in sub");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<int> RationalMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i) {
      if (!at(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Rational inv = Rational(1) / at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Rational f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j).sub_mul(f, at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::optional<RationalMatrix> solve_in_span(const RationalMatrix& basis,
                                            const RationalMatrix& targets) {
  if (basis.rows() != targets.rows())
    throw InvariantError("row-count mismatch in solve_in_span");
  int m = basis.rows(), k = basis.cols(), t = targets.cols();
  RationalMatrix aug(m, k + t);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = basis.at(i, j);
    for (int j = 0; j < t; ++j) aug.at(i, k + j) = targets.at(i, j);
  }
  std::vector<int> pivots = aug.rref();
  // Dependent basis columns or a pivot in the target block both mean failure.
  for (int p : pivots)
    if (p >= k) return std::nullopt;
  if (static_cast<int>(pivots.size()) != k) return std::nullopt;
  RationalMatrix x(k, t);
  for (int r = 0; r < k; ++r) {
    // pivot r sits in column pivots[r] == r proved above (k pivots among k
    // leading columns in increasing order)
    for (int j = 0; j < t; ++j) x.at(pivots[r], j) = aug.at(r, k + j);
  }
  return x;
}

}  // namespace tphs
