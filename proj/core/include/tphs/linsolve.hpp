#ifndef TPHS_LINSOLVE_HPP
#define TPHS_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "tphs/rational.hpp"

namespace tphs {

/// Exact dense rational matrix in row-major layout.  Small utility used for
/// change-of-basis solves and matrix-representation oracles; not tuned for
/// large dimensions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return e_[i * cols_ + j]; }
  Rational& at(int i, int j) { return e_[i * cols_ + j]; }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  RationalMatrix multiply(const RationalMatrix& o) const;
  RationalMatrix commutator(const RationalMatrix& o) const;  // this*o - o*this
  RationalMatrix transpose() const;
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  bool is_zero() const;

  /// In-place Gauss-Jordan to reduced row echelon form; returns pivot column
  /// per pivot row.
  std::vector<int> rref();
  int rank() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Solves basis * x = target exactly for every column of `targets`
/// (basis: m x k column basis, targets: m x t).  Returns the k x t
/// coefficient matrix, or nullopt if some target is outside the span.
/// When the basis columns are linearly dependent the solve fails.
std::optional<RationalMatrix> solve_in_span(const RationalMatrix& basis,
                                            const RationalMatrix& targets);

}  // namespace tphs

#endif  // TPHS_LINSOLVE_HPP
