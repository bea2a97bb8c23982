#ifndef TPHS_JORDAN_HPP
#define TPHS_JORDAN_HPP

#include <array>
#include <cstdint>
#include <string>

#include "tphs/octonion.hpp"

namespace tphs {

/// Element of the exceptional Jordan algebra h3(Ca): a Hermitian 3x3
/// octonionic matrix a1 E1 + a2 E2 + a3 E3 + X1(x1) + X2(x2) + X3(x3),
/// stored by its 3 real diagonal entries and 3 octonionic off-diagonal
/// coordinates (27 rational coordinates total).  Index i here is 0-based
/// for the 1-based X_{i+1} of the component description.
struct JordanElement {
  std::array<Rational, 3> a{};
  std::array<Octonion, 3> x{};

  bool is_zero() const;
  bool operator==(const JordanElement& o) const { return a == o.a && x == o.x; }
  bool operator!=(const JordanElement& o) const { return !(*this == o); }

  JordanElement operator-() const;
  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  friend JordanElement operator+(JordanElement l, const JordanElement& r) { return l += r; }
  friend JordanElement operator-(JordanElement l, const JordanElement& r) { return l -= r; }
  friend JordanElement operator*(const Rational& s, JordanElement v);

  static JordanElement E(int i);
  static JordanElement X(int i, const Octonion& xi);

  std::string str() const;
};

/// Jordan product via the componentwise multiplication table (the primary
/// path used by all constructions).
JordanElement jordan_mul(const OctonionTable& t, const JordanElement& X,
                         const JordanElement& Y);

/// 3x3 matrix with octonion entries; used as the independent evaluation
/// path for jordan_mul and for the ad Y derivations.
using OctMatrix3 = std::array<std::array<Octonion, 3>, 3>;

OctMatrix3 to_matrix(const JordanElement& X);
/// Validates the Hermitian shape (real diagonal, conjugate-symmetric
/// off-diagonal); throws InvariantError otherwise.
JordanElement from_matrix(const OctMatrix3& m);
OctMatrix3 mat_mul(const OctonionTable& t, const OctMatrix3& A, const OctMatrix3& B);
OctMatrix3 mat_sub(const OctMatrix3& A, const OctMatrix3& B);

/// Jordan product computed as (XY + YX)/2 on genuine 3x3 octonionic
/// matrices: the cross-check oracle for jordan_mul.
JordanElement jordan_mul_matrix(const OctonionTable& t, const JordanElement& X,
                                const JordanElement& Y);

/// Trace form A(X,Y) = Tr(X o Y); the squared norm is A(X,X)
/// = sum_i (a_i^2 + 2|x_i|^2).
Rational trace_form(const OctonionTable& t, const JordanElement& X,
                    const JordanElement& Y);

/// Skew-Hermitian traceless matrix Y_i(xi) as a 3x3 octonionic matrix
/// (i is 0-based for Y_{i+1}).
OctMatrix3 y_matrix(int i, const Octonion& xi);

/// ad Y_i(xi) action on h3(Ca): X -> YX - XY, validated to land back in
/// h3(Ca).
JordanElement ad_y(const OctonionTable& t, int i, const Octonion& xi,
                   const JordanElement& X);

/// Randomized checks of the Jordan structure: commutativity, the Jordan
/// identity (X^2 o Y) o X = X^2 o (Y o X), agreement of jordan_mul with the
/// matrix oracle, associativity of the trace form A(X o Y, Z) = A(X, Y o Z),
/// and the closed norm formula.
IdentityReport jordan_checks(const OctonionTable& t, std::size_t samples,
                             std::uint64_t seed);

/// Randomized check that every ad Y_i(xi) is a derivation of the Jordan
/// product: ad Y(X o Z) = ad Y(X) o Z + X o ad Y(Z).
IdentityReport ad_y_derivation_check(const OctonionTable& t, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace tphs

#endif  // TPHS_JORDAN_HPP
