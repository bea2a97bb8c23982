#ifndef TPHS_OCTONION_HPP
#define TPHS_OCTONION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tphs/rational.hpp"

namespace tphs {

/// Multiplication table of the octonion basis e0=1, e1..e7.
///
/// Entry (i,j) is the signed basis index of e_i * e_j.  The default table
/// comes from the Cayley-Dickson construction over exact quaternions
/// (basis 1,i,j,k with e4 adjoined); alternate Fano labelings can be built
/// by relabeling or loaded from a text file, and every downstream result
/// must be independent of the labeling.
class OctonionTable {
 public:
  struct SignedUnit {
    int sign;   // +1 or -1
    int index;  // 0..7
  };

  /// Default table: Cayley-Dickson over the quaternions (e1*e2 = e3,
  /// e1*e4 = e5, e2*e4 = e6, e3*e4 = e7).
  static OctonionTable cayley_dickson();

  /// A second valid table obtained by relabeling the imaginary units with
  /// `perm` (a permutation of 1..7; index 0 must stay fixed).
  static OctonionTable relabeled(const OctonionTable& base,
                                 const std::array<int, 8>& perm);

  /// The shipped alternate labeling used by the dual-table test suites.
  static OctonionTable alternate();

  /// Parses the plain-text dump format (entries are +-(index+1), '#'
  /// comments allowed).  Validates before returning.
  static OctonionTable load(std::istream& in);

  void dump(std::ostream& out) const;

  SignedUnit unit_mul(int i, int j) const { return unpack(t_[i][j]); }

  /// Full validity check: identity element, unit squares, off-diagonal
  /// anticommutativity, closure on signed units, and alternativity (the
  /// associator alternates on all basis triples).  Throws InvariantError.
  void validate() const;

  bool operator==(const OctonionTable& o) const { return t_ == o.t_; }

 private:
  static int pack(int sign, int index) { return sign * (index + 1); }
  static SignedUnit unpack(int v) {
    return v > 0 ? SignedUnit{+1, v - 1} : SignedUnit{-1, -v - 1};
  }
  // t_[i][j] = +-(k+1) encoding e_i e_j = +-e_k
  std::array<std::array<int, 8>, 8> t_{};
};

/// Exact octonion: 8 rational coordinates on e0..e7.
class Octonion {
 public:
  Octonion() = default;
  static Octonion unit(int i) {
    Octonion x;
    x.c_[i] = Rational(1);
    return x;
  }

  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  bool operator==(const Octonion& o) const { return c_ == o.c_; }
  bool operator!=(const Octonion& o) const { return !(*this == o); }

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(const Rational& s, Octonion a);

  /// Conjugation: fixes e0, negates e1..e7.
  Octonion conj() const;
  /// Real part Re(x) as a rational (coordinate of e0).
  const Rational& re() const { return c_[0]; }
  /// Imaginary part x - Re(x).
  Octonion im_part() const;

  /// Rendering for witnesses/debug: "e0 - 1/2*e3" etc., "0" for zero.
  std::string str() const;

 private:
  std::array<Rational, 8> c_{};
};

/// Product per the given table.
Octonion mul(const OctonionTable& t, const Octonion& a, const Octonion& b);

/// Scalar product <a,b> = Re(a-bar b); equals the Euclidean dot product of
/// coordinates for any valid table.
Rational inner(const Octonion& a, const Octonion& b);

/// Squared norm |a|^2 = <a,a> (kept squared to stay rational).
Rational norm2(const Octonion& a);

/// Exact linear operator on Ca (8x8 rational matrix, column convention:
/// column j is the image of e_j).
class OctOp {
 public:
  OctOp() = default;

  static OctOp zero() { return OctOp(); }
  static OctOp identity();

  /// Spinor generators: L_a : x -> 1/2 e_a x;  L_{a,b} : x -> 1/2 e_a(e_b x).
  static OctOp L(const OctonionTable& t, int alpha);
  static OctOp L(const OctonionTable& t, int alpha, int beta);
  /// Mirror images: R_a : x -> 1/2 x e_a;  R_{a,b} : x -> 1/2 (x e_b) e_a.
  static OctOp R(const OctonionTable& t, int alpha);
  static OctOp R(const OctonionTable& t, int alpha, int beta);
  /// Vector generators V_a = L_a + R_a and V_{a,b}: x -> 1/2(e_a(e_b x) + x(e_b e_a)),
  /// normalized so that the triality identity holds with the L/R above.
  static OctOp V(const OctonionTable& t, int alpha);
  static OctOp V(const OctonionTable& t, int alpha, int beta);
  /// Plane rotation generator: A_{ij} e_j = e_i, A_{ij} e_i = -e_j, 0 elsewhere.
  static OctOp A(int i, int j);
  /// Conjugation by iota: returns iota o this o iota.
  OctOp conjugated() const;

  Octonion apply(const Octonion& x) const;
  OctOp compose(const OctOp& o) const;  // this o o
  OctOp commutator(const OctOp& o) const;

  OctOp operator-() const;
  OctOp& operator+=(const OctOp& o);
  OctOp& operator-=(const OctOp& o);
  friend OctOp operator+(OctOp a, const OctOp& b) { return a += b; }
  friend OctOp operator-(OctOp a, const OctOp& b) { return a -= b; }
  friend OctOp operator*(const Rational& s, OctOp a);

  bool is_zero() const;
  bool operator==(const OctOp& o) const { return m_ == o.m_; }

  /// Skew-symmetry w.r.t. the scalar product: <Tx,y> + <x,Ty> = 0.
  bool is_skew() const;

  const Rational& entry(int i, int j) const { return m_[i][j]; }
  Rational& entry(int i, int j) { return m_[i][j]; }

 private:
  std::array<std::array<Rational, 8>, 8> m_{};
};

/// C-operators of the f4 bracket (skew, bilinear, antisymmetric in xi/eta).
/// `space` selects the representation space Ca_1, Ca_2 or Ca_3 the operator
/// acts on; i is the C-operator family index.
OctOp c_operator(const OctonionTable& t, int i, const Octonion& xi,
                 const Octonion& eta, int space);

/// Outcome of a property battery; `failure` names the identity and witness.
struct IdentityReport {
  bool ok = true;
  std::string failure;
};

/// Randomized octonion identities: left/right alternativity and their
/// polarized forms a(b-bar x) + b(a-bar x) = 2<a,b>x (and the mirror),
/// conj(ab) = conj(b)conj(a), norm multiplicativity |ab|^2 = |a|^2 |b|^2,
/// and <ab,c> = <b, a-bar c>.
IdentityReport oct_identities_check(const OctonionTable& t, std::size_t samples,
                                    std::uint64_t seed);

/// Exhaustive infinitesimal triality on basis pairs: for each generator
/// triple (A1,A2,A3) in {(L_a,R_a,iota V_a iota), (L_{ab},R_{ab},iota V_{ab} iota)}:
///   A1(xi) eta + xi A2(eta) = conj(A3(conj(xi eta))).
IdentityReport triality_check(const OctonionTable& t);

}  // namespace tphs

#endif  // TPHS_OCTONION_HPP
