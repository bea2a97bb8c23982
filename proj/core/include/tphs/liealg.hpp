#ifndef TPHS_LIEALG_HPP
#define TPHS_LIEALG_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tphs/octonion.hpp"
#include "tphs/rational.hpp"

namespace tphs {

/// The supported two-point homogeneous families (unit sphere bundles over
/// them); n is the family parameter, fixed at 2 for the octonionic plane.
enum class Space {
  sphere,
  real_proj,
  complex_proj,
  quat_proj,
  octonion_proj,
  real_hyp,
  complex_hyp,
  quat_hyp,
  octonion_hyp,
};

std::string_view space_name(Space s);
Space space_from_name(std::string_view name);  // throws UnsupportedSpaceError
bool is_hyperbolic(Space s);
/// The compact partner whose twist produces s (identity on compact spaces).
Space compact_form(Space s);

/// Reductive-split part of a basis element.  The basis total order keeps
/// all p-tilde parts (everything except k0) before k0, so that ideal
/// reduction can drop exactly the normal words containing a k0 letter.
enum class Part : unsigned char { a, p_lambda, p_2lambda, k_lambda, k_2lambda, k0 };

std::string_view part_name(Part p);
/// True for the parts multiplied by i under the noncompact twist
/// (a, p_lambda, p_2lambda).
bool in_p(Part p);

struct BasisElement {
  int index = 0;        // position in the total order
  std::string label;    // unique symbolic tag, e.g. "Psi(1,3)" or "e_lam(4)"
  Part part = Part::a;
  int ordinal = 0;      // position within its part; pairs e_* with f_*
};

/// Dense coordinate vector of an algebra element (length = dim).
using LieVector = std::vector<GaussRational>;

/// Sparse bracket row: [x_i, x_j] = sum of coeff * x_k.
using BracketRow = std::vector<std::pair<int, GaussRational>>;

class LieAlgebra {
 public:
  /// `constants` must hold rows for i < j only; antisymmetry is implied.
  LieAlgebra(Space space, int n, std::vector<BasisElement> basis,
             std::map<std::pair<int, int>, BracketRow> constants);

  int dim() const { return static_cast<int>(basis_.size()); }
  Space space() const { return space_; }
  int n() const { return n_; }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(int i) const { return basis_.at(i); }
  Part part(int i) const { return basis_.at(i).part; }
  bool in_k0(int i) const { return part(i) == Part::k0; }
  const std::vector<int>& k0_indices() const { return k0_indices_; }

  /// Index lookup by label; throws InvariantError when absent.
  int find(std::string_view label) const;
  /// Index of the element with the given part and ordinal.
  int part_index(Part p, int ordinal) const;
  /// Number of basis elements carrying the part.
  int part_dim(Part p) const;
  int q1() const { return part_dim(Part::p_lambda); }
  int q2() const { return part_dim(Part::p_2lambda); }

  /// Bracket of two basis elements as a sparse row (any i, j).
  BracketRow bracket_units(int i, int j) const;
  /// Bilinear extension.
  LieVector bracket(const LieVector& x, const LieVector& y) const;

  LieVector zero() const { return LieVector(basis_.size()); }
  LieVector unit(int i) const;

  /// Sorted text lines "i j k num/den" (one per nonzero constant, i < j)
  /// for golden-file regression; requires all constants real.
  void dump_constants(std::ostream& out) const;

  /// Copy with c_{ij}^k shifted by delta: negative-control input for
  /// structure_audit tests.
  LieAlgebra corrupted(int i, int j, int k, const GaussRational& delta) const;

  const std::map<std::pair<int, int>, BracketRow>& constants() const {
    return constants_;
  }

 private:
  Space space_;
  int n_;
  std::vector<BasisElement> basis_;
  std::map<std::pair<int, int>, BracketRow> constants_;
  std::vector<int> k0_indices_;
};

/// Builds the isometry algebra of the family at parameter n:
/// so(n+1) for sphere/real_proj, su(n+1) for complex_proj, u_H(n+1) for
/// quat_proj, f4 for octonion_proj (n = 2), with the distinguished ordered
/// basis; hyperbolic spaces are produced by twisting the compact partner.
/// The octonionic construction uses the given multiplication table.
LieAlgebra build_algebra(Space space, int n);
LieAlgebra build_algebra(Space space, int n, const OctonionTable& table);

struct AuditReport {
  bool ok = true;
  std::vector<std::string> issues;  // one line per violation, with witnesses
  int dim = 0;
  int q1 = 0;
  int q2 = 0;
  int k0_dim = 0;
};

/// Full structural verification: constant-table sanity, Jacobi identity on
/// all basis triples, the part-inclusion table of the reductive split
/// (including k0 closure), and the normalized distinguished brackets
/// [Lambda, e_{lam,i}] = -f_{lam,i}/2, ..., [e_{2lam,j}, f_{2lam,j}] =
/// -Lambda (with R = 1).
AuditReport structure_audit(const LieAlgebra& g);

/// Real-form switch: multiplies the p-part (a, p_lambda, p_2lambda) by the
/// imaginary unit, i.e. c'_{ij}^k = i^{s(i)+s(j)-s(k)} c_{ij}^k with s the
/// p-indicator.  All twisted constants must come out real; a non-integral
/// power signals a mis-tagged basis element.
LieAlgebra noncompact_twist(const LieAlgebra& g);

}  // namespace tphs

#endif  // TPHS_LIEALG_HPP
