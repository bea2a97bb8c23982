#ifndef TPHS_GENERATORS_HPP
#define TPHS_GENERATORS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tphs/liealg.hpp"
#include "tphs/uea.hpp"

namespace tphs {

/// One named operator of a family's generating set.  `auxiliary` marks the
/// quaternionic box operators SQ1..SQ3, which are not K0-invariant (only
/// the smaller subgroup K1 fixes them): invariance gates skip them, but
/// they stay addressable by name for diagnostics.
struct Generator {
  std::string name;          // canonical: D0..D10, SQ, SQ1..SQ3
  UEAElement element;        // normal-formed, NOT ideal-reduced
  int declared_degree = 0;   // filtration degree the family tables assign
  bool auxiliary = false;
};

/// Immutable named family of invariant operators for one (space, n).
/// Hyperbolic spaces reuse the compact names; parsers map DBARk -> Dk.
class GeneratorSet {
 public:
  GeneratorSet(Space space, int n, std::vector<Generator> items);

  Space space() const { return space_; }
  int n() const { return n_; }
  const std::vector<Generator>& items() const { return items_; }

  bool has(std::string_view name) const;
  const UEAElement& at(std::string_view name) const;  // throws InvariantError
  const Generator& info(std::string_view name) const;

 private:
  Space space_;
  int n_;
  std::vector<Generator> items_;
};

/// Builds the family generating set on the algebra behind `ctx`:
///   sphere/real_proj/real_hyp  n==2: D0,D1,D2 (degrees 1,1,1)
///                              n==3: D0..D3, SQ
///                              n>=4: D0..D3
///   complex_proj/complex_hyp   n>=2: D0..D5, SQ (D4, D5 of degree 1)
///   quat_proj/quat_hyp         n>=2: D0..D10 plus auxiliary SQ1..SQ3
///   octonion_proj/octonion_hyp n==2: D0..D9
/// Throws UnsupportedSpaceError for anything else.
GeneratorSet build_generators(UEA& ctx);

/// Central elements of the invariant-operator algebra, as (name, element):
///   quat/oct family: ("D*",  D0^2 + D1 + D2 + D4 + D5)
///   complex family:  ("D*",  D0^2 + D1 + D2 + D4^2 + D5^2)
///   real family n>=3: ("D1*", D0^2+D1+D2) and
///                     ("D2*", 1/2{D1,D2} - D3^2 + (1-(n-3)(n-1)/4)(D1+D2))
///   real family n==2: ("D*",  D0^2 + D1^2 + D2^2)
/// On hyperbolic spaces every "+" in front of an odd-twist generator
/// becomes "-" (e.g. D0^2 + D1 - D2 ...), matching the twisted centre.
std::vector<std::pair<std::string, UEAElement>> casimirs(
    UEA& ctx, const GeneratorSet& gs);

enum class AutoKind {
  sigma,    // geodesic reflection: -1 on a, p_lambda, p_2lambda
  zeta_pi,  // geodesic-flow rotation at angle pi (compact spaces only)
};

/// Image of every generator under the basis-level automorphism, re-normal-
/// formed.  zeta_pi maps e_lam -> -f_lam, f_lam -> e_lam and negates the
/// 2-lambda pairs; it is an automorphism only of the compact algebras and
/// throws UnsupportedSpaceError on hyperbolic input.
GeneratorSet apply_automorphism(UEA& ctx, AutoKind kind,
                                const GeneratorSet& gs);

/// Letter-wise complexification isomorphism from a compact algebra onto its
/// noncompact twist: each word picks up i^(number of a/p_lambda/p_2lambda
/// letters) and is reinterpreted verbatim in the twisted algebra `hyp`.
/// Used to test that the twisted generator sets are the images of the
/// compact ones under the paper's substitution D_k -> i^t Dbar_k.
UEAElement twist_image(UEA& hyp_ctx, const UEAElement& compact_element);

/// Quaternionic D10 is a sum of six ordered triple products; the definition
/// is only unambiguous because the three factors of each summand pairwise
/// commute in U(g).  Returns human-readable descriptions of any violating
/// pair (empty == precondition holds).
std::vector<std::string> d10_precondition_issues(UEA& ctx);

/// Rank of the Jacobian of the leading symbols of D1..D9 (octonionic
/// family) in the 30 commuting variables p_lambda+k_lambda+p_2lambda+
/// k_2lambda, evaluated at a deterministic rational point.  Value 9 means
/// the operators are functionally independent.
int leading_symbol_jacobian_rank(UEA& ctx, const GeneratorSet& gs,
                                 const std::vector<std::string>& names,
                                 unsigned seed);

/// Diagnostic for the open question of a degree-4 octonionic analog of the
/// quaternionic D10: dimension of the span of the ideal-reduced monomials
/// in the named generators with total declared degree <= 4.  No outcome is
/// asserted anywhere; the number is only reported.
int degree4_monomial_span_rank(UEA& ctx, const GeneratorSet& gs,
                               const std::vector<std::string>& names);

/// Canonical multi-line dump "name := <UEA serialization>" for golden
/// files; deterministic ordering.
std::string dump(const GeneratorSet& gs, const LieAlgebra& g);

}  // namespace tphs

#endif  // TPHS_GENERATORS_HPP
