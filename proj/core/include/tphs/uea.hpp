#ifndef TPHS_UEA_HPP
#define TPHS_UEA_HPP

#include <map>
#include <string>
#include <unordered_map>

#include "tphs/liealg.hpp"
#include "tphs/rational.hpp"

namespace tphs {

/// PBW monomial: a nondecreasing sequence of basis indices packed one per
/// byte (the empty word is the unit 1).  Byte order equals the algebra's
/// basis total order, so lexicographic word order is well defined.
using Word = std::string;

Word word_of(std::initializer_list<int> indices);

/// Element of U(g): sparse map from PBW monomials to coefficients, no zero
/// coefficients stored.  The map's lexicographic iteration order makes
/// equal elements identical and reports deterministic.
class UEAElement {
 public:
  UEAElement() = default;

  static UEAElement zero() { return UEAElement(); }
  static UEAElement one();
  static UEAElement term(const Word& w, const GaussRational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, GaussRational>& terms() const { return terms_; }

  void add_term(const Word& w, const GaussRational& c);  // erases on cancel
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  UEAElement operator-() const;
  friend UEAElement operator*(const GaussRational& c, const UEAElement& a);

  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const UEAElement& o) const { return !(*this == o); }

  /// Max word length over terms; -1 for the zero element.
  int degree() const;

  /// Canonical text: one line per term, "coef * label1.label2", sorted by
  /// word; the empty word prints as "1"; the zero element prints "0".
  std::string str(const LieAlgebra& g) const;

 private:
  std::map<Word, GaussRational> terms_;
};

/// Straightening context over a fixed algebra: PBW normal form, products,
/// (anti)commutators, and the symmetrization map.  Memoizes the rewrite
/// (sorted word) * letter, which the products are folded through, so
/// repeated multiplications share work.  The filtration degree of every
/// intermediate product is capped (default 10, env ENGINE_DEGREE_CAP);
/// exceeding the cap throws DegreeCapError instead of truncating.
class UEA {
 public:
  explicit UEA(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  int degree_cap() const { return cap_; }
  void set_degree_cap(int cap) { cap_ = cap; }
  /// 10 unless ENGINE_DEGREE_CAP is set to a positive integer.
  static int default_degree_cap();

  /// Degree-1 element from a basis index.
  UEAElement gen(int index) const;

  /// PBW normal form of an arbitrary (not necessarily sorted) word.
  UEAElement normal_form(const Word& w, const GaussRational& c = GaussRational(1L));

  UEAElement multiply(const UEAElement& a, const UEAElement& b);
  UEAElement commutator(const UEAElement& a, const UEAElement& b);
  UEAElement anticommutator(const UEAElement& a, const UEAElement& b);

  /// Symmetrization mu(Y_1 ... Y_p) = (1/p!) sum over factor orders; the
  /// factors must lie in the reductive complement (no k0 letters).
  UEAElement symmetrize(const Word& monomial);

  /// Reference straightening that rewrites one inversion at a time on raw
  /// words; `leftmost` picks the scan direction.  Used by confluence tests
  /// against the memoized fold; quadratically slower, never memoized.
  UEAElement normal_form_stepwise(const Word& w, bool leftmost);

 private:
  UEAElement rmul_word(const Word& sorted, unsigned char x);
  UEAElement rmul(const UEAElement& a, unsigned char x);

  const LieAlgebra& g_;
  int cap_;
  std::unordered_map<Word, UEAElement> memo_;
};

}  // namespace tphs

#endif  // TPHS_UEA_HPP
