#ifndef TPHS_RELATIONS_HPP
#define TPHS_RELATIONS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tphs/generators.hpp"
#include "tphs/liealg.hpp"
#include "tphs/rational.hpp"
#include "tphs/uea.hpp"

namespace tphs {

// ---------------------------------------------------------------------------
// Relation DSL: expression trees
// ---------------------------------------------------------------------------

/// Node kinds of a relation expression.  Leaves name generators by their
/// canonical compact name (the parser folds DBARk onto Dk and SQBAR onto
/// SQ); `var_n` is the family parameter n.
enum class ExprKind {
  leaf,
  number,
  var_n,
  add,
  sub,
  neg,
  mul,
  commutator,
  anticommutator,
};

/// Expression tree with value semantics.  Binary kinds hold two children,
/// `neg` holds one, atoms hold none.
struct Expr {
  ExprKind kind = ExprKind::number;
  std::string name;       // leaf only
  Rational value;         // number only
  std::vector<Expr> kid;  // children, see kind

  static Expr leaf(std::string name);
  static Expr number(Rational v);
  static Expr n();
  static Expr binary(ExprKind k, Expr a, Expr b);
  static Expr negate(Expr a);

  bool operator==(const Expr& o) const;
};

/// Canonical text with minimal parentheses; parsing it back yields an
/// equal tree up to associativity of chained +/- and *.
std::string expr_str(const Expr& e);

/// True when no leaf (generator) occurs below e, i.e. e is a polynomial
/// in n with rational coefficients.
bool expr_is_scalar(const Expr& e);

/// Filtration degree bound of the expression's value: leaves carry their
/// declared degree, mul/anticommutator add, commutator adds minus one,
/// sums take the maximum, scalars contribute zero.
int expr_degree(const GeneratorSet& gs, const Expr& e);

// ---------------------------------------------------------------------------
// Relations and parsing
// ---------------------------------------------------------------------------

/// One statement "LHS = RHS" together with the scope it was declared in.
/// The scope comes from the enclosing block header
///   space <name>(n >= k):    -> min_n = k, exact_n = false
///   space <name>(n == k):    -> min_n = k, exact_n = true
struct Relation {
  std::string id;          // canonical LHS text; duplicates get "#2", ...
  Expr lhs;
  Expr rhs;
  Space space = Space::sphere;
  int min_n = 2;
  bool exact_n = false;
  std::size_t line = 0;    // 1-based statement line in the source

  bool applies_to(int n) const {
    return exact_n ? n == min_n : n >= min_n;
  }
};

/// Parses a relation file: '#' starts a comment, blank lines are skipped,
/// every statement must appear under a block header.  Grammar:
///   expr   := ['-'] term { ('+' | '-') term }
///   term   := factor { '*' factor }
///   factor := ['-'] atom
///   atom   := number | 'n' | ident | '[' expr ',' expr ']'
///           | '{' expr ',' expr '}' | '(' expr ')'
///   number := integer [ '/' integer ]
///   ident  := D<k> | SQ | SQ<k> | DBAR<k> | SQBAR | SQBAR<k>
/// Throws ParseError with 1-based line/column on malformed input.
std::vector<Relation> parse_relations(std::istream& in);
std::vector<Relation> parse_relations_text(std::string_view text);
std::vector<Relation> load_relations(const std::string& path);

/// Parses one stand-alone expression (command-line --lhs values).
Expr parse_expr_text(std::string_view text);

/// The relation table shipped for the space, scoped and in file order.
/// Real/complex hyperbolic tables are shipped as files of their own; the
/// quaternionic and octonionic hyperbolic tables are derived from the
/// compact files through twist_relation.  real_proj shares the sphere
/// table (same algebra, same generators).
std::vector<Relation> shipped_relations(Space space);

// ---------------------------------------------------------------------------
// Noncompact transfer of relations
// ---------------------------------------------------------------------------

/// Letter-wise noncompact twist: every PBW term picks up i^(count of
/// a/p_lambda/p_2lambda letters).  The result is the image of e under the
/// isomorphism U(g)^C -> U(g~)^C onto the twin real form, whose basis
/// shares the compact index set; it maps the left ideal U(g)k0 onto the
/// twin ideal, so it descends to cosets.
UEAElement twist_image(const LieAlgebra& g, const UEAElement& e);

/// The unique t in {0,1,2,3} with
///   twist_image(compact element) == i^t * (hyperbolic element)
/// modulo the hyperbolic ideal.  Throws InvariantError when no power
/// works; a mechanical relation transfer would then be unsound.
int twist_weight(const UEA& compact_ctx, const UEAElement& compact_elem,
                 const UEA& hyp_ctx, const UEAElement& hyp_elem);

/// Mechanical noncompact transfer of compact-space relations.  Solves the
/// twist weight of every named generator once (compact against hyperbolic
/// twin); a product addend then rescales by i^(sum of factor weights), and
/// consistency forces the power to be even relative to the left side,
/// i.e. a sign per addend.
class TwistMap {
 public:
  /// Both sets must live at the same n, gs compact and hyp its twin.
  TwistMap(UEA& compact_ctx, const GeneratorSet& gs, UEA& hyp_ctx,
           const GeneratorSet& hyp);

  /// Solved i-power of one generator (throws on unknown names).
  int weight(std::string_view name) const;

  /// The relation's hyperbolic twin: same left side, right-side addends
  /// sign-flipped where the relative twist power is 2 mod 4.  Throws
  /// InvariantError on odd relative powers or a weight-mixing left side,
  /// and when the map's n lies outside the relation's scope.
  Relation twist(const Relation& compact) const;

 private:
  Space hyp_space_;
  int n_ = 0;
  std::map<std::string, int, std::less<>> weight_;
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Evaluates expressions over one (algebra, generator set), with generator
/// leaves taken modulo the left ideal U(g)k0.  Sound because sums,
/// products and brackets of K0-invariant cosets are again well-defined
/// K0-invariant cosets.  Leaf values are cached.
class RelationEvaluator {
 public:
  RelationEvaluator(UEA& ctx, const GeneratorSet& gs);

  /// Ideal-reduced value; scalars evaluate to multiples of 1.
  UEAElement eval(const Expr& e);

  /// eval(lhs) - eval(rhs); the zero element iff the relation holds.
  UEAElement residual(const Relation& r);

 private:
  UEA& ctx_;
  const GeneratorSet& gs_;
  Rational n_;
  std::map<std::string, UEAElement, std::less<>> leaves_;
};

enum class RelationStatus { verified, failed };
std::string_view status_name(RelationStatus s);

/// Outcome of checking one relation at one n.
struct RelationReport {
  std::string id;
  Space space = Space::sphere;
  int n = 0;
  RelationStatus status = RelationStatus::failed;
  std::string residual;  // canonical coset text, empty iff verified
  double ms = 0.0;
};

RelationReport check_relation(UEA& ctx, const GeneratorSet& gs,
                              const Relation& r);

struct SuiteOptions {
  std::vector<int> ns;                  // parameters to verify at
  int jobs = 1;                         // worker threads (capped by |ns|)
  const OctonionTable* table = nullptr; // octonionic families only
};

struct SuiteResult {
  std::vector<RelationReport> reports;  // ordered by (n, file line)
  int total = 0;
  int verified = 0;
  int failed = 0;
};

/// Verifies every shipped relation of the space at every in-scope n from
/// `opt.ns`.  Work is split across threads by n (each worker owns its
/// algebra and straightening context); the merged report order does not
/// depend on `jobs`.
SuiteResult verify_suite(Space space, const SuiteOptions& opt);

/// Same, against an explicit relation list (used for twisted tables and
/// for single-statement command-line checks).
SuiteResult verify_relations(Space space, const std::vector<Relation>& rels,
                             const SuiteOptions& opt);

// ---------------------------------------------------------------------------
// Coefficient interpolation in n
// ---------------------------------------------------------------------------

struct TermFit {
  std::string term;     // canonical operator-part text
  std::string fitted;   // interpolated coefficient polynomial in n
  std::string shipped;  // declared coefficient polynomial in n
  bool matched = false;
};

struct InterpolationReport {
  std::string id;
  bool matched = false;        // every term fitted and nothing left over
  std::vector<TermFit> terms;
  std::string issue;           // nonempty on structural failure
};

/// Re-derives the n-dependence of a relation's right side from scratch:
/// at every sample n the left side is solved for the coefficients of the
/// shipped operator parts, each coefficient is Lagrange-interpolated
/// across the samples, and the result is compared with the declared
/// symbolic coefficient.  Requires at least three samples, all within the
/// relation's scope (throws InvariantError otherwise); mismatched operator
/// support is reported through `issue`.
InterpolationReport interpolate_n(Space space, const Relation& r,
                                  const std::vector<int>& samples);

// ---------------------------------------------------------------------------
// Discovery
// ---------------------------------------------------------------------------

enum class DiscoverStatus { found, inconsistent };

struct AnsatzTerm {
  std::string monomial;  // "1" or "D0*D3*D3", factors in family order
  Rational coefficient;
};

struct DiscoverReport {
  DiscoverStatus status = DiscoverStatus::inconsistent;
  std::vector<AnsatzTerm> terms;  // support-minimal solution, found only
  std::string expression;         // canonical right-side text, found only
  int ansatz_size = 0;
  int rank = 0;
  int nullspace_dim = 0;
  int residual_terms = 0;         // coset words left over, inconsistent only
  double ms = 0.0;
};

/// Expresses targets in the span of the ordered products
/// D_{i1} * ... * D_{ik} (i1 <= ... <= ik, total declared degree bounded,
/// the empty product 1 included) of the non-auxiliary generators.  The
/// elimination is exact and sparse, performed once per instance; every
/// solve then reduces only the target.  When the ansatz is linearly
/// dependent the reported solution minimizes the number of nonzero terms,
/// ties broken by the lexicographically least sorted monomial-name
/// support (exhaustive over the affected coordinates up to a documented
/// subset cap, after which the canonical elimination solution is kept).
class Discoverer {
 public:
  /// Standard ansatz: ordered generator products of declared degree <= bound.
  Discoverer(UEA& ctx, const GeneratorSet& gs, int degree_bound);

  /// Custom ansatz columns (name, K0-invariant element, declared degree);
  /// products are still formed up to the degree bound.  Used to re-run
  /// discovery with D9 and D10 replaced by their sum.
  Discoverer(UEA& ctx, const std::vector<Generator>& columns,
             int degree_bound);

  int ansatz_size() const { return static_cast<int>(names_.size()); }
  int rank() const { return rank_; }
  int nullspace_dim() const { return static_cast<int>(nullspace_.size()); }
  const std::vector<std::string>& monomials() const { return names_; }

  /// Solves for one ideal-reduced target with real coefficients.
  DiscoverReport solve(const UEAElement& reduced_target) const;

 private:
  using SparseVec = std::vector<std::pair<Word, Rational>>;  // sorted by word

  struct TargetReduction {
    std::vector<Rational> combo;  // target = sum combo_k * column_k (+rest)
    bool consistent = true;
    int residual_terms = 0;
  };

  void build(UEA& ctx, const std::vector<Generator>& columns, int bound);
  void eliminate_columns();
  TargetReduction reduce_target(SparseVec v) const;

  std::vector<std::string> names_;       // monomial names, enumeration order
  std::vector<SparseVec> columns_;       // reduced monomial values
  struct Pivot {
    SparseVec vec;                       // leading coefficient 1
    std::vector<Rational> combo;         // vec as combination of columns_
  };
  std::map<Word, int> pivot_of_word_;
  std::vector<Pivot> pivots_;
  std::vector<std::vector<Rational>> nullspace_;  // combos summing to zero
  int rank_ = 0;
};

/// Discovery for a left-side expression: evaluates it over (ctx, gs) and
/// solves with the standard ansatz.  A non-positive degree bound means
/// "use the expression's own declared degree".
DiscoverReport discover_lhs(UEA& ctx, const GeneratorSet& gs, const Expr& lhs,
                            int degree_bound = 0);

}  // namespace tphs

#endif  // TPHS_RELATIONS_HPP
