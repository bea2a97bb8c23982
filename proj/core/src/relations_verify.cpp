#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tphs/datapath.hpp"
#include "tphs/errors.hpp"
#include "tphs/linsolve.hpp"
#include "tphs/reduction.hpp"
#include "tphs/relations.hpp"

namespace tphs {

namespace {

UEAElement scalar_element(const Rational& v) {
  if (v.is_zero()) return UEAElement::zero();
  return UEAElement::term(Word(), GaussRational(v));
}

Rational real_part(const GaussRational& c) {
  if (!c.is_real())
    throw InvariantError("unexpected imaginary coefficient in a relation");
  return c.re;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

RelationEvaluator::RelationEvaluator(UEA& ctx, const GeneratorSet& gs)
    : ctx_(ctx), gs_(gs), n_(ctx.algebra().n()) {}

UEAElement RelationEvaluator::eval(const Expr& e) {
  switch (e.kind) {
    case ExprKind::leaf: {
      auto it = leaves_.find(e.name);
      if (it == leaves_.end())
        it = leaves_.emplace(e.name, ideal_reduce(ctx_, gs_.at(e.name)))
                 .first;
      return it->second;
    }
    case ExprKind::number:
      return scalar_element(e.value);
    case ExprKind::var_n:
      return scalar_element(n_);
    case ExprKind::add:
      return eval(e.kid[0]) + eval(e.kid[1]);
    case ExprKind::sub:
      return eval(e.kid[0]) - eval(e.kid[1]);
    case ExprKind::neg:
      return -eval(e.kid[0]);
    case ExprKind::mul:
      return reduced_product(ctx_, eval(e.kid[0]), eval(e.kid[1]));
    case ExprKind::commutator:
      return reduced_commutator(ctx_, eval(e.kid[0]), eval(e.kid[1]));
    case ExprKind::anticommutator:
      return reduced_anticommutator(ctx_, eval(e.kid[0]), eval(e.kid[1]));
  }
  throw InvariantError("unhandled expression kind");
}

UEAElement RelationEvaluator::residual(const Relation& r) {
  return eval(r.lhs) - eval(r.rhs);
}

std::string_view status_name(RelationStatus s) {
  return s == RelationStatus::verified ? "verified" : "failed";
}

RelationReport check_relation(UEA& ctx, const GeneratorSet& gs,
                              const Relation& r) {
  const auto t0 = std::chrono::steady_clock::now();
  RelationEvaluator ev(ctx, gs);
  const UEAElement res = ev.residual(r);
  RelationReport report;
  report.id = r.id;
  report.space = ctx.algebra().space();
  report.n = ctx.algebra().n();
  report.status =
      res.is_zero() ? RelationStatus::verified : RelationStatus::failed;
  if (!res.is_zero()) report.residual = res.str(ctx.algebra());
  report.ms = elapsed_ms(t0);
  return report;
}

// ---------------------------------------------------------------------------
// Shipped tables
// ---------------------------------------------------------------------------

namespace {

// Algebra, straightening context and generators bundled so the reference
// held by UEA stays valid; non-movable once constructed.
struct Stack {
  LieAlgebra g;
  UEA ctx;
  GeneratorSet gs;
  Stack(Space space, int n, const OctonionTable* table)
      : g(table ? build_algebra(space, n, *table) : build_algebra(space, n)),
        ctx(g),
        gs(build_generators(ctx)) {}
};

std::string family_file(Space compact) {
  switch (compact) {
    case Space::sphere:
    case Space::real_proj:
      return "relations/sphere.rel";
    case Space::complex_proj:
      return "relations/complex.rel";
    case Space::quat_proj:
      return "relations/quat.rel";
    case Space::octonion_proj:
      return "relations/oct.rel";
    default:
      throw InvariantError("no shipped table for this space");
  }
}

std::vector<Relation> load_family(Space compact) {
  std::vector<Relation> rels = load_relations(data_file(family_file(compact)));
  const Space expected =
      compact == Space::real_proj ? Space::sphere : compact;
  for (const Relation& r : rels)
    if (r.space != expected)
      throw InvariantError("relation file scoped to the wrong space: " +
                           std::string(space_name(r.space)));
  return rels;
}

}  // namespace

std::vector<Relation> shipped_relations(Space space) {
  if (!is_hyperbolic(space)) {
    std::vector<Relation> rels = load_family(space);
    for (Relation& r : rels) r.space = space;  // real_proj shares sphere's
    return rels;
  }

  // Shipped hyperbolic files where they exist; the quaternionic and
  // octonionic twins are the mechanical twists of the compact tables.
  if (space == Space::real_hyp)
    return load_relations(data_file("relations/real_hyp.rel"));
  if (space == Space::complex_hyp)
    return load_relations(data_file("relations/complex_hyp.rel"));

  const Space compact = compact_form(space);
  std::vector<Relation> rels = load_family(compact);
  // The twist map is solved on a representative pair of stacks per scope n;
  // the twisted table itself is scope-wide.
  struct Rep {
    Stack comp;
    Stack hyp;
    TwistMap map;
    Rep(Space compact, Space hyp_space, int n)
        : comp(compact, n, nullptr),
          hyp(hyp_space, n, nullptr),
          map(comp.ctx, comp.gs, hyp.ctx, hyp.gs) {}
  };
  std::map<int, std::unique_ptr<Rep>> reps;  // representative n -> stacks
  std::vector<Relation> out;
  out.reserve(rels.size());
  for (const Relation& r : rels) {
    auto& rep = reps[r.min_n];
    if (!rep) rep = std::make_unique<Rep>(compact, space, r.min_n);
    out.push_back(rep->map.twist(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

SuiteResult verify_relations(Space space, const std::vector<Relation>& rels,
                             const SuiteOptions& opt) {
  std::vector<int> ns = opt.ns;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  const int workers =
      std::max(1, std::min<int>(opt.jobs, static_cast<int>(ns.size())));
  std::vector<std::vector<RelationReport>> per_n(ns.size());
  std::vector<std::exception_ptr> errors(workers);

  auto run_n = [&](std::size_t slot) {
    const int n = ns[slot];
    Stack stack(space, n, opt.table);
    for (const Relation& r : rels) {
      if (!r.applies_to(n)) continue;
      per_n[slot].push_back(check_relation(stack.ctx, stack.gs, r));
    }
  };

  if (workers == 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) run_n(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < ns.size(); i += workers) run_n(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // The per-n blocks are already in file order; concatenating them in n
  // order makes the result independent of the worker count.
  SuiteResult result;
  for (std::vector<RelationReport>& block : per_n)
    for (RelationReport& r : block) result.reports.push_back(std::move(r));
  result.total = static_cast<int>(result.reports.size());
  for (const RelationReport& r : result.reports)
    (r.status == RelationStatus::verified ? result.verified : result.failed)++;
  return result;
}

SuiteResult verify_suite(Space space, const SuiteOptions& opt) {
  return verify_relations(space, shipped_relations(space), opt);
}

// ---------------------------------------------------------------------------
// Coefficient interpolation
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial in n, ascending powers, no trailing zeros.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

Poly poly_scale(const Rational& c, const Poly& a) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  poly_trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    const Rational mag = p[k].abs();
    if (out.empty())
      out += p[k].is_negative() ? "-" : "";
    else
      out += p[k].is_negative() ? " - " : " + ";
    const bool unit = mag.is_one() && k > 0;
    if (!unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "n";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Poly poly_of_scalar(const Expr& e) {
  switch (e.kind) {
    case ExprKind::number:
      return e.value.is_zero() ? Poly{} : Poly{e.value};
    case ExprKind::var_n:
      return Poly{Rational(0), Rational(1)};
    case ExprKind::add:
      return poly_add(poly_of_scalar(e.kid[0]), poly_of_scalar(e.kid[1]));
    case ExprKind::sub:
      return poly_add(poly_of_scalar(e.kid[0]),
                      poly_scale(Rational(-1), poly_of_scalar(e.kid[1])));
    case ExprKind::neg:
      return poly_scale(Rational(-1), poly_of_scalar(e.kid[0]));
    case ExprKind::mul:
      return poly_mul(poly_of_scalar(e.kid[0]), poly_of_scalar(e.kid[1]));
    default:
      throw InvariantError("operator node inside a scalar coefficient");
  }
}

// Signed top-level addends of an expression (no distribution inside).
void flatten_addends(const Expr& e, int sign,
                     std::vector<std::pair<int, const Expr*>>& out) {
  if (e.kind == ExprKind::add || e.kind == ExprKind::sub) {
    flatten_addends(e.kid[0], sign, out);
    flatten_addends(e.kid[1],
                    e.kind == ExprKind::sub ? -sign : sign, out);
  } else if (e.kind == ExprKind::neg) {
    flatten_addends(e.kid[0], -sign, out);
  } else {
    out.push_back({sign, &e});
  }
}

void flatten_factors(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == ExprKind::mul) {
    flatten_factors(e.kid[0], out);
    flatten_factors(e.kid[1], out);
  } else {
    out.push_back(&e);
  }
}

struct SplitTerm {
  Expr op;      // operator part (number 1 for pure scalars)
  Poly coeff;   // accumulated n-polynomial coefficient
};

// Splits a right side into distinct operator parts with polynomial
// coefficients: addends factor as (scalar factors) * (operator factors).
std::vector<SplitTerm> split_rhs(const Expr& rhs) {
  std::vector<std::pair<int, const Expr*>> addends;
  flatten_addends(rhs, 1, addends);

  std::vector<SplitTerm> terms;
  std::map<std::string, std::size_t> index;
  for (const auto& [sign, addend] : addends) {
    std::vector<const Expr*> factors;
    flatten_factors(*addend, factors);
    Poly coeff{Rational(sign)};
    Expr op = Expr::number(Rational(1));
    bool have_op = false;
    for (const Expr* f : factors) {
      if (expr_is_scalar(*f)) {
        coeff = poly_mul(coeff, poly_of_scalar(*f));
      } else if (!have_op) {
        op = *f;
        have_op = true;
      } else {
        op = Expr::binary(ExprKind::mul, std::move(op), *f);
      }
    }
    const std::string key = expr_str(op);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, terms.size());
      terms.push_back({std::move(op), std::move(coeff)});
    } else {
      terms[it->second].coeff = poly_add(terms[it->second].coeff, coeff);
    }
  }
  return terms;
}

// Exact Lagrange interpolation through (x_i, y_i).
Poly lagrange_fit(const std::vector<Rational>& xs,
                  const std::vector<Rational>& ys) {
  Poly fit;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, Poly{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    fit = poly_add(fit, poly_scale(ys[i] / denom, basis));
  }
  return fit;
}

}  // namespace

InterpolationReport interpolate_n(Space space, const Relation& r,
                                  const std::vector<int>& samples) {
  if (samples.size() < 3)
    throw InvariantError("interpolation needs at least 3 samples");
  for (int n : samples)
    if (!r.applies_to(n))
      throw InvariantError("sample n=" + std::to_string(n) +
                           " outside the relation's scope");

  InterpolationReport report;
  report.id = r.id;

  std::vector<SplitTerm> terms = split_rhs(r.rhs);
  std::vector<std::vector<Rational>> fitted_values(terms.size());

  for (int n : samples) {
    Stack stack(space, n, nullptr);
    RelationEvaluator ev(stack.ctx, stack.gs);
    const UEAElement target = ev.eval(r.lhs);
    std::vector<UEAElement> cols;
    cols.reserve(terms.size());
    for (const SplitTerm& t : terms) cols.push_back(ev.eval(t.op));

    std::map<Word, int> rows;
    for (const UEAElement& c : cols)
      for (const auto& [w, coeff] : c.terms()) rows.emplace(w, 0);
    for (const auto& [w, coeff] : target.terms()) rows.emplace(w, 0);
    int next = 0;
    for (auto& [w, idx] : rows) idx = next++;

    RationalMatrix basis(next, static_cast<int>(cols.size()));
    RationalMatrix rhs(next, 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [w, coeff] : cols[j].terms())
        basis.at(rows[w], static_cast<int>(j)) = real_part(coeff);
    for (const auto& [w, coeff] : target.terms())
      rhs.at(rows[w], 0) = real_part(coeff);

    const auto sol = solve_in_span(basis, rhs);
    if (!sol) {
      report.issue =
          "operator support mismatch at n=" + std::to_string(n);
      return report;
    }
    for (std::size_t j = 0; j < terms.size(); ++j)
      fitted_values[j].push_back(sol->at(static_cast<int>(j), 0));
  }

  std::vector<Rational> xs;
  xs.reserve(samples.size());
  for (int n : samples) xs.push_back(Rational(n));

  report.matched = true;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Poly fit = lagrange_fit(xs, fitted_values[j]);
    Poly shipped = terms[j].coeff;
    poly_trim(shipped);
    TermFit tf;
    tf.term = expr_str(terms[j].op);
    tf.fitted = poly_str(fit);
    tf.shipped = poly_str(shipped);
    tf.matched = fit == shipped;
    report.matched = report.matched && tf.matched;
    report.terms.push_back(std::move(tf));
  }
  return report;
}

}  // namespace tphs
