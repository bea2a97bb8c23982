#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "tphs/errors.hpp"
#include "tphs/linsolve.hpp"
#include "tphs/reduction.hpp"
#include "tphs/relations.hpp"

namespace tphs {

namespace {

Rational real_coeff(const GaussRational& c) {
  if (!c.is_real())
    throw InvariantError("discovery expects real coefficients");
  return c.re;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Names containing operators get parenthesized inside products.
std::string factor_text(const std::string& name) {
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) return "(" + name + ")";
  return name;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ansatz construction and elimination
// ---------------------------------------------------------------------------

Discoverer::Discoverer(UEA& ctx, const GeneratorSet& gs, int degree_bound) {
  std::vector<Generator> cols;
  for (const Generator& g : gs.items())
    if (!g.auxiliary) cols.push_back(g);
  build(ctx, cols, degree_bound);
}

Discoverer::Discoverer(UEA& ctx, const std::vector<Generator>& columns,
                       int degree_bound) {
  build(ctx, columns, degree_bound);
}

void Discoverer::build(UEA& ctx, const std::vector<Generator>& columns,
                       int bound) {
  std::vector<UEAElement> reduced;
  reduced.reserve(columns.size());
  for (const Generator& g : columns)
    reduced.push_back(ideal_reduce(ctx, g.element));

  // Depth-first enumeration of the ordered products with nondecreasing
  // factor index; each node's value extends its parent's by one factor, so
  // every monomial costs a single product.
  auto store = [&](const std::string& name, const UEAElement& value) {
    names_.push_back(name.empty() ? "1" : name);
    SparseVec v;
    v.reserve(value.terms().size());
    for (const auto& [w, c] : value.terms()) v.emplace_back(w, real_coeff(c));
    columns_.push_back(std::move(v));
  };

  auto extend = [&](auto&& self, std::size_t first, int used,
                    const std::string& name, const UEAElement& value) -> void {
    for (std::size_t k = first; k < columns.size(); ++k) {
      const int degree = used + columns[k].declared_degree;
      if (degree > bound) continue;
      const std::string next_name =
          name.empty() ? factor_text(columns[k].name)
                       : name + "*" + factor_text(columns[k].name);
      const UEAElement next = reduced_product(ctx, value, reduced[k]);
      store(next_name, next);
      self(self, k, degree, next_name, next);
    }
  };

  store("1", UEAElement::one());
  extend(extend, 0, 0, "", UEAElement::one());
  eliminate_columns();
}

namespace {

// a + c*b over sorted sparse vectors, dropping exact zeros.
void axpy(std::vector<std::pair<Word, Rational>>& a, const Rational& c,
          const std::vector<std::pair<Word, Rational>>& b) {
  std::vector<std::pair<Word, Rational>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second;
      v.add_mul(c, b[j].second);
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

void Discoverer::eliminate_columns() {
  const std::size_t m = columns_.size();
  for (std::size_t j = 0; j < m; ++j) {
    SparseVec v = columns_[j];
    std::vector<Rational> combo(m);
    combo[j] = Rational(1);
    while (!v.empty()) {
      const auto it = pivot_of_word_.find(v.front().first);
      if (it == pivot_of_word_.end()) break;
      const Pivot& p = pivots_[it->second];
      const Rational c = -v.front().second;
      axpy(v, c, p.vec);
      for (std::size_t k = 0; k < m; ++k) combo[k].add_mul(c, p.combo[k]);
    }
    if (v.empty()) {
      nullspace_.push_back(std::move(combo));
      continue;
    }
    const Rational lead = v.front().second;
    for (auto& [w, c] : v) c /= lead;
    for (Rational& c : combo) c /= lead;
    pivot_of_word_.emplace(v.front().first, static_cast<int>(pivots_.size()));
    pivots_.push_back({std::move(v), std::move(combo)});
    ++rank_;
  }
}

Discoverer::TargetReduction Discoverer::reduce_target(SparseVec v) const {
  TargetReduction out;
  out.combo.assign(columns_.size(), Rational(0));
  while (!v.empty()) {
    const auto it = pivot_of_word_.find(v.front().first);
    if (it == pivot_of_word_.end()) {
      out.consistent = false;
      out.residual_terms = static_cast<int>(v.size());
      return out;
    }
    const Pivot& p = pivots_[it->second];
    const Rational c = v.front().second;
    for (std::size_t k = 0; k < out.combo.size(); ++k)
      out.combo[k].add_mul(c, p.combo[k]);
    axpy(v, -c, p.vec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solving with support minimization
// ---------------------------------------------------------------------------

namespace {

// Sorted nonzero-coordinate names; the tie-break comparison key.
std::vector<std::string> support_names(const std::vector<Rational>& x,
                                       const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) out.push_back(names[k]);
  std::sort(out.begin(), out.end());
  return out;
}

bool better_support(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

DiscoverReport Discoverer::solve(const UEAElement& reduced_target) const {
  const auto t0 = std::chrono::steady_clock::now();
  DiscoverReport report;
  report.ansatz_size = ansatz_size();
  report.rank = rank_;
  report.nullspace_dim = nullspace_dim();

  SparseVec v;
  v.reserve(reduced_target.terms().size());
  for (const auto& [w, c] : reduced_target.terms())
    v.emplace_back(w, real_coeff(c));

  TargetReduction red = reduce_target(std::move(v));
  if (!red.consistent) {
    report.status = DiscoverStatus::inconsistent;
    report.residual_terms = red.residual_terms;
    report.ms = elapsed_ms(t0);
    return report;
  }

  std::vector<Rational> best = red.combo;
  std::vector<std::string> best_key = support_names(best, names_);

  // The affine solution set is combo + span(nullspace).  Minimizing the
  // support: try to zero out every nu-subset of the coordinates that any
  // nullspace vector touches; each subset pins the nu free parameters by a
  // square solve.  Exhaustive up to the subset cap, after which the
  // canonical elimination solution stands.
  const std::size_t nu = nullspace_.size();
  if (nu > 0) {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      bool touched = !red.combo[k].is_zero();
      for (const auto& nv : nullspace_) touched = touched || !nv[k].is_zero();
      if (touched) active.push_back(k);
    }

    double subsets = 1.0;
    for (std::size_t i = 0; i < nu && i < active.size(); ++i)
      subsets *= static_cast<double>(active.size() - i) / (i + 1);
    if (nu <= active.size() && subsets <= 5e5) {
      std::vector<std::size_t> pick(nu);
      for (std::size_t i = 0; i < nu; ++i) pick[i] = i;
      while (true) {
        RationalMatrix a(static_cast<int>(nu), static_cast<int>(nu));
        RationalMatrix b(static_cast<int>(nu), 1);
        for (std::size_t r = 0; r < nu; ++r) {
          const std::size_t coord = active[pick[r]];
          for (std::size_t c = 0; c < nu; ++c)
            a.at(static_cast<int>(r), static_cast<int>(c)) =
                nullspace_[c][coord];
          b.at(static_cast<int>(r), 0) = -red.combo[coord];
        }
        if (const auto y = solve_in_span(a, b)) {
          std::vector<Rational> x = red.combo;
          for (std::size_t c = 0; c < nu; ++c) {
            const Rational& yc = y->at(static_cast<int>(c), 0);
            if (yc.is_zero()) continue;
            for (std::size_t k = 0; k < x.size(); ++k)
              x[k].add_mul(yc, nullspace_[c][k]);
          }
          std::vector<std::string> key = support_names(x, names_);
          if (better_support(key, best_key)) {
            best = std::move(x);
            best_key = std::move(key);
          }
        }
        // next nu-subset of `active`
        std::size_t i = nu;
        while (i > 0 && pick[i - 1] == i - 1 + active.size() - nu) --i;
        if (i == 0) break;  // every index at its maximum: done
        ++pick[i - 1];
        for (std::size_t j = i; j < nu; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  report.status = DiscoverStatus::found;
  std::string text;
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (best[k].is_zero()) continue;
    report.terms.push_back({names_[k], best[k]});
    const Rational mag = best[k].abs();
    if (text.empty())
      text += best[k].is_negative() ? "-" : "";
    else
      text += best[k].is_negative() ? " - " : " + ";
    if (names_[k] == "1")
      text += mag.str();
    else if (mag.is_one())
      text += names_[k];
    else
      text += mag.str() + "*" + names_[k];
  }
  report.expression = text.empty() ? "0" : text;
  report.ms = elapsed_ms(t0);
  return report;
}

DiscoverReport discover_lhs(UEA& ctx, const GeneratorSet& gs, const Expr& lhs,
                            int degree_bound) {
  const int bound =
      degree_bound > 0 ? degree_bound : expr_degree(gs, lhs);
  RelationEvaluator ev(ctx, gs);
  const UEAElement target = ev.eval(lhs);
  Discoverer d(ctx, gs, bound);
  return d.solve(target);
}

}  // namespace tphs
