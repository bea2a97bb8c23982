#include "tphs/liealg.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tphs/errors.hpp"

namespace tphs {

namespace {

struct SpaceInfo {
  Space space;
  std::string_view name;
  bool hyperbolic;
  Space compact;
};

constexpr std::array<SpaceInfo, 9> kSpaces{{
    {Space::sphere, "sphere", false, Space::sphere},
    {Space::real_proj, "real_proj", false, Space::real_proj},
    {Space::complex_proj, "complex_proj", false, Space::complex_proj},
    {Space::quat_proj, "quat_proj", false, Space::quat_proj},
    {Space::octonion_proj, "octonion_proj", false, Space::octonion_proj},
    {Space::real_hyp, "real_hyp", true, Space::sphere},
    {Space::complex_hyp, "complex_hyp", true, Space::complex_proj},
    {Space::quat_hyp, "quat_hyp", true, Space::quat_proj},
    {Space::octonion_hyp, "octonion_hyp", true, Space::octonion_proj},
}};

const SpaceInfo& info(Space s) {
  for (const auto& i : kSpaces)
    if (i.space == s) return i;
  throw UnsupportedSpaceError("unknown space enumerator");
}

}  // namespace

std::string_view space_name(Space s) { return info(s).name; }

Space space_from_name(std::string_view name) {
  for (const auto& i : kSpaces)
    if (i.name == name) return i.space;
  throw UnsupportedSpaceError("unknown space name: " + std::string(name));
}

bool is_hyperbolic(Space s) { return info(s).hyperbolic; }

Space compact_form(Space s) { return info(s).compact; }

std::string_view part_name(Part p) {
  switch (p) {
    case Part::a: return "a";
    case Part::p_lambda: return "p_lam";
    case Part::p_2lambda: return "p_2lam";
    case Part::k_lambda: return "k_lam";
    case Part::k_2lambda: return "k_2lam";
    case Part::k0: return "k0";
  }
  return "?";
}

bool in_p(Part p) {
  return p == Part::a || p == Part::p_lambda || p == Part::p_2lambda;
}

LieAlgebra::LieAlgebra(Space space, int n, std::vector<BasisElement> basis,
                       std::map<std::pair<int, int>, BracketRow> constants)
    : space_(space), n_(n), basis_(std::move(basis)), constants_(std::move(constants)) {
  std::unordered_set<std::string> labels;
  bool seen_k0 = false;
  for (int i = 0; i < dim(); ++i) {
    basis_[i].index = i;
    if (!labels.insert(basis_[i].label).second)
      throw InvariantError("duplicate basis label: " + basis_[i].label);
    if (basis_[i].part == Part::k0) {
      seen_k0 = true;
      k0_indices_.push_back(i);
    } else if (seen_k0) {
      throw InvariantError("basis order violated: p-tilde element after k0 at " +
                           basis_[i].label);
    }
  }
  for (auto& [ij, row] : constants_) {
    if (ij.first < 0 || ij.second <= ij.first || ij.second >= dim())
      throw InvariantError("constant row with out-of-order indices");
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, c] : row) {
      if (k < 0 || k >= dim()) throw InvariantError("constant target out of range");
      if (c.is_zero()) throw InvariantError("explicit zero stored in constants");
    }
  }
}

int LieAlgebra::find(std::string_view label) const {
  for (const auto& b : basis_)
    if (b.label == label) return b.index;
  throw InvariantError("no basis element labeled " + std::string(label));
}

int LieAlgebra::part_index(Part p, int ordinal) const {
  for (const auto& b : basis_)
    if (b.part == p && b.ordinal == ordinal) return b.index;
  throw InvariantError("no basis element with part " + std::string(part_name(p)) +
                       " ordinal " + std::to_string(ordinal));
}

int LieAlgebra::part_dim(Part p) const {
  int c = 0;
  for (const auto& b : basis_)
    if (b.part == p) ++c;
  return c;
}

BracketRow LieAlgebra::bracket_units(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  auto it = constants_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == constants_.end()) return {};
  BracketRow row = it->second;
  if (flip)
    for (auto& [k, c] : row) c = -c;
  return row;
}

LieVector LieAlgebra::bracket(const LieVector& x, const LieVector& y) const {
  LieVector r(basis_.size());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      GaussRational c = x[i] * y[j];
      for (const auto& [k, v] : bracket_units(i, j)) r[k] += c * v;
    }
  }
  return r;
}

LieVector LieAlgebra::unit(int i) const {
  LieVector v(basis_.size());
  v.at(i) = GaussRational(Rational(1));
  return v;
}

void LieAlgebra::dump_constants(std::ostream& out) const {
  for (const auto& [ij, row] : constants_) {
    for (const auto& [k, c] : row) {
      if (!c.is_real())
        throw InvariantError("structure-constant dump requires real constants");
      out << ij.first << ' ' << ij.second << ' ' << k << ' ' << c.re.str() << '\n';
    }
  }
}

LieAlgebra LieAlgebra::corrupted(int i, int j, int k, const GaussRational& delta) const {
  auto constants = constants_;
  auto& row = constants[{std::min(i, j), std::max(i, j)}];
  GaussRational d = i < j ? delta : -delta;
  bool found = false;
  for (auto& [kk, c] : row) {
    if (kk == k) {
      c += d;
      found = true;
      break;
    }
  }
  if (!found) row.emplace_back(k, d);
  row.erase(std::remove_if(row.begin(), row.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            row.end());
  return LieAlgebra(space_, n_, basis_, std::move(constants));
}

namespace {

std::string vec_str(const LieAlgebra& g, const LieVector& v) {
  std::string s;
  for (int i = 0; i < g.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].str() + ")*" + g.element(i).label;
  }
  return s.empty() ? "0" : s;
}

// Allowed bracket targets per unordered part pair, from the reductive-split
// inclusion table; an empty set means the bracket must vanish.
std::vector<Part> allowed_parts(Part x, Part y) {
  if (x > y) std::swap(x, y);
  auto is = [&](Part a, Part b) { return x == a && y == b; };
  using P = Part;
  if (is(P::a, P::a)) return {};
  if (is(P::a, P::p_lambda)) return {P::k_lambda};
  if (is(P::a, P::p_2lambda)) return {P::k_2lambda};
  if (is(P::a, P::k_lambda)) return {P::p_lambda};
  if (is(P::a, P::k_2lambda)) return {P::p_2lambda};
  if (is(P::a, P::k0)) return {};
  if (is(P::p_lambda, P::p_lambda)) return {P::k_2lambda, P::k0};
  if (is(P::p_lambda, P::p_2lambda)) return {P::k_lambda};
  if (is(P::p_lambda, P::k_lambda)) return {P::p_2lambda, P::a};
  if (is(P::p_lambda, P::k_2lambda)) return {P::p_lambda};
  if (is(P::p_lambda, P::k0)) return {P::p_lambda};
  if (is(P::p_2lambda, P::p_2lambda)) return {P::k0};
  if (is(P::p_2lambda, P::k_lambda)) return {P::p_lambda};
  if (is(P::p_2lambda, P::k_2lambda)) return {P::a};
  if (is(P::p_2lambda, P::k0)) return {P::p_2lambda};
  if (is(P::k_lambda, P::k_lambda)) return {P::k_2lambda, P::k0};
  if (is(P::k_lambda, P::k_2lambda)) return {P::k_lambda};
  if (is(P::k_lambda, P::k0)) return {P::k_lambda};
  if (is(P::k_2lambda, P::k_2lambda)) return {P::k0};
  if (is(P::k_2lambda, P::k0)) return {P::k_2lambda};
  return {P::k0};  // k0 with k0
}

}  // namespace

AuditReport structure_audit(const LieAlgebra& g) {
  AuditReport rep;
  rep.dim = g.dim();
  rep.q1 = g.q1();
  rep.q2 = g.q2();
  rep.k0_dim = g.part_dim(Part::k0);
  auto issue = [&](std::string s) {
    rep.ok = false;
    rep.issues.push_back(std::move(s));
  };

  // Part-inclusion table (covers k0 closure and [a,k0] = 0).
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      auto allowed = allowed_parts(g.part(i), g.part(j));
      for (const auto& [k, c] : g.bracket_units(i, j)) {
        (void)c;
        if (std::find(allowed.begin(), allowed.end(), g.part(k)) == allowed.end())
          issue("inclusion violated: [" + g.element(i).label + "," +
                g.element(j).label + "] meets " + std::string(part_name(g.part(k))) +
                " via " + g.element(k).label);
      }
    }
  }

  // Jacobi identity on all basis triples.
  for (int i = 0; i < g.dim() && rep.issues.size() < 32; ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      for (int k = j + 1; k < g.dim(); ++k) {
        LieVector acc(g.dim());
        auto add_nested = [&](int a, int b, int c) {
          // [x_a, [x_b, x_c]]
          for (const auto& [m, v] : g.bracket_units(b, c))
            for (const auto& [l, w] : g.bracket_units(a, m)) acc[l] += v * w;
        };
        add_nested(i, j, k);
        add_nested(k, i, j);
        add_nested(j, k, i);
        for (int l = 0; l < g.dim(); ++l) {
          if (!acc[l].is_zero()) {
            issue("Jacobi fails on (" + g.element(i).label + "," + g.element(j).label +
                  "," + g.element(k).label + "): residual " + vec_str(g, acc));
            break;
          }
        }
      }
    }
  }

  // Distinguished brackets (commSpesial1) with R = 1.
  if (g.part_dim(Part::a) != 1) {
    issue("expected a to be one-dimensional");
    return rep;
  }
  int lam = g.part_index(Part::a, 0);
  auto expect = [&](int i, int j, const LieVector& want, const std::string& what) {
    LieVector got = g.bracket(g.unit(i), g.unit(j));
    for (int l = 0; l < g.dim(); ++l) {
      if (got[l] != want[l]) {
        issue("distinguished bracket " + what + " mismatch: got " + vec_str(g, got));
        return;
      }
    }
  };
  // The twisted (hyperbolic) algebras flip the sign of [Lambda, e_*]: the
  // power of i there is 1+1-0 = 2.  The other distinguished brackets carry
  // an even split (1+0-1 or 1+0-1) and keep their compact-form sign.
  const Rational lam_e(is_hyperbolic(g.space()) ? 1 : -1);
  const Rational half(1, 2);
  for (int i = 0; i < g.q1(); ++i) {
    int e = g.part_index(Part::p_lambda, i), f = g.part_index(Part::k_lambda, i);
    LieVector w = g.zero();
    w[f] = GaussRational(lam_e * half);
    expect(lam, e, w, "[Lambda,e_lam]");
    w = g.zero();
    w[e] = GaussRational(half);
    expect(lam, f, w, "[Lambda,f_lam]");
    w = g.zero();
    w[lam] = GaussRational(-half);
    expect(e, f, w, "[e_lam,f_lam]");
  }
  for (int i = 0; i < g.q2(); ++i) {
    int e = g.part_index(Part::p_2lambda, i), f = g.part_index(Part::k_2lambda, i);
    LieVector w = g.zero();
    w[f] = GaussRational(lam_e);
    expect(lam, e, w, "[Lambda,e_2lam]");
    w = g.zero();
    w[e] = GaussRational(Rational(1));
    expect(lam, f, w, "[Lambda,f_2lam]");
    w = g.zero();
    w[lam] = GaussRational(Rational(-1));
    expect(e, f, w, "[e_2lam,f_2lam]");
  }
  return rep;
}

LieAlgebra noncompact_twist(const LieAlgebra& g) {
  if (is_hyperbolic(g.space()))
    throw UnsupportedSpaceError("noncompact_twist expects a compact-family algebra");
  Space target;
  switch (g.space()) {
    case Space::sphere:
    case Space::real_proj: target = Space::real_hyp; break;
    case Space::complex_proj: target = Space::complex_hyp; break;
    case Space::quat_proj: target = Space::quat_hyp; break;
    case Space::octonion_proj: target = Space::octonion_hyp; break;
    default: throw UnsupportedSpaceError("no hyperbolic dual");
  }
  auto s = [&](int i) { return in_p(g.part(i)) ? 1 : 0; };
  std::map<std::pair<int, int>, BracketRow> constants;
  for (const auto& [ij, row] : g.constants()) {
    BracketRow out;
    for (const auto& [k, c] : row) {
      int e = s(ij.first) + s(ij.second) - s(k);
      if (e & 1)
        throw InvariantError("non-integral twist at [" + g.element(ij.first).label +
                             "," + g.element(ij.second).label + "] -> " +
                             g.element(k).label);
      // i^e with even e is (-1)^(e/2)
      GaussRational v = (e == 2 || e == -2) ? -c : c;
      if (!v.is_real())
        throw InvariantError("twisted constant is not real at [" +
                             g.element(ij.first).label + "," +
                             g.element(ij.second).label + "]");
      out.emplace_back(k, v);
    }
    constants[ij] = std::move(out);
  }
  return LieAlgebra(target, g.n(), g.basis(), std::move(constants));
}

}  // namespace tphs
