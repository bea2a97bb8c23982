#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tphs/errors.hpp"
#include "tphs/liealg.hpp"

// The octonionic family: f4 as derivations of the exceptional Jordan
// algebra h3(Ca), realized on the reductive split k' + m0.  An element is a
// pair (K, m): K is the so(8) matrix acting on Ca_3 (their kappa-image in
// k'), m = (xi_1, xi_2, xi_3) collects the ad Y_i(xi_i) components of m0.
// Brackets follow three coupling rules: operator commutators inside kappa,
// the triality components A^(i) of K acting on slot i, and the slot-mixing
// products with conjugation.

namespace tphs {

LieAlgebra build_classical(Space space, int n);

namespace {

struct F4El {
  OctOp K;
  std::array<Octonion, 3> m{};
};

// Triality component of a skew K acting on slot `space` (1, 2 or 3):
// K = sum K(0,a) A_{0a} + sum_{a<b} K(a,b) A_{ab}; A_{0a} acts as
// (L_a, R_a, A_{0a}) and A_{ab} as (L_{b,a}, R_{b,a}, A_{ab}).
OctOp triality_component(const OctonionTable& t, const OctOp& K, int space) {
  if (space == 3) return K;
  OctOp out;
  for (int a = 1; a < 8; ++a) {
    const Rational& c = K.entry(0, a);
    if (c.is_zero()) continue;
    OctOp gen = (space == 1) ? OctOp::L(t, a) : OctOp::R(t, a);
    out += c * gen;
  }
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      const Rational& c = K.entry(a, b);
      if (c.is_zero()) continue;
      OctOp gen = (space == 1) ? OctOp::L(t, b, a) : OctOp::R(t, b, a);
      out += c * gen;
    }
  return out;
}

F4El f4_bracket(const OctonionTable& t, const F4El& x, const F4El& y) {
  F4El r;
  r.K = x.K.commutator(y.K);
  // [kappa_K, ad Y_i(xi)] = ad Y_i(K^(i) xi)
  for (int i = 0; i < 3; ++i) {
    if (!y.m[i].is_zero())
      r.m[i] += triality_component(t, x.K, i + 1).apply(y.m[i]);
    if (!x.m[i].is_zero())
      r.m[i] -= triality_component(t, y.K, i + 1).apply(x.m[i]);
  }
  // [ad Y_i(xi), ad Y_j(eta)]: same slot couples through the C-operators,
  // adjacent slots multiply into the third with a conjugation.
  for (int i = 0; i < 3; ++i) {
    const Octonion& xi = x.m[i];
    if (xi.is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      const Octonion& eta = y.m[j];
      if (eta.is_zero()) continue;
      if (i == j) {
        r.K = r.K + c_operator(t, i + 1, xi, eta, 3);
      } else if (j == (i + 1) % 3) {
        r.m[(i + 2) % 3] -= mul(t, xi, eta).conj();
      } else {  // j == (i + 2) % 3
        r.m[(i + 1) % 3] += mul(t, eta, xi).conj();
      }
    }
  }
  return r;
}

// Distinguished basis (52 elements):
//   0         Lambda        = 1/2 ad Y_3(e_0)                  (a)
//   1..8      e_lam(i)      = -1/2 ad Y_2(conj(e_i)), i=0..7   (p_lambda)
//   9..15     e_2lam(a)     = 1/2 ad Y_3(e_a), a=1..7          (p_2lambda)
//   16..23    f_lam(i)      = 1/2 ad Y_1(e_i), i=0..7          (k_lambda)
//   24..30    f_2lam(a)     = kappa A_{0a}, a=1..7             (k_2lambda)
//   31..51    A(a,b)        = kappa A_{ab}, 1<=a<b<=7          (k0)
std::vector<F4El> f4_basis() {
  std::vector<F4El> basis;
  const Rational half(1, 2);
  {
    F4El el;
    el.m[2] = half * Octonion::unit(0);
    basis.push_back(el);  // Lambda
  }
  for (int i = 0; i < 8; ++i) {
    F4El el;
    el.m[1] = Rational(-1, 2) * Octonion::unit(i).conj();
    basis.push_back(el);
  }
  for (int a = 1; a < 8; ++a) {
    F4El el;
    el.m[2] = half * Octonion::unit(a);
    basis.push_back(el);
  }
  for (int i = 0; i < 8; ++i) {
    F4El el;
    el.m[0] = half * Octonion::unit(i);
    basis.push_back(el);
  }
  for (int a = 1; a < 8; ++a) {
    F4El el;
    el.K = OctOp::A(0, a);
    basis.push_back(el);
  }
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      F4El el;
      el.K = OctOp::A(a, b);
      basis.push_back(el);
    }
  return basis;
}

std::vector<BasisElement> f4_meta() {
  std::vector<BasisElement> meta;
  meta.push_back({0, "Lambda", Part::a, 0});
  for (int i = 0; i < 8; ++i)
    meta.push_back({0, "e_lam(" + std::to_string(i) + ")", Part::p_lambda, i});
  for (int a = 1; a < 8; ++a)
    meta.push_back({0, "e_2lam(" + std::to_string(a) + ")", Part::p_2lambda, a - 1});
  for (int i = 0; i < 8; ++i)
    meta.push_back({0, "f_lam(" + std::to_string(i) + ")", Part::k_lambda, i});
  for (int a = 1; a < 8; ++a)
    meta.push_back({0, "f_2lam(" + std::to_string(a) + ")", Part::k_2lambda, a - 1});
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      meta.push_back({0, "A(" + std::to_string(a) + "," + std::to_string(b) + ")",
                      Part::k0, 0});
  int ord = 0;
  for (auto& el : meta)
    if (el.part == Part::k0) el.ordinal = ord++;
  return meta;
}

// Reads the coordinates of (K, m) off the distinguished basis:
//   ad Y_1(xi) = 2 sum xi_i f_lam(i)
//   ad Y_2(xi) = -2 xi_0 e_lam(0) + 2 sum_{i>=1} xi_i e_lam(i)
//   ad Y_3(xi) = 2 xi_0 Lambda + 2 sum_{a>=1} xi_a e_2lam(a)
//   kappa_K    = sum K(0,a) f_2lam(a) + sum_{a<b} K(a,b) A(a,b)
std::vector<Rational> f4_coords(const F4El& x) {
  if (!x.K.is_skew())
    throw InvariantError("f4 bracket left kappa-part non-skew");
  std::vector<Rational> c(52);
  const Rational two(2);
  c[0] = two * x.m[2][0];
  c[1] = Rational(-2) * x.m[1][0];
  for (int i = 1; i < 8; ++i) c[1 + i] = two * x.m[1][i];
  for (int a = 1; a < 8; ++a) c[9 + (a - 1)] = two * x.m[2][a];
  for (int i = 0; i < 8; ++i) c[16 + i] = two * x.m[0][i];
  for (int a = 1; a < 8; ++a) c[24 + (a - 1)] = x.K.entry(0, a);
  int pos = 31;
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) c[pos++] = x.K.entry(a, b);
  return c;
}

LieAlgebra build_f4(const OctonionTable& t) {
  auto basis = f4_basis();
  std::map<std::pair<int, int>, BracketRow> constants;
  for (int i = 0; i < 52; ++i)
    for (int j = i + 1; j < 52; ++j) {
      auto c = f4_coords(f4_bracket(t, basis[i], basis[j]));
      BracketRow row;
      for (int k = 0; k < 52; ++k)
        if (!c[k].is_zero()) row.emplace_back(k, GaussRational(c[k]));
      if (!row.empty()) constants[{i, j}] = std::move(row);
    }
  return LieAlgebra(Space::octonion_proj, 2, f4_meta(), std::move(constants));
}

}  // namespace

LieAlgebra build_algebra(Space space, int n, const OctonionTable& table) {
  if (is_hyperbolic(space)) {
    LieAlgebra compact = build_algebra(compact_form(space), n, table);
    return noncompact_twist(compact);
  }
  if (space == Space::octonion_proj) {
    if (n != 2)
      throw UnsupportedSpaceError("the octonionic plane exists only for n = 2");
    return build_f4(table);
  }
  return build_classical(space, n);
}

LieAlgebra build_algebra(Space space, int n) {
  return build_algebra(space, n, OctonionTable::cayley_dickson());
}

}  // namespace tphs
