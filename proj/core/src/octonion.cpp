#include "tphs/octonion.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "tphs/errors.hpp"

namespace tphs {

namespace {

// Signed quaternion unit: index 0..3 over basis 1,i,j,k.
struct QUnit {
  int sign;
  int index;
};

// Quaternion unit product (ij = k, jk = i, ki = j).
QUnit qmul(QUnit a, QUnit b) {
  static const int idx[4][4] = {{0, 1, 2, 3},  //
                                {1, 0, 3, 2},
                                {2, 3, 0, 1},
                                {3, 2, 1, 0}};
  static const int sgn[4][4] = {{+1, +1, +1, +1},
                                {+1, -1, +1, -1},
                                {+1, -1, -1, +1},
                                {+1, +1, -1, -1}};
  return {a.sign * b.sign * sgn[a.index][b.index], idx[a.index][b.index]};
}

QUnit qconj(QUnit a) { return {a.index == 0 ? a.sign : -a.sign, a.index}; }

}  // namespace

OctonionTable OctonionTable::cayley_dickson() {
  // e_m = (q, 0) for m = 0..3 and e_{m+4} = (0, q) with q the quaternion unit
  // of index m; (a,b)(c,d) = (ac - d-bar b, da + b c-bar).
  OctonionTable t;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      QUnit a{+1, i & 3}, b{+1, j & 3};
      bool ihi = i >= 4, jhi = j >= 4;
      QUnit r;
      bool rhi;
      if (!ihi && !jhi) {  // (a,0)(c,0) = (ac, 0)
        r = qmul(a, b);
        rhi = false;
      } else if (!ihi && jhi) {  // (a,0)(0,d) = (0, da)
        r = qmul(b, a);
        rhi = true;
      } else if (ihi && !jhi) {  // (0,b)(c,0) = (0, b c-bar)
        r = qmul(a, qconj(b));
        rhi = true;
      } else {  // (0,b)(0,d) = (-d-bar b, 0)
        r = qmul(qconj(b), a);
        r.sign = -r.sign;
        rhi = false;
      }
      t.t_[i][j] = pack(r.sign, r.index + (rhi ? 4 : 0));
    }
  }
  return t;
}

OctonionTable OctonionTable::relabeled(const OctonionTable& base,
                                       const std::array<int, 8>& perm) {
  if (perm[0] != 0) throw InvariantError("octonion relabeling must fix e0");
  std::array<int, 8> inv{};
  std::array<bool, 8> seen{};
  for (int i = 0; i < 8; ++i) {
    if (perm[i] < 0 || perm[i] > 7 || seen[perm[i]])
      throw InvariantError("octonion relabeling is not a permutation");
    seen[perm[i]] = true;
    inv[perm[i]] = i;
  }
  OctonionTable t;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      SignedUnit u = base.unit_mul(perm[i], perm[j]);
      t.t_[i][j] = pack(u.sign, inv[u.index]);
    }
  }
  return t;
}

OctonionTable OctonionTable::alternate() {
  // Swapping the labels of e3 and e7 in the Cayley-Dickson table gives an
  // entrywise different, still valid labeling (e1 e2 = e7 here).
  return relabeled(cayley_dickson(), {0, 1, 2, 7, 4, 5, 6, 3});
}

void OctonionTable::validate() const {
  auto fail = [](const std::string& what) { throw InvariantError("octonion table: " + what); };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      SignedUnit u = unpack(t_[i][j]);
      if (u.index < 0 || u.index > 7 || (u.sign != 1 && u.sign != -1))
        fail("entry out of range");
    }
  }
  for (int i = 0; i < 8; ++i) {
    if (t_[0][i] != pack(+1, i) || t_[i][0] != pack(+1, i)) fail("e0 is not the identity");
    if (i > 0 && t_[i][i] != pack(-1, 0)) fail("imaginary unit square is not -e0");
  }
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      SignedUnit u = unpack(t_[i][j]), v = unpack(t_[j][i]);
      if (u.index != v.index || u.sign != -v.sign || u.index == 0)
        fail("imaginary units must anticommute into an imaginary unit");
    }
  }
  // Alternativity at table level: the associator [e_i,e_j,e_k] must vanish
  // whenever two of the three indices coincide, for all 512 triples.
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int k = 0; k < 8; ++k) {
        if (i != j && j != k && i != k) continue;
        SignedUnit ij = unpack(t_[i][j]);
        SignedUnit l = unpack(t_[ij.index][k]);
        SignedUnit jk = unpack(t_[j][k]);
        SignedUnit r = unpack(t_[i][jk.index]);
        if (l.index != r.index || ij.sign * l.sign != jk.sign * r.sign)
          fail("associator does not alternate on basis triples");
      }
    }
  }
}

void OctonionTable::dump(std::ostream& out) const {
  out << "# octonion multiplication table: row i, column j holds s*(k+1)\n"
         "# meaning e_i e_j = s*e_k\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) out << (j ? " " : "") << t_[i][j];
    out << "\n";
  }
}

OctonionTable OctonionTable::load(std::istream& in) {
  OctonionTable t;
  int got = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
    std::istringstream ss{std::string(sv)};
    int v;
    while (ss >> v) {
      if (got >= 64) throw ParseError("octonion table has more than 64 entries", lineno, 1);
      if (v == 0 || v < -8 || v > 8)
        throw ParseError("octonion table entry out of range", lineno, 1);
      t.t_[got / 8][got % 8] = v > 0 ? pack(+1, v - 1) : pack(-1, -v - 1);
      ++got;
    }
    if (!ss.eof()) throw ParseError("malformed octonion table entry", lineno, 1);
  }
  if (got != 64) throw ParseError("octonion table needs exactly 64 entries", lineno, 1);
  t.validate();
  return t;
}

bool Octonion::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
  return r;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion operator*(const Rational& s, Octonion a) {
  for (int i = 0; i < 8; ++i) a.c_[i] *= s;
  return a;
}

Octonion Octonion::conj() const {
  Octonion r = -*this;
  r.c_[0] = c_[0];
  return r;
}

Octonion Octonion::im_part() const {
  Octonion r = *this;
  r.c_[0] = Rational(0);
  return r;
}

std::string Octonion::str() const {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (s.empty()) {
      if (a.is_negative()) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.is_negative() ? " - " : " + ";
      if (a.is_negative()) a = -a;
    }
    if (!a.is_one()) s += a.str() + "*";
    s += "e" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Octonion mul(const OctonionTable& t, const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j].is_zero()) continue;
      auto u = t.unit_mul(i, j);
      Rational term = a[i] * b[j];
      if (u.sign < 0)
        r[u.index] -= term;
      else
        r[u.index] += term;
    }
  }
  return r;
}

Rational inner(const Octonion& a, const Octonion& b) {
  Rational s;
  for (int i = 0; i < 8; ++i) s.add_mul(a[i], b[i]);
  return s;
}

Rational norm2(const Octonion& a) { return inner(a, a); }

OctOp OctOp::identity() {
  OctOp r;
  for (int i = 0; i < 8; ++i) r.m_[i][i] = Rational(1);
  return r;
}

namespace {

// Builds the operator x -> f(x) columnwise from images of basis units.
template <typename F>
OctOp from_action(F&& f) {
  OctOp r;
  for (int j = 0; j < 8; ++j) {
    Octonion img = f(Octonion::unit(j));
    for (int i = 0; i < 8; ++i) r.entry(i, j) = img[i];
  }
  return r;
}

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

}  // namespace

OctOp OctOp::L(const OctonionTable& t, int alpha) {
  return from_action([&](const Octonion& x) {
    return half() * mul(t, Octonion::unit(alpha), x);
  });
}

OctOp OctOp::L(const OctonionTable& t, int alpha, int beta) {
  return from_action([&](const Octonion& x) {
    return half() * mul(t, Octonion::unit(alpha), mul(t, Octonion::unit(beta), x));
  });
}

OctOp OctOp::R(const OctonionTable& t, int alpha) {
  return from_action([&](const Octonion& x) {
    return half() * mul(t, x, Octonion::unit(alpha));
  });
}

OctOp OctOp::R(const OctonionTable& t, int alpha, int beta) {
  return from_action([&](const Octonion& x) {
    return half() * mul(t, mul(t, x, Octonion::unit(beta)), Octonion::unit(alpha));
  });
}

OctOp OctOp::V(const OctonionTable& t, int alpha) {
  return L(t, alpha) + R(t, alpha);
}

OctOp OctOp::V(const OctonionTable& t, int alpha, int beta) {
  // V_{a,b} x = 1/2( e_a (e_b x) + x (e_b e_a) ), the eta = 1 specialization
  // of the triality identity for the pair (L_{a,b}, R_{a,b}).
  Octonion ba = mul(t, Octonion::unit(beta), Octonion::unit(alpha));
  return from_action([&](const Octonion& x) {
    Octonion v = mul(t, Octonion::unit(alpha), mul(t, Octonion::unit(beta), x));
    v += mul(t, x, ba);
    return half() * v;
  });
}

OctOp OctOp::A(int i, int j) {
  OctOp r;
  r.m_[i][j] = Rational(1);
  r.m_[j][i] = Rational(-1);
  return r;
}

OctOp OctOp::conjugated() const {
  // iota is diag(1,-1,...,-1); conjugation flips the sign of row 0 and
  // column 0 (off-diagonal blocks).
  OctOp r = *this;
  for (int k = 1; k < 8; ++k) {
    r.m_[0][k] = -r.m_[0][k];
    r.m_[k][0] = -r.m_[k][0];
  }
  return r;
}

Octonion OctOp::apply(const Octonion& x) const {
  Octonion r;
  for (int j = 0; j < 8; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < 8; ++i) r[i].add_mul(m_[i][j], x[j]);
  }
  return r;
}

OctOp OctOp::compose(const OctOp& o) const {
  OctOp r;
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      if (m_[i][k].is_zero()) continue;
      for (int j = 0; j < 8; ++j) r.m_[i][j].add_mul(m_[i][k], o.m_[k][j]);
    }
  return r;
}

OctOp OctOp::commutator(const OctOp& o) const {
  return compose(o) - o.compose(*this);
}

OctOp OctOp::operator-() const {
  OctOp r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.m_[i][j] = -m_[i][j];
  return r;
}

OctOp& OctOp::operator+=(const OctOp& o) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m_[i][j] += o.m_[i][j];
  return *this;
}

OctOp& OctOp::operator-=(const OctOp& o) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m_[i][j] -= o.m_[i][j];
  return *this;
}

OctOp operator*(const Rational& s, OctOp a) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a.m_[i][j] *= s;
  return a;
}

bool OctOp::is_zero() const {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!m_[i][j].is_zero()) return false;
  return true;
}

bool OctOp::is_skew() const {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= i; ++j)
      if (m_[i][j] != -m_[j][i]) return false;
  return true;
}

OctOp c_operator(const OctonionTable& t, int i, const Octonion& xi,
                 const Octonion& eta, int space) {
  if (i < 1 || i > 3 || space < 1 || space > 3)
    throw InvariantError("c_operator indices must lie in 1..3");
  // The action of C_{i,xi,eta} on Ca_s depends only on s - i mod 3 and is
  // one of three closed bilinear forms.
  int d = ((space - i) % 3 + 3) % 3;
  if (d == 0) {
    // zeta -> 4<xi,zeta>eta - 4<eta,zeta>xi
    return from_action([&](const Octonion& z) {
      return (Rational(4) * inner(xi, z)) * eta - (Rational(4) * inner(eta, z)) * xi;
    });
  }
  if (d == 2) {
    // zeta -> (zeta xi) eta-bar - (zeta eta) xi-bar
    return from_action([&](const Octonion& z) {
      return mul(t, mul(t, z, xi), eta.conj()) - mul(t, mul(t, z, eta), xi.conj());
    });
  }
  // d == 1: zeta -> eta-bar (xi zeta) - xi-bar (eta zeta)
  return from_action([&](const Octonion& z) {
    return mul(t, eta.conj(), mul(t, xi, z)) - mul(t, xi.conj(), mul(t, eta, z));
  });
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

Octonion random_octonion(std::mt19937_64& rng) {
  Octonion x;
  for (int i = 0; i < 8; ++i) x[i] = random_rational(rng);
  return x;
}

}  // namespace

IdentityReport oct_identities_check(const OctonionTable& t, std::size_t samples,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto witness = [](const std::string& id, const Octonion& a, const Octonion& b,
                    const Octonion& c) {
    return IdentityReport{false, id + " failed at a=" + a.str() + ", b=" + b.str() +
                                     ", c=" + c.str()};
  };
  for (std::size_t s = 0; s < samples; ++s) {
    Octonion a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
    Octonion ab = mul(t, a, b);
    // left/right alternativity
    if (mul(t, a, ab) != mul(t, mul(t, a, a), b))
      return witness("a(ab) = (aa)b", a, b, c);
    if (mul(t, ab, b) != mul(t, a, mul(t, b, b)))
      return witness("(ab)b = a(bb)", a, b, c);
    // polarized alternativity
    Octonion lhs = mul(t, a, mul(t, b.conj(), c)) + mul(t, b, mul(t, a.conj(), c));
    if (lhs != (Rational(2) * inner(a, b)) * c)
      return witness("a(b-bar c) + b(a-bar c) = 2<a,b>c", a, b, c);
    lhs = mul(t, mul(t, c, b.conj()), a) + mul(t, mul(t, c, a.conj()), b);
    if (lhs != (Rational(2) * inner(a, b)) * c)
      return witness("(c b-bar)a + (c a-bar)b = 2<a,b>c", a, b, c);
    // conjugation is an anti-automorphism
    if (ab.conj() != mul(t, b.conj(), a.conj()))
      return witness("conj(ab) = conj(b)conj(a)", a, b, c);
    // composition algebra norm
    if (norm2(ab) != norm2(a) * norm2(b)) return witness("|ab|^2 = |a|^2|b|^2", a, b, c);
    // associativity of the scalar product
    if (inner(ab, c) != inner(b, mul(t, a.conj(), c)))
      return witness("<ab,c> = <b, a-bar c>", a, b, c);
  }
  return {};
}

IdentityReport triality_check(const OctonionTable& t) {
  // Exhaustive over basis pairs (xi, eta) for every generator triple.
  auto check_triple = [&](const OctOp& a1, const OctOp& a2, const OctOp& v,
                          const std::string& name) -> IdentityReport {
    OctOp a3 = v.conjugated();  // iota o V o iota
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        Octonion xi = Octonion::unit(i), eta = Octonion::unit(j);
        Octonion lhs = mul(t, a1.apply(xi), eta) + mul(t, xi, a2.apply(eta));
        Octonion rhs = a3.apply(mul(t, xi, eta).conj()).conj();
        if (lhs != rhs)
          return {false, "triality for " + name + " failed at xi=e" + std::to_string(i) +
                             ", eta=e" + std::to_string(j)};
      }
    }
    if (!a1.is_skew() || !a2.is_skew() || !a3.is_skew())
      return {false, "triality triple " + name + " is not skew"};
    return {};
  };
  for (int a = 1; a < 8; ++a) {
    auto rep = check_triple(OctOp::L(t, a), OctOp::R(t, a), OctOp::V(t, a),
                            "(L_" + std::to_string(a) + ", R_" + std::to_string(a) + ")");
    if (!rep.ok) return rep;
  }
  for (int a = 1; a < 8; ++a) {
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      auto rep = check_triple(OctOp::L(t, a, b), OctOp::R(t, a, b), OctOp::V(t, a, b),
                              "(L_" + std::to_string(a) + std::to_string(b) + ", R_" +
                                  std::to_string(a) + std::to_string(b) + ")");
      if (!rep.ok) return rep;
    }
  }
  return {};
}

}  // namespace tphs
