#include "tphs/jordan.hpp"

#include <random>

#include "tphs/errors.hpp"

namespace tphs {

bool JordanElement::is_zero() const {
  for (int i = 0; i < 3; ++i)
    if (!a[i].is_zero() || !x[i].is_zero()) return false;
  return true;
}

JordanElement JordanElement::operator-() const {
  JordanElement r;
  for (int i = 0; i < 3; ++i) {
    r.a[i] = -a[i];
    r.x[i] = -x[i];
  }
  return r;
}

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  for (int i = 0; i < 3; ++i) {
    a[i] += o.a[i];
    x[i] += o.x[i];
  }
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  for (int i = 0; i < 3; ++i) {
    a[i] -= o.a[i];
    x[i] -= o.x[i];
  }
  return *this;
}

JordanElement operator*(const Rational& s, JordanElement v) {
  for (int i = 0; i < 3; ++i) {
    v.a[i] *= s;
    v.x[i] = s * v.x[i];
  }
  return v;
}

JordanElement JordanElement::E(int i) {
  JordanElement r;
  r.a[i] = Rational(1);
  return r;
}

JordanElement JordanElement::X(int i, const Octonion& xi) {
  JordanElement r;
  r.x[i] = xi;
  return r;
}

std::string JordanElement::str() const {
  std::string s;
  auto app = [&](const std::string& piece) {
    if (!s.empty()) s += " + ";
    s += piece;
  };
  for (int i = 0; i < 3; ++i)
    if (!a[i].is_zero()) app(a[i].str() + "*E" + std::to_string(i + 1));
  for (int i = 0; i < 3; ++i)
    if (!x[i].is_zero()) app("X" + std::to_string(i + 1) + "(" + x[i].str() + ")");
  return s.empty() ? "0" : s;
}

JordanElement jordan_mul(const OctonionTable& t, const JordanElement& X,
                         const JordanElement& Y) {
  JordanElement r;
  // E_i o E_i
  for (int i = 0; i < 3; ++i) r.a[i] = X.a[i] * Y.a[i];
  // E_i o X_j for i != j: each X_j(xi) picks up half the off-index diagonal.
  for (int j = 0; j < 3; ++j) {
    Rational c;
    for (int i = 0; i < 3; ++i)
      if (i != j) c += X.a[i];
    Rational d;
    for (int i = 0; i < 3; ++i)
      if (i != j) d += Y.a[i];
    r.x[j] += Rational(1, 2) * (c * Y.x[j] + d * X.x[j]);
  }
  for (int i = 0; i < 3; ++i) {
    // X_i o X_i = <xi,eta>(E - E_i)
    Rational p = inner(X.x[i], Y.x[i]);
    if (!p.is_zero())
      for (int j = 0; j < 3; ++j)
        if (j != i) r.a[j] += p;
    // X_i o X_j, j = i+1 mod 3: X_{i+j}(conj(xi eta))/2; the opposite order
    // follows by commutativity of o.
    int j = (i + 1) % 3, k = (i + j + 1) % 3;
    Octonion cross = mul(t, X.x[i], Y.x[j]) + mul(t, Y.x[i], X.x[j]);
    if (!cross.is_zero()) r.x[k] += Rational(1, 2) * cross.conj();
  }
  return r;
}

namespace {

// Off-diagonal slot of the X_i/Y_i component: xi sits at (r,c), its
// conjugate (negated for Y) at (c,r).
void component_slots(int i, int& r, int& c) {
  r = (i + 1) % 3;
  c = (i + 2) % 3;
}

}  // namespace

OctMatrix3 to_matrix(const JordanElement& X) {
  OctMatrix3 m{};
  for (int i = 0; i < 3; ++i) {
    m[i][i] = X.a[i] * Octonion::unit(0);
    int r, c;
    component_slots(i, r, c);
    m[r][c] += X.x[i];
    m[c][r] += X.x[i].conj();
  }
  return m;
}

JordanElement from_matrix(const OctMatrix3& m) {
  JordanElement r;
  for (int i = 0; i < 3; ++i) {
    if (!m[i][i].im_part().is_zero())
      throw InvariantError("h3 matrix has a non-real diagonal entry");
    r.a[i] = m[i][i].re();
  }
  for (int i = 0; i < 3; ++i) {
    int rr, cc;
    component_slots(i, rr, cc);
    if (m[cc][rr] != m[rr][cc].conj())
      throw InvariantError("h3 matrix is not Hermitian");
    r.x[i] = m[rr][cc];
  }
  return r;
}

OctMatrix3 mat_mul(const OctonionTable& t, const OctMatrix3& A, const OctMatrix3& B) {
  OctMatrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += mul(t, A[i][k], B[k][j]);
  return r;
}

OctMatrix3 mat_sub(const OctMatrix3& A, const OctMatrix3& B) {
  OctMatrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = A[i][j] - B[i][j];
  return r;
}

JordanElement jordan_mul_matrix(const OctonionTable& t, const JordanElement& X,
                                const JordanElement& Y) {
  OctMatrix3 a = to_matrix(X), b = to_matrix(Y);
  OctMatrix3 ab = mat_mul(t, a, b), ba = mat_mul(t, b, a);
  OctMatrix3 s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s[i][j] = Rational(1, 2) * (ab[i][j] + ba[i][j]);
  return from_matrix(s);
}

Rational trace_form(const OctonionTable& t, const JordanElement& X,
                    const JordanElement& Y) {
  JordanElement p = jordan_mul(t, X, Y);
  return p.a[0] + p.a[1] + p.a[2];
}

OctMatrix3 y_matrix(int i, const Octonion& xi) {
  OctMatrix3 m{};
  int r, c;
  component_slots(i, r, c);
  m[r][c] = xi;
  m[c][r] = -xi.conj();
  return m;
}

JordanElement ad_y(const OctonionTable& t, int i, const Octonion& xi,
                   const JordanElement& X) {
  OctMatrix3 y = y_matrix(i, xi), x = to_matrix(X);
  return from_matrix(mat_sub(mat_mul(t, y, x), mat_mul(t, x, y)));
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

JordanElement random_jordan(std::mt19937_64& rng) {
  JordanElement j;
  for (int i = 0; i < 3; ++i) {
    j.a[i] = random_rational(rng);
    j.x[i] = random_octonion(rng);
  }
  return j;
}

}  // namespace

IdentityReport jordan_checks(const OctonionTable& t, std::size_t samples,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto witness = [](const std::string& id, const JordanElement& X, const JordanElement& Y) {
    return IdentityReport{false,
                          id + " failed at X=" + X.str() + ", Y=" + Y.str()};
  };
  for (std::size_t s = 0; s < samples; ++s) {
    JordanElement X = random_jordan(rng), Y = random_jordan(rng), Z = random_jordan(rng);
    JordanElement XY = jordan_mul(t, X, Y);
    if (XY != jordan_mul(t, Y, X)) return witness("X o Y = Y o X", X, Y);
    if (XY != jordan_mul_matrix(t, X, Y))
      return witness("componentwise product = matrix product", X, Y);
    JordanElement X2 = jordan_mul(t, X, X);
    if (jordan_mul(t, jordan_mul(t, X2, Y), X) != jordan_mul(t, X2, jordan_mul(t, Y, X)))
      return witness("(X^2 o Y) o X = X^2 o (Y o X)", X, Y);
    if (trace_form(t, XY, Z) != trace_form(t, X, jordan_mul(t, Y, Z)))
      return witness("A(X o Y, Z) = A(X, Y o Z)", X, Y);
    Rational n2;
    for (int i = 0; i < 3; ++i) {
      n2 += X.a[i] * X.a[i];
      n2 += Rational(2) * norm2(X.x[i]);
    }
    if (trace_form(t, X, X) != n2)
      return witness("|X|^2 = sum a_i^2 + 2|x_i|^2", X, X);
  }
  return {};
}

IdentityReport ad_y_derivation_check(const OctonionTable& t, std::size_t samples,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    int i = static_cast<int>(rng() % 3);
    Octonion xi = random_octonion(rng);
    JordanElement X = random_jordan(rng), Z = random_jordan(rng);
    JordanElement lhs = ad_y(t, i, xi, jordan_mul(t, X, Z));
    JordanElement rhs =
        jordan_mul(t, ad_y(t, i, xi, X), Z) + jordan_mul(t, X, ad_y(t, i, xi, Z));
    if (lhs != rhs)
      return {false, "ad Y_" + std::to_string(i + 1) + "(" + xi.str() +
                         ") failed the derivation identity at X=" + X.str() +
                         ", Z=" + Z.str()};
  }
  return {};
}

}  // namespace tphs
