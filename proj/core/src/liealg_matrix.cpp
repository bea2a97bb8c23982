#include <array>
#include <string>
#include <vector>

#include "tphs/errors.hpp"
#include "tphs/liealg.hpp"
#include "tphs/linsolve.hpp"

// Builders for the classical families: the algebra of quaternionic
// anti-Hermitian matrices u_H(n+1), su(n+1) and so(n+1), realized as exact
// quaternion matrices.  The distinguished ordered basis is assembled first,
// then every pairwise commutator is expanded back over that basis with one
// exact linear solve.

namespace tphs {

namespace {

// Quaternion scalar over the units (1, i, j, k).
using QE = std::array<Rational, 4>;

QE qe_zero() { return {}; }

QE qmul(const QE& a, const QE& b) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  QE r = qe_zero();
  for (int u = 0; u < 4; ++u) {
    if (a[u].is_zero()) continue;
    for (int v = 0; v < 4; ++v) {
      if (b[v].is_zero()) continue;
      Rational t = a[u] * b[v];
      if (sgn[u][v] < 0)
        r[idx[u][v]] -= t;
      else
        r[idx[u][v]] += t;
    }
  }
  return r;
}

// Square matrix over quaternions; indices are 1-based to mirror E_{kj}.
struct QMat {
  int m = 0;
  std::vector<QE> e;

  explicit QMat(int size) : m(size), e(size * size) {}
  QE& at(int k, int j) { return e[(k - 1) * m + (j - 1)]; }
  const QE& at(int k, int j) const { return e[(k - 1) * m + (j - 1)]; }

  // adds c * unit_u * (E_{kj} + s E_{jk})
  void add_sym(int k, int j, int unit, const Rational& c, int s) {
    at(k, j)[unit] += c;
    if (s < 0)
      at(j, k)[unit] -= c;
    else
      at(j, k)[unit] += c;
  }
};

QMat qcommutator(const QMat& a, const QMat& b) {
  QMat r(a.m);
  for (int i = 1; i <= a.m; ++i)
    for (int l = 1; l <= a.m; ++l) {
      QE acc = qe_zero();
      for (int k = 1; k <= a.m; ++k) {
        QE ab = qmul(a.at(i, k), b.at(k, l));
        QE ba = qmul(b.at(i, k), a.at(k, l));
        for (int u = 0; u < 4; ++u) acc[u] += ab[u] - ba[u];
      }
      r.at(i, l) = acc;
    }
  return r;
}

// Basis matrices of (BasisUH): Psi skew over unit 1, Upsilon/Omega/Theta
// symmetric over i, j, k.
QMat psi(int m, int k, int j) {
  QMat r(m);
  r.add_sym(k, j, 0, Rational(1, 2), -1);
  return r;
}

QMat sym(int m, int unit, int k, int j) {
  QMat r(m);
  r.add_sym(k, j, unit, Rational(1, 2), +1);
  return r;
}

// (i/2)(E_11 - E_22) and friends, generalized to c1*E_{d1,d1} + c2*E_{d2,d2}.
QMat diag2(int m, int unit, int d1, const Rational& c1, int d2, const Rational& c2) {
  QMat r(m);
  r.at(d1, d1)[unit] += c1;
  r.at(d2, d2)[unit] += c2;
  return r;
}

QMat qscale(QMat a, const Rational& c) {
  for (auto& q : a.e)
    for (auto& v : q) v *= c;
  return a;
}

QMat qsum_diag(int m, int unit) {
  QMat r(m);
  for (int k = 1; k <= m; ++k) r.at(k, k)[unit] += Rational(1);
  return r;
}

LieAlgebra assemble(Space space, int n, std::vector<BasisElement> meta,
                    const std::vector<QMat>& mats) {
  const int dim = static_cast<int>(mats.size());
  const int m = mats[0].m;
  const int rows = 4 * m * m;
  RationalMatrix basis(rows, dim);
  for (int c = 0; c < dim; ++c)
    for (int cell = 0; cell < m * m; ++cell)
      for (int u = 0; u < 4; ++u) basis.at(4 * cell + u, c) = mats[c].e[cell][u];

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
  RationalMatrix targets(rows, static_cast<int>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    QMat c = qcommutator(mats[pairs[p].first], mats[pairs[p].second]);
    for (int cell = 0; cell < m * m; ++cell)
      for (int u = 0; u < 4; ++u)
        targets.at(4 * cell + u, static_cast<int>(p)) = c.e[cell][u];
  }
  auto coords = solve_in_span(basis, targets);
  if (!coords)
    throw InvariantError("family basis failed to span its own commutators");
  std::map<std::pair<int, int>, BracketRow> constants;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    BracketRow row;
    for (int k = 0; k < dim; ++k) {
      const Rational& c = coords->at(k, static_cast<int>(p));
      if (!c.is_zero()) row.emplace_back(k, GaussRational(c));
    }
    if (!row.empty()) constants[pairs[p]] = std::move(row);
  }
  return LieAlgebra(space, n, std::move(meta), std::move(constants));
}

std::string idx2(const std::string& head, int k, int j) {
  return head + "(" + std::to_string(k) + "," + std::to_string(j) + ")";
}

LieAlgebra build_quat(int n) {
  const int m = n + 1;
  std::vector<BasisElement> meta;
  std::vector<QMat> mats;
  auto push = [&](std::string label, Part part, int ordinal, QMat mat) {
    meta.push_back({0, std::move(label), part, ordinal});
    mats.push_back(std::move(mat));
  };
  const int q = n - 1;  // per-type count in the lambda parts
  // a: Lambda = -Psi_{12}
  push("Lambda", Part::a, 0, qscale(psi(m, 1, 2), Rational(-1)));
  // p_lambda: Psi_{1k}, Upsilon_{1k}, Omega_{1k}, Theta_{1k}, k = 3..n+1
  static const char* kSymName[4] = {"Psi", "Upsilon", "Omega", "Theta"};
  for (int u = 0; u < 4; ++u)
    for (int k = 3; k <= m; ++k)
      push(idx2(kSymName[u], 1, k), Part::p_lambda, u * q + (k - 3),
           u == 0 ? psi(m, 1, k) : sym(m, u, 1, k));
  // p_2lambda: Upsilon_{12}, Omega_{12}, Theta_{12}
  for (int u = 1; u < 4; ++u)
    push(idx2(kSymName[u], 1, 2), Part::p_2lambda, u - 1, sym(m, u, 1, 2));
  // k_lambda: -Psi_{2k}, -Upsilon_{2k}, -Omega_{2k}, -Theta_{2k}
  for (int u = 0; u < 4; ++u)
    for (int k = 3; k <= m; ++k)
      push("-" + idx2(kSymName[u], 2, k), Part::k_lambda, u * q + (k - 3),
           qscale(u == 0 ? psi(m, 2, k) : sym(m, u, 2, k), Rational(-1)));
  // k_2lambda: Upsilon*, Omega*, Theta*
  for (int u = 1; u < 4; ++u)
    push(std::string(kSymName[u]) + "*", Part::k_2lambda, u - 1,
         diag2(m, u, 1, Rational(1, 2), 2, Rational(-1, 2)));
  // k0: (BasisUH) with 3 <= k <= j <= n+1 plus the three diagonal sums
  int ord = 0;
  for (int k = 3; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j) push(idx2("Psi", k, j), Part::k0, ord++, psi(m, k, j));
  for (int u = 1; u < 4; ++u)
    for (int k = 3; k <= m; ++k)
      for (int j = k; j <= m; ++j)
        push(idx2(kSymName[u], k, j), Part::k0, ord++, sym(m, u, k, j));
  for (int u = 1; u < 4; ++u)
    push(std::string("sum(") + kSymName[u] + ")", Part::k0, ord++, qsum_diag(m, u));
  return assemble(Space::quat_proj, n, std::move(meta), mats);
}

LieAlgebra build_complex(int n) {
  const int m = n + 1;
  std::vector<BasisElement> meta;
  std::vector<QMat> mats;
  auto push = [&](std::string label, Part part, int ordinal, QMat mat) {
    meta.push_back({0, std::move(label), part, ordinal});
    mats.push_back(std::move(mat));
  };
  const int q = n - 1;
  push("Lambda", Part::a, 0, qscale(psi(m, 1, 2), Rational(-1)));
  for (int k = 3; k <= m; ++k)
    push(idx2("Psi", 1, k), Part::p_lambda, k - 3, psi(m, 1, k));
  for (int k = 3; k <= m; ++k)
    push(idx2("Upsilon", 1, k), Part::p_lambda, q + (k - 3), sym(m, 1, 1, k));
  push(idx2("Upsilon", 1, 2), Part::p_2lambda, 0, sym(m, 1, 1, 2));
  for (int k = 3; k <= m; ++k)
    push("-" + idx2("Psi", 2, k), Part::k_lambda, k - 3, qscale(psi(m, 2, k), Rational(-1)));
  for (int k = 3; k <= m; ++k)
    push("-" + idx2("Upsilon", 2, k), Part::k_lambda, q + (k - 3),
         qscale(sym(m, 1, 2, k), Rational(-1)));
  // Upsilon* = Upsilon_2 = (i/2)(E_11 - E_22)
  push("Upsilon*", Part::k_2lambda, 0, diag2(m, 1, 1, Rational(1, 2), 2, Rational(-1, 2)));
  // k0 of su(n+1): Psi_{kj}, Upsilon_{kj} for 3 <= k < j, the traceless
  // diagonal differences (i/2)(E_33 - E_jj), and (i/2)(E_11 + E_22 - 2E_33).
  int ord = 0;
  for (int k = 3; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j) push(idx2("Psi", k, j), Part::k0, ord++, psi(m, k, j));
  for (int k = 3; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j)
      push(idx2("Upsilon", k, j), Part::k0, ord++, sym(m, 1, k, j));
  for (int j = 4; j <= m; ++j)
    push("Upsilon(" + std::to_string(j) + ")-Upsilon(3)", Part::k0, ord++,
         diag2(m, 1, 3, Rational(1, 2), j, Rational(-1, 2)));
  {
    QMat t(m);
    t.at(1, 1)[1] += Rational(1, 2);
    t.at(2, 2)[1] += Rational(1, 2);
    t.at(3, 3)[1] -= Rational(1);
    push("2Upsilon(3)-Upsilon(2)", Part::k0, ord++, std::move(t));
  }
  return assemble(Space::complex_proj, n, std::move(meta), mats);
}

LieAlgebra build_real(Space space, int n) {
  const int m = n + 1;
  std::vector<BasisElement> meta;
  std::vector<QMat> mats;
  auto push = [&](std::string label, Part part, int ordinal, QMat mat) {
    meta.push_back({0, std::move(label), part, ordinal});
    mats.push_back(std::move(mat));
  };
  push("Lambda", Part::a, 0, qscale(psi(m, 1, 2), Rational(-2)));
  for (int k = 3; k <= m; ++k)
    push("2" + idx2("Psi", 1, k), Part::p_2lambda, k - 3, qscale(psi(m, 1, k), Rational(2)));
  for (int k = 3; k <= m; ++k)
    push("-2" + idx2("Psi", 2, k), Part::k_2lambda, k - 3,
         qscale(psi(m, 2, k), Rational(-2)));
  int ord = 0;
  for (int k = 3; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j) push(idx2("Psi", k, j), Part::k0, ord++, psi(m, k, j));
  return assemble(space, n, std::move(meta), mats);
}

}  // namespace

LieAlgebra build_classical(Space space, int n);  // forward for build_algebra

LieAlgebra build_classical(Space space, int n) {
  if (n < 2) throw UnsupportedSpaceError("family parameter must satisfy n >= 2");
  switch (space) {
    case Space::sphere:
    case Space::real_proj: return build_real(space, n);
    case Space::complex_proj: return build_complex(n);
    case Space::quat_proj: return build_quat(n);
    default: throw UnsupportedSpaceError("not a classical compact family");
  }
}

}  // namespace tphs
