#include <utility>

#include "tphs/errors.hpp"
#include "tphs/reduction.hpp"
#include "tphs/relations.hpp"

namespace tphs {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Expr Expr::leaf(std::string name) {
  Expr e;
  e.kind = ExprKind::leaf;
  e.name = std::move(name);
  return e;
}

Expr Expr::number(Rational v) {
  Expr e;
  e.kind = ExprKind::number;
  e.value = std::move(v);
  return e;
}

Expr Expr::n() {
  Expr e;
  e.kind = ExprKind::var_n;
  return e;
}

Expr Expr::binary(ExprKind k, Expr a, Expr b) {
  Expr e;
  e.kind = k;
  e.kid.push_back(std::move(a));
  e.kid.push_back(std::move(b));
  return e;
}

Expr Expr::negate(Expr a) {
  Expr e;
  e.kind = ExprKind::neg;
  e.kid.push_back(std::move(a));
  return e;
}

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && name == o.name && value == o.value && kid == o.kid;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Binding strength: additive 1, multiplicative 2, atoms 3.
int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::neg:
      return 1;
    case ExprKind::mul:
      return 2;
    default:
      return 3;
  }
}

void print(const Expr& e, int context, std::string& out) {
  const bool parens = precedence(e) < context;
  if (parens) out += '(';
  switch (e.kind) {
    case ExprKind::leaf:
      out += e.name;
      break;
    case ExprKind::number:
      out += e.value.str();
      break;
    case ExprKind::var_n:
      out += 'n';
      break;
    case ExprKind::add:
      print(e.kid[0], 1, out);
      out += " + ";
      print(e.kid[1], 2, out);
      break;
    case ExprKind::sub:
      print(e.kid[0], 1, out);
      out += " - ";
      print(e.kid[1], 2, out);
      break;
    case ExprKind::neg:
      out += '-';
      print(e.kid[0], 3, out);
      break;
    case ExprKind::mul:
      print(e.kid[0], 2, out);
      out += '*';
      print(e.kid[1], 3, out);
      break;
    case ExprKind::commutator:
      out += '[';
      print(e.kid[0], 0, out);
      out += ',';
      print(e.kid[1], 0, out);
      out += ']';
      break;
    case ExprKind::anticommutator:
      out += '{';
      print(e.kid[0], 0, out);
      out += ',';
      print(e.kid[1], 0, out);
      out += '}';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string expr_str(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

bool expr_is_scalar(const Expr& e) {
  if (e.kind == ExprKind::leaf) return false;
  for (const Expr& k : e.kid)
    if (!expr_is_scalar(k)) return false;
  return true;
}

int expr_degree(const GeneratorSet& gs, const Expr& e) {
  switch (e.kind) {
    case ExprKind::leaf:
      return gs.info(e.name).declared_degree;
    case ExprKind::number:
    case ExprKind::var_n:
      return 0;
    case ExprKind::add:
    case ExprKind::sub:
      return std::max(expr_degree(gs, e.kid[0]), expr_degree(gs, e.kid[1]));
    case ExprKind::neg:
      return expr_degree(gs, e.kid[0]);
    case ExprKind::mul:
    case ExprKind::anticommutator:
      return expr_degree(gs, e.kid[0]) + expr_degree(gs, e.kid[1]);
    case ExprKind::commutator:
      return std::max(
          expr_degree(gs, e.kid[0]) + expr_degree(gs, e.kid[1]) - 1, 0);
  }
  throw InvariantError("unhandled expression kind");
}

// ---------------------------------------------------------------------------
// Noncompact transfer
// ---------------------------------------------------------------------------

UEAElement twist_image(const LieAlgebra& g, const UEAElement& e) {
  static const GaussRational powers[4] = {
      GaussRational(1), GaussRational::i(), GaussRational(-1),
      -GaussRational::i()};
  UEAElement out;
  for (const auto& [word, coeff] : e.terms()) {
    int count = 0;
    for (unsigned char letter : word)
      if (in_p(g.part(letter))) ++count;
    out.add_term(word, powers[count % 4] * coeff);
  }
  return out;
}

int twist_weight(const UEA& compact_ctx, const UEAElement& compact_elem,
                 const UEA& hyp_ctx, const UEAElement& hyp_elem) {
  const UEAElement image =
      ideal_reduce(hyp_ctx, twist_image(compact_ctx.algebra(), compact_elem));
  UEAElement twin = ideal_reduce(hyp_ctx, hyp_elem);
  for (int t = 0; t < 4; ++t) {
    if (image == twin) return t;
    twin = GaussRational::i() * twin;
  }
  throw InvariantError("twist image is no i-power of the hyperbolic twin");
}

namespace {

Space hyperbolic_partner(Space s) {
  switch (compact_form(s)) {
    case Space::sphere:
    case Space::real_proj:
      return Space::real_hyp;
    case Space::complex_proj:
      return Space::complex_hyp;
    case Space::quat_proj:
      return Space::quat_hyp;
    case Space::octonion_proj:
      return Space::octonion_hyp;
    default:
      throw InvariantError("space without a hyperbolic partner");
  }
}

struct Addend {
  int sign;  // +1 or -1
  Expr mono;  // free of add/sub/neg except inside scalar subtrees
};

// Multilinear expansion: distributes products and brackets over every
// additive node that contains a generator leaf.  Scalar subtrees (no
// leaves) are kept verbatim; they carry twist weight zero.
std::vector<Addend> expand(const Expr& e) {
  if (expr_is_scalar(e) || e.kind == ExprKind::leaf) return {{1, e}};
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::sub: {
      std::vector<Addend> out = expand(e.kid[0]);
      for (Addend& a : expand(e.kid[1])) {
        if (e.kind == ExprKind::sub) a.sign = -a.sign;
        out.push_back(std::move(a));
      }
      return out;
    }
    case ExprKind::neg: {
      std::vector<Addend> out = expand(e.kid[0]);
      for (Addend& a : out) a.sign = -a.sign;
      return out;
    }
    case ExprKind::mul:
    case ExprKind::commutator:
    case ExprKind::anticommutator: {
      std::vector<Addend> out;
      for (const Addend& a : expand(e.kid[0]))
        for (const Addend& b : expand(e.kid[1]))
          out.push_back({a.sign * b.sign,
                         Expr::binary(e.kind, a.mono, b.mono)});
      return out;
    }
    default:
      throw InvariantError("unhandled expression kind");
  }
}

Expr reassemble(std::vector<Addend> addends) {
  Expr acc = addends[0].sign > 0 ? addends[0].mono
                                 : Expr::negate(addends[0].mono);
  for (std::size_t i = 1; i < addends.size(); ++i)
    acc = Expr::binary(addends[i].sign > 0 ? ExprKind::add : ExprKind::sub,
                       std::move(acc), std::move(addends[i].mono));
  return acc;
}

int monomial_weight(const std::map<std::string, int, std::less<>>& weight,
                    const Expr& mono) {
  if (expr_is_scalar(mono)) return 0;
  if (mono.kind == ExprKind::leaf) {
    auto it = weight.find(mono.name);
    if (it == weight.end())
      throw InvariantError("no twist weight for generator " + mono.name);
    return it->second;
  }
  int w = 0;
  for (const Expr& k : mono.kid) w += monomial_weight(weight, k);
  return w % 4;
}

}  // namespace

TwistMap::TwistMap(UEA& compact_ctx, const GeneratorSet& gs, UEA& hyp_ctx,
                   const GeneratorSet& hyp)
    : hyp_space_(hyp.space()), n_(gs.n()) {
  if (is_hyperbolic(gs.space()) || !is_hyperbolic(hyp.space()) ||
      hyperbolic_partner(gs.space()) != hyp.space() || gs.n() != hyp.n())
    throw InvariantError("twist map needs a compact set and its twin");
  for (const auto& item : gs.items())
    weight_.emplace(item.name, twist_weight(compact_ctx, item.element,
                                            hyp_ctx, hyp.at(item.name)));
}

int TwistMap::weight(std::string_view name) const {
  auto it = weight_.find(name);
  if (it == weight_.end())
    throw InvariantError("no twist weight for generator " +
                         std::string(name));
  return it->second;
}

Relation TwistMap::twist(const Relation& compact) const {
  if (is_hyperbolic(compact.space))
    throw InvariantError("twist expects a compact relation");
  if (!compact.applies_to(n_))
    throw InvariantError("twist map outside the relation's scope");

  std::vector<Addend> lhs = expand(compact.lhs);
  std::vector<Addend> rhs = expand(compact.rhs);

  // Every addend rescales by i^(own weight); dividing the statement by
  // i^(weight of the leading addend) leaves signs i^(relative weight),
  // which must be real addend by addend.
  const int w0 = monomial_weight(weight_, lhs[0].mono);
  auto retag = [&](std::vector<Addend>& side) {
    for (Addend& a : side) {
      // A literal zero (right sides "= 0") has every weight at once.
      if (a.mono.kind == ExprKind::number && a.mono.value.is_zero()) continue;
      const int s = ((monomial_weight(weight_, a.mono) - w0) % 4 + 4) % 4;
      if (s == 0) continue;
      if (s == 2)
        a.sign = -a.sign;
      else
        throw InvariantError("odd relative twist weight in " + compact.id);
    }
  };
  retag(lhs);
  retag(rhs);

  Relation out = compact;
  out.space = hyp_space_;
  out.lhs = reassemble(std::move(lhs));
  out.rhs = reassemble(std::move(rhs));
  return out;
}

}  // namespace tphs
