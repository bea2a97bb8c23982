#include "tphs/reduction.hpp"

namespace tphs {

UEAElement ideal_reduce(const UEA& ctx, const UEAElement& a) {
  const LieAlgebra& g = ctx.algebra();
  UEAElement r;
  for (const auto& [w, c] : a.terms())
    if (w.empty() || !g.in_k0(static_cast<unsigned char>(w.back()))) r.add_term(w, c);
  return r;
}

bool is_reduced(const UEA& ctx, const UEAElement& a) {
  const LieAlgebra& g = ctx.algebra();
  for (const auto& [w, c] : a.terms()) {
    (void)c;
    if (!w.empty() && g.in_k0(static_cast<unsigned char>(w.back()))) return false;
  }
  return true;
}

InvarianceReport is_invariant(UEA& ctx, const UEAElement& a) {
  InvarianceReport rep;
  for (int f : ctx.algebra().k0_indices()) {
    UEAElement c = ctx.commutator(ctx.gen(f), a);
    if (!c.is_zero()) {
      rep.invariant = false;
      rep.offender = f;
      rep.residual = std::move(c);
      return rep;
    }
  }
  return rep;
}

CosetReport coset_equal(UEA& ctx, const UEAElement& a, const UEAElement& b) {
  CosetReport rep;
  rep.residual = ideal_reduce(ctx, a - b);
  rep.equal = rep.residual.is_zero();
  return rep;
}

UEAElement reduced_product(UEA& ctx, const UEAElement& a, const UEAElement& b) {
  return ideal_reduce(ctx, ctx.multiply(a, b));
}

UEAElement reduced_commutator(UEA& ctx, const UEAElement& a, const UEAElement& b) {
  return ideal_reduce(ctx, ctx.commutator(a, b));
}

UEAElement reduced_anticommutator(UEA& ctx, const UEAElement& a, const UEAElement& b) {
  return ideal_reduce(ctx, ctx.anticommutator(a, b));
}

}  // namespace tphs
