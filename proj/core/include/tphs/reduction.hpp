#ifndef TPHS_REDUCTION_HPP
#define TPHS_REDUCTION_HPP

#include "tphs/uea.hpp"

namespace tphs {

/// Quotient machinery for U(g) modulo the left ideal U(g)k0.  Because the
/// basis order puts k0 last, the PBW basis splits as PBW(p-tilde)*PBW(k0)
/// and the ideal is spanned by exactly the normal words whose last letter
/// lies in k0; the canonical coset representative drops them.

/// Canonical representative: erases every term whose word ends in a k0
/// index.  Linear, idempotent; input is already in PBW normal form (every
/// UEAElement is by construction).
UEAElement ideal_reduce(const UEA& ctx, const UEAElement& a);

/// True when no term's word ends in a k0 index.
bool is_reduced(const UEA& ctx, const UEAElement& a);

struct InvarianceReport {
  bool invariant = true;
  int offender = -1;       // k0 basis index witnessing failure
  UEAElement residual;     // [x_offender, a], nonzero on failure
};

/// Infinitesimal K0-invariance: [f, a] = 0 in U(g) itself (not modulo the
/// ideal) for every k0 basis element f.  K0 is connected for every family
/// built here, so this captures Ad_{K0}-invariance.
InvarianceReport is_invariant(UEA& ctx, const UEAElement& a);

struct CosetReport {
  bool equal = true;
  UEAElement residual;  // ideal_reduce(a - b), empty iff equal
};

/// Equality modulo the left ideal.
CosetReport coset_equal(UEA& ctx, const UEAElement& a, const UEAElement& b);

/// Product followed by reduction.  For K0-invariant factors the result
/// depends only on the cosets of a and b (the ideal's invariant part is
/// two-sided), so chains of these stay small; reduced inputs are fine.
UEAElement reduced_product(UEA& ctx, const UEAElement& a, const UEAElement& b);
UEAElement reduced_commutator(UEA& ctx, const UEAElement& a, const UEAElement& b);
UEAElement reduced_anticommutator(UEA& ctx, const UEAElement& a, const UEAElement& b);

}  // namespace tphs

#endif  // TPHS_REDUCTION_HPP
