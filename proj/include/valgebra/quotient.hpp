#pragma once

#include <optional>

#include "valgebra/valuation.hpp"

namespace valgebra {

/// A formal pair num/den representing an element of the group extension of
/// the valuation semigroup. Invariants: same instance, d(den) <= d(num),
/// delta(den) <= delta(num) in the domination order, den not null.
class Quotient {
public:
    Quotient(Valuation num, Valuation den);

    const Valuation& num() const { return num_; }
    const Valuation& den() const { return den_; }
    InstanceKind kind() const { return num_.kind(); }

private:
    Valuation num_, den_;
};

/// The one-to-one semigroup homomorphism psi -> (psi*psi)/psi.
Quotient embed(const Valuation& v);

/// Componentwise combination; the pair invariants are re-checked (a failure
/// flags a construction bug upstream).
Quotient multiply(const Quotient& a, const Quotient& b);

/// Swapped pair. Defined only when num and den lie in the same group;
/// otherwise throws not_invertible (callers use division forms instead).
Quotient invert(const Quotient& q);

/// Equality in the group extension: same label, same group, and cross
/// multiplication num1*den2 = num2*den1 within tol.
bool quotient_equal(const Quotient& a, const Quotient& b, double tol = kDefaultTol);

Domain label(const Quotient& q);

GroupTag group_tag(const Quotient& q);

/// Partially defined projection: requires d(den) <= x <= d(num); the result
/// keeps the denominator and projects the numerator.
Quotient project(const Quotient& q, const Domain& x);

/// Unit of the group of q's class, as the pair (den*den)/(den*den).
Quotient idempotent_of(const Quotient& q);

/// The group unit f_v of delta(v), as the pair v/v.
Quotient unit_quotient_of(const Valuation& v);

/// Rewrites q as a member of the algebra when one exists: potentials always
/// (pointwise division on the denominator support), Gaussians iff the
/// canonical difference is positive definite, belief iff the Moebius
/// transform of the commonality quotient is nonnegative.
std::optional<Valuation> try_reduce(const Quotient& q);

/// Throwing version of try_reduce (not_reducible).
Valuation reduce(const Quotient& q);

} // namespace valgebra
