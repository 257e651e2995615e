#pragma once

#include "valgebra/quotient.hpp"

namespace valgebra {

/// The conditional of phi for x given y: pi_x(phi) divided by pi_y(phi).
/// Keeps the originating valuation and both domains so law checks can
/// re-derive either side without representative drift.
struct Conditional {
    Valuation base;
    Domain upper; // x
    Domain lower; // y
    Quotient body;
};

/// Requires y <= x <= d(phi) and a non-null marginal at y.
Conditional conditional(const Valuation& phi, const Domain& x, const Domain& y);

/// body * embed(marginal); with marginal = pi_y(phi) this reduces to pi_x(phi)
/// (the continuation property).
Quotient continue_with(const Conditional& c, const Valuation& marginal);

} // namespace valgebra
