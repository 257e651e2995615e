#include "valgebra/conditional.hpp"

namespace valgebra {

Conditional conditional(const Valuation& phi, const Domain& x, const Domain& y) {
    if (!leq(y, x) || !leq(x, phi.label()))
        fail(ErrorKind::order_violation, "conditional needs y <= x <= d(phi)");
    Valuation upper = project(phi, x);
    Valuation lower = project(phi, y);
    if (is_null(lower))
        fail(ErrorKind::null_argument, "conditioning on a null marginal is undefined");
    return Conditional{phi, x, y, Quotient(std::move(upper), std::move(lower))};
}

Quotient continue_with(const Conditional& c, const Valuation& marginal) {
    if (!(marginal.label() == c.lower))
        fail(ErrorKind::order_violation, "continuation marginal must live on the lower domain");
    return multiply(c.body, embed(marginal));
}

} // namespace valgebra
