#pragma once

#include <optional>
#include <vector>

#include "valgebra/quotient.hpp"

namespace valgebra {

/// An abstract density: either a member of the algebra (all of whose
/// projections exist), or a formal quotient together with a certificate that
/// its projection to the bottom of the denominator window reduces back into
/// the algebra. Compositions that fail to reduce stay formal; projections
/// below the denominator window route through the certificate.
class DensityElement {
public:
    static DensityElement member(Valuation v);
    static DensityElement formal(Quotient q);

    bool is_member() const { return member_.has_value(); }
    const Valuation& value() const;
    const Quotient& quotient() const;
    const std::optional<Valuation>& floor() const { return floor_; }

    Domain label() const;
    Quotient as_quotient() const; // members embed

private:
    DensityElement() = default;
    std::optional<Valuation> member_;
    std::optional<Quotient> quotient_;
    std::optional<Valuation> floor_; // reduce of the projection at d(den)
};

bool is_density(const DensityElement& e);

/// The compositional operator: phi * psi * (pi_{x^y}(psi))^-1. Requires the
/// meet marginals of both operands to exist and the marginal of psi to be
/// dominated by the marginal of phi; returns a member whenever the result
/// reduces.
DensityElement compose(const DensityElement& phi, const DensityElement& psi);

/// Left fold ((e1 > e2) > e3) > ...; errors carry the failing index.
DensityElement compose_sequence(const std::vector<DensityElement>& items);

/// Projection of a density element. Inside the quotient window this is the
/// extended projection; below it the floor certificate continues in the
/// algebra; elsewhere a reducible intermediate is searched via the join with
/// the denominator label.
DensityElement project_element(const DensityElement& e, const Domain& z);

/// Materializes pi_z(e) as a member of the algebra when possible.
std::optional<Valuation> marginal_member(const DensityElement& e, const Domain& z);

bool density_equal(const DensityElement& a, const DensityElement& b, double tol = kDefaultTol);

} // namespace valgebra
