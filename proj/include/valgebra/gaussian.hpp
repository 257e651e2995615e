#pragma once

#include <vector>

#include "valgebra/domain.hpp"
#include "valgebra/smallmat.hpp"

namespace valgebra {

/// Gaussian potential in moment form: mean vector and concentration matrix
/// (inverse covariance) over a variable-set domain. The empty domain carries
/// the single zero-dimensional potential.
struct GaussianPotential {
    GaussianPotential(Domain scope, std::vector<double> mean, SquareMatrix concentration);

    Domain scope;
    std::vector<double> mean;
    SquareMatrix concentration;
};

/// Canonical form (h = K mu, K). Represents a member of the algebra exactly
/// when K is positive definite; indefinite K appears in quotient reductions.
struct CanonicalGaussian {
    Domain scope;
    std::vector<double> h;
    SquareMatrix concentration;
};

GaussianPotential combine_gaussian(const GaussianPotential& g1, const GaussianPotential& g2);
GaussianPotential project_gaussian(const GaussianPotential& g, const Domain& target);

CanonicalGaussian to_canonical(const GaussianPotential& g);
/// Throws not_reducible when the concentration is not positive definite.
GaussianPotential from_canonical(const CanonicalGaussian& c);

/// Zero-pads canonical parameters from their scope up to `target` (a superdomain).
CanonicalGaussian lift_canonical(const CanonicalGaussian& c, const Domain& target);

} // namespace valgebra
