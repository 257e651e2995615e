#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "valgebra/domain.hpp"

namespace valgebra {

/// Unnormalized Dempster-Shafer mass function. The frame is a Domain of
/// either kind: the blocks of a partition frame, or the configurations of a
/// discrete variable set (multivariate frame). Subsets of the frame are
/// bitmasks over the canonical cell order; absent masks carry mass zero.
struct MassFunction {
    MassFunction(Domain frame, std::map<std::uint32_t, double> masses);

    Domain frame;
    std::map<std::uint32_t, double> masses; // focal set mask -> positive mass

    bool is_null() const { return masses.empty(); }
    std::size_t cells() const { return frame.cell_count(); }
};

/// Commonality function, dense over the power set of the frame.
struct Commonality {
    Domain frame;
    std::vector<double> values; // size 1 << cells
};

Commonality mass_to_commonality(const MassFunction& m);

/// Moebius inversion of a commonality. May produce negative coefficients;
/// they are returned as-is and `negative` is set (the caller decides
/// membership).
struct SignedMass {
    Domain frame;
    std::vector<double> values; // dense over the power set
    bool negative = false;
};
SignedMass commonality_to_mass(const Commonality& q);

/// Belief function b(S) = sum of masses of subsets of S, dense.
std::vector<double> mass_to_belief(const MassFunction& m);

MassFunction combine_mass(const MassFunction& m1, const MassFunction& m2);
Commonality combine_commonality(const Commonality& q1, const Commonality& q2);

MassFunction project_mass(const MassFunction& m, const Domain& target);

/// Rewrites the commonality quotient num/den as a mass function when its
/// Moebius transform is nonnegative; throws not_reducible otherwise.
/// Requires the den frame to be below the num frame and the den commonality
/// to dominate the num commonality on its support.
MassFunction quotient_reduce_belief(const MassFunction& num, const MassFunction& den);

MassFunction unit_mass(const Domain& frame);
MassFunction null_mass(const Domain& frame);

} // namespace valgebra
