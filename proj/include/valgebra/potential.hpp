#pragma once

#include <vector>

#include "valgebra/bitvec.hpp"
#include "valgebra/domain.hpp"

namespace valgebra {

/// Values with magnitude below this are flushed to exact zero so that support
/// sets stay crisp.
inline constexpr double kZeroClamp = 1e-12;

/// A nonnegative function on the configurations of a discrete variable set,
/// stored dense in row-major order (last scope variable fastest).
struct PotentialTable {
    PotentialTable(Domain scope, std::vector<double> values);

    Domain scope;
    std::vector<double> values;

    bool is_null() const;
};

PotentialTable combine_tables(const PotentialTable& p, const PotentialTable& q);
PotentialTable project_table(const PotentialTable& p, const Domain& target);

/// Pointwise reciprocal on the support, zero elsewhere. Rejects null input.
PotentialTable invert_table(const PotentialTable& p);

BitVec support(const PotentialTable& p);

PotentialTable unit_table(const Domain& scope);
PotentialTable null_table(const Domain& scope);

} // namespace valgebra
