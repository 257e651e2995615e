#include "valgebra/potential.hpp"

#include <cmath>

namespace valgebra {

PotentialTable::PotentialTable(Domain scope_, std::vector<double> values_)
    : scope(std::move(scope_)), values(std::move(values_)) {
    if (scope.kind() != LatticeKind::subset)
        fail(ErrorKind::invalid_value, "potential scope must be a variable set");
    if (values.size() != scope.cell_count())
        fail(ErrorKind::invalid_value, "table length does not match the configuration count");
    for (auto& v : values) {
        if (std::abs(v) < kZeroClamp) v = 0.0;
        if (!(v >= 0.0)) fail(ErrorKind::invalid_value, "potential entries must be nonnegative");
    }
}

bool PotentialTable::is_null() const {
    for (double v : values)
        if (v != 0.0) return false;
    return true;
}

PotentialTable combine_tables(const PotentialTable& p, const PotentialTable& q) {
    Domain joint = join(p.scope, q.scope);
    ConfigSpace space(joint);
    auto to_p = space.restriction_map(p.scope);
    auto to_q = space.restriction_map(q.scope);
    std::vector<double> out(space.total());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = p.values[to_p[i]] * q.values[to_q[i]];
    return PotentialTable(std::move(joint), std::move(out));
}

PotentialTable project_table(const PotentialTable& p, const Domain& target) {
    if (!leq(target, p.scope))
        fail(ErrorKind::projection_domain, "projection target not below the scope");
    ConfigSpace space(p.scope);
    auto to_t = space.restriction_map(target);
    std::vector<double> out(target.cell_count(), 0.0);
    for (std::size_t i = 0; i < p.values.size(); ++i) out[to_t[i]] += p.values[i];
    return PotentialTable(target, std::move(out));
}

PotentialTable invert_table(const PotentialTable& p) {
    if (p.is_null()) fail(ErrorKind::null_argument, "null potential has no inverse");
    std::vector<double> out(p.values.size(), 0.0);
    for (std::size_t i = 0; i < p.values.size(); ++i)
        if (p.values[i] > 0.0) out[i] = 1.0 / p.values[i];
    return PotentialTable(p.scope, std::move(out));
}

BitVec support(const PotentialTable& p) {
    BitVec s(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i)
        if (p.values[i] > 0.0) s.set(i);
    return s;
}

PotentialTable unit_table(const Domain& scope) {
    return PotentialTable(scope, std::vector<double>(scope.cell_count(), 1.0));
}

PotentialTable null_table(const Domain& scope) {
    return PotentialTable(scope, std::vector<double>(scope.cell_count(), 0.0));
}

} // namespace valgebra
