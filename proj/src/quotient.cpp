#include "valgebra/quotient.hpp"

namespace valgebra {

Quotient::Quotient(Valuation num, Valuation den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_instance(num_, den_);
    if (is_null(den_)) fail(ErrorKind::null_argument, "quotient denominator is null");
    if (!leq(den_.label(), num_.label()))
        fail(ErrorKind::order_violation, "denominator label must be below the numerator label");
    if (!dominates(num_, den_))
        fail(ErrorKind::domination_violation,
             "denominator group does not divide the numerator group");
}

Quotient embed(const Valuation& v) {
    if (is_null(v)) fail(ErrorKind::null_argument, "null valuations are not embedded");
    return Quotient(combine(v, v), v);
}

Quotient multiply(const Quotient& a, const Quotient& b) {
    return Quotient(combine(a.num(), b.num()), combine(a.den(), b.den()));
}

Quotient invert(const Quotient& q) {
    if (!tag_equal(group_tag(q.num()), group_tag(q.den())))
        fail(ErrorKind::not_invertible, "numerator and denominator lie in different groups");
    return Quotient(q.den(), q.num());
}

bool quotient_equal(const Quotient& a, const Quotient& b, double tol) {
    if (a.kind() != b.kind()) return false;
    if (!(label(a) == label(b))) return false;
    if (!tag_equal(group_tag(a), group_tag(b))) return false;
    return approx_equal(combine(a.num(), b.den()), combine(b.num(), a.den()), tol);
}

Domain label(const Quotient& q) { return q.num().label(); }

GroupTag group_tag(const Quotient& q) {
    // delta(num * den^-1) = delta(num) since delta(den) <= delta(num)
    return group_tag(q.num());
}

Quotient project(const Quotient& q, const Domain& x) {
    if (!leq(q.den().label(), x) || !leq(x, q.num().label()))
        fail(ErrorKind::undefined_projection,
             "extended projection defined only between the pair labels (asked for " +
                 x.to_text() + ")");
    return Quotient(project(q.num(), x), q.den());
}

Quotient idempotent_of(const Quotient& q) {
    Valuation dd = combine(q.den(), q.den());
    return Quotient(dd, dd);
}

Quotient unit_quotient_of(const Valuation& v) {
    if (is_null(v)) fail(ErrorKind::null_argument, "null valuations have no group unit");
    return Quotient(v, v);
}

namespace {

Valuation reduce_potential(const Quotient& q) {
    const auto& num = q.num().potential();
    const auto& den = q.den().potential();
    ConfigSpace space(num.scope);
    auto to_den = space.restriction_map(den.scope);
    std::vector<double> out(num.values.size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double d = den.values[to_den[i]];
        if (d > 0.0) out[i] = num.values[i] / d;
    }
    return PotentialTable(num.scope, std::move(out));
}

std::optional<Valuation> reduce_gaussian(const Quotient& q) {
    auto cn = to_canonical(q.num().gaussian());
    auto cd = lift_canonical(to_canonical(q.den().gaussian()), q.num().label());
    CanonicalGaussian diff{cn.scope, cn.h, cn.concentration};
    for (std::size_t i = 0; i < diff.h.size(); ++i) diff.h[i] -= cd.h[i];
    for (std::size_t i = 0; i < diff.concentration.a.size(); ++i)
        diff.concentration.a[i] -= cd.concentration.a[i];
    if (!cholesky(diff.concentration)) return std::nullopt;
    return Valuation(from_canonical(diff));
}

} // namespace

std::optional<Valuation> try_reduce(const Quotient& q) {
    switch (q.kind()) {
        case InstanceKind::potential: return reduce_potential(q);
        case InstanceKind::gaussian: return reduce_gaussian(q);
        case InstanceKind::belief:
            try {
                return Valuation(quotient_reduce_belief(q.num().mass(), q.den().mass()));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::not_reducible) return std::nullopt;
                throw;
            }
    }
    return std::nullopt;
}

Valuation reduce(const Quotient& q) {
    auto v = try_reduce(q);
    if (!v) fail(ErrorKind::not_reducible, "quotient has no representative inside the algebra");
    return *v;
}

} // namespace valgebra
