#include "valgebra/composition.hpp"

#include <algorithm>
#include <string>

namespace valgebra {

namespace {

std::optional<Valuation> compute_floor(const Quotient& q) {
    return try_reduce(project(q, q.den().label()));
}

// Searches the window [z v d(den), d(num)] for a domain whose extended
// projection reduces into the algebra, then projects the member down to z.
// This follows the theorems' own route: a projection below the denominator
// window exists whenever some larger window projection is a member.
std::optional<Valuation> reduce_via_window(const Quotient& q, const Domain& z) {
    const Domain base = join(z, q.den().label());
    const Domain& top = q.num().label();
    std::vector<Domain> candidates;
    if (base.kind() == LatticeKind::subset) {
        std::vector<int> extra;
        for (int v : top.variables())
            if (!std::binary_search(base.variables().begin(), base.variables().end(), v))
                extra.push_back(v);
        const std::size_t n = extra.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::vector<int> vars = base.variables();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) vars.push_back(extra[i]);
            candidates.push_back(Domain::subset(base.context(), std::move(vars)));
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Domain& a, const Domain& b) {
                      return a.variables().size() < b.variables().size();
                  });
    } else {
        candidates = {base, top};
    }
    for (const Domain& w : candidates)
        if (auto member = try_reduce(project(q, w))) return project(*member, z);
    return std::nullopt;
}

} // namespace

DensityElement DensityElement::member(Valuation v) {
    DensityElement e;
    e.member_ = std::move(v);
    return e;
}

DensityElement DensityElement::formal(Quotient q) {
    DensityElement e;
    e.floor_ = compute_floor(q);
    e.quotient_ = std::move(q);
    return e;
}

const Valuation& DensityElement::value() const {
    if (!member_) fail(ErrorKind::invalid_value, "formal element has no member value");
    return *member_;
}

const Quotient& DensityElement::quotient() const {
    if (!quotient_) fail(ErrorKind::invalid_value, "member element has no quotient form");
    return *quotient_;
}

Domain DensityElement::label() const {
    return member_ ? member_->label() : valgebra::label(*quotient_);
}

Quotient DensityElement::as_quotient() const {
    return member_ ? embed(*member_) : *quotient_;
}

bool is_density(const DensityElement& e) {
    return e.is_member() || e.floor().has_value();
}

std::optional<Valuation> marginal_member(const DensityElement& e, const Domain& z) {
    if (e.is_member()) {
        if (!leq(z, e.value().label()))
            fail(ErrorKind::projection_domain, "marginal domain above the label");
        return project(e.value(), z);
    }
    const Quotient& q = e.quotient();
    const Domain den_label = q.den().label();
    if (!leq(z, label(q)))
        fail(ErrorKind::projection_domain, "marginal domain above the label");
    if (leq(den_label, z)) return try_reduce(project(q, z));
    if (leq(z, den_label)) {
        if (!e.floor()) return std::nullopt;
        return project(*e.floor(), z);
    }
    return reduce_via_window(q, z);
}

namespace {

// Group tag of pi_z(e), without requiring a member representative.
std::optional<GroupTag> marginal_tag(const DensityElement& e, const Domain& z) {
    if (auto mu = marginal_member(e, z)) return group_tag(*mu);
    const Quotient& q = e.quotient();
    if (leq(q.den().label(), z)) return group_tag(project(q, z));
    return std::nullopt;
}

// The conditional pair of e at m (e restricted-divided by its m-marginal),
// as a numerator/denominator pair of members.
Quotient conditional_pair(const DensityElement& e, const Domain& m,
                          const std::optional<Valuation>& mu) {
    if (e.is_member()) {
        // psi / pi_m(psi), directly
        return Quotient(e.value(), *mu);
    }
    const Quotient& q = e.quotient();
    if (mu) {
        // q * (mu, mu*mu) — the inverse of embed(mu)
        return Quotient(combine(q.num(), *mu), combine(q.den(), combine(*mu, *mu)));
    }
    // the marginal exists only formally as (pi_m(num), den); its inverse is
    // the pair (den * a, a * a) with a = pi_m(num)
    Valuation a = project(q.num(), m);
    return Quotient(combine(q.num(), combine(q.den(), a)),
                    combine(q.den(), combine(a, a)));
}

} // namespace

DensityElement compose(const DensityElement& phi, const DensityElement& psi) {
    const Domain x = phi.label();
    const Domain y = psi.label();
    const Domain m = meet(x, y);

    auto tag_phi = marginal_tag(phi, m);
    auto tag_psi = marginal_tag(psi, m);
    if (!tag_phi || !tag_psi)
        fail(ErrorKind::composition_undefined,
             "a meet marginal does not exist at " + m.to_text());
    if (!tag_leq(*tag_psi, *tag_phi))
        fail(ErrorKind::composition_undefined,
             "marginal of the right operand is not dominated at " + m.to_text());

    std::optional<Valuation> mu = marginal_member(psi, m);
    if (!mu && !leq(psi.quotient().den().label(), m))
        fail(ErrorKind::composition_undefined,
             "right operand has no usable marginal at " + m.to_text());
    Quotient cond = conditional_pair(psi, m, mu);

    Quotient result = phi.is_member()
                          ? Quotient(combine(phi.value(), cond.num()), cond.den())
                          : multiply(phi.as_quotient(), cond);
    if (auto v = try_reduce(result)) return DensityElement::member(std::move(*v));
    return DensityElement::formal(std::move(result));
}

DensityElement compose_sequence(const std::vector<DensityElement>& items) {
    if (items.empty()) fail(ErrorKind::invalid_value, "empty composition sequence");
    DensityElement acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) {
        try {
            acc = compose(acc, items[i]);
        } catch (const Error& e) {
            throw Error(e.kind(), "composition failed at item " + std::to_string(i) + ": " +
                                      e.what());
        }
    }
    return acc;
}

DensityElement project_element(const DensityElement& e, const Domain& z) {
    if (e.is_member()) return DensityElement::member(project(e.value(), z));
    const Quotient& q = e.quotient();
    const Domain den_label = q.den().label();
    if (!leq(z, label(q)))
        fail(ErrorKind::projection_domain, "projection target above the label");
    if (leq(den_label, z)) {
        Quotient pq = project(q, z);
        if (auto v = try_reduce(pq)) return DensityElement::member(std::move(*v));
        return DensityElement::formal(std::move(pq));
    }
    if (leq(z, den_label)) {
        if (!e.floor())
            fail(ErrorKind::undefined_projection,
                 "no member representative below the denominator window");
        return DensityElement::member(project(*e.floor(), z));
    }
    auto mid = reduce_via_window(q, z);
    if (!mid)
        fail(ErrorKind::undefined_projection,
             "no reducible representative covering " + z.to_text());
    return DensityElement::member(std::move(*mid));
}

bool density_equal(const DensityElement& a, const DensityElement& b, double tol) {
    if (a.is_member() && b.is_member()) return approx_equal(a.value(), b.value(), tol);
    return quotient_equal(a.as_quotient(), b.as_quotient(), tol);
}

} // namespace valgebra
