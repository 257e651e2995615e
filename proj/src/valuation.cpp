#include "valgebra/valuation.hpp"

#include <cmath>
#include <sstream>

namespace valgebra {

const char* to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::potential: return "potential";
        case InstanceKind::gaussian: return "gaussian";
        case InstanceKind::belief: return "belief";
    }
    return "?";
}

bool nearly_equal(double a, double b, double tol) {
    const double diff = std::abs(a - b);
    if (diff <= 1e-12) return true;
    return diff <= tol * std::max(std::abs(a), std::abs(b));
}

InstanceKind Valuation::kind() const {
    if (std::holds_alternative<PotentialTable>(payload_)) return InstanceKind::potential;
    if (std::holds_alternative<GaussianPotential>(payload_)) return InstanceKind::gaussian;
    return InstanceKind::belief;
}

const Domain& Valuation::label() const {
    return std::visit(
        [](const auto& p) -> const Domain& {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PotentialTable>) return p.scope;
            else if constexpr (std::is_same_v<T, GaussianPotential>) return p.scope;
            else return p.frame;
        },
        payload_);
}

const PotentialTable& Valuation::potential() const {
    if (!std::holds_alternative<PotentialTable>(payload_))
        fail(ErrorKind::instance_mismatch, "not a probability potential");
    return std::get<PotentialTable>(payload_);
}

const GaussianPotential& Valuation::gaussian() const {
    if (!std::holds_alternative<GaussianPotential>(payload_))
        fail(ErrorKind::instance_mismatch, "not a gaussian potential");
    return std::get<GaussianPotential>(payload_);
}

const MassFunction& Valuation::mass() const {
    if (!std::holds_alternative<MassFunction>(payload_))
        fail(ErrorKind::instance_mismatch, "not a mass function");
    return std::get<MassFunction>(payload_);
}

Domain label(const Valuation& v) { return v.label(); }

void require_same_instance(const Valuation& a, const Valuation& b) {
    if (a.kind() != b.kind())
        fail(ErrorKind::instance_mismatch,
             std::string(to_string(a.kind())) + " vs " + to_string(b.kind()));
    require_same_context(a.label(), b.label());
}

Valuation combine(const Valuation& a, const Valuation& b) {
    require_same_instance(a, b);
    switch (a.kind()) {
        case InstanceKind::potential: return combine_tables(a.potential(), b.potential());
        case InstanceKind::gaussian: return combine_gaussian(a.gaussian(), b.gaussian());
        case InstanceKind::belief: return combine_mass(a.mass(), b.mass());
    }
    fail(ErrorKind::instance_mismatch, "unreachable");
}

Valuation project(const Valuation& v, const Domain& target) {
    require_same_context(v.label(), target);
    if (!leq(target, v.label()))
        fail(ErrorKind::projection_domain,
             "projection of " + v.label().to_text() + " to " + target.to_text());
    switch (v.kind()) {
        case InstanceKind::potential: return project_table(v.potential(), target);
        case InstanceKind::gaussian: return project_gaussian(v.gaussian(), target);
        case InstanceKind::belief: return project_mass(v.mass(), target);
    }
    fail(ErrorKind::instance_mismatch, "unreachable");
}

Valuation unit_valuation(InstanceKind kind, const Domain& x) {
    switch (kind) {
        case InstanceKind::potential: return unit_table(x);
        case InstanceKind::belief: return unit_mass(x);
        case InstanceKind::gaussian:
            fail(ErrorKind::unsupported, "gaussian potentials have no unit elements");
    }
    fail(ErrorKind::unsupported, "unreachable");
}

Valuation null_valuation(InstanceKind kind, const Domain& x) {
    switch (kind) {
        case InstanceKind::potential: return null_table(x);
        case InstanceKind::belief: return null_mass(x);
        case InstanceKind::gaussian:
            fail(ErrorKind::unsupported, "gaussian potentials have no null elements");
    }
    fail(ErrorKind::unsupported, "unreachable");
}

bool is_null(const Valuation& v) {
    switch (v.kind()) {
        case InstanceKind::potential: return v.potential().is_null();
        case InstanceKind::belief: return v.mass().is_null();
        case InstanceKind::gaussian: return false;
    }
    return false;
}

GroupTag group_tag(const Valuation& v) {
    switch (v.kind()) {
        case InstanceKind::potential:
            return GroupTag{InstanceKind::potential, v.label(), support(v.potential())};
        case InstanceKind::gaussian:
            return GroupTag{InstanceKind::gaussian, v.label(), BitVec()};
        case InstanceKind::belief: {
            auto q = mass_to_commonality(v.mass());
            BitVec s(q.values.size());
            for (std::size_t i = 0; i < q.values.size(); ++i)
                if (q.values[i] > 0.0) s.set(i);
            return GroupTag{InstanceKind::belief, v.label(), std::move(s)};
        }
    }
    fail(ErrorKind::instance_mismatch, "unreachable");
}

bool tag_equal(const GroupTag& a, const GroupTag& b) {
    return a.kind == b.kind && a.domain == b.domain && a.support == b.support;
}

namespace {

// Checks that every support cell of `fine_tag` maps into the support of
// `coarse_tag` when restricted to the coarser domain. This is the indicator
// identity f_coarse * f_fine = f_fine evaluated without materializing f.
bool support_restricts_into(const GroupTag& coarse_tag, const GroupTag& fine_tag) {
    if (coarse_tag.kind == InstanceKind::gaussian) return true;
    if (coarse_tag.kind == InstanceKind::potential) {
        ConfigSpace fine(fine_tag.domain);
        auto to_coarse = fine.restriction_map(coarse_tag.domain);
        for (std::size_t i = 0; i < fine.total(); ++i)
            if (fine_tag.support.test(i) && !coarse_tag.support.test(to_coarse[i])) return false;
        return true;
    }
    // belief: coarsen each supported subset of the finer frame
    auto parent = cell_parent_map(coarse_tag.domain, fine_tag.domain);
    for (std::size_t mask = 0; mask < fine_tag.support.size(); ++mask) {
        if (!fine_tag.support.test(mask)) continue;
        std::uint32_t coarse_mask = 0;
        for (std::size_t c = 0; c < parent.size(); ++c)
            if (mask >> c & 1) coarse_mask |= std::uint32_t(1) << parent[c];
        if (!coarse_tag.support.test(coarse_mask)) return false;
    }
    return true;
}

} // namespace

bool tag_leq(const GroupTag& a, const GroupTag& b) {
    if (a.kind != b.kind) return false;
    if (!leq(a.domain, b.domain)) return false;
    return support_restricts_into(a, b);
}

GroupTag tag_join(const GroupTag& a, const GroupTag& b) {
    if (a.kind != b.kind) fail(ErrorKind::instance_mismatch, "tag join across instances");
    Domain joint = join(a.domain, b.domain);
    if (a.kind == InstanceKind::gaussian) return GroupTag{a.kind, std::move(joint), BitVec()};
    if (a.kind == InstanceKind::potential) {
        ConfigSpace space(joint);
        auto to_a = space.restriction_map(a.domain);
        auto to_b = space.restriction_map(b.domain);
        BitVec s(space.total());
        for (std::size_t i = 0; i < space.total(); ++i)
            if (a.support.test(to_a[i]) && b.support.test(to_b[i])) s.set(i);
        return GroupTag{a.kind, std::move(joint), std::move(s)};
    }
    auto parent_a = cell_parent_map(a.domain, joint);
    auto parent_b = cell_parent_map(b.domain, joint);
    const std::size_t n = std::size_t(1) << joint.cell_count();
    BitVec s(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::uint32_t ma = 0, mb = 0;
        for (std::size_t c = 0; c < parent_a.size(); ++c)
            if (mask >> c & 1) {
                ma |= std::uint32_t(1) << parent_a[c];
                mb |= std::uint32_t(1) << parent_b[c];
            }
        if (a.support.test(ma) && b.support.test(mb)) s.set(mask);
    }
    return GroupTag{a.kind, std::move(joint), std::move(s)};
}

bool dominates(const Valuation& a, const Valuation& b) {
    require_same_instance(a, b);
    return tag_leq(group_tag(b), group_tag(a));
}

namespace {

bool vectors_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!nearly_equal(a[i], b[i], tol)) return false;
    return true;
}

// Vector quantities compare against the vector magnitude: a near-zero mean
// entry must not turn solve noise into a relative-error blowup.
bool vectors_equal_scaled(const std::vector<double>& a, const std::vector<double>& b,
                          double tol) {
    if (a.size() != b.size()) return false;
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    const double bound = std::max(1e-12, tol * scale);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > bound) return false;
    return true;
}

} // namespace

bool approx_equal(const Valuation& a, const Valuation& b, double tol) {
    if (a.kind() != b.kind()) return false;
    if (a.label().context()->id != b.label().context()->id) return false;
    if (!(a.label() == b.label())) return false;
    switch (a.kind()) {
        case InstanceKind::potential:
            return vectors_equal(a.potential().values, b.potential().values, tol);
        case InstanceKind::gaussian: {
            const auto& ga = a.gaussian();
            const auto& gb = b.gaussian();
            return vectors_equal_scaled(ga.mean, gb.mean, tol) &&
                   vectors_equal_scaled(ga.concentration.a, gb.concentration.a, tol);
        }
        case InstanceKind::belief: {
            const auto& ma = a.mass().masses;
            const auto& mb = b.mass().masses;
            for (const auto& [mask, v] : ma) {
                auto it = mb.find(mask);
                if (!nearly_equal(v, it == mb.end() ? 0.0 : it->second, tol)) return false;
            }
            for (const auto& [mask, v] : mb)
                if (!ma.count(mask) && !nearly_equal(v, 0.0, tol)) return false;
            return true;
        }
    }
    return false;
}

std::string describe(const Valuation& v) {
    std::ostringstream os;
    os << to_string(v.kind()) << " on " << v.label().to_text() << " [";
    switch (v.kind()) {
        case InstanceKind::potential: {
            const auto& vals = v.potential().values;
            for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
            break;
        }
        case InstanceKind::gaussian: {
            const auto& g = v.gaussian();
            os << "mu=";
            for (std::size_t i = 0; i < g.mean.size(); ++i) os << (i ? "," : "") << g.mean[i];
            os << " K=";
            for (std::size_t i = 0; i < g.concentration.a.size(); ++i)
                os << (i ? "," : "") << g.concentration.a[i];
            break;
        }
        case InstanceKind::belief: {
            bool first = true;
            for (const auto& [mask, val] : v.mass().masses) {
                if (!first) os << " ";
                first = false;
                os << mask << ":" << val;
            }
            break;
        }
    }
    os << "]";
    return os.str();
}

} // namespace valgebra
