#include "valgebra/belief.hpp"

#include <cmath>

#include "valgebra/potential.hpp"

namespace valgebra {

namespace {

constexpr std::size_t kMaxCells = 16;

std::vector<double> dense_masses(const MassFunction& m) {
    std::vector<double> out(std::size_t(1) << m.cells(), 0.0);
    for (const auto& [mask, v] : m.masses) out[mask] += v;
    return out;
}

// Lifts a subset of a factor frame to the join frame through the refining
// map: the join cells whose parent lies in the subset.
std::uint32_t lift_mask(std::uint32_t mask, const std::vector<int>& parent) {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (mask >> parent[c] & 1) out |= std::uint32_t(1) << c;
    return out;
}

std::uint32_t coarsen_mask(std::uint32_t mask, const std::vector<int>& parent) {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (mask >> c & 1) out |= std::uint32_t(1) << parent[c];
    return out;
}

} // namespace

MassFunction::MassFunction(Domain frame_, std::map<std::uint32_t, double> masses_)
    : frame(std::move(frame_)), masses(std::move(masses_)) {
    const std::size_t n = frame.cell_count();
    if (n > kMaxCells) fail(ErrorKind::invalid_value, "frame exceeds 16 cells");
    for (auto it = masses.begin(); it != masses.end();) {
        if (it->first >= (std::uint32_t(1) << n))
            fail(ErrorKind::invalid_value, "focal set outside the frame's power set");
        if (std::abs(it->second) < kZeroClamp) {
            it = masses.erase(it);
            continue;
        }
        if (!(it->second > 0.0))
            fail(ErrorKind::invalid_value, "masses must be nonnegative");
        ++it;
    }
}

Commonality mass_to_commonality(const MassFunction& m) {
    auto a = dense_masses(m);
    const std::size_t n = m.cells();
    // superset zeta transform: q(S) = sum of m(T) over T >= S
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t mask = 0; mask < a.size(); ++mask)
            if (!(mask >> bit & 1)) a[mask] += a[mask | (std::size_t(1) << bit)];
    return Commonality{m.frame, std::move(a)};
}

SignedMass commonality_to_mass(const Commonality& q) {
    auto a = q.values;
    const std::size_t n = q.frame.cell_count();
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t mask = 0; mask < a.size(); ++mask)
            if (!(mask >> bit & 1)) a[mask] -= a[mask | (std::size_t(1) << bit)];
    bool neg = false;
    for (double v : a)
        if (v < -kZeroClamp) neg = true;
    return SignedMass{q.frame, std::move(a), neg};
}

std::vector<double> mass_to_belief(const MassFunction& m) {
    auto a = dense_masses(m);
    const std::size_t n = m.cells();
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t mask = 0; mask < a.size(); ++mask)
            if (mask >> bit & 1) a[mask] += a[mask ^ (std::size_t(1) << bit)];
    return a;
}

MassFunction combine_mass(const MassFunction& m1, const MassFunction& m2) {
    Domain joint = join(m1.frame, m2.frame);
    auto parent1 = cell_parent_map(m1.frame, joint);
    auto parent2 = cell_parent_map(m2.frame, joint);
    std::map<std::uint32_t, double> out;
    for (const auto& [s1, v1] : m1.masses) {
        const std::uint32_t lifted1 = lift_mask(s1, parent1);
        for (const auto& [s2, v2] : m2.masses) {
            const std::uint32_t s = lifted1 & lift_mask(s2, parent2);
            out[s] += v1 * v2;
        }
    }
    return MassFunction(std::move(joint), std::move(out));
}

Commonality combine_commonality(const Commonality& q1, const Commonality& q2) {
    Domain joint = join(q1.frame, q2.frame);
    auto parent1 = cell_parent_map(q1.frame, joint);
    auto parent2 = cell_parent_map(q2.frame, joint);
    std::vector<double> out(std::size_t(1) << joint.cell_count());
    for (std::size_t mask = 0; mask < out.size(); ++mask)
        out[mask] = q1.values[coarsen_mask(static_cast<std::uint32_t>(mask), parent1)] *
                    q2.values[coarsen_mask(static_cast<std::uint32_t>(mask), parent2)];
    return Commonality{std::move(joint), std::move(out)};
}

MassFunction project_mass(const MassFunction& m, const Domain& target) {
    if (!leq(target, m.frame))
        fail(ErrorKind::projection_domain, "projection target not below the frame");
    auto parent = cell_parent_map(target, m.frame);
    std::map<std::uint32_t, double> out;
    for (const auto& [mask, v] : m.masses) out[coarsen_mask(mask, parent)] += v;
    return MassFunction(target, std::move(out));
}

MassFunction quotient_reduce_belief(const MassFunction& num, const MassFunction& den) {
    if (!leq(den.frame, num.frame))
        fail(ErrorKind::order_violation, "denominator frame must be below the numerator frame");
    auto qn = mass_to_commonality(num);
    auto qd = mass_to_commonality(den);
    auto parent = cell_parent_map(den.frame, num.frame);
    std::vector<double> ratio(qn.values.size(), 0.0);
    for (std::size_t mask = 0; mask < ratio.size(); ++mask) {
        const double d = qd.values[coarsen_mask(static_cast<std::uint32_t>(mask), parent)];
        if (d > 0.0) {
            ratio[mask] = qn.values[mask] / d;
        } else if (qn.values[mask] > 0.0) {
            fail(ErrorKind::domination_violation,
                 "numerator commonality positive where the denominator vanishes");
        }
    }
    auto signed_mass = commonality_to_mass(Commonality{num.frame, std::move(ratio)});
    std::map<std::uint32_t, double> masses;
    for (std::size_t mask = 0; mask < signed_mass.values.size(); ++mask) {
        double v = signed_mass.values[mask];
        if (v < -kZeroClamp)
            fail(ErrorKind::not_reducible, "Moebius transform of the quotient has a negative mass");
        if (v > kZeroClamp) masses[static_cast<std::uint32_t>(mask)] = v;
    }
    return MassFunction(num.frame, std::move(masses));
}

MassFunction unit_mass(const Domain& frame) {
    const std::uint32_t full = static_cast<std::uint32_t>((std::size_t(1) << frame.cell_count()) - 1);
    return MassFunction(frame, {{full, 1.0}});
}

MassFunction null_mass(const Domain& frame) {
    return MassFunction(frame, {});
}

} // namespace valgebra
