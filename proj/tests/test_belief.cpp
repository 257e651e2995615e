#include <doctest.h>

#include <map>
#include <set>

#include "valgebra/generators.hpp"
#include "valgebra/valuation.hpp"

using namespace valgebra;

namespace {

// Independent oracle working on explicit sets of atoms instead of bitmasks.
using AtomSet = std::set<int>;

AtomSet cells_to_atoms(const Domain& frame, std::uint32_t mask) {
    AtomSet out;
    for (std::size_t c = 0; c < frame.cell_count(); ++c)
        if (mask >> c & 1)
            for (int a : frame.blocks()[c]) out.insert(a);
    return out;
}

std::uint32_t atoms_to_cells(const Domain& frame, const AtomSet& atoms) {
    std::uint32_t mask = 0;
    for (std::size_t c = 0; c < frame.cell_count(); ++c) {
        const auto& block = frame.blocks()[c];
        bool inside = true;
        for (int a : block) inside = inside && atoms.count(a);
        if (inside && !block.empty()) mask |= std::uint32_t(1) << c;
    }
    return mask;
}

// Brute-force combination: refine each focal set to atom level on the join
// frame, intersect atom sets, coarsen back.
std::map<std::uint32_t, double> oracle_combine(const MassFunction& m1, const MassFunction& m2,
                                               const Domain& joint) {
    std::map<std::uint32_t, double> out;
    for (const auto& [s1, v1] : m1.masses) {
        AtomSet a1 = cells_to_atoms(m1.frame, s1);
        for (const auto& [s2, v2] : m2.masses) {
            AtomSet a2 = cells_to_atoms(m2.frame, s2);
            AtomSet inter;
            for (int a : a1)
                if (a2.count(a)) inter.insert(a);
            out[atoms_to_cells(joint, inter)] += v1 * v2;
        }
    }
    return out;
}

} // namespace

TEST_CASE("moebius transforms on the worked example") {
    auto ctx = make_subset_context({"V"}, {2});
    Domain frame = Domain::subset(ctx, {0}); // cells a=0, b=1
    MassFunction m1(frame, {{0b01, 0.5}, {0b11, 0.5}});

    auto q = mass_to_commonality(m1);
    CHECK(q.values[0b00] == doctest::Approx(1.0));
    CHECK(q.values[0b01] == doctest::Approx(1.0));
    CHECK(q.values[0b10] == doctest::Approx(0.5));
    CHECK(q.values[0b11] == doctest::Approx(0.5));

    auto b = mass_to_belief(m1);
    CHECK(b[0b01] == doctest::Approx(0.5));
    CHECK(b[0b11] == doctest::Approx(1.0));
    CHECK(b[0b00] == doctest::Approx(0.0));

    auto back = commonality_to_mass(q);
    CHECK_FALSE(back.negative);
    CHECK(back.values[0b01] == doctest::Approx(0.5));
    CHECK(back.values[0b11] == doctest::Approx(0.5));
    CHECK(back.values[0b00] == doctest::Approx(0.0));

    // vacuous mass: q is one everywhere
    MassFunction vac = unit_mass(frame);
    auto qv = mass_to_commonality(vac);
    for (double v : qv.values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("same-frame combination matches the hand enumeration") {
    auto ctx = make_subset_context({"V"}, {2});
    Domain frame = Domain::subset(ctx, {0});
    MassFunction m1(frame, {{0b01, 0.5}, {0b11, 0.5}});
    MassFunction m2(frame, {{0b10, 0.4}, {0b11, 0.6}});

    auto m = combine_mass(m1, m2);
    CHECK(m.masses.at(0b00) == doctest::Approx(0.2));
    CHECK(m.masses.at(0b01) == doctest::Approx(0.3));
    CHECK(m.masses.at(0b10) == doctest::Approx(0.2));
    CHECK(m.masses.at(0b11) == doctest::Approx(0.3));

    auto q = combine_commonality(mass_to_commonality(m1), mass_to_commonality(m2));
    CHECK(q.values[0b00] == doctest::Approx(1.0));
    CHECK(q.values[0b01] == doctest::Approx(0.6));
    CHECK(q.values[0b10] == doctest::Approx(0.5));
    CHECK(q.values[0b11] == doctest::Approx(0.3));

    auto via_mass = mass_to_commonality(m);
    for (std::size_t i = 0; i < q.values.size(); ++i)
        CHECK(q.values[i] == doctest::Approx(via_mass.values[i]).epsilon(1e-12));

    // unit leaves the factor untouched
    auto with_unit = combine_mass(m1, unit_mass(frame));
    CHECK(approx_equal(Valuation(with_unit), Valuation(m1)));
}

TEST_CASE("cross-frame combination matches the atom-level oracle") {
    auto ctx = belief_partition_context();
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        Domain f1 = random_domain(rng, ctx);
        Domain f2 = random_domain(rng, ctx);
        auto m1 = random_mass(rng, f1);
        auto m2 = random_mass(rng, f2);
        auto combined = combine_mass(m1, m2);
        auto expected = oracle_combine(m1, m2, combined.frame);
        for (auto& [mask, v] : expected) {
            const double got =
                combined.masses.count(mask) ? combined.masses.at(mask) : 0.0;
            CHECK(got == doctest::Approx(v).epsilon(1e-12));
        }
        // commonality route agrees with the mass route across frames
        auto q_direct = combine_commonality(mass_to_commonality(m1), mass_to_commonality(m2));
        auto q_via = mass_to_commonality(combined);
        for (std::size_t s = 0; s < q_direct.values.size(); ++s)
            CHECK(q_direct.values[s] == doctest::Approx(q_via.values[s]).epsilon(1e-12));
    }
}

TEST_CASE("moebius roundtrip on random masses") {
    auto ctx = belief_partition_context();
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto m = random_mass(rng, random_domain(rng, ctx));
        auto back = commonality_to_mass(mass_to_commonality(m));
        CHECK_FALSE(back.negative);
        for (std::size_t mask = 0; mask < back.values.size(); ++mask) {
            const double want =
                m.masses.count(static_cast<std::uint32_t>(mask)) ? m.masses.at(mask) : 0.0;
            CHECK(back.values[mask] == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("projection coarsens focal sets and preserves total mass") {
    auto ctx = belief_partition_context();
    Domain fine = top(ctx);
    Domain coarse = Domain::partition(ctx, {{1, 2}, {3, 4}});
    MassFunction m(fine, {{0b0001, 1.0}});

    auto proj = project_mass(m, coarse);
    CHECK(proj.masses.at(0b01) == doctest::Approx(1.0));

    CHECK(approx_equal(Valuation(project_mass(m, fine)), Valuation(m)));

    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        auto mm = random_mass(rng, fine);
        auto target = random_subdomain(rng, fine);
        auto pp = project_mass(mm, target);
        double before = 0, after = 0;
        for (auto& [k, v] : mm.masses) before += v;
        for (auto& [k, v] : pp.masses) after += v;
        CHECK(before == doctest::Approx(after).epsilon(1e-12));
    }
}

TEST_CASE("quotient reduction: bayesian case reduces, generic case does not") {
    auto ctx = make_subset_context({"V"}, {2});
    Domain frame = Domain::subset(ctx, {0});

    // q/q is the unit on the support
    MassFunction m(frame, {{0b01, 0.5}, {0b11, 0.5}});
    auto self = quotient_reduce_belief(combine_mass(m, m), m);
    CHECK(approx_equal(Valuation(self), Valuation(m)));

    // singleton-focal masses behave like probability potentials
    MassFunction bayes_num(frame, {{0b01, 0.3}, {0b10, 0.7}});
    MassFunction bayes_den(frame, {{0b01, 0.5}, {0b10, 0.5}});
    auto reduced = quotient_reduce_belief(combine_mass(bayes_num, bayes_den), bayes_den);
    CHECK(approx_equal(Valuation(reduced), Valuation(bayes_num)));

    // the stored witness pair has a negative Moebius coefficient
    MassFunction num(frame, {{0b10, 0.5}, {0b11, 0.5}});
    MassFunction den(frame, {{0b01, 0.5}, {0b11, 0.5}});
    CHECK_THROWS_AS(quotient_reduce_belief(num, den), Error);
}

TEST_CASE("mass function invariants") {
    auto ctx = make_subset_context({"V"}, {2});
    Domain frame = Domain::subset(ctx, {0});
    CHECK_THROWS_AS(MassFunction(frame, {{0b01, -0.2}}), Error);
    CHECK_THROWS_AS(MassFunction(frame, {{0b100, 0.2}}), Error);
    CHECK(null_mass(frame).is_null());
    // tiny masses are clamped away
    MassFunction tiny(frame, {{0b01, 5e-13}});
    CHECK(tiny.is_null());
}
