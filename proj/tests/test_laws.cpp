#include <doctest.h>

#include "valgebra/laws.hpp"

using namespace valgebra;

namespace {

SuiteConfig quick(InstanceKind kind, int cases = 120) {
    SuiteConfig cfg;
    cfg.seed = 2024;
    cfg.cases = cases;
    cfg.tol = instance_tolerance(kind);
    return cfg;
}

} // namespace

TEST_CASE("axiom suites pass for all instances") {
    for (auto kind : {InstanceKind::potential, InstanceKind::gaussian, InstanceKind::belief}) {
        auto report = check_axioms(kind, quick(kind));
        INFO(report.to_text());
        CHECK(report.all_pass());
    }
}

TEST_CASE("a broken projection is caught as an A4 or A5 counterexample") {
    OpHooks hooks;
    hooks.project = [](const Valuation& v, const Domain& x) {
        Valuation out = project(v, x);
        if (out.kind() == InstanceKind::potential && !out.potential().values.empty()) {
            auto values = out.potential().values;
            values[0] += 0.125; // off-by-a-bit marginal sum
            return Valuation(PotentialTable(out.label(), values));
        }
        return out;
    };
    auto report = check_axioms(InstanceKind::potential, quick(InstanceKind::potential), hooks);
    CHECK_FALSE(report.all_pass());
    bool a4_or_a5 = false;
    for (const auto& law : report.laws)
        if (!law.pass && (law.name == "A4-transitivity" || law.name == "A5-combination")) {
            a4_or_a5 = true;
            CHECK_FALSE(law.counterexample.empty());
        }
    CHECK(a4_or_a5);
}

TEST_CASE("a broken combination is caught") {
    OpHooks hooks;
    hooks.combine = [](const Valuation& a, const Valuation& b) {
        Valuation out = combine(a, b);
        if (out.kind() == InstanceKind::potential) {
            auto values = out.potential().values;
            for (auto& v : values) v *= 1.001;
            // scaling is associativity-safe; break the label side instead by
            // projecting away nothing but perturbing asymmetrically
            if (!values.empty()) values.back() += 0.01;
            return Valuation(PotentialTable(out.label(), values));
        }
        return out;
    };
    auto report = check_axioms(InstanceKind::potential, quick(InstanceKind::potential), hooks);
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("separative suites pass for all instances") {
    for (auto kind : {InstanceKind::potential, InstanceKind::gaussian, InstanceKind::belief}) {
        auto report = check_separative(kind, quick(kind, 80));
        INFO(report.to_text());
        CHECK(report.all_pass());
    }
}

TEST_CASE("conditional suites pass for all instances") {
    for (auto kind : {InstanceKind::potential, InstanceKind::gaussian, InstanceKind::belief}) {
        auto report = check_conditional_laws(kind, quick(kind, 80));
        INFO(report.to_text());
        CHECK(report.all_pass());
    }
}

TEST_CASE("composition suites pass for all instances") {
    for (auto kind : {InstanceKind::potential, InstanceKind::gaussian, InstanceKind::belief}) {
        auto modular = check_composition_laws_modular(kind, quick(kind, 60));
        INFO(modular.to_text());
        CHECK(modular.all_pass());
        auto distributive = check_composition_laws_distributive(kind, quick(kind, 40));
        INFO(distributive.to_text());
        CHECK(distributive.all_pass());
    }
}

TEST_CASE("regularity witness fails to reduce and prints the coefficient") {
    auto report = belief_regularity_witness();
    CHECK(report.all_pass());
    REQUIRE(report.laws.size() == 1);
    CHECK(report.laws[0].counterexample.find("negative coefficient") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    auto cfg = quick(InstanceKind::potential, 50);
    auto a = check_axioms(InstanceKind::potential, cfg);
    auto b = check_axioms(InstanceKind::potential, cfg);
    CHECK(a.to_text() == b.to_text());
    cfg.seed = 777;
    auto c = check_axioms(InstanceKind::potential, cfg);
    CHECK(c.all_pass());
}

TEST_CASE("exploration suite reports without gating") {
    SuiteConfig cfg = quick(InstanceKind::belief, 40);
    auto report = check_composition_partition_exploration(cfg);
    for (const auto& law : report.laws) CHECK(law.informational);
    CHECK(report.all_pass()); // informational lines never gate
}
