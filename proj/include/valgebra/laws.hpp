#pragma once

#include <functional>
#include <string>
#include <vector>

#include "valgebra/generators.hpp"
#include "valgebra/quotient.hpp"

namespace valgebra {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int cases = 500;
    double tol = kDefaultTol;
};

/// Per-instance tolerance used by the acceptance criteria: potentials 1e-9,
/// Gaussians 1e-8, belief 1e-12.
double instance_tolerance(InstanceKind kind);

struct LawResult {
    std::string name;
    bool pass = true;
    int cases = 0;
    std::string counterexample; // first failing case, or a stored witness
    bool informational = false; // reported but not gating (exploration mode)
};

struct LawReport {
    std::vector<LawResult> laws;

    bool all_pass() const;
    /// One line per law: `LAW <name> PASS|FAIL ncases=<n> [counterexample=<file>]`.
    /// When `artifact_dir` is nonempty, counterexample texts are written there
    /// and referenced from the line.
    std::string to_text(const std::string& artifact_dir = "") const;
};

/// Swappable core operations so the harness itself can be tested against
/// deliberately broken implementations.
struct OpHooks {
    std::function<Valuation(const Valuation&, const Valuation&)> combine;
    std::function<Valuation(const Valuation&, const Domain&)> project;
};

LawReport check_axioms(InstanceKind kind, const SuiteConfig& cfg, const OpHooks& hooks = {});
LawReport check_separative(InstanceKind kind, const SuiteConfig& cfg);
LawReport check_conditional_laws(InstanceKind kind, const SuiteConfig& cfg);
LawReport check_composition_laws_modular(InstanceKind kind, const SuiteConfig& cfg);
LawReport check_composition_laws_distributive(InstanceKind kind, const SuiteConfig& cfg);

/// Theorem-1 items over a partition (non-modular) lattice for belief
/// functions: not claimed by the theory, reported without gating.
LawReport check_composition_partition_exploration(const SuiteConfig& cfg);

/// Lattice laws over a sample of domains from one context; when the sample is
/// the full lattice the modular/distributive observations are authoritative
/// for the context flags.
LawReport check_lattice_laws(const ContextPtr& ctx, const std::vector<Domain>& sample,
                             bool exhaustive = false);

LawReport check_regularity_potentials(const SuiteConfig& cfg);
LawReport check_cancellativity_gaussian(const SuiteConfig& cfg);
LawReport check_a5prime_gaussian(const SuiteConfig& cfg);

/// The stored non-regularity witness: a belief quotient whose commonality
/// ratio has a negative Moebius coefficient, so reduce must fail.
LawReport belief_regularity_witness();

} // namespace valgebra
