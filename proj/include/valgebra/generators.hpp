#pragma once

#include <cstdint>
#include <random>

#include "valgebra/valuation.hpp"

namespace valgebra {

/// Seeded random source for the law harness. Distributions are derived from
/// the raw mt19937_64 stream directly, so identical seeds give identical case
/// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    /// Inclusive bounds.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

struct RandomOpts {
    double zero_prob = 0.25; // chance of a structural zero per table entry
    bool positive = false;   // force full support (potentials) / positive commonality (belief)
};

// Harness contexts, one per instance.
ContextPtr potential_context();           // four binary variables
ContextPtr gaussian_context();            // four continuous variables
ContextPtr belief_partition_context();    // partitions of a four-atom universe
ContextPtr belief_multivariate_context(); // three binary variables

Domain random_domain(Rng& rng, const ContextPtr& ctx);
Domain random_subdomain(Rng& rng, const Domain& d);
/// z <= y <= x, descending chain of the requested length starting from a
/// random domain (length 2 or 3).
std::vector<Domain> random_chain(Rng& rng, const ContextPtr& ctx, int length);

Valuation random_valuation(Rng& rng, InstanceKind kind, const Domain& d,
                           const RandomOpts& opts = {});

PotentialTable random_potential(Rng& rng, const Domain& d, const RandomOpts& opts = {});
GaussianPotential random_gaussian(Rng& rng, const Domain& d);
MassFunction random_mass(Rng& rng, const Domain& d, const RandomOpts& opts = {});

/// The context the law suites use per instance (partition frames for belief
/// axioms, multivariate for the conditional/composition theorems).
ContextPtr axiom_context(InstanceKind kind);
ContextPtr theorem_context(InstanceKind kind);

} // namespace valgebra
