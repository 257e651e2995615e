#include "valgebra/generators.hpp"

#include <algorithm>

namespace valgebra {

ContextPtr potential_context() {
    static ContextPtr ctx = make_subset_context({"A", "B", "C", "D"}, {2, 2, 2, 2});
    return ctx;
}

ContextPtr gaussian_context() {
    static ContextPtr ctx = make_subset_context({"x1", "x2", "x3", "x4"}, {0, 0, 0, 0});
    return ctx;
}

ContextPtr belief_partition_context() {
    static ContextPtr ctx = make_partition_context({1, 2, 3, 4});
    return ctx;
}

ContextPtr belief_multivariate_context() {
    static ContextPtr ctx = make_subset_context({"P", "Q", "R"}, {2, 2, 2});
    return ctx;
}

// Frames of at most four cells, matching the axiom-suite tolerances.
static ContextPtr belief_small_multivariate_context() {
    static ContextPtr ctx = make_subset_context({"P", "Q"}, {2, 2});
    return ctx;
}

ContextPtr axiom_context(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::potential: return potential_context();
        case InstanceKind::gaussian: return gaussian_context();
        // The combination axiom needs compatible frames: on unrestricted
        // partition pairs the meet spreads focal sets, so the axiom and the
        // quotient theorems live on the multivariate frame lattice. Partition
        // frames keep the instance-level and exploration suites.
        case InstanceKind::belief: return belief_small_multivariate_context();
    }
    return nullptr;
}

ContextPtr theorem_context(InstanceKind kind) {
    return kind == InstanceKind::belief ? belief_multivariate_context() : axiom_context(kind);
}

namespace {

Domain random_partition_domain(Rng& rng, const ContextPtr& ctx) {
    const auto& atoms = ctx->atoms;
    // random surjection-ish assignment of atoms to group slots
    std::vector<Block> slots(atoms.size());
    for (int a : atoms) slots[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(atoms.size()) - 1))].push_back(a);
    std::vector<Block> blocks;
    for (auto& b : slots)
        if (!b.empty()) blocks.push_back(std::move(b));
    return Domain::partition(ctx, std::move(blocks));
}

Domain coarsen_partition(Rng& rng, const Domain& d) {
    auto blocks = d.blocks();
    if (blocks.size() <= 1) return d;
    const int i = rng.uniform_int(0, static_cast<int>(blocks.size()) - 1);
    int j = rng.uniform_int(0, static_cast<int>(blocks.size()) - 2);
    if (j >= i) ++j;
    blocks[static_cast<std::size_t>(i)].insert(blocks[static_cast<std::size_t>(i)].end(),
                                               blocks[static_cast<std::size_t>(j)].begin(),
                                               blocks[static_cast<std::size_t>(j)].end());
    blocks.erase(blocks.begin() + j);
    return Domain::partition(d.context(), std::move(blocks));
}

} // namespace

Domain random_domain(Rng& rng, const ContextPtr& ctx) {
    if (ctx->kind == LatticeKind::partition) return random_partition_domain(rng, ctx);
    std::vector<int> vars;
    for (int v = 0; v < static_cast<int>(ctx->variable_count()); ++v)
        if (rng.coin()) vars.push_back(v);
    return Domain::subset(ctx, std::move(vars));
}

Domain random_subdomain(Rng& rng, const Domain& d) {
    if (d.kind() == LatticeKind::partition) {
        Domain out = d;
        const int steps = rng.uniform_int(0, static_cast<int>(d.blocks().size()) - 1);
        for (int s = 0; s < steps; ++s) out = coarsen_partition(rng, out);
        return out;
    }
    std::vector<int> vars;
    for (int v : d.variables())
        if (rng.coin()) vars.push_back(v);
    return Domain::subset(d.context(), std::move(vars));
}

std::vector<Domain> random_chain(Rng& rng, const ContextPtr& ctx, int length) {
    std::vector<Domain> chain; // descending: x, y, z
    chain.push_back(random_domain(rng, ctx));
    for (int i = 1; i < length; ++i) chain.push_back(random_subdomain(rng, chain.back()));
    return chain;
}

PotentialTable random_potential(Rng& rng, const Domain& d, const RandomOpts& opts) {
    const std::size_t n = d.cell_count();
    std::vector<double> values(n);
    for (auto& v : values)
        v = (!opts.positive && rng.coin(opts.zero_prob)) ? 0.0 : rng.uniform(0.2, 2.0);
    bool any = false;
    for (double v : values) any = any || v > 0.0;
    if (!any) values[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1))] =
        rng.uniform(0.2, 2.0);
    return PotentialTable(d, std::move(values));
}

GaussianPotential random_gaussian(Rng& rng, const Domain& d) {
    const std::size_t n = d.variables().size();
    SquareMatrix k(n);
    // K = A^T A + eps I; redraw A when the result is badly conditioned, so the
    // law tolerances are not dominated by solve error
    for (int attempt = 0; attempt < 64; ++attempt) {
        SquareMatrix a(n);
        for (auto& v : a.a) v = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += a(l, i) * a(l, j);
                k(i, j) = s + (i == j ? 1e-6 : 0.0);
            }
        if (n == 0) break;
        const double cond = inf_norm(k) * inf_norm(invert_spd(k));
        if (cond < 1e3) break;
    }
    std::vector<double> mu(n);
    for (auto& v : mu) v = rng.uniform(-2.0, 2.0);
    return GaussianPotential(d, std::move(mu), std::move(k));
}

MassFunction random_mass(Rng& rng, const Domain& d, const RandomOpts& opts) {
    const std::size_t cells = d.cell_count();
    const std::uint32_t full = static_cast<std::uint32_t>((std::size_t(1) << cells) - 1);
    std::map<std::uint32_t, double> masses;
    const int focal = rng.uniform_int(1, 4);
    for (int i = 0; i < focal; ++i) {
        const std::uint32_t mask = full == 0 ? 0 : static_cast<std::uint32_t>(
            rng.uniform_int(1, static_cast<int>(full)));
        masses[mask] += rng.uniform(0.2, 1.5);
    }
    if (opts.positive) masses[full] += rng.uniform(0.2, 1.5);
    return MassFunction(d, std::move(masses));
}

Valuation random_valuation(Rng& rng, InstanceKind kind, const Domain& d,
                           const RandomOpts& opts) {
    switch (kind) {
        case InstanceKind::potential: return random_potential(rng, d, opts);
        case InstanceKind::gaussian: return random_gaussian(rng, d);
        case InstanceKind::belief: return random_mass(rng, d, opts);
    }
    fail(ErrorKind::instance_mismatch, "unreachable");
}

} // namespace valgebra
