#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valgebra/errors.hpp"

namespace valgebra {

enum class LatticeKind { subset, partition };

/// One lattice of domains. Subset contexts order finite sets of named
/// variables by inclusion; partition contexts order the partitions of a
/// finite universe of atoms, with P1 <= P2 when P2 is finer than P1.
///
/// Every Domain carries the identity of the context it was created in;
/// operations across contexts are hard errors.
struct LatticeContext {
    LatticeKind kind;

    // subset contexts
    std::vector<std::string> variable_names; // index = variable id
    std::vector<int> cardinalities;          // aligned; 0 marks a continuous variable

    // partition contexts
    std::vector<int> atoms; // sorted, duplicate free

    bool is_modular = true;
    bool is_distributive = true;

    std::uint64_t id = 0;

    std::size_t variable_count() const { return variable_names.size(); }
    int variable_id(const std::string& name) const; // -1 if unknown
};

using ContextPtr = std::shared_ptr<const LatticeContext>;

/// Subset context over named discrete/continuous variables. Flags are both
/// true: powerset lattices are distributive.
ContextPtr make_subset_context(std::vector<std::string> names, std::vector<int> cardinalities);

/// Partition context over a finite universe. For universes of at most five
/// atoms the modular/distributive flags are established by exhaustive triple
/// checks over the whole partition lattice; larger universes get the safe
/// declaration (false, false).
ContextPtr make_partition_context(std::vector<int> atoms);

using Block = std::vector<int>;

/// An element of a context's lattice: a variable set (subset contexts) or a
/// frame, i.e. the block set of a partition (partition contexts). Immutable
/// and canonically ordered.
class Domain {
public:
    static Domain subset(ContextPtr ctx, std::vector<int> variables);
    static Domain partition(ContextPtr ctx, std::vector<Block> blocks);

    const ContextPtr& context() const { return ctx_; }
    LatticeKind kind() const { return ctx_->kind; }

    const std::vector<int>& variables() const { return vars_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Number of "cells": blocks for a frame, configurations for a variable
    /// set (product of cardinalities). Cells index mass-function subsets and
    /// potential tables.
    std::size_t cell_count() const;

    /// Per-variable cardinalities of a subset domain, in scope order.
    std::vector<int> scope_cardinalities() const;

    bool operator==(const Domain& other) const;
    bool operator!=(const Domain& other) const { return !(*this == other); }

    std::string to_text() const;

private:
    Domain(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    ContextPtr ctx_;
    std::vector<int> vars_;
    std::vector<Block> blocks_;
};

Domain bottom(const ContextPtr& ctx);
Domain top(const ContextPtr& ctx);

Domain join(const Domain& x, const Domain& y);
Domain meet(const Domain& x, const Domain& y);
bool leq(const Domain& x, const Domain& y);

/// Maps each cell of the finer domain to the cell of the coarser domain it
/// sits in. Requires coarse <= fine.
std::vector<int> cell_parent_map(const Domain& coarse, const Domain& fine);

/// Refining map tau: subsets of a coarser frame to subsets of a finer one.
/// Subsets are bitmasks over canonical cell order; requires coarse <= fine.
std::uint32_t refining_map(std::uint32_t subset, const Domain& coarse, const Domain& fine);

/// Coarsening map v: subsets of a finer frame back to the coarser one.
std::uint32_t coarsening_map(std::uint32_t subset, const Domain& fine, const Domain& coarse);

/// All partitions of the context universe (partition contexts, small
/// universes only — Bell(5) = 52).
std::vector<Domain> enumerate_partitions(const ContextPtr& ctx);

void require_same_context(const Domain& x, const Domain& y);

// --- configuration indexing for subset domains -----------------------------

/// Row-major configuration space of a discrete variable-set domain: variables
/// ascend by id, the last variable varies fastest.
struct ConfigSpace {
    explicit ConfigSpace(const Domain& domain);

    std::size_t total() const { return total_; }
    std::size_t variable_count() const { return cards_.size(); }
    const std::vector<int>& cardinalities() const { return cards_; }

    /// Decodes index -> per-variable values (scope order).
    std::vector<int> decode(std::size_t index) const;
    std::size_t encode(const std::vector<int>& config) const;

    /// Precomputes, for each configuration of this (finer) space, the index of
    /// its restriction to `sub` (sub must be a subset of the scope).
    std::vector<std::size_t> restriction_map(const Domain& sub) const;

private:
    std::vector<int> vars_;
    std::vector<int> cards_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

} // namespace valgebra
