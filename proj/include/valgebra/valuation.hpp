#pragma once

#include <string>
#include <variant>

#include "valgebra/belief.hpp"
#include "valgebra/bitvec.hpp"
#include "valgebra/domain.hpp"
#include "valgebra/gaussian.hpp"
#include "valgebra/potential.hpp"

namespace valgebra {

enum class InstanceKind { potential, gaussian, belief };

const char* to_string(InstanceKind kind);

/// Default equality tolerance: relative 1e-9 with absolute floor 1e-12.
inline constexpr double kDefaultTol = 1e-9;

bool nearly_equal(double a, double b, double tol);

/// A valuation of one of the three instances. Immutable; the label is the
/// payload's intrinsic domain.
class Valuation {
public:
    Valuation(PotentialTable p) : payload_(std::move(p)) {}
    Valuation(GaussianPotential g) : payload_(std::move(g)) {}
    Valuation(MassFunction m) : payload_(std::move(m)) {}

    InstanceKind kind() const;
    const Domain& label() const;

    const PotentialTable& potential() const;
    const GaussianPotential& gaussian() const;
    const MassFunction& mass() const;

    bool is(InstanceKind k) const { return kind() == k; }

private:
    std::variant<PotentialTable, GaussianPotential, MassFunction> payload_;
};

Domain label(const Valuation& v);
Valuation combine(const Valuation& a, const Valuation& b);
Valuation project(const Valuation& v, const Domain& target);

/// Unit element of the instance on domain x; Gaussians have none and throw
/// `unsupported`.
Valuation unit_valuation(InstanceKind kind, const Domain& x);

/// Null (absorbing) element; Gaussians have none and throw `unsupported`.
Valuation null_valuation(InstanceKind kind, const Domain& x);

bool is_null(const Valuation& v);

/// Identity of the group delta(v) in the quotient-group decomposition:
/// the domain plus a support set (table support for potentials, commonality
/// support for belief; Gaussians have per-domain groups so the domain alone).
struct GroupTag {
    InstanceKind kind;
    Domain domain;
    BitVec support;
};

GroupTag group_tag(const Valuation& v);

bool tag_equal(const GroupTag& a, const GroupTag& b);
/// Domination order on groups: delta(a) <= delta(b).
bool tag_leq(const GroupTag& a, const GroupTag& b);
GroupTag tag_join(const GroupTag& a, const GroupTag& b);

/// True iff delta(b) <= delta(a): a's group dominates b's, i.e. division of
/// anything in a's class by b is meaningful.
bool dominates(const Valuation& a, const Valuation& b);

bool approx_equal(const Valuation& a, const Valuation& b, double tol = kDefaultTol);

void require_same_instance(const Valuation& a, const Valuation& b);

/// Compact one-line rendering for counterexamples and logs.
std::string describe(const Valuation& v);

} // namespace valgebra
