#include "valgebra/gaussian.hpp"

#include <algorithm>

namespace valgebra {

namespace {

// positions of sub-scope variables inside the super scope
std::vector<std::size_t> embedding(const Domain& sub, const Domain& super) {
    std::vector<std::size_t> pos;
    const auto& sv = super.variables();
    for (int v : sub.variables()) {
        auto it = std::lower_bound(sv.begin(), sv.end(), v);
        if (it == sv.end() || *it != v)
            fail(ErrorKind::order_violation, "scope is not a subdomain");
        pos.push_back(static_cast<std::size_t>(it - sv.begin()));
    }
    return pos;
}

} // namespace

GaussianPotential::GaussianPotential(Domain scope_, std::vector<double> mean_,
                                     SquareMatrix concentration_)
    : scope(std::move(scope_)), mean(std::move(mean_)), concentration(std::move(concentration_)) {
    if (scope.kind() != LatticeKind::subset)
        fail(ErrorKind::invalid_value, "gaussian scope must be a variable set");
    const std::size_t n = scope.variables().size();
    if (mean.size() != n || concentration.n != n)
        fail(ErrorKind::invalid_value, "mean/concentration dimensions do not match the scope");
    if (!is_symmetric(concentration))
        fail(ErrorKind::invalid_value, "concentration matrix is not symmetric");
    if (!cholesky(concentration))
        fail(ErrorKind::not_positive_definite, "concentration matrix is not positive definite");
}

GaussianPotential combine_gaussian(const GaussianPotential& g1, const GaussianPotential& g2) {
    Domain joint = join(g1.scope, g2.scope);
    const std::size_t n = joint.variables().size();
    auto p1 = embedding(g1.scope, joint);
    auto p2 = embedding(g2.scope, joint);

    SquareMatrix k(n);
    std::vector<double> km(n, 0.0); // K1 mu1 + K2 mu2, zero padded
    const auto km1 = multiply(g1.concentration, g1.mean);
    const auto km2 = multiply(g2.concentration, g2.mean);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        for (std::size_t j = 0; j < p1.size(); ++j)
            k(p1[i], p1[j]) += g1.concentration(i, j);
        km[p1[i]] += km1[i];
    }
    for (std::size_t i = 0; i < p2.size(); ++i) {
        for (std::size_t j = 0; j < p2.size(); ++j)
            k(p2[i], p2[j]) += g2.concentration(i, j);
        km[p2[i]] += km2[i];
    }
    auto lower = cholesky(k);
    if (!lower)
        fail(ErrorKind::not_positive_definite, "combined concentration failed Cholesky");
    auto mu = cholesky_solve(*lower, km);
    return GaussianPotential(std::move(joint), std::move(mu), std::move(k));
}

GaussianPotential project_gaussian(const GaussianPotential& g, const Domain& target) {
    if (!leq(target, g.scope))
        fail(ErrorKind::projection_domain, "projection target not below the scope");
    auto pos = embedding(target, g.scope);
    const std::size_t m = pos.size();
    const std::size_t n = g.scope.variables().size();
    std::vector<double> mu_t(m);
    for (std::size_t i = 0; i < m; ++i) mu_t[i] = g.mean[pos[i]];

    // ((K^-1)_tt)^-1 computed as the Schur complement K_tt - K_ts K_ss^-1 K_st,
    // one factorization of the marginalized block instead of two full inversions
    std::vector<std::size_t> keep(pos.begin(), pos.end());
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) drop.push_back(i);

    SquareMatrix k_tt(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) k_tt(i, j) = g.concentration(keep[i], keep[j]);
    if (drop.empty()) return GaussianPotential(target, std::move(mu_t), std::move(k_tt));

    SquareMatrix k_ss(drop.size());
    for (std::size_t i = 0; i < drop.size(); ++i)
        for (std::size_t j = 0; j < drop.size(); ++j)
            k_ss(i, j) = g.concentration(drop[i], drop[j]);
    auto lower = cholesky(k_ss);
    if (!lower) fail(ErrorKind::not_positive_definite, "marginalized block failed Cholesky");
    std::vector<double> col(drop.size());
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < drop.size(); ++i) col[i] = g.concentration(drop[i], keep[j]);
        auto solved = cholesky_solve(*lower, col);
        for (std::size_t i = 0; i < m; ++i) {
            double dot = 0.0;
            for (std::size_t l = 0; l < drop.size(); ++l)
                dot += g.concentration(keep[i], drop[l]) * solved[l];
            k_tt(i, j) -= dot;
        }
    }
    // symmetrize the last bits
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            k_tt(i, j) = k_tt(j, i) = 0.5 * (k_tt(i, j) + k_tt(j, i));
    return GaussianPotential(target, std::move(mu_t), std::move(k_tt));
}

CanonicalGaussian to_canonical(const GaussianPotential& g) {
    return CanonicalGaussian{g.scope, multiply(g.concentration, g.mean), g.concentration};
}

GaussianPotential from_canonical(const CanonicalGaussian& c) {
    auto lower = cholesky(c.concentration);
    if (!lower)
        fail(ErrorKind::not_reducible, "canonical concentration is not positive definite");
    auto mu = cholesky_solve(*lower, c.h);
    return GaussianPotential(c.scope, std::move(mu), c.concentration);
}

CanonicalGaussian lift_canonical(const CanonicalGaussian& c, const Domain& target) {
    auto pos = embedding(c.scope, target);
    const std::size_t n = target.variables().size();
    CanonicalGaussian out{target, std::vector<double>(n, 0.0), SquareMatrix(n)};
    for (std::size_t i = 0; i < pos.size(); ++i) {
        out.h[pos[i]] = c.h[i];
        for (std::size_t j = 0; j < pos.size(); ++j)
            out.concentration(pos[i], pos[j]) = c.concentration(i, j);
    }
    return out;
}

} // namespace valgebra
