#include <doctest.h>

#include <cmath>
#include <functional>

#include "valgebra/generators.hpp"
#include "valgebra/valuation.hpp"

using namespace valgebra;

namespace {

// Unnormalized density of a (mu, K) pair at a point.
double density_at(const GaussianPotential& g, const std::vector<double>& x) {
    double quad = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            quad += (x[i] - g.mean[i]) * g.concentration(i, j) * (x[j] - g.mean[j]);
    return std::exp(-0.5 * quad);
}

struct GridMoments {
    double mass, mean, variance;
};

// One-dimensional moments of a positive function sampled on [-8, 8].
GridMoments grid_moments(const std::function<double(double)>& f) {
    const double step = 0.01;
    double mass = 0.0, first = 0.0;
    for (double x = -8.0; x <= 8.0; x += step) {
        const double v = f(x) * step;
        mass += v;
        first += x * v;
    }
    const double mean = first / mass;
    double second = 0.0;
    for (double x = -8.0; x <= 8.0; x += step) second += (x - mean) * (x - mean) * f(x) * step;
    return {mass, mean, second / mass};
}

} // namespace

TEST_CASE("one-dimensional combination formula") {
    auto ctx = gaussian_context();
    Domain d = Domain::subset(ctx, {0});
    GaussianPotential g1(d, {0.0}, [] { SquareMatrix k(1); k(0, 0) = 1; return k; }());
    GaussianPotential g2(d, {2.0}, [] { SquareMatrix k(1); k(0, 0) = 1; return k; }());
    auto g = combine_gaussian(g1, g2);
    CHECK(g.mean[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.concentration(0, 0) == doctest::Approx(2.0).epsilon(1e-12));

    auto self = combine_gaussian(g1, g1);
    CHECK(self.mean[0] == doctest::Approx(0.0));
    CHECK(self.concentration(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("disjoint scopes assemble block-diagonally") {
    auto ctx = gaussian_context();
    GaussianPotential g1(Domain::subset(ctx, {0}), {1.0},
                         [] { SquareMatrix k(1); k(0, 0) = 2; return k; }());
    GaussianPotential g2(Domain::subset(ctx, {1}), {-1.0},
                         [] { SquareMatrix k(1); k(0, 0) = 3; return k; }());
    auto g = combine_gaussian(g1, g2);
    CHECK(g.mean[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.mean[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g.concentration(0, 0) == 2.0);
    CHECK(g.concentration(1, 1) == 3.0);
    CHECK(g.concentration(0, 1) == 0.0);
}

TEST_CASE("projection of a correlated pair") {
    auto ctx = gaussian_context();
    SquareMatrix k(2);
    k(0, 0) = 2;
    k(0, 1) = 1;
    k(1, 0) = 1;
    k(1, 1) = 2;
    GaussianPotential g(Domain::subset(ctx, {0, 1}), {0.0, 0.0}, k);
    auto marg = project_gaussian(g, Domain::subset(ctx, {0}));
    // Sigma = 1/3 [[2,-1],[-1,2]], Sigma_11 = 2/3, K = 1.5
    CHECK(marg.concentration(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(marg.mean[0] == doctest::Approx(0.0));

    // diagonal case drops straight to the block
    SquareMatrix diag(2);
    diag(0, 0) = 4;
    diag(1, 1) = 9;
    GaussianPotential gd(Domain::subset(ctx, {0, 1}), {1.0, 2.0}, diag);
    auto md = project_gaussian(gd, Domain::subset(ctx, {0}));
    CHECK(md.mean[0] == doctest::Approx(1.0));
    CHECK(md.concentration(0, 0) == doctest::Approx(4.0).epsilon(1e-9));

    CHECK(approx_equal(Valuation(project_gaussian(g, g.scope)), Valuation(g)));
}

TEST_CASE("cholesky toolkit") {
    SquareMatrix m(2);
    m(0, 0) = 4;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 3;
    auto lower = cholesky(m);
    REQUIRE(lower);
    CHECK((*lower)(0, 0) == doctest::Approx(2.0));
    CHECK((*lower)(1, 0) == doctest::Approx(1.0));
    CHECK((*lower)(1, 1) == doctest::Approx(std::sqrt(2.0)));

    CHECK(cholesky(SquareMatrix::identity(3)));
    SquareMatrix indefinite(2);
    indefinite(0, 0) = 1;
    indefinite(0, 1) = 2;
    indefinite(1, 0) = 2;
    indefinite(1, 1) = 1;
    CHECK_FALSE(cholesky(indefinite));
    CHECK_THROWS_AS(invert_spd(indefinite), Error);

    // reconstruction accuracy on random spd matrices
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto g = random_gaussian(rng, Domain::subset(gaussian_context(), {0, 1, 2}));
        auto l = cholesky(g.concentration);
        REQUIRE(l);
        SquareMatrix rebuilt(3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                double s = 0;
                for (std::size_t t = 0; t < 3; ++t) s += (*l)(r, t) * (*l)(c, t);
                rebuilt(r, c) = s;
            }
        double err = 0;
        for (std::size_t t = 0; t < 9; ++t)
            err = std::max(err, std::abs(rebuilt.a[t] - g.concentration.a[t]));
        CHECK(err <= 1e-9 * inf_norm(g.concentration));
    }
}

TEST_CASE("canonical form roundtrip and reduction example") {
    auto ctx = gaussian_context();
    Domain d = Domain::subset(ctx, {0});
    GaussianPotential num(d, {1.0}, [] { SquareMatrix k(1); k(0, 0) = 2; return k; }());
    GaussianPotential den(d, {0.0}, [] { SquareMatrix k(1); k(0, 0) = 1; return k; }());

    auto c = to_canonical(num);
    CHECK(c.h[0] == doctest::Approx(2.0));
    auto back = from_canonical(c);
    CHECK(back.mean[0] == doctest::Approx(1.0));

    // canonical parameters subtract: h = 2 - 0, K = 2 - 1 -> (mu = 2, K = 1)
    CanonicalGaussian diff{d, {2.0 - 0.0}, [] { SquareMatrix k(1); k(0, 0) = 1; return k; }()};
    auto reduced = from_canonical(diff);
    CHECK(reduced.mean[0] == doctest::Approx(2.0));

    // the opposite difference is indefinite
    CanonicalGaussian bad{d, {0.0}, [] { SquareMatrix k(1); k(0, 0) = -1; return k; }()};
    CHECK_THROWS_AS(from_canonical(bad), Error);
}

TEST_CASE("empty scope potential is admitted and idempotent") {
    auto ctx = gaussian_context();
    GaussianPotential e(Domain::subset(ctx, {}), {}, SquareMatrix(0));
    auto ee = combine_gaussian(e, e);
    CHECK(ee.scope == e.scope);
    Rng rng(1);
    auto g = random_gaussian(rng, Domain::subset(ctx, {0, 1}));
    auto marg = project_gaussian(g, Domain::subset(ctx, {}));
    CHECK(marg.scope.variables().empty());
}

TEST_CASE("combine and project agree with grid integration") {
    auto ctx = gaussian_context();
    Rng rng(42);
    Domain d1 = Domain::subset(ctx, {0});
    Domain d12 = Domain::subset(ctx, {0, 1});

    for (int i = 0; i < 10; ++i) {
        // one-variable combination: product density matches the pair formulas
        SquareMatrix k1(1), k2(1);
        k1(0, 0) = rng.uniform(0.5, 2.0);
        k2(0, 0) = rng.uniform(0.5, 2.0);
        GaussianPotential g1(d1, {rng.uniform(-1.5, 1.5)}, k1);
        GaussianPotential g2(d1, {rng.uniform(-1.5, 1.5)}, k2);
        auto combined = combine_gaussian(g1, g2);
        auto m = grid_moments(
            [&](double x) { return density_at(g1, {x}) * density_at(g2, {x}); });
        CHECK(std::abs(m.mean - combined.mean[0]) < 1e-3);
        CHECK(std::abs(1.0 / m.variance - combined.concentration(0, 0)) < 1e-3);
    }

    for (int i = 0; i < 10; ++i) {
        // two-variable marginal: integrate out the second coordinate. The
        // grid oracle needs the density inside [-8, 8], so keep the smallest
        // eigenvalue away from zero and the means near the origin.
        SquareMatrix a(2);
        for (auto& v : a.a) v = rng.uniform(-1.0, 1.0);
        SquareMatrix k(2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                k(r, c) = a(0, r) * a(0, c) + a(1, r) * a(1, c) + (r == c ? 0.5 : 0.0);
        GaussianPotential g(d12, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, k);
        auto marg = project_gaussian(g, d1);
        auto m = grid_moments([&](double x) {
            double acc = 0.0;
            for (double y = -8.0; y <= 8.0; y += 0.01) acc += density_at(g, {x, y}) * 0.01;
            return acc;
        });
        CHECK(std::abs(m.mean - marg.mean[0]) < 1e-3);
        CHECK(std::abs(1.0 / m.variance - marg.concentration(0, 0)) < 1e-3);
    }
}

TEST_CASE("invariant violations are rejected") {
    auto ctx = gaussian_context();
    Domain d = Domain::subset(ctx, {0, 1});
    SquareMatrix asym(2);
    asym(0, 0) = 1;
    asym(0, 1) = 0.5;
    asym(1, 0) = 0.2;
    asym(1, 1) = 1;
    CHECK_THROWS_AS(GaussianPotential(d, {0, 0}, asym), Error);

    SquareMatrix indef(2);
    indef(0, 0) = 1;
    indef(0, 1) = 2;
    indef(1, 0) = 2;
    indef(1, 1) = 1;
    CHECK_THROWS_AS(GaussianPotential(d, {0, 0}, indef), Error);

    CHECK_THROWS_AS(GaussianPotential(d, {0.0}, SquareMatrix(2)), Error);
}
