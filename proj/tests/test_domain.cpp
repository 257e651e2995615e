#include <doctest.h>

#include <algorithm>
#include <set>

#include "valgebra/domain.hpp"
#include "valgebra/generators.hpp"
#include "valgebra/laws.hpp"

using namespace valgebra;

namespace {

Domain subs(const ContextPtr& ctx, std::vector<int> vars) {
    return Domain::subset(ctx, std::move(vars));
}

} // namespace

TEST_CASE("subset lattice basics") {
    auto ctx = make_subset_context({"A", "B", "C"}, {2, 2, 2});
    Domain a = subs(ctx, {0});
    Domain b = subs(ctx, {1});
    Domain ab = subs(ctx, {0, 1});
    Domain bc = subs(ctx, {1, 2});

    CHECK(join(a, b) == ab);
    CHECK(meet(ab, bc) == b);
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(leq(a, ab));
    CHECK(leq(bottom(ctx), a));
    CHECK_FALSE(leq(ab, bc));
    CHECK(ctx->is_modular);
    CHECK(ctx->is_distributive);
}

TEST_CASE("cross-context operations are hard errors") {
    auto c1 = make_subset_context({"A"}, {2});
    auto c2 = make_subset_context({"A"}, {2});
    CHECK_THROWS_AS(join(subs(c1, {0}), subs(c2, {0})), Error);
}

TEST_CASE("partition join and meet") {
    auto ctx = make_partition_context({1, 2, 3, 4});
    Domain p1 = Domain::partition(ctx, {{1, 2}, {3, 4}});
    Domain p2 = Domain::partition(ctx, {{1, 3}, {2, 4}});

    // worked by enumerating pairwise block intersections
    CHECK(join(p1, p2) == Domain::partition(ctx, {{1}, {2}, {3}, {4}}));
    // overlap graph of the blocks is connected
    CHECK(meet(p1, p2) == Domain::partition(ctx, {{1, 2, 3, 4}}));

    CHECK(join(p1, p1) == p1);
    CHECK(meet(p1, p1) == p1);

    // coarser <= finer
    CHECK(leq(Domain::partition(ctx, {{1, 2, 3, 4}}), p1));
    CHECK(leq(bottom(ctx), p1));
    CHECK(leq(p1, top(ctx)));

    CHECK_FALSE(ctx->is_modular);
    CHECK_FALSE(ctx->is_distributive);
}

TEST_CASE("three-atom partition lattice is modular but not distributive") {
    auto ctx = make_partition_context({1, 2, 3});
    CHECK(ctx->is_modular);
    CHECK_FALSE(ctx->is_distributive);
}

TEST_CASE("refining and coarsening maps") {
    auto ctx = make_partition_context({1, 2, 3, 4});
    Domain coarse = Domain::partition(ctx, {{1, 2}, {3, 4}});
    Domain fine = top(ctx); // {{1},{2},{3},{4}}

    // S = {{1,2}} -> {{1},{2}}
    CHECK(refining_map(0b01, coarse, fine) == 0b0011);
    CHECK(refining_map(0, coarse, fine) == 0);
    // S = whole frame -> whole finer frame
    CHECK(refining_map(0b11, coarse, fine) == 0b1111);

    // T = {{1}} -> {{1,2}}
    CHECK(coarsening_map(0b0001, fine, coarse) == 0b01);
    CHECK(coarsening_map(0, fine, coarse) == 0);
    CHECK(coarsening_map(0b1111, fine, coarse) == 0b11);

    // adjointness: v(tau(S)) = S and tau(v(T)) >= T
    for (std::uint32_t s = 0; s < 4; ++s)
        CHECK(coarsening_map(refining_map(s, coarse, fine), fine, coarse) == s);
    for (std::uint32_t t = 0; t < 16; ++t) {
        std::uint32_t lifted = refining_map(coarsening_map(t, fine, coarse), coarse, fine);
        CHECK((lifted & t) == t);
    }
}

TEST_CASE("partition join/meet are least/greatest against exhaustive enumeration") {
    for (int n : {3, 4, 5}) {
        std::vector<int> atoms(n);
        for (int i = 0; i < n; ++i) atoms[i] = i + 1;
        auto ctx = make_partition_context(atoms);
        auto all = enumerate_partitions(ctx);
        const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
        CHECK(all.size() == bell[n]);

        Rng rng(7);
        for (int cases = 0; cases < 30; ++cases) {
            const Domain& x = all[rng.next() % all.size()];
            const Domain& y = all[rng.next() % all.size()];
            Domain j = join(x, y);
            Domain m = meet(x, y);
            CHECK(leq(x, j));
            CHECK(leq(y, j));
            CHECK(leq(m, x));
            CHECK(leq(m, y));
            for (const Domain& c : all) {
                if (leq(x, c) && leq(y, c)) CHECK(leq(j, c));
                if (leq(c, x) && leq(c, y)) CHECK(leq(c, m));
            }
        }
    }
}

TEST_CASE("lattice law report") {
    auto subset_ctx = make_subset_context({"A", "B", "C", "D"}, {2, 2, 2, 2});
    Rng rng(3);
    std::vector<Domain> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(random_domain(rng, subset_ctx));
    auto report = check_lattice_laws(subset_ctx, sample, false);
    CHECK(report.all_pass());

    auto part_ctx = make_partition_context({1, 2, 3, 4});
    auto exhaustive = check_lattice_laws(part_ctx, enumerate_partitions(part_ctx), true);
    CHECK(exhaustive.all_pass());
    bool distributive_failed_somewhere = false;
    for (const auto& law : exhaustive.laws)
        if (law.name == "distributive-law") distributive_failed_somewhere = !law.pass;
    CHECK(distributive_failed_somewhere);

    // empty sample: vacuously passing
    CHECK(check_lattice_laws(subset_ctx, {}, false).all_pass());
}

TEST_CASE("configuration spaces are row-major with the last variable fastest") {
    auto ctx = make_subset_context({"A", "B"}, {2, 3});
    ConfigSpace space(Domain::subset(ctx, {0, 1}));
    CHECK(space.total() == 6);
    CHECK(space.decode(0) == std::vector<int>{0, 0});
    CHECK(space.decode(1) == std::vector<int>{0, 1});
    CHECK(space.decode(3) == std::vector<int>{1, 0});
    CHECK(space.encode({1, 2}) == 5);

    auto restriction = space.restriction_map(Domain::subset(ctx, {0}));
    CHECK(restriction == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
}
