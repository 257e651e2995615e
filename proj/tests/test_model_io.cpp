#include <doctest.h>

#include "valgebra/model_io.hpp"
#include "valgebra/pipeline.hpp"

using namespace valgebra;

namespace {

const char* kPotentialModel = R"({
  "context": {"kind": "subset", "variables": [{"name": "A", "card": 2}, {"name": "B", "card": 2}]},
  "valuations": [
    {"name": "p", "type": "potential", "scope": ["A"], "values": [0.2, 0.8]},
    {"name": "q", "type": "potential", "scope": ["A", "B"], "values": [1, 3, 2, 4]}
  ]
})";

const char* kBeliefModel = R"({
  "context": {"kind": "partition", "universe": [1, 2, 3, 4]},
  "valuations": [
    {"name": "m1", "type": "mass", "frame": [[1, 2], [3, 4]],
     "focal": [{"set": [0], "mass": 0.5}, {"set": [0, 1], "mass": 0.5}]}
  ]
})";

} // namespace

TEST_CASE("model files parse and resolve names") {
    ModelFile model = parse_model(kPotentialModel, "<test>");
    CHECK(model.instance() == InstanceKind::potential);
    REQUIRE(model.find_valuation("p"));
    CHECK_FALSE(model.find_valuation("nope"));
    CHECK(model.find_valuation("q")->potential().values == std::vector<double>{1, 3, 2, 4});

    ModelFile belief = parse_model(kBeliefModel, "<test>");
    CHECK(belief.instance() == InstanceKind::belief);
    CHECK(belief.find_valuation("m1")->mass().masses.at(0b01) == doctest::Approx(0.5));
}

TEST_CASE("parse errors carry position, invalid payloads carry names") {
    CHECK_THROWS_WITH_AS(parse_model("{\n  \"context\": oops\n}", "<test>"),
                         doctest::Contains("line 2"), Error);
    const char* negative = R"({
      "context": {"kind": "subset", "variables": [{"name": "A", "card": 2}]},
      "valuations": [{"name": "m", "type": "mass", "scope": ["A"],
                      "focal": [{"set": [0], "mass": -1}]}]
    })";
    CHECK_THROWS_WITH_AS(parse_model(negative, "<test>"), doctest::Contains("nonnegative"),
                         Error);
}

TEST_CASE("rendered valuations re-parse to the same value") {
    ModelFile model = parse_model(kPotentialModel, "<test>");
    const Valuation& q = *model.find_valuation("q");
    for (bool compact : {false, true}) {
        Valuation back = parse_valuation_text(render_valuation(q, compact), model.ctx);
        CHECK(approx_equal(back, q));
    }
}

TEST_CASE("domain literals") {
    ModelFile model = parse_model(kPotentialModel, "<test>");
    CHECK(parse_domain_text("{A,B}", model.ctx) == Domain::subset(model.ctx, {0, 1}));
    CHECK(parse_domain_text("{}", model.ctx) == Domain::subset(model.ctx, {}));
    CHECK_THROWS_AS(parse_domain_text("{Z}", model.ctx), Error);

    ModelFile belief = parse_model(kBeliefModel, "<test>");
    CHECK(parse_domain_text("[[1,2],[3,4]]", belief.ctx) ==
          Domain::partition(belief.ctx, {{1, 2}, {3, 4}}));
}

TEST_CASE("pipeline expressions") {
    ModelFile model = parse_model(kPotentialModel, "<test>");

    auto composed = eval_pipeline(model, "p > q @ {A,B}");
    REQUIRE(composed.is_member());
    const auto& values = composed.value().potential().values;
    CHECK(values[0] == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(values[3] == doctest::Approx(0.8 * 4 / 6.0).epsilon(1e-9));

    auto conditioned = eval_pipeline(model, "q | {A}");
    REQUIRE(conditioned.is_member()); // potentials always reduce
    CHECK(conditioned.value().potential().values[0] == doctest::Approx(0.25));

    auto with_unit = eval_pipeline(model, "p * unit({A})");
    CHECK(approx_equal(with_unit.value(), *model.find_valuation("p")));

    auto grouped = eval_pipeline(model, "(p * q) @ {B}");
    CHECK(grouped.value().label() == Domain::subset(model.ctx, {1}));

    CHECK_THROWS_AS(eval_pipeline(model, "p >"), Error);
    CHECK_THROWS_AS(eval_pipeline(model, "p @ q"), Error);
    CHECK_THROWS_AS(eval_pipeline(model, "mystery * p"), Error);
}
