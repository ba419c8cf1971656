#include <doctest.h>

#include <json.hpp>

#include "driftwalk/errors.hpp"
#include "driftwalk/spec_file.hpp"

using namespace driftwalk;
using nlohmann::json;

namespace {

std::string field_of(const json& doc) {
    try {
        (void)spec_from_json(doc);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "<accepted>";
}

}  // namespace

TEST_CASE("probability parsing") {
    CHECK(parse_probability("0.75", "q").value == 0.75);
    CHECK(parse_probability(" 1 ", "q").value == 1.0);
    CHECK(parse_probability("2/3", "q").value == 2.0 / 3.0);
    CHECK(parse_probability("9/10", "q").value == 0.9);
    CHECK_THROWS_AS(parse_probability("abc", "q"), ValidationError);
    CHECK_THROWS_AS(parse_probability("1/0", "q"), ValidationError);
    CHECK_THROWS_AS(parse_probability("", "q"), ValidationError);
    CHECK_THROWS_AS(parse_probability("0.5x", "q"), ValidationError);
}

TEST_CASE("the three spec shapes") {
    const auto explicit_spec = spec_from_json(json::parse(R"({"n": 3, "omega": [0.6, "2/3"]})"));
    CHECK(explicit_spec.shape == EnvironmentSpec::Shape::explicit_omega);
    CHECK(explicit_spec.environment() == Environment(3, {0.6, 2.0 / 3.0}));
    CHECK_FALSE(explicit_spec.placement().has_value());

    const auto positioned =
        spec_from_json(json::parse(R"({"n": 5, "q": "3/5", "p": 0.9, "positions": [3, 1]})"));
    CHECK(positioned.shape == EnvironmentSpec::Shape::positions);
    CHECK(positioned.environment() == Environment(5, {0.9, 0.6, 0.9, 0.6}));
    REQUIRE(positioned.placement().has_value());
    CHECK(positioned.placement()->k() == 2);

    const auto spaced = spec_from_json(
        json::parse(R"({"n": 7, "q": 0.6, "p": 0.9, "k": 3, "layout": "equally_spaced"})"));
    CHECK(spaced.environment() == Environment(7, {0.6, 0.9, 0.6, 0.9, 0.6, 0.9}));

    const auto none = spec_from_json(
        json::parse(R"({"n": 4, "q": 0.6, "p": 0.9, "k": 0, "layout": "equally_spaced"})"));
    CHECK(none.environment() == Environment::uniform(4, 0.6));

    CHECK(spec_from_json(json::parse(R"({"n": 1, "omega": []})")).environment().n() == 1);
}

TEST_CASE("load-time validation names the offending field") {
    CHECK(field_of(json::parse(R"({"n": 2, "omega": [0]})")) == "omega");
    CHECK(field_of(json::parse(R"({"n": 3, "omega": [0.6]})")) == "omega");
    CHECK(field_of(json::parse(R"({"n": 2, "omega": ["x"]})")) == "omega[0]");
    CHECK(field_of(json::parse(R"({"omega": [0.6]})")) == "n");
    CHECK(field_of(json::parse(R"({"n": 0, "omega": []})")) == "n");
    CHECK(field_of(json::parse(R"({"n": -2, "omega": []})")) == "n");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.5, "p": 0.9, "positions": [1]})")) == "q");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.6, "p": 0.5, "positions": [1]})")) == "p");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.6, "p": 0.9, "positions": [4]})")) ==
          "positions");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.6, "p": 0.9, "positions": [1, 1]})")) ==
          "positions");
    CHECK(field_of(json::parse(R"({"n": 4, "p": 0.9, "positions": [1]})")) == "q");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.6, "p": 0.9, "k": 4, "layout": "equally_spaced"})")) ==
          "k");
    CHECK(field_of(json::parse(R"({"n": 4, "q": 0.6, "p": 0.9, "k": 1, "layout": "random"})")) ==
          "layout");
    CHECK(field_of(json::parse(R"({"n": 4, "omega": [0.6, 0.6, 0.6], "positions": [1]})")) ==
          "spec");
    CHECK(field_of(json::parse(R"({"n": 4, "omega": [0.6, 0.6, 0.6], "extra": 1})")) == "extra");
    CHECK(field_of(json::parse(R"({"n": 4, "omega": [0.6, 0.6, 0.6], "q": 0.6})")) == "q");
    CHECK(field_of(json::parse(R"([1, 2])")) == "spec");
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"n": 200000, "omega": []})")), SizeError);
}

TEST_CASE("re-emitting a spec preserves every semantic field") {
    for (const char* text : {
             R"({"n": 3, "omega": [0.6, "2/3"]})",
             R"({"n": 1, "omega": []})",
             R"({"n": 5, "q": "3/5", "p": 0.9, "positions": [3, 1]})",
             R"({"n": 7, "q": 0.6, "p": "9/10", "k": 3, "layout": "equally_spaced"})",
         }) {
        const auto spec = spec_from_json(json::parse(text));
        const auto doc = spec_to_json(spec);
        CHECK(doc == json::parse(text));
        const auto again = spec_from_json(doc);
        CHECK(again == spec);
        CHECK(again.environment() == spec.environment());
    }
}
