#include <catch2/catch_amalgamated.hpp>

#include "holotor/catalog.hpp"
#include "holotor/io.hpp"

using holotor::Exact;
using holotor::Form;

TEST_CASE("frame files round-trip the catalog frames bit for bit") {
    for (const char* name : {"s3xs3", "solv6", "abelian"}) {
        INFO(name);
        auto fiber = holotor::load_su3_fiber(name);
        holotor::FrameFile file{*fiber.frame, holotor::default_coframe(6)};
        std::string text = holotor::serialize_frame(file);
        holotor::FrameFile parsed = holotor::parse_frame(text);
        REQUIRE(parsed.frame.dim == 6);
        for (int i = 0; i < 6; ++i) REQUIRE(parsed.frame.d_coframe[i] == fiber.frame->d_coframe[i]);
        CHECK(holotor::serialize_frame(parsed) == text);
    }
}

TEST_CASE("frame file parser accepts the literal grammar") {
    std::string text = R"({
      "dim": 6,
      "coframe": ["e1", "e2", "e3", "e4", "e5", "e6"],
      "d": {
        "e1": [["sqrt(10)/4", "e1^e6"]],
        "e2": [["sqrt(10)/4", "e2^e6"]],
        "e3": [["sqrt(10)/4", "e3^e6"]],
        "e4": [["sqrt(10)/4", "e4^e6"]],
        "e5": [["sqrt(10)/2", "e1^e2"], ["sqrt(10)/2", "e3^e4"], ["sqrt(10)/2", "e5^e6"]]
      }
    })";
    auto parsed = holotor::parse_frame(text);
    auto solv = holotor::load_su3_fiber("solv6");
    for (int i = 0; i < 6; ++i) CHECK(parsed.frame.d_coframe[i] == solv.frame->d_coframe[i]);
    CHECK(parsed.frame.validate().ok);
    // Serialization writes the canonical literal form.
    CHECK(holotor::serialize_frame(parsed).find("1/4*sqrt(10)") != std::string::npos);
}

TEST_CASE("frame file parser rejects malformed input") {
    CHECK_THROWS_AS(holotor::parse_frame("not json"), std::invalid_argument);
    CHECK_THROWS_AS(holotor::parse_frame("{\"dim\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(holotor::parse_frame(R"({"dim": 2, "coframe": ["e1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(
        holotor::parse_frame(
            R"({"dim": 2, "coframe": ["e1", "e2"], "d": {"e3": [["1", "e1^e2"]]}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        holotor::parse_frame(R"({"dim": 2, "coframe": ["e1", "e2"], "d": {"e1": [["1", "e1"]]}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        holotor::parse_frame(
            R"json({"dim": 2, "coframe": ["e1", "e2"], "d": {"e1": [["sqrt(3)", "e1^e2"]]}})json"),
        std::invalid_argument);
}

TEST_CASE("custom coframe names survive the round trip") {
    std::string text = R"({
      "dim": 3,
      "coframe": ["a", "b", "c"],
      "d": { "a": [["1", "b^c"]], "b": [["-1", "a^c"]], "c": [["1", "a^b"]] }
    })";
    auto parsed = holotor::parse_frame(text);
    CHECK(parsed.coframe == std::vector<std::string>{"a", "b", "c"});
    CHECK(parsed.frame.validate().ok);
    std::string canon = holotor::serialize_frame(parsed);
    CHECK(holotor::serialize_frame(holotor::parse_frame(canon)) == canon);
    CHECK(parsed.frame.d_coframe[0] == Form<Exact>::monomial(3, {2, 3}));
}
