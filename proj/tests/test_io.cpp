#include <doctest.h>

#include <cmath>
#include <limits>

#include "balanced/io.hpp"
#include "balanced/search.hpp"

using namespace balanced;

namespace {

ErrorCode parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ZeroVector;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(BigInt("123456789012345678901234567890")));
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "1/2/3", " 1"})
    CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("format_rational and format_double") {
  CHECK(format_rational(Rational(-4, 6)) == "-2/3");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("parse_config in both modes") {
  const auto f = parse_config(R"({"mode": "float", "vectors": [[1, 0], [0.5, -2]]})");
  REQUIRE(std::holds_alternative<Configuration<double>>(f));
  CHECK(std::get<Configuration<double>>(f)[1] == Vec2<double>(0.5, -2));

  const auto e = parse_config(R"({"mode": "exact", "vectors": [["1/3", "0"], ["-2", "7/5"]]})");
  REQUIRE(std::holds_alternative<Configuration<Rational>>(e));
  CHECK(std::get<Configuration<Rational>>(e)[0] == Vec2<Rational>(Rational(1, 3), Rational(0)));
}

TEST_CASE("parse_config errors carry context") {
  std::string msg;
  CHECK(parse_error("{", &msg) == ErrorCode::Parse);
  CHECK(msg.find("line") != std::string::npos);

  CHECK(parse_error(R"({"mode": "exact", "vectors": [["1", "2"], ["1", 3]]})", &msg) == ErrorCode::Parse);
  CHECK(msg.find("vectors[1][1]") != std::string::npos);

  CHECK(parse_error(R"({"mode": "float", "vectors": [[1, 2], ["1", 3]]})", &msg) == ErrorCode::Parse);
  CHECK(msg.find("vectors[1][0]") != std::string::npos);

  CHECK(parse_error(R"({"mode": "decimal", "vectors": []})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vectors": [[1, 2]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"mode": "float", "vectors": [[1, 2, 3]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"mode": "float", "vectors": [[1, 1], [0, 0]]})", &msg) == ErrorCode::Parse);
  CHECK(msg.find("vectors[1]") != std::string::npos);
}

TEST_CASE("configurations round-trip through text") {
  const auto c = transform(random_invertible(5, 100), roots_of_unity(11).config);
  const auto back = parse_config(serialize_config(c));
  CHECK(std::get<Configuration<double>>(back) == c);

  const Configuration<Rational> q({{Rational(1, 3), Rational(-7, 2)}, {Rational(5), Rational(0)}});
  CHECK(std::get<Configuration<Rational>>(parse_config(serialize_config(q))) == q);
}

TEST_CASE("dump_json is deterministic") {
  nlohmann::json a;
  a["zeta"] = 1;
  a["alpha"] = {1.5, 2, 3};
  a["mid"] = {{"b", 0.1}, {"a", nullptr}};
  const std::string text = dump_json(a);
  CHECK(text ==
        "{\n"
        "  \"alpha\": [1.5, 2, 3],\n"
        "  \"mid\": {\n"
        "    \"a\": null,\n"
        "    \"b\": 0.10000000000000001\n"
        "  },\n"
        "  \"zeta\": 1\n"
        "}\n");
  CHECK(dump_json(nlohmann::json::parse(text)) == text);
  CHECK(dump_json(std::numeric_limits<double>::quiet_NaN()) == "null\n");
}
