#include <doctest.h>

#include <string>

#include "hilbertp/certify.hpp"
#include "hilbertp/io.hpp"
#include "hilbertp/rademacher.hpp"

using namespace hilbertp;
using nlohmann::json;

namespace {

std::string error_of(const json& j) {
  try {
    io::field_from_json(j);
  } catch (const io::InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("field JSON round trip and defaults") {
  const json j = json::parse(R"({"dim": 2, "values": [[1, 0], [0, 2], [3, 4]]})");
  const Field f = io::field_from_json(j);
  CHECK(f.atoms() == 3);
  CHECK(f.weight(1) == doctest::Approx(1.0 / 3.0));
  const Field back = io::field_from_json(io::to_json(f));
  CHECK(back.space() == f.space());
  CHECK(back[2][1] == 4.0);

  const Field dropped = io::field_from_json(json::parse(R"({"weights": [0.5, 0, 0.5], "dim": 1, "values": [[1], [7], [2]]})"));
  CHECK(dropped.atoms() == 2);
  CHECK(dropped[1][0] == 2.0);
}

TEST_CASE("malformed field JSON names the offending field") {
  CHECK(error_of(json::parse(R"({"values": [[1]]})")).find("dim") == 0);
  CHECK(error_of(json::parse(R"({"dim": 0, "values": [[1]]})")).find("dim") == 0);
  CHECK(error_of(json::parse(R"({"dim": 1})")).find("values") == 0);
  CHECK(error_of(json::parse(R"({"dim": 2, "values": [[1, 0], [1]]})")) == "values[1]: expected 2 numbers, got 1");
  CHECK(error_of(json::parse(R"({"dim": 1, "values": [["x"]]})")).find("values[0][0]") == 0);
  CHECK(error_of(json::parse(R"({"dim": 1, "values": [[1], [2]], "weights": [1]})")).find("weights") == 0);
  CHECK(error_of(json::parse(R"({"dim": 1, "values": [[1], [2]], "weights": [0.2, 0.2]})")).find("weights") == 0);
  CHECK(error_of(json::parse(R"({"dim": 1, "values": [[1], [2]], "weights": [-1, 2]})")).find("weights") == 0);
  CHECK(error_of(json::parse("[1, 2]")).find("$") == 0);
  CHECK_THROWS_AS(io::load_json_file("/nonexistent/file.json"), io::InputError);
}

TEST_CASE("sum JSON") {
  const RademacherSum s = io::sum_from_json(json::parse(R"({"dim": 2, "xs": [[1, 0], [1, 0]]})"));
  CHECK(s.size() == 2);
  CHECK(io::to_json(s)["xs"][1][0] == 1.0);
  CHECK_THROWS_AS(io::sum_from_json(json::parse(R"({"dim": 2, "xs": [[1, 0, 3]]})")), io::InputError);
  CHECK_THROWS_AS(io::sum_from_json(json::parse(R"({"dim": 2, "xs": []})")), io::InputError);
}

TEST_CASE("canonical form and digest") {
  const json a = json::parse(R"({"b": [0.1, 2], "a": {"y": 1, "x": -0.0}})");
  const json b = json::parse(R"({"a": {"x": -0.0, "y": 1}, "b": [0.1, 2]})");
  CHECK(io::canonical(a) == io::canonical(b));
  CHECK(io::canonical(a) == R"({"a":{"x":-0,"y":1},"b":[0.10000000000000001,2]})");
  CHECK(io::digest(a) == io::digest(b));
  CHECK(io::digest(a).size() == 16);
  CHECK(io::digest(a) != io::digest(json::parse(R"({"b": [0.1, 3], "a": {"y": 1, "x": -0.0}})")));
  // FNV-1a 64 of the two bytes "{}", computed independently.
  CHECK(io::digest(json::object()) == "08f44b07b5901a25");
}

TEST_CASE("verdict and label serialization") {
  const auto v = two_valued_check(Field(ProbSpace({0.5, 0.5}), std::vector<Vec>{{1.0}, {2.0}}));
  const json jv = io::to_json(v);
  CHECK(jv["decision"] == "not_hilbert");
  CHECK(jv["support"].size() == 2);
  CHECK_FALSE(jv.contains("violation"));

  const json jc = io::to_json(classify(RademacherSum({{1.0, 0.0}, {1.0, 0.0}})));
  CHECK(jc["case"] == "CaseB");
  CHECK(jc["witness"]["x1"][0] == 1.0);
  const json jn = io::to_json(classify(RademacherSum({{1.0, 0.0}, {2.0, 0.0}})));
  CHECK(jn["case"] == "NotHilbert");
  CHECK(jn["witness"]["failing_norms"].size() == 2);
}
