#include "alemass/json_io.hpp"
#include "alemass/registry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace alemass;
using Catch::Approx;

TEST_CASE("chart factory builds every advertised family", "[jsonio]") {
  const MetricChart e = make_chart("euclidean", json{{"n", 5}});
  CHECK(e.n == 5);

  const MetricChart s = make_chart("schwarzschild", json{{"n", 3}, {"A", 2.0}});
  CHECK(s.n == 3);
  Eigen::VectorXd x(3);
  x << 10.0, 0.0, 0.0;
  CHECK(s.g(x)(0, 0) == Approx(1.25).epsilon(1e-14));

  const MetricChart gh = make_chart(
      "gibbons-hawking",
      json{{"centers", {{0.1, 0.2, 0.3}, {-0.2, 0.0, 0.1}}}});
  CHECK(gh.n == 4);
  CHECK(gh.gamma_order == 2);

  const MetricChart rk = make_chart("radial-kahler", json{{"m", 2}, {"A", 1.0}});
  CHECK(rk.kahler_holomorphic);
  CHECK(rk.complex_dim == 2);
}

TEST_CASE("seeded center generation is deterministic", "[jsonio]") {
  const json params = {{"k", 3}, {"seed", 99}, {"spread", 0.5}};
  const MetricChart a = make_chart("gibbons-hawking", params);
  const MetricChart b = make_chart("gibbons-hawking", params);
  Eigen::VectorXd x(4);
  x << 9.0, 1.0, -2.0, 0.5;
  CHECK((a.g(x) - b.g(x)).norm() == 0.0);  // bitwise identical samples
  CHECK(a.gamma_order == 3);
}

TEST_CASE("factory error reporting", "[jsonio]") {
  CHECK_THROWS_WITH(make_chart("nosuch", json::object()),
                    Catch::Matchers::ContainsSubstring("unknown metric family"));
  CHECK_THROWS_WITH(make_chart("lebrun", json::object()),
                    Catch::Matchers::ContainsSubstring("closed forms"));
  CHECK_THROWS_AS(make_chart("euclidean", json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_chart("radial-kahler", json{{"potential", "cubic"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_chart("gibbons-hawking", json{{"centers", {{1.0, 2.0}}}}),
                  std::invalid_argument);
  CHECK(list_families().size() == 5);
}

TEST_CASE("intersection data JSON round trip is canonical", "[jsonio]") {
  const char* text = R"({
    "basis": ["E1", "E2"],
    "Q": [[-2, 1], [1, -2]],
    "c1": ["-1", "1/2"],
    "areas": [1.0, 2.5]
  })";
  const IntersectionData d = intersection_from_json(json::parse(text));
  CHECK(d.basis.size() == 2);
  CHECK(d.c1[1] == Rational(1, 2));

  const std::string once = canonical_dump(intersection_to_json(d));
  const std::string twice =
      canonical_dump(intersection_to_json(intersection_from_json(json::parse(once))));
  CHECK(once == twice);  // byte-identical round trip
}

TEST_CASE("intersection JSON accepts integer c1 entries and rejects junk", "[jsonio]") {
  const json ok = {{"basis", {"E"}}, {"Q", {{-1}}}, {"c1", {1}}, {"areas", {1.0}}};
  CHECK(intersection_from_json(ok).c1[0] == Rational(1));

  json missing = ok;
  missing.erase("areas");
  CHECK_THROWS_WITH(intersection_from_json(missing),
                    Catch::Matchers::ContainsSubstring("areas"));

  json badc1 = ok;
  badc1["c1"] = {1.5};
  CHECK_THROWS_AS(intersection_from_json(badc1), std::invalid_argument);
  CHECK_THROWS_AS(intersection_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("divisor JSON round trip", "[jsonio]") {
  const json j = {{"m", 2},
                  {"components",
                   {{{"label", "E1"}, {"n", 1}, {"vol", 3.14}},
                    {{"label", "E2"}, {"n", 2}, {"vol", 1.0}}}}};
  const DivisorData d = divisor_from_json(j);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[1].multiplicity == 2);
  const std::string once = canonical_dump(divisor_to_json(d));
  const std::string twice = canonical_dump(divisor_to_json(divisor_from_json(json::parse(once))));
  CHECK(once == twice);
  CHECK_THROWS_AS(divisor_from_json(json{{"m", 2}}), std::invalid_argument);
}

TEST_CASE("numeric rounding contract", "[jsonio]") {
  CHECK(round12(1.0) == 1.0);
  CHECK(round12(round12(0.1234567890123456)) == round12(0.1234567890123456));
  CHECK(round12(3.141592653589793) == 3.14159265359);
  // Round-tripping a rounded value through JSON text is exact.
  const double v = round12(2.0 / 3.0);
  const json j = v;
  CHECK(json::parse(j.dump()).get<double>() == v);
}

TEST_CASE("mass estimate serialization", "[jsonio]") {
  MassEstimate e;
  e.value = 1.0000000001;
  e.error_estimate = 1e-10;
  e.converged = true;
  e.method = ExtrapolationMethod::richardson;
  e.decay_exponent = 1.0;
  e.radii = {10.0, 20.0};
  e.samples = {1.1, 1.05};
  e.extrapolants = {1.1, 1.0};
  const json j = mass_estimate_to_json(e);
  CHECK(j.at("converged").get<bool>());
  CHECK(j.at("samples").size() == 2);
  const std::string csv = mass_estimate_to_csv(e);
  CHECK(csv.rfind("rho,mass_at_radius,extrapolant,error_estimate\n", 0) == 0);
  CHECK(csv.find("\n10,") != std::string::npos);
}
